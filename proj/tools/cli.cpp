// Copyright 2026 The Ergo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ergo/entangle.hpp"
#include "ergo/epo.hpp"
#include "ergo/io.hpp"
#include "ergo/majorize.hpp"
#include "ergo/passive.hpp"
#include "ergo/tripartite.hpp"

namespace ergo::cli {

namespace {

using io::Json;

/// Error raised while handling a particular flag or file, so the error object
/// can point at it.
struct Located {
  int code;
  std::string message;
  std::string path;
};

struct Request {
  std::string command;
  std::vector<std::string> inputs;
  std::vector<std::string> hamiltonians;
  std::string alpha = "1";
  std::string beta;
  int copies = 1;
  std::uint64_t seed = 0;
  double tol = kGapZeroTol;
  std::string output;
  std::size_t k = 0;
  std::string env_hamiltonian;
  std::string env_beta = "1";
  std::string bases;
};

template <typename F>
auto at(const std::string& path, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ValidationError& e) {
    throw Located{2, e.what(), path};
  } catch (const DomainError& e) {
    throw Located{3, e.what(), path};
  }
}

double parse_real(const std::string& text, const std::string& flag) {
  try {
    std::size_t used = 0;
    const double x = std::stod(text, &used);
    if (used == text.size() && !std::isnan(x)) return x;
  } catch (const std::exception&) {
  }
  throw Located{2, "expected a real number, got '" + text + "'", flag};
}

/// Inline forms `diag:e0,e1,...` and `ladder:d`, otherwise a JSON file holding
/// either {"energies": [...]} or a Hermitian matrix {"re", "im"}.
Hamiltonian load_hamiltonian(const std::string& arg) {
  return at(arg, [&] {
    if (arg.rfind("diag:", 0) == 0) {
      std::vector<double> e;
      std::stringstream ss(arg.substr(5));
      for (std::string tok; std::getline(ss, tok, ',');) e.push_back(parse_real(tok, arg));
      return Hamiltonian(std::move(e));
    }
    if (arg.rfind("ladder:", 0) == 0) {
      const double d = parse_real(arg.substr(7), arg);
      if (d < 1 || d != std::floor(d)) throw ValidationError("ladder dimension must be a positive integer");
      return Hamiltonian::ladder(static_cast<std::size_t>(d));
    }
    const Json j = io::read_file(arg);
    if (j.contains("energies")) return io::hamiltonian_from_json(j, arg);
    return Hamiltonian::from_matrix(io::matrix_from_json(j, nullptr, arg));
  });
}

bool is_pure_json(const Json& j) { return j.contains("re") && j["re"].is_array() && !j["re"].empty() && !j["re"][0].is_array(); }

DensityMatrix load_state(const std::string& path) {
  return at(path, [&] {
    const Json j = io::read_file(path);
    if (is_pure_json(j)) return DensityMatrix::from_pure(io::pure_from_json(j, path));
    if (j.contains("probs")) {
      const auto s = io::spectrum_from_json(j, path);
      return DensityMatrix::diagonal(s.probs());
    }
    return io::density_from_json(j, path);
  });
}

PureState load_pure(const std::string& path) {
  return at(path, [&] {
    const Json j = io::read_file(path);
    if (!is_pure_json(j)) throw ValidationError("expected a pure state vector");
    return io::pure_from_json(j, path);
  });
}

Spectrum load_spectrum(const std::string& path) {
  return at(path, [&] {
    const Json j = io::read_file(path);
    if (j.contains("probs")) return io::spectrum_from_json(j, path);
    return load_state(path).spectrum();
  });
}

const std::string& input(const Request& r, std::size_t i) {
  if (r.inputs.size() <= i) throw Located{2, "missing input #" + std::to_string(i + 1), "--input"};
  return r.inputs[i];
}

Hamiltonian hamiltonian(const Request& r, std::size_t i, std::optional<std::size_t> ladder_dim = std::nullopt) {
  if (i < r.hamiltonians.size()) return load_hamiltonian(r.hamiltonians[i]);
  if (ladder_dim) return Hamiltonian::ladder(*ladder_dim);
  throw Located{2, "missing hamiltonian #" + std::to_string(i + 1), "--hamiltonian"};
}

double beta(const Request& r) {
  if (r.beta.empty()) throw Located{2, "missing inverse temperature", "--beta"};
  return parse_real(r.beta, "--beta");
}

Json real_list(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(io::number(x));
  return out;
}

LocalBases load_bases(const Request& r, std::size_t d) {
  if (r.bases.empty()) return computational_bases(d);
  return at(r.bases, [&] {
    const Json j = io::read_file(r.bases);
    const auto it = j.find("bases");
    if (it == j.end() || !it->is_array() || it->size() != 3) throw ValidationError("expected {\"bases\": [3 matrices]}");
    LocalBases b;
    for (std::size_t i = 0; i < 3; ++i) b[i] = io::matrix_from_json((*it)[i], nullptr, r.bases + "/bases/" + std::to_string(i));
    return b;
  });
}

using Handler = std::function<Json(const Request&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"passive",
       [](const Request& r) {
         const auto rho = load_state(input(r, 0));
         const auto h = hamiltonian(r, 0);
         return at(input(r, 0), [&] {
           const auto p = passive_state(rho, h);
           return Json{{"passive_state", io::to_json(p)},
                       {"E", io::number(energy(rho, h))},
                       {"E_passive", io::number(energy(p, h))}};
         });
       }},
      {"ergotropy",
       [](const Request& r) {
         const auto rho = load_state(input(r, 0));
         const auto h = hamiltonian(r, 0);
         return at(input(r, 0), [&] {
           return Json{{"W_e", io::number(ergotropy(rho, h))},
                       {"E", io::number(energy(rho, h))},
                       {"E_passive", io::number(passive_energy(rho.spectrum(), h))}};
         });
       }},
      {"gibbs",
       [](const Request& r) {
         const auto h = hamiltonian(r, 0);
         const double b = beta(r);
         return at("--beta", [&] { return io::to_json(gibbs_state(h, b)); });
       }},
      {"wth",
       [](const Request& r) {
         const auto rho = load_state(input(r, 0));
         const auto h = hamiltonian(r, 0);
         return at(input(r, 0), [&] {
           Json j = io::to_json(work_report(rho, h));
           j["W_th"] = j["thermodynamic_work"];
           return j;
         });
       }},
      {"renyi",
       [](const Request& r) {
         const auto rho = load_state(input(r, 0));
         const double a = parse_real(r.alpha, "--alpha");
         return at("--alpha", [&] {
           return Json{{"alpha", io::number(a)},
                       {"S_bits", io::number(renyi_entropy(rho, a, EntropyUnit::Bits))},
                       {"S_nats", io::number(renyi_entropy(rho, a, EntropyUnit::Nats))}};
         });
       }},
      {"divergence",
       [](const Request& r) {
         const auto rho = load_state(input(r, 0));
         const double a = parse_real(r.alpha, "--alpha");
         // Second argument is either another state or the Gibbs state of
         // --hamiltonian at --beta.
         const auto sigma = r.inputs.size() > 1 ? load_state(r.inputs[1]) : [&] {
           const auto h = hamiltonian(r, 0);
           const double b = beta(r);
           return at("--beta", [&] { return gibbs_state(h, b).state; });
         }();
         return at("--alpha", [&] {
           return Json{{"alpha", io::number(a)}, {"D_nats", io::number(renyi_divergence(rho, sigma, a))}};
         });
       }},
      {"wsingle",
       [](const Request& r) {
         const auto rho = load_state(input(r, 0));
         const auto h = hamiltonian(r, 0);
         const double b = beta(r);
         return at(input(r, 0), [&] {
           return Json{{"W_S", io::number(single_shot_work(rho, h, b))}, {"beta", io::number(b)}};
         });
       }},
      {"majorize",
       [](const Request& r) {
         const auto p = load_spectrum(input(r, 0));
         const auto q = load_spectrum(input(r, 1));
         const double t = r.tol;
         return at(input(r, 0), [&] {
           return Json{{"relation", std::string(to_string(compare(p, q, t)))},
                       {"first_majorizes_second", majorizes(p, q, t)},
                       {"second_majorizes_first", majorizes(q, p, t)},
                       {"slack", io::number(majorization_slack(p.probs(), q.probs()))}};
         });
       }},
      {"epo-sample",
       [](const Request& r) {
         const auto hs = hamiltonian(r, 0);
         const auto he = r.env_hamiltonian.empty() ? default_environment_hamiltonian()
                                                   : load_hamiltonian(r.env_hamiltonian);
         const double be = parse_real(r.env_beta, "--env-beta");
         return at("--hamiltonian", [&] { return io::to_json(sample_epo_channel(hs, {he, be}, r.seed)); });
       }},
      {"epo-verify",
       [](const Request& r) {
         const auto& path = input(r, 0);
         const auto channel = at(path, [&] { return io::channel_from_json(io::read_file(path), path); });
         Json j = at(path, [&] { return io::to_json(validate_epo(channel)); });
         if (r.inputs.size() > 1) {
           const auto rho = load_state(r.inputs[1]);
           const double b = beta(r);
           j["monotones"] = at(r.inputs[1], [&] { return io::to_json(monotone_report(rho, channel, b)); });
         }
         return j;
       }},
      {"measure",
       [](const Request& r) {
         const auto psi = load_pure(input(r, 0));
         const auto h = hamiltonian(r, 0);
         return at(input(r, 0), [&] { return io::to_json(measure_pure(psi, h)); });
       }},
      {"vidal",
       [](const Request& r) {
         const auto psi = load_pure(input(r, 0));
         return at(input(r, 0), [&] {
           if (r.k > 0) return Json{{"k", r.k}, {"E_k", io::number(vidal_monotone(psi, r.k))}};
           return Json{{"E", real_list(vidal_monotones(marginal_spectrum(psi)))}};
         });
       }},
      {"convert-prob",
       [](const Request& r) {
         const auto psi = load_pure(input(r, 0));
         const auto phi = load_pure(input(r, 1));
         return at(input(r, 0), [&] { return Json{{"p", io::number(conversion_probability(psi, phi))}}; });
       }},
      {"egap",
       [](const Request& r) {
         const auto rho = load_state(input(r, 0));
         if (rho.dims().size() != 2) throw Located{2, "egap needs a bipartite state with two dims", input(r, 0)};
         const auto hx = hamiltonian(r, 0, rho.dims()[0]);
         const auto hy = hamiltonian(r, 1, rho.dims()[1]);
         return at(input(r, 0), [&] { return Json{{"gap", io::number(ergotropic_gap(rho, hx, hy))}}; });
       }},
      {"percopy",
       [](const Request& r) {
         const auto psi = load_pure(input(r, 0));
         const auto h = hamiltonian(r, 0);
         return at("--copies", [&] { return io::to_json(per_copy_measure(psi, r.copies, h)); });
       }},
      {"asymptotic",
       [](const Request& r) {
         const auto psi = load_pure(input(r, 0));
         const auto h = hamiltonian(r, 0);
         return at(input(r, 0), [&] {
           const auto m = asymptotic_measure(psi, h);
           return Json{{"value", io::number(m.value)},
                       {"beta", io::number(m.beta)},
                       {"S_nats", io::number(m.entropy_nats)},
                       {"logZ", io::number(m.log_z)}};
         });
       }},
      {"cut-gaps",
       [](const Request& r) {
         const auto psi = load_pure(input(r, 0));
         return at(input(r, 0), [&] { return io::to_json(gap_signature(psi)); });
       }},
      {"monogamy",
       [](const Request& r) {
         const auto psi = load_pure(input(r, 0));
         return at(input(r, 0), [&] {
           const auto m = monogamy_decompose(psi);
           return Json{{"gap_A_BC", io::number(m.lhs)},
                       {"gap_AB", io::number(m.gap_ab)},
                       {"gap_AC", io::number(m.gap_ac)},
                       {"slack", io::number(m.lhs - m.gap_ab - m.gap_ac)}};
         });
       }},
      {"dephased-gap",
       [](const Request& r) {
         const auto& path = input(r, 0);
         const Json j = at(path, [&] { return io::read_file(path); });
         if (is_pure_json(j)) {
           const auto psi = load_pure(path);
           const auto b = load_bases(r, psi.dims().empty() ? 2 : psi.dims()[0]);
           return at(path, [&] { return Json{{"gap", io::number(dephased_gap(psi, b))}}; });
         }
         const auto rho = load_state(path);
         const auto b = load_bases(r, rho.dims().empty() ? 2 : rho.dims()[0]);
         return at(path, [&] { return Json{{"gap", io::number(dephased_gap(rho, b))}}; });
       }},
      {"classify3",
       [](const Request& r) {
         const auto psi = load_pure(input(r, 0));
         std::optional<LocalBases> declared;
         if (!r.bases.empty()) declared = load_bases(r, 2);
         return at(input(r, 0), [&] { return io::to_json(classify(psi, r.tol, declared)); });
       }},
      {"diagram",
       [](const Request& r) {
         const auto rho = load_state(input(r, 0));
         const auto h = hamiltonian(r, 0);
         return at(input(r, 0), [&] {
           Json pts = Json::array();
           for (const auto& p : energy_entropy_diagram(rho, h)) pts.push_back(io::to_json(p));
           return Json{{"points", std::move(pts)}};
         });
       }},
  };
  return table;
}

void emit_error(std::ostream& err, const Located& e) {
  err << io::dump(Json{{"code", e.code}, {"message", e.message}, {"path", e.path}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Request req;
  CLI::App app{"Work extraction, passive states and entanglement from passive-state energy", "ergo"};
  std::string names;
  for (const auto& [name, fn] : handlers()) names += (names.empty() ? "" : ", ") + name;
  app.add_option("command", req.command, "One of: " + names)->required();
  app.add_option("--input,-i", req.inputs, "JSON state, spectrum or channel file (repeatable)");
  app.add_option("--hamiltonian,-H", req.hamiltonians, "JSON file, diag:e0,e1,... or ladder:d (repeatable)");
  app.add_option("--alpha", req.alpha, "Renyi order (inf allowed)");
  app.add_option("--beta", req.beta, "inverse temperature (inf allowed)");
  app.add_option("--copies", req.copies, "number of copies for percopy");
  app.add_option("--seed", req.seed, "RNG seed");
  app.add_option("--tol", req.tol, "comparison tolerance");
  app.add_option("--output,-o", req.output, "write JSON here instead of stdout");
  app.add_option("--k", req.k, "single Vidal monotone index (1-based)");
  app.add_option("--env-hamiltonian", req.env_hamiltonian, "environment Hamiltonian for epo-sample");
  app.add_option("--env-beta", req.env_beta, "environment inverse temperature for epo-sample");
  app.add_option("--bases", req.bases, "JSON {\"bases\": [A, B, C]} of local bases");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(err, {2, e.what(), "argv"});
    return 2;
  }

  const auto it = handlers().find(req.command);
  if (it == handlers().end()) {
    emit_error(err, {2, "unknown subcommand '" + req.command + "'", "command"});
    return 2;
  }
  try {
    const std::string text = io::dump(it->second(req));
    if (req.output.empty()) {
      out << text;
    } else {
      std::ofstream f(req.output);
      if (!f || !(f << text)) throw Located{2, "cannot write output file", req.output};
    }
    return 0;
  } catch (const Located& e) {
    emit_error(err, e);
    return e.code;
  } catch (const ValidationError& e) {
    emit_error(err, {2, e.what(), req.command});
    return 2;
  } catch (const DomainError& e) {
    emit_error(err, {3, e.what(), req.command});
    return 3;
  } catch (const NumericalError& e) {
    emit_error(err, {3, e.what(), req.command});
    return 3;
  }
}

}  // namespace ergo::cli
