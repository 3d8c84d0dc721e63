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

#include "ergo/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace ergo::io {

namespace {

std::string join(const std::string& path, const std::string& key) { return path + "/" + key; }

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw ValidationError(path + ": expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ValidationError(join(path, key) + ": missing field");
  return *it;
}

std::vector<double> real_array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ValidationError(path + ": expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(to_double(j[i], path + "/" + std::to_string(i)));
  return out;
}

Dims dims_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ValidationError(path + ": expected an array of dimensions");
  Dims out;
  for (const auto& d : j) {
    if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) {
      throw ValidationError(path + ": dimensions must be positive integers");
    }
    out.push_back(d.get<std::size_t>());
  }
  return out;
}

Json dims_to_json(const Dims& dims) { return Json(dims); }

ComplexMatrix grid_from_json(const Json& re, const Json* im, const std::string& path) {
  if (!re.is_array() || re.empty()) throw ValidationError(path + "/re: expected a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(re.size());
  const auto cols = static_cast<Eigen::Index>(re[0].is_array() ? re[0].size() : 0);
  if (cols == 0) throw ValidationError(path + "/re: rows must be non-empty arrays");
  if (im && (!im->is_array() || im->size() != re.size())) throw ValidationError(path + "/im: shape mismatch");
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const auto rr = real_array(re[static_cast<std::size_t>(r)], path + "/re/" + std::to_string(r));
    if (static_cast<Eigen::Index>(rr.size()) != cols) throw ValidationError(path + "/re: ragged rows");
    std::vector<double> ir(rr.size(), 0.0);
    if (im) {
      ir = real_array((*im)[static_cast<std::size_t>(r)], path + "/im/" + std::to_string(r));
      if (ir.size() != rr.size()) throw ValidationError(path + "/im: shape mismatch");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = Complex(rr[static_cast<std::size_t>(c)], ir[static_cast<std::size_t>(c)]);
    }
  }
  return m;
}

std::pair<Json, Json> grid_to_json(const ComplexMatrix& m) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json rr = Json::array(), ir = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ir.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  return {std::move(re), std::move(im)};
}

template <typename F>
auto guarded(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

}  // namespace

Json number(double x) {
  if (std::isinf(x)) return x > 0 ? Json("inf") : Json("-inf");
  if (std::isnan(x)) return Json("nan");
  return Json(x);
}

double to_double(const Json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw ValidationError((path.empty() ? std::string("value") : path) + ": expected a number");
}

Json matrix_to_json(const ComplexMatrix& m, const Dims& dims) {
  auto [re, im] = grid_to_json(m);
  Json j;
  j["dims"] = dims_to_json(dims.empty() ? Dims{static_cast<std::size_t>(m.rows())} : dims);
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

ComplexMatrix matrix_from_json(const Json& j, Dims* dims, const std::string& path) {
  const Json& re = field(j, "re", path);
  const Json* im = j.contains("im") ? &j["im"] : nullptr;
  ComplexMatrix m = grid_from_json(re, im, path);
  if (dims) {
    *dims = j.contains("dims") ? dims_from_json(j["dims"], join(path, "dims")) : Dims{};
  }
  return m;
}

Json to_json(const DensityMatrix& rho) { return matrix_to_json(rho.matrix(), rho.dims()); }

DensityMatrix density_from_json(const Json& j, const std::string& path) {
  Dims dims;
  ComplexMatrix m = matrix_from_json(j, &dims, path);
  return guarded(path, [&] { return DensityMatrix(std::move(m), std::move(dims)); });
}

Json to_json(const PureState& psi) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < psi.amplitudes().size(); ++i) {
    re.push_back(psi.amplitudes()(i).real());
    im.push_back(psi.amplitudes()(i).imag());
  }
  Json j;
  j["dims"] = dims_to_json(psi.dims());
  j["re"] = std::move(re);
  j["im"] = std::move(im);
  return j;
}

PureState pure_from_json(const Json& j, const std::string& path) {
  const auto re = real_array(field(j, "re", path), join(path, "re"));
  std::vector<double> im(re.size(), 0.0);
  if (j.contains("im")) {
    im = real_array(j["im"], join(path, "im"));
    if (im.size() != re.size()) throw ValidationError(join(path, "im") + ": length mismatch");
  }
  ComplexVector v(static_cast<Eigen::Index>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) v(static_cast<Eigen::Index>(i)) = Complex(re[i], im[i]);
  Dims dims = j.contains("dims") ? dims_from_json(j["dims"], join(path, "dims")) : Dims{re.size()};
  return guarded(path, [&] { return PureState(std::move(dims), std::move(v)); });
}

Json to_json(const Hamiltonian& h) {
  auto [re, im] = grid_to_json(h.basis());
  Json j;
  Json e = Json::array();
  for (double x : h.energies()) e.push_back(x);
  j["energies"] = std::move(e);
  j["basis_re"] = std::move(re);
  j["basis_im"] = std::move(im);
  return j;
}

Hamiltonian hamiltonian_from_json(const Json& j, const std::string& path) {
  auto energies = real_array(field(j, "energies", path), join(path, "energies"));
  ComplexMatrix basis;
  if (j.contains("basis_re")) {
    const Json* im = j.contains("basis_im") ? &j["basis_im"] : nullptr;
    basis = grid_from_json(j["basis_re"], im, join(path, "basis"));
  }
  return guarded(path, [&] { return Hamiltonian(std::move(energies), std::move(basis)); });
}

Json to_json(const Spectrum& s) {
  Json p = Json::array();
  for (double x : s.probs()) p.push_back(x);
  return Json{{"probs", std::move(p)}};
}

Spectrum spectrum_from_json(const Json& j, const std::string& path) {
  auto probs = real_array(field(j, "probs", path), join(path, "probs"));
  return guarded(path, [&] { return Spectrum(std::move(probs)); });
}

Json to_json(const EpoChannel& c) {
  Json kraus = Json::array();
  for (const auto& m : c.kraus()) kraus.push_back(matrix_to_json(m));
  return Json{{"H_S", to_json(c.system_hamiltonian())}, {"kraus", std::move(kraus)}};
}

EpoChannel channel_from_json(const Json& j, const std::string& path) {
  Hamiltonian h = hamiltonian_from_json(field(j, "H_S", path), join(path, "H_S"));
  const Json& list = field(j, "kraus", path);
  if (!list.is_array()) throw ValidationError(join(path, "kraus") + ": expected an array");
  std::vector<ComplexMatrix> kraus;
  for (std::size_t i = 0; i < list.size(); ++i) {
    kraus.push_back(matrix_from_json(list[i], nullptr, join(path, "kraus/" + std::to_string(i))));
  }
  return guarded(path, [&] { return EpoChannel(std::move(h), std::move(kraus)); });
}

Json to_json(const WorkReport& r) {
  return Json{{"internal_energy", number(r.internal_energy)},
              {"passive_energy", number(r.passive_energy)},
              {"ergotropy", number(r.ergotropy)},
              {"thermodynamic_work", number(r.thermodynamic_work)},
              {"matched_beta", number(r.matched_beta)},
              {"entropy_nats", number(r.entropy_nats)},
              {"entropy_bits", number(r.entropy_bits)}};
}

Json to_json(const ThermalState& t) {
  Json pops = Json::array();
  for (double p : t.populations) pops.push_back(p);
  return Json{{"beta", number(t.beta)},
              {"logZ", number(t.log_z)},
              {"populations", std::move(pops)},
              {"state", to_json(t.state)}};
}

Json to_json(const MeasureValue& m) {
  Json e = Json::array();
  for (double x : m.energies) e.push_back(x);
  return Json{{"value", number(m.value)}, {"copies", m.copies}, {"energies", std::move(e)}};
}

Json to_json(const EpoValidation& v) {
  Json checks = Json::array();
  for (const auto& c : v.checks) {
    checks.push_back(Json{{"name", c.name}, {"residual", number(c.residual)}, {"pass", c.pass}});
  }
  return Json{{"checks", std::move(checks)}, {"pass", v.pass()}};
}

Json to_json(const MonotoneReport& r) {
  Json out = Json::array();
  for (const auto& c : r.checks) {
    out.push_back(Json{{"name", c.name}, {"lhs", number(c.lhs)}, {"rhs", number(c.rhs)}, {"pass", c.pass}});
  }
  return out;
}

Json to_json(const GapSignature& g) {
  return Json{{"gap_A_BC", number(g.gap_a_bc)}, {"gap_B_AC", number(g.gap_b_ac)}, {"gap_C_AB", number(g.gap_c_ab)}};
}

Json to_json(const ClassificationReport& r) {
  Json j{{"label", std::string(to_string(r.label))}, {"signature", to_json(r.signature)}, {"rule", r.rule}};
  j["dephased_gap"] = r.dephased_gap ? number(*r.dephased_gap) : Json(nullptr);
  return j;
}

Json to_json(const DiagramPoint& p) {
  return Json{{"label", p.label}, {"S_nats", number(p.entropy_nats)}, {"S_bits", number(p.entropy_bits)},
              {"E", number(p.energy)}};
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError(path + ": cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ergo::io
