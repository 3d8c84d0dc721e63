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

#include "ergo/epo.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "ergo/majorize.hpp"
#include "ergo/passive.hpp"

namespace ergo {

Hamiltonian default_environment_hamiltonian() { return Hamiltonian({0.0, 0.0, 1.0, 1.0}); }

EpoChannel::EpoChannel(Hamiltonian system_hamiltonian, std::vector<ComplexMatrix> kraus)
    : system_(std::move(system_hamiltonian)), kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw ValidationError("EpoChannel: no Kraus operators");
  const auto d = static_cast<Eigen::Index>(system_.dim());
  for (const auto& m : kraus_) {
    if (m.rows() != d || m.cols() != d) {
      throw ValidationError("EpoChannel: Kraus operator shape does not match the system dimension");
    }
  }
}

EpoChannel EpoChannel::identity(Hamiltonian system_hamiltonian) {
  const auto d = static_cast<Eigen::Index>(system_hamiltonian.dim());
  return EpoChannel(std::move(system_hamiltonian), {ComplexMatrix::Identity(d, d)});
}

bool EpoValidation::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

EpoValidation validate_epo(const EpoChannel& channel, double tol) {
  const auto d = static_cast<Eigen::Index>(channel.dim());
  const ComplexMatrix h = channel.system_hamiltonian().matrix();
  ComplexMatrix completeness = ComplexMatrix::Zero(d, d);
  ComplexMatrix unitality = ComplexMatrix::Zero(d, d);
  double commutation = 0.0;
  for (const auto& m : channel.kraus()) {
    completeness += m.adjoint() * m;
    unitality += m * m.adjoint();
    commutation = std::max(commutation, max_abs(m * h - h * m));
  }
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const double c = max_abs(completeness - id);
  const double u = max_abs(unitality - id);
  return {{{"completeness", c, c <= tol}, {"unitality", u, u <= tol}, {"commutation", commutation, commutation <= tol}}};
}

ComplexMatrix sample_energy_preserving_unitary(const Hamiltonian& system, const Hamiltonian& environment,
                                               Rng& rng) {
  const std::size_t ds = system.dim(), de = environment.dim();
  std::vector<std::size_t> level_s(ds), level_e(de);
  const auto ls = system.levels();
  const auto le = environment.levels();
  for (std::size_t l = 0; l < ls.size(); ++l) {
    for (auto c : ls[l].columns) level_s[c] = l;
  }
  for (std::size_t l = 0; l < le.size(); ++l) {
    for (auto c : le[l].columns) level_e[c] = l;
  }
  // Joint eigenbasis index i * de + j, grouped by the pair of levels.
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Eigen::Index>> blocks;
  for (std::size_t i = 0; i < ds; ++i) {
    for (std::size_t j = 0; j < de; ++j) {
      blocks[{level_s[i], level_e[j]}].push_back(static_cast<Eigen::Index>(i * de + j));
    }
  }
  const auto n = static_cast<Eigen::Index>(ds * de);
  ComplexMatrix block_diag = ComplexMatrix::Zero(n, n);
  for (const auto& [key, idx] : blocks) {
    const ComplexMatrix w = random_unitary(idx.size(), rng);
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = 0; b < idx.size(); ++b) {
        block_diag(idx[a], idx[b]) = w(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
      }
    }
  }
  const ComplexMatrix joint = tensor(system.basis(), environment.basis());
  return joint * block_diag * joint.adjoint();
}

EpoChannel channel_from_unitary(const Hamiltonian& system, const EnvironmentSpec& env, const ComplexMatrix& u) {
  const auto ds = static_cast<Eigen::Index>(system.dim());
  const auto de = static_cast<Eigen::Index>(env.hamiltonian.dim());
  if (u.rows() != ds * de || u.cols() != ds * de) {
    throw ValidationError("channel_from_unitary: unitary shape does not match system (x) environment");
  }
  const std::vector<double> p = gibbs_populations(env.hamiltonian, env.beta);
  const ComplexMatrix id_s = ComplexMatrix::Identity(ds, ds);
  std::vector<ComplexMatrix> embed(static_cast<std::size_t>(de));
  for (Eigen::Index k = 0; k < de; ++k) {
    embed[static_cast<std::size_t>(k)] = tensor(id_s, ComplexMatrix(env.hamiltonian.basis().col(k)));
  }
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index k = 0; k < de; ++k) {
    const double pk = p[static_cast<std::size_t>(k)];
    if (pk <= 0.0) continue;
    const ComplexMatrix right = u * embed[static_cast<std::size_t>(k)];
    for (Eigen::Index j = 0; j < de; ++j) {
      ComplexMatrix m = std::sqrt(pk) * embed[static_cast<std::size_t>(j)].adjoint() * right;
      if (max_abs(m) > 1e-15) kraus.push_back(std::move(m));
    }
  }
  return EpoChannel(system, std::move(kraus));
}

EpoChannel sample_epo_channel(const Hamiltonian& system, const EnvironmentSpec& env, Rng& rng) {
  return channel_from_unitary(system, env, sample_energy_preserving_unitary(system, env.hamiltonian, rng));
}

EpoChannel sample_epo_channel(const Hamiltonian& system, const EnvironmentSpec& env, std::uint64_t seed) {
  Rng rng(seed);
  return sample_epo_channel(system, env, rng);
}

DensityMatrix apply(const EpoChannel& channel, const DensityMatrix& rho) {
  if (rho.dim() != channel.dim()) throw ValidationError("apply: state dimension does not match the channel");
  const auto d = static_cast<Eigen::Index>(rho.dim());
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const auto& m : channel.kraus()) out += m * rho.matrix() * m.adjoint();
  return DensityMatrix(std::move(out), rho.dims());
}

bool MonotoneReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

MonotoneReport monotone_report(const DensityMatrix& rho, const EpoChannel& channel, double beta_bath, double tol) {
  if (const auto v = validate_epo(channel, tol); !v.pass()) {
    std::string failed;
    for (const auto& c : v.checks) {
      if (!c.pass) failed += (failed.empty() ? "" : ", ") + c.name;
    }
    throw ValidationError("monotone_report: channel fails " + failed);
  }
  if (!std::isfinite(beta_bath) || beta_bath <= 0.0) {
    throw DomainError("monotone_report: bath beta must be finite and positive");
  }
  const Hamiltonian& h = channel.system_hamiltonian();
  const DensityMatrix sigma = apply(channel, rho);
  const Spectrum sp = rho.spectrum();
  const Spectrum sq = sigma.spectrum();

  MonotoneReport r;
  auto no_increase = [&](std::string name, double in, double out) {
    r.checks.push_back({std::move(name), in, out, out <= in + tol});
  };
  auto no_decrease = [&](std::string name, double in, double out) {
    r.checks.push_back({std::move(name), in, out, out >= in - tol});
  };

  const double slack = majorization_slack(sp.probs(), sq.probs());
  r.checks.push_back({"majorization", slack, 0.0, slack >= -tol});
  const std::pair<const char*, double> alphas[] = {
      {"renyi_entropy[0]", 0.0}, {"renyi_entropy[0.5]", 0.5}, {"renyi_entropy[1]", 1.0},
      {"renyi_entropy[2]", 2.0}, {"renyi_entropy[inf]", kInfinity}};
  for (const auto& [name, alpha] : alphas) {
    no_decrease(name, renyi_entropy(sp, alpha, EntropyUnit::Nats), renyi_entropy(sq, alpha, EntropyUnit::Nats));
  }
  no_decrease("passive_energy", passive_energy(sp, h), passive_energy(sq, h));
  no_increase("ergotropy", ergotropy(rho, h), ergotropy(sigma, h));
  no_increase("single_shot_work", single_shot_work(rho, h, beta_bath), single_shot_work(sigma, h, beta_bath));
  const double e_in = energy(rho, h), e_out = energy(sigma, h);
  r.checks.push_back({"energy", e_in, e_out, std::abs(e_in - e_out) <= tol});
  no_increase("free_energy", free_energy(rho, h, beta_bath), free_energy(sigma, h, beta_bath));
  return r;
}

}  // namespace ergo
