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

#include "ergo/passive.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include <boost/math/tools/roots.hpp>

namespace ergo {

namespace {

void require_same_dim(const DensityMatrix& rho, const Hamiltonian& h, const char* what) {
  if (rho.dim() != h.dim()) {
    throw ValidationError(std::string(what) + ": state dimension " + std::to_string(rho.dim()) +
                          " does not match Hamiltonian dimension " + std::to_string(h.dim()));
  }
}

double to_unit(double nats, EntropyUnit unit) {
  return unit == EntropyUnit::Bits ? nats / std::numbers::ln2 : nats;
}

ComplexMatrix support_projector(const EigenDecomposition& eig) {
  const auto d = eig.vectors.rows();
  ComplexMatrix p = ComplexMatrix::Zero(d, d);
  for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
    if (eig.values(k) > tol::kRank) p += eig.vectors.col(k) * eig.vectors.col(k).adjoint();
  }
  return p;
}

// Weight of rho outside the support of sigma.
double weight_outside(const EigenDecomposition& rho, const EigenDecomposition& sigma) {
  double w = 0.0;
  for (Eigen::Index i = 0; i < rho.values.size(); ++i) {
    if (rho.values(i) <= tol::kRank) continue;
    for (Eigen::Index j = 0; j < sigma.values.size(); ++j) {
      if (sigma.values(j) > tol::kRank) continue;
      w += rho.values(i) * std::norm(sigma.vectors.col(j).dot(rho.vectors.col(i)));
    }
  }
  return w;
}

}  // namespace

double energy(const DensityMatrix& rho, const Hamiltonian& h) {
  require_same_dim(rho, h, "energy");
  return (rho.matrix() * h.matrix()).trace().real();
}

DensityMatrix passive_state(const DensityMatrix& rho, const Hamiltonian& h) {
  require_same_dim(rho, h, "passive_state");
  const Spectrum eigs = rho.spectrum();
  const auto d = static_cast<Eigen::Index>(h.dim());
  RealVector p(d);
  for (Eigen::Index i = 0; i < d; ++i) p(i) = eigs[static_cast<std::size_t>(i)];
  ComplexMatrix m = h.basis() * p.cast<Complex>().asDiagonal() * h.basis().adjoint();
  return DensityMatrix(std::move(m), rho.dims());
}

double passive_energy(std::span<const double> probs, std::span<const double> energies) {
  if (probs.size() > energies.size()) {
    throw ValidationError("passive_energy: spectrum longer than the Hamiltonian dimension");
  }
  std::vector<double> p(probs.begin(), probs.end());
  std::vector<double> e(energies.begin(), energies.end());
  std::sort(p.begin(), p.end(), std::greater<>());
  std::sort(e.begin(), e.end());
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) total += p[i] * e[i];
  return total;
}

double passive_energy(const Spectrum& spectrum, const Hamiltonian& h) {
  return passive_energy(spectrum.probs(), h.energies());
}

double ergotropy(const DensityMatrix& rho, const Hamiltonian& h) {
  require_same_dim(rho, h, "ergotropy");
  return energy(rho, h) - passive_energy(rho.spectrum(), h);
}

// ---------------------------------------------------------------------------

std::vector<double> gibbs_populations(const Hamiltonian& h, double beta) {
  if (std::isnan(beta)) throw DomainError("gibbs_state: beta is NaN");
  const auto& e = h.energies();
  std::vector<double> p(e.size(), 0.0);
  if (std::isinf(beta)) {
    const auto levels = h.levels();
    const EnergyLevel& level = beta > 0 ? levels.front() : levels.back();
    for (auto c : level.columns) p[c] = 1.0 / static_cast<double>(level.columns.size());
    return p;
  }
  const double ref = beta >= 0 ? e.front() : e.back();
  double z = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    p[i] = std::exp(-beta * (e[i] - ref));
    z += p[i];
  }
  for (auto& x : p) x /= z;
  return p;
}

ThermalState gibbs_state(const Hamiltonian& h, double beta) {
  std::vector<double> p = gibbs_populations(h, beta);
  const auto& e = h.energies();
  double log_z = 0.0;
  if (std::isinf(beta)) {
    const auto levels = h.levels();
    const EnergyLevel& level = beta > 0 ? levels.front() : levels.back();
    const double ref = level.energy;
    log_z = std::log(static_cast<double>(level.columns.size())) + (ref == 0.0 ? 0.0 : -beta * ref);
  } else {
    const double ref = beta >= 0 ? e.front() : e.back();
    double z = 0.0;
    for (double ei : e) z += std::exp(-beta * (ei - ref));
    log_z = std::log(z) - beta * ref;
  }
  const auto d = static_cast<Eigen::Index>(h.dim());
  RealVector pv = Eigen::Map<const RealVector>(p.data(), d);
  DensityMatrix state(h.basis() * pv.cast<Complex>().asDiagonal() * h.basis().adjoint());
  return {beta, h, std::move(state), std::move(p), log_z};
}

double thermal_entropy(const Hamiltonian& h, double beta) {
  if (std::isinf(beta)) {
    const auto levels = h.levels();
    return std::log(static_cast<double>((beta > 0 ? levels.front() : levels.back()).columns.size()));
  }
  const auto& e = h.energies();
  const double ref = beta >= 0 ? e.front() : e.back();
  double z = 0.0, mean = 0.0;
  for (double ei : e) {
    const double w = std::exp(-beta * (ei - ref));
    z += w;
    mean += w * (ei - ref);
  }
  return beta * mean / z + std::log(z);
}

double match_beta_by_entropy(double entropy_nats, const Hamiltonian& h) {
  const double s_max = std::log(static_cast<double>(h.dim()));
  const double s_min = thermal_entropy(h, kInfinity);
  if (!std::isfinite(entropy_nats) || entropy_nats > s_max + tol::kInvariant ||
      entropy_nats < s_min - tol::kInvariant) {
    throw DomainError("match_beta_by_entropy: entropy " + std::to_string(entropy_nats) +
                      " nats outside the attainable range [" + std::to_string(s_min) + ", " +
                      std::to_string(s_max) + "]");
  }
  if (entropy_nats >= s_max - tol::kRank) return 0.0;
  if (entropy_nats <= s_min + tol::kRank) return kInfinity;
  if (s_max - s_min <= tol::kRank) {
    throw DomainError("match_beta_by_entropy: fully degenerate Hamiltonian");
  }

  auto excess = [&](double beta) { return thermal_entropy(h, beta) - entropy_nats; };
  double hi = 1e6;
  while (excess(hi) > 0.0) {
    if (hi > 1e300) throw NumericalError("match_beta_by_entropy: could not bracket beta", 0);
    hi *= 2.0;
  }
  std::uintmax_t iterations = 400;
  const auto bracket =
      boost::math::tools::bisect(excess, 0.0, hi, boost::math::tools::eps_tolerance<double>(52), iterations);
  double beta = 0.5 * (bracket.first + bracket.second);
  // Keep whichever bracket end is closest in entropy.
  for (double candidate : {bracket.first, bracket.second}) {
    if (std::abs(excess(candidate)) < std::abs(excess(beta))) beta = candidate;
  }
  if (std::abs(excess(beta)) > tol::kInvariant) {
    throw NumericalError("match_beta_by_entropy: bisection missed the target entropy",
                         static_cast<int>(iterations));
  }
  return beta;
}

double thermodynamic_work(const DensityMatrix& rho, const Hamiltonian& h) {
  require_same_dim(rho, h, "thermodynamic_work");
  const double beta = match_beta_by_entropy(renyi_entropy(rho, 1.0, EntropyUnit::Nats), h);
  const auto p = gibbs_populations(h, beta);
  double thermal_energy = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) thermal_energy += p[i] * h.energies()[i];
  return energy(rho, h) - thermal_energy;
}

WorkReport work_report(const DensityMatrix& rho, const Hamiltonian& h) {
  require_same_dim(rho, h, "work_report");
  const Spectrum eigs = rho.spectrum();
  WorkReport r{};
  r.internal_energy = energy(rho, h);
  r.passive_energy = passive_energy(eigs, h);
  r.ergotropy = r.internal_energy - r.passive_energy;
  r.entropy_nats = renyi_entropy(eigs, 1.0, EntropyUnit::Nats);
  r.entropy_bits = renyi_entropy(eigs, 1.0, EntropyUnit::Bits);
  r.matched_beta = match_beta_by_entropy(r.entropy_nats, h);
  r.thermodynamic_work = thermodynamic_work(rho, h);
  return r;
}

// ---------------------------------------------------------------------------

double renyi_entropy(const Spectrum& spectrum, double alpha, EntropyUnit unit) {
  if (std::isnan(alpha) || alpha < 0.0) throw DomainError("renyi_entropy: alpha must be >= 0");
  const auto& p = spectrum.probs();
  double nats = 0.0;
  if (alpha == 0.0) {
    nats = std::log(static_cast<double>(spectrum.rank()));
  } else if (alpha == 1.0) {
    for (double x : p) {
      if (x > 0.0) nats -= x * std::log(x);
    }
  } else if (std::isinf(alpha)) {
    nats = -std::log(spectrum.max());
  } else {
    // Factor out p_max so large orders neither underflow nor overflow.
    const double top = spectrum.max();
    double sum = 0.0;
    for (double x : p) {
      if (x > 0.0) sum += std::pow(x / top, alpha);
    }
    nats = (alpha * std::log(top) + std::log(sum)) / (1.0 - alpha);
  }
  return to_unit(nats, unit);
}

double renyi_entropy(const DensityMatrix& rho, double alpha, EntropyUnit unit) {
  return renyi_entropy(rho.spectrum(), alpha, unit);
}

double renyi_divergence(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha) {
  if (rho.dim() != sigma.dim()) throw ValidationError("renyi_divergence: dimension mismatch");
  if (std::isnan(alpha) || alpha < 0.0 || alpha > 2.0) {
    throw DomainError("renyi_divergence: alpha must lie in [0, 2]");
  }
  const auto er = eig_hermitian(rho.matrix());
  const auto es = eig_hermitian(sigma.matrix());

  if (alpha == 0.0) {
    const double overlap = (support_projector(er) * sigma.matrix()).trace().real();
    if (overlap <= tol::kRank) return kInfinity;
    return -std::log(overlap);
  }

  if (alpha == 1.0) {
    if (weight_outside(er, es) > tol::kRank) return kInfinity;
    double d = 0.0;
    for (Eigen::Index i = 0; i < er.values.size(); ++i) {
      const double r = er.values(i);
      if (r <= tol::kRank) continue;
      d += r * std::log(r);
      for (Eigen::Index j = 0; j < es.values.size(); ++j) {
        const double s = es.values(j);
        if (s <= tol::kRank) continue;
        d -= r * std::norm(es.vectors.col(j).dot(er.vectors.col(i))) * std::log(s);
      }
    }
    return d;
  }

  const ComplexMatrix& a = rho.matrix();
  const ComplexMatrix& b = sigma.matrix();
  const double commutator = max_abs(a * b - b * a);
  if (commutator > tol::kInvariant) {
    throw ValidationError("renyi_divergence: fractional alpha requires commuting states (|[rho,sigma]| = " +
                          std::to_string(commutator) + ")");
  }
  if (alpha > 1.0 && weight_outside(er, es) > tol::kRank) return kInfinity;
  // Tr(rho^a sigma^(1-a)) = sum_ij r_i^a s_j^(1-a) |<s_j|r_i>|^2
  double q = 0.0;
  for (Eigen::Index i = 0; i < er.values.size(); ++i) {
    const double r = er.values(i);
    if (r <= tol::kRank) continue;
    for (Eigen::Index j = 0; j < es.values.size(); ++j) {
      const double s = es.values(j);
      if (s <= tol::kRank) continue;
      q += std::pow(r, alpha) * std::pow(s, 1.0 - alpha) * std::norm(es.vectors.col(j).dot(er.vectors.col(i)));
    }
  }
  if (q <= 0.0) return kInfinity;
  return std::log(q) / (alpha - 1.0);
}

double single_shot_work(const DensityMatrix& rho, const Hamiltonian& h, double beta) {
  require_same_dim(rho, h, "single_shot_work");
  if (!std::isfinite(beta) || beta <= 0.0) throw DomainError("single_shot_work: beta must be finite and > 0");
  const DensityMatrix dephased = dephase(rho, h);
  if (dephased.spectrum().rank() == dephased.dim()) return 0.0;
  return renyi_divergence(dephased, gibbs_state(h, beta).state, 0.0) / beta;
}

double free_energy(const DensityMatrix& rho, const Hamiltonian& h, double beta) {
  if (!std::isfinite(beta) || beta == 0.0) throw DomainError("free_energy: beta must be finite and nonzero");
  return energy(rho, h) - renyi_entropy(rho, 1.0, EntropyUnit::Nats) / beta;
}

std::vector<DiagramPoint> energy_entropy_diagram(const DensityMatrix& rho, const Hamiltonian& h) {
  require_same_dim(rho, h, "energy_entropy_diagram");
  const Spectrum eigs = rho.spectrum();
  const double s_nats = renyi_entropy(eigs, 1.0, EntropyUnit::Nats);
  const double s_bits = renyi_entropy(eigs, 1.0, EntropyUnit::Bits);
  const double beta = match_beta_by_entropy(s_nats, h);
  const auto p = gibbs_populations(h, beta);
  double thermal_energy = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) thermal_energy += p[i] * h.energies()[i];
  const double thermal_s = thermal_entropy(h, beta);
  return {
      {"rho", s_nats, s_bits, energy(rho, h)},
      {"passive", s_nats, s_bits, passive_energy(eigs, h)},
      {"thermal", thermal_s, to_unit(thermal_s, EntropyUnit::Bits), thermal_energy},
      {"ground", 0.0, 0.0, h.ground_energy()},
  };
}

}  // namespace ergo
