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

#include "ergo/entangle.hpp"

#include <cmath>

#include "ergo/passive.hpp"

namespace ergo {

namespace {

void require_bipartite(const PureState& psi, const char* what) {
  if (psi.dims().size() != 2) throw ValidationError(std::string(what) + ": state must have two parties");
}

void require_fits(const PureState& psi, const Hamiltonian& h_a, const char* what) {
  require_bipartite(psi, what);
  if (psi.dims()[0] > h_a.dim()) {
    throw ValidationError(std::string(what) + ": first party dimension exceeds the Hamiltonian dimension");
  }
}

}  // namespace

Spectrum marginal_spectrum(const PureState& psi) {
  require_bipartite(psi, "marginal_spectrum");
  return schmidt(psi).coefficients.padded(psi.dims()[0]);
}

MeasureValue measure_pure(const PureState& psi, const Hamiltonian& h_a) {
  require_fits(psi, h_a, "measure_pure");
  return {passive_energy(marginal_spectrum(psi), h_a), 1, h_a.energies()};
}

std::vector<double> vidal_monotones(const Spectrum& schmidt_coefficients) {
  const auto& p = schmidt_coefficients.probs();
  std::vector<double> tails(p.size());
  double tail = 0.0;
  for (std::size_t i = p.size(); i-- > 0;) {
    tail += p[i];
    tails[i] = tail;
  }
  tails.front() = 1.0;
  return tails;
}

double vidal_monotone(const PureState& psi, std::size_t k) {
  const Spectrum s = marginal_spectrum(psi);
  if (k < 1 || k > s.size()) throw ValidationError("vidal_monotone: k out of range");
  return vidal_monotones(s)[k - 1];
}

Hamiltonian vidal_hamiltonian(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw ValidationError("vidal_hamiltonian: k out of range");
  std::vector<double> e(n, 1.0);
  for (std::size_t i = 0; i + 1 < k; ++i) e[i] = 0.0;
  return Hamiltonian(std::move(e));
}

double conversion_probability(const Spectrum& psi, const Spectrum& phi) {
  const std::size_t n = std::max(psi.size(), phi.size());
  const auto a = vidal_monotones(psi.padded(n));
  const auto b = vidal_monotones(phi.padded(n));
  double p = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    if (b[k] <= tol::kRank) continue;
    p = std::min(p, a[k] / b[k]);
  }
  return p;
}

double conversion_probability(const PureState& psi, const PureState& phi) {
  require_bipartite(psi, "conversion_probability");
  require_bipartite(phi, "conversion_probability");
  return conversion_probability(schmidt(psi).coefficients, schmidt(phi).coefficients);
}

double ergotropic_gap(const DensityMatrix& rho_xy, const Hamiltonian& h_x, const Hamiltonian& h_y) {
  if (rho_xy.dims().size() != 2 || rho_xy.dims()[0] != h_x.dim() || rho_xy.dims()[1] != h_y.dim()) {
    throw ValidationError("ergotropic_gap: state dims must be {dim H_X, dim H_Y}");
  }
  const std::size_t x[] = {0}, y[] = {1};
  const double ex = passive_energy(partial_trace(rho_xy, x).spectrum(), h_x);
  const double ey = passive_energy(partial_trace(rho_xy, y).spectrum(), h_y);
  const double exy = passive_energy(rho_xy.spectrum(), Hamiltonian::local_sum(h_x, h_y));
  return ex + ey - exy;
}

MeasureValue per_copy_measure(const Spectrum& marginal, int copies, const Hamiltonian& h_a) {
  if (copies < 1) throw ValidationError("per_copy_measure: copies must be >= 1");
  if (marginal.size() > h_a.dim()) throw ValidationError("per_copy_measure: marginal exceeds Hamiltonian");
  const std::size_t d = h_a.dim();
  std::size_t total = 1;
  for (int c = 0; c < copies; ++c) {
    total *= d;
    if (total > 64) throw ValidationError("per_copy_measure: (d_A)^n exceeds 64");
  }
  const Spectrum single = marginal.padded(d);
  std::vector<double> probs{1.0}, energies{0.0};
  for (int c = 0; c < copies; ++c) {
    std::vector<double> np, ne;
    np.reserve(probs.size() * d);
    ne.reserve(probs.size() * d);
    for (std::size_t i = 0; i < probs.size(); ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        np.push_back(probs[i] * single[j]);
        ne.push_back(energies[i] + h_a.energies()[j]);
      }
    }
    probs = std::move(np);
    energies = std::move(ne);
  }
  return {passive_energy(probs, energies) / copies, copies, h_a.energies()};
}

MeasureValue per_copy_measure(const PureState& psi, int copies, const Hamiltonian& h_a) {
  require_fits(psi, h_a, "per_copy_measure");
  return per_copy_measure(marginal_spectrum(psi), copies, h_a);
}

AsymptoticMeasure asymptotic_measure(const PureState& psi, const Hamiltonian& h_a) {
  require_fits(psi, h_a, "asymptotic_measure");
  const Spectrum marginal = marginal_spectrum(psi).padded(h_a.dim());
  const double s = renyi_entropy(marginal, 1.0, EntropyUnit::Nats);
  const double beta = match_beta_by_entropy(s, h_a);
  const ThermalState tau = gibbs_state(h_a, beta);
  double value = 0.0;
  for (std::size_t i = 0; i < h_a.dim(); ++i) value += tau.populations[i] * h_a.energies()[i];
  return {value, beta, s, tau.log_z};
}

double measure_mixed_upper_bound(const DensityMatrix& rho_ab, const Decomposition& dec, const Hamiltonian& h_a) {
  if (dec.weights.size() != dec.components.size() || dec.weights.empty()) {
    throw ValidationError("measure_mixed_upper_bound: weights and components differ in length");
  }
  const auto d = static_cast<Eigen::Index>(rho_ab.dim());
  ComplexMatrix rebuilt = ComplexMatrix::Zero(d, d);
  double total = 0.0;
  for (std::size_t i = 0; i < dec.weights.size(); ++i) {
    const double w = dec.weights[i];
    if (!(w >= 0.0)) throw ValidationError("measure_mixed_upper_bound: negative weight");
    if (dec.components[i].dim() != rho_ab.dim()) {
      throw ValidationError("measure_mixed_upper_bound: component dimension mismatch");
    }
    total += w;
    rebuilt += w * dec.components[i].projector();
  }
  if (std::abs(total - 1.0) > tol::kInvariant) throw ValidationError("measure_mixed_upper_bound: weights do not sum to 1");
  const double residual = max_abs(rebuilt - rho_ab.matrix());
  if (residual > tol::kResidual) {
    throw ValidationError("measure_mixed_upper_bound: decomposition does not reproduce the state (residual " +
                          std::to_string(residual) + ")");
  }
  double bound = 0.0;
  for (std::size_t i = 0; i < dec.weights.size(); ++i) {
    if (dec.weights[i] > 0.0) bound += dec.weights[i] * measure_pure(dec.components[i], h_a).value;
  }
  return bound;
}

}  // namespace ergo
