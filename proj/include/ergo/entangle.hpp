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

#pragma once

#include <cstddef>
#include <vector>

#include "ergo/qcore.hpp"

namespace ergo {

/// Entanglement value in energy units, per copy when `copies` > 1.
struct MeasureValue {
  double value;
  int copies;
  std::vector<double> energies;  // marginal Hamiltonian the value refers to
};

/// Pure-state ensemble sum_i weights[i] |components[i]><components[i]|.
struct Decomposition {
  std::vector<double> weights;
  std::vector<PureState> components;
};

/// Spectrum of the first party's marginal, zero-padded to its dimension.
Spectrum marginal_spectrum(const PureState& psi);

/// Passive-state energy of the first party's marginal under `h_a`.
MeasureValue measure_pure(const PureState& psi, const Hamiltonian& h_a);

/// Tail sum E_k = sum_{i >= k} lambda_i of the Schmidt coefficients, with
/// 1 <= k <= d_A (coefficients zero-padded to d_A).
double vidal_monotone(const PureState& psi, std::size_t k);
std::vector<double> vidal_monotones(const Spectrum& schmidt_coefficients);

/// Zeros on the first k-1 levels and ones above, on n levels. The passive
/// energy under this Hamiltonian is E_k.
Hamiltonian vidal_hamiltonian(std::size_t n, std::size_t k);

/// Optimal single-copy LOCC conversion probability psi -> phi,
/// min_k E_k(psi) / E_k(phi), skipping k with E_k(phi) <= 1e-12.
double conversion_probability(const Spectrum& psi, const Spectrum& phi);
double conversion_probability(const PureState& psi, const PureState& phi);

/// E(rho_X^p) + E(rho_Y^p) - E(rho_XY^p) for a two-party state, with the
/// joint Hamiltonian H_X (x) I + I (x) H_Y.
double ergotropic_gap(const DensityMatrix& rho_xy, const Hamiltonian& h_x, const Hamiltonian& h_y);

/// Per-copy passive energy of the n-fold marginal under the n-fold local sum
/// Hamiltonian. Requires d_A^n <= 64.
MeasureValue per_copy_measure(const Spectrum& marginal, int copies, const Hamiltonian& h_a);
MeasureValue per_copy_measure(const PureState& psi, int copies, const Hamiltonian& h_a);

struct AsymptoticMeasure {
  double value;         // Tr(tau_beta H_A)
  double beta;          // entropy-matched, >= 0, +inf for product states
  double entropy_nats;  // S(rho_A)
  double log_z;
};

/// Energy of the Gibbs state whose entropy equals the marginal entropy.
AsymptoticMeasure asymptotic_measure(const PureState& psi, const Hamiltonian& h_a);

/// sum_i p_i E(psi_i) for a decomposition of rho_ab; an upper bound on the
/// convex-roof value. Throws ValidationError when the decomposition does not
/// reproduce rho_ab within 1e-9.
double measure_mixed_upper_bound(const DensityMatrix& rho_ab, const Decomposition& dec, const Hamiltonian& h_a);

}  // namespace ergo
