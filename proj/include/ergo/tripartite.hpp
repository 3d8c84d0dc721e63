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

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "ergo/qcore.hpp"

namespace ergo {

enum class ClassLabel { GHZ, W, BisepAB_C, BisepAC_B, BisepBC_A, Product, AmbiguousGHZorW };
std::string_view to_string(ClassLabel label);

enum class Cut { A_BC, B_AC, C_AB };
enum class Pair { AB, AC, BC };

/// Per-party local bases. Column 0 of each unitary is |psi_i>, column 1 is
/// |psi_i>^perp (qubits); larger local dimensions are allowed where noted.
using LocalBases = std::array<ComplexMatrix, 3>;
LocalBases computational_bases(std::size_t d = 2);
LocalBases random_local_bases(Rng& rng, std::size_t d = 2);

/// Ergotropic gaps of the three one-versus-rest cuts.
struct GapSignature {
  double gap_a_bc;
  double gap_b_ac;
  double gap_c_ab;
};

/// sqrt(lambda_max)|psi1 psi2 psi3> + e^{i phase} sqrt(1 - lambda_max)|perp perp perp>,
/// lambda_max in [1/2, 1].
PureState make_ghz(double lambda_max, double phase, const LocalBases& bases = computational_bases());

/// sqrt(l1)|psi1 psi2 psi3^perp> + e^{i phi1} sqrt(l2)|psi1 psi2^perp psi3>
///   + e^{i phi2} sqrt(l3)|psi1^perp psi2 psi3>, with l1 >= l2 >= l3 >= 0 summing to 1.
PureState make_w(double l1, double l2, double l3, double phi1, double phi2,
                 const LocalBases& bases = computational_bases());

/// (sqrt(p_min)|psi psi> + sqrt(1 - p_min)|perp perp>) on `pair`, times |psi>
/// on the remaining party. p_min in [0, 1/2]; p_min = 0 gives a product state.
PureState make_bisep(double p_min, Pair pair, const LocalBases& bases = computational_bases());

/// |psi1 psi2 psi3>.
PureState make_product(const LocalBases& bases = computational_bases());

/// Gap of a one-versus-rest cut of a pure three-party state,
/// E(rho_X^p) + E(rho_YZ^p), with H = sum_i i |i><i| on every party.
double cut_gap(const PureState& psi, Cut cut);
GapSignature gap_signature(const PureState& psi);

struct MonogamyTerms {
  double lhs;     // gap of the A|BC cut
  double gap_ab;  // ergotropic gap of rho_AB
  double gap_ac;  // ergotropic gap of rho_AC
};

/// Cut gap A|BC and the two-party gaps it is bounded by (equal for qubits).
MonogamyTerms monogamy_decompose(const PureState& psi);

/// sum_X E(rho_X^p) - E(rho^p) for a state diagonal in a product basis,
/// H = sum_i i |i><i| per party. `joint` is the product-basis distribution.
double dephased_gap(std::span<const double> joint, std::span<const std::size_t> dims);
/// Dephases psi in the product basis `bases` first.
double dephased_gap(const PureState& psi, const LocalBases& bases);
/// rho must already be diagonal (within 1e-9) in the product basis `bases`.
double dephased_gap(const DensityMatrix& rho, const LocalBases& bases);

struct ClassificationReport {
  ClassLabel label;
  GapSignature signature;
  std::optional<double> dephased_gap;
  std::string rule;
};

inline constexpr double kGapZeroTol = 1e-9;

/// Labels a state from the canonical GHZ, W, biseparable and product families
/// by the zero pattern of its gap signature. Equal nonzero signatures are split
/// with the dephased gap, taken in `declared` bases or else in the marginal
/// eigenbases. Anything that fits no family row is AmbiguousGHZorW.
ClassificationReport classify(const PureState& psi, double tol = kGapZeroTol,
                              std::optional<LocalBases> declared = std::nullopt);

}  // namespace ergo
