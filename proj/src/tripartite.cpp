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

#include "ergo/tripartite.hpp"

#include <algorithm>
#include <cmath>

#include "ergo/entangle.hpp"
#include "ergo/passive.hpp"

namespace ergo {

namespace {

constexpr double kBasisDegeneracy = 1e-8;

void require_tripartite(const PureState& psi, const char* what) {
  if (psi.dims().size() != 3) throw ValidationError(std::string(what) + ": state must have three parties");
}

void require_qubits(const LocalBases& bases, const char* what) {
  for (const auto& b : bases) {
    if (b.rows() != 2 || b.cols() != 2) throw ValidationError(std::string(what) + ": local bases must be 2x2");
    if (unitarity_defect(b) > tol::kInvariant) throw ValidationError(std::string(what) + ": local basis is not unitary");
  }
}

void check_bases(const LocalBases& bases, std::span<const std::size_t> dims, const char* what) {
  for (std::size_t k = 0; k < 3; ++k) {
    const auto d = static_cast<Eigen::Index>(dims[k]);
    if (bases[k].rows() != d || bases[k].cols() != d) {
      throw ValidationError(std::string(what) + ": basis dimension does not match party " + std::to_string(k));
    }
    if (unitarity_defect(bases[k]) > tol::kInvariant) {
      throw ValidationError(std::string(what) + ": local basis is not unitary");
    }
  }
}

ComplexVector product_vector(const LocalBases& bases, std::array<Eigen::Index, 3> digits) {
  return tensor(ComplexVector(bases[0].col(digits[0])),
                tensor(ComplexVector(bases[1].col(digits[1])), ComplexVector(bases[2].col(digits[2]))));
}

void check_weight(double w, const char* what) {
  if (!std::isfinite(w) || w < -tol::kInvariant || w > 1.0 + tol::kInvariant) {
    throw ValidationError(std::string(what) + ": weight outside [0, 1]");
  }
}

double safe_sqrt(double x) { return std::sqrt(std::max(x, 0.0)); }

const Dims kQubits3 = {2, 2, 2};

// Marginal eigenbases ordered by decreasing eigenvalue; empty when any
// marginal has a degenerate spectrum.
std::optional<LocalBases> marginal_eigenbases(const PureState& psi) {
  LocalBases out;
  const DensityMatrix rho = DensityMatrix::from_pure(psi);
  for (std::size_t k = 0; k < 3; ++k) {
    const std::size_t keep[] = {k};
    const auto eig = eig_hermitian(partial_trace(rho, keep).matrix());
    const auto n = eig.values.size();
    for (Eigen::Index i = 0; i + 1 < n; ++i) {
      if (eig.values(i + 1) - eig.values(i) <= kBasisDegeneracy) return std::nullopt;
    }
    out[k] = eig.vectors.rowwise().reverse();
  }
  return out;
}

}  // namespace

std::string_view to_string(ClassLabel label) {
  switch (label) {
    case ClassLabel::GHZ: return "GHZ";
    case ClassLabel::W: return "W";
    case ClassLabel::BisepAB_C: return "BisepAB_C";
    case ClassLabel::BisepAC_B: return "BisepAC_B";
    case ClassLabel::BisepBC_A: return "BisepBC_A";
    case ClassLabel::Product: return "Product";
    case ClassLabel::AmbiguousGHZorW: return "AmbiguousGHZorW";
  }
  return "AmbiguousGHZorW";
}

LocalBases computational_bases(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return {ComplexMatrix::Identity(n, n), ComplexMatrix::Identity(n, n), ComplexMatrix::Identity(n, n)};
}

LocalBases random_local_bases(Rng& rng, std::size_t d) {
  LocalBases b;
  for (auto& u : b) u = random_unitary(d, rng);
  return b;
}

PureState make_ghz(double lambda_max, double phase, const LocalBases& bases) {
  require_qubits(bases, "make_ghz");
  check_weight(lambda_max, "make_ghz");
  if (lambda_max < 0.5 - tol::kInvariant) throw ValidationError("make_ghz: lambda_max must be >= 1/2");
  const ComplexVector v = safe_sqrt(lambda_max) * product_vector(bases, {0, 0, 0}) +
                          std::polar(safe_sqrt(1.0 - lambda_max), phase) * product_vector(bases, {1, 1, 1});
  return PureState::normalized(kQubits3, v);
}

PureState make_w(double l1, double l2, double l3, double phi1, double phi2, const LocalBases& bases) {
  require_qubits(bases, "make_w");
  for (double w : {l1, l2, l3}) check_weight(w, "make_w");
  if (std::abs(l1 + l2 + l3 - 1.0) > tol::kInvariant) throw ValidationError("make_w: weights must sum to 1");
  if (l1 < l2 - tol::kInvariant || l2 < l3 - tol::kInvariant) {
    throw ValidationError("make_w: weights must satisfy l1 >= l2 >= l3");
  }
  const ComplexVector v = safe_sqrt(l1) * product_vector(bases, {0, 0, 1}) +
                          std::polar(safe_sqrt(l2), phi1) * product_vector(bases, {0, 1, 0}) +
                          std::polar(safe_sqrt(l3), phi2) * product_vector(bases, {1, 0, 0});
  return PureState::normalized(kQubits3, v);
}

PureState make_bisep(double p_min, Pair pair, const LocalBases& bases) {
  require_qubits(bases, "make_bisep");
  check_weight(p_min, "make_bisep");
  if (p_min > 0.5 + tol::kInvariant) throw ValidationError("make_bisep: p_min must be <= 1/2");
  // Digits of the two terms: the entangled pair flips together, the lone party stays on column 0.
  std::array<Eigen::Index, 3> flip{0, 0, 0};
  switch (pair) {
    case Pair::AB: flip = {1, 1, 0}; break;
    case Pair::AC: flip = {1, 0, 1}; break;
    case Pair::BC: flip = {0, 1, 1}; break;
  }
  const ComplexVector v =
      safe_sqrt(p_min) * product_vector(bases, {0, 0, 0}) + safe_sqrt(1.0 - p_min) * product_vector(bases, flip);
  return PureState::normalized(kQubits3, v);
}

PureState make_product(const LocalBases& bases) {
  require_qubits(bases, "make_product");
  return PureState::normalized(kQubits3, product_vector(bases, {0, 0, 0}));
}

double cut_gap(const PureState& psi, Cut cut) {
  require_tripartite(psi, "cut_gap");
  const auto& dims = psi.dims();
  std::size_t x = 0;
  switch (cut) {
    case Cut::A_BC: x = 0; break;
    case Cut::B_AC: x = 1; break;
    case Cut::C_AB: x = 2; break;
  }
  std::vector<std::size_t> rest;
  for (std::size_t k = 0; k < 3; ++k) {
    if (k != x) rest.push_back(k);
  }
  const DensityMatrix rho = DensityMatrix::from_pure(psi);
  const std::size_t keep_x[] = {x};
  const double ex = passive_energy(partial_trace(rho, keep_x).spectrum(), Hamiltonian::ladder(dims[x]));
  const Hamiltonian h_rest = Hamiltonian::local_sum(Hamiltonian::ladder(dims[rest[0]]), Hamiltonian::ladder(dims[rest[1]]));
  const double erest = passive_energy(partial_trace(rho, rest).spectrum(), h_rest);
  return ex + erest;
}

GapSignature gap_signature(const PureState& psi) {
  return {cut_gap(psi, Cut::A_BC), cut_gap(psi, Cut::B_AC), cut_gap(psi, Cut::C_AB)};
}

MonogamyTerms monogamy_decompose(const PureState& psi) {
  require_tripartite(psi, "monogamy_decompose");
  const auto& dims = psi.dims();
  const DensityMatrix rho = DensityMatrix::from_pure(psi);
  const std::size_t ab[] = {0, 1}, ac[] = {0, 2};
  const Hamiltonian ha = Hamiltonian::ladder(dims[0]);
  return {cut_gap(psi, Cut::A_BC),
          ergotropic_gap(partial_trace(rho, ab), ha, Hamiltonian::ladder(dims[1])),
          ergotropic_gap(partial_trace(rho, ac), ha, Hamiltonian::ladder(dims[2]))};
}

double dephased_gap(std::span<const double> joint, std::span<const std::size_t> dims) {
  if (dims.size() != 3) throw ValidationError("dephased_gap: three parties required");
  if (joint.size() != product(dims)) throw ValidationError("dephased_gap: distribution length mismatch");
  std::array<std::vector<double>, 3> marginals{std::vector<double>(dims[0], 0.0), std::vector<double>(dims[1], 0.0),
                                               std::vector<double>(dims[2], 0.0)};
  std::vector<double> energies(joint.size());
  for (std::size_t a = 0, idx = 0; a < dims[0]; ++a) {
    for (std::size_t b = 0; b < dims[1]; ++b) {
      for (std::size_t c = 0; c < dims[2]; ++c, ++idx) {
        marginals[0][a] += joint[idx];
        marginals[1][b] += joint[idx];
        marginals[2][c] += joint[idx];
        energies[idx] = static_cast<double>(a + b + c);
      }
    }
  }
  double local = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    local += passive_energy(marginals[k], Hamiltonian::ladder(dims[k]).energies());
  }
  return local - passive_energy(joint, energies);
}

double dephased_gap(const PureState& psi, const LocalBases& bases) {
  require_tripartite(psi, "dephased_gap");
  check_bases(bases, psi.dims(), "dephased_gap");
  const ComplexVector local = tensor(std::span<const ComplexMatrix>(bases)).adjoint() * psi.amplitudes();
  std::vector<double> joint(static_cast<std::size_t>(local.size()));
  for (Eigen::Index i = 0; i < local.size(); ++i) joint[static_cast<std::size_t>(i)] = std::norm(local(i));
  return dephased_gap(joint, psi.dims());
}

double dephased_gap(const DensityMatrix& rho, const LocalBases& bases) {
  if (rho.dims().size() != 3) throw ValidationError("dephased_gap: state must have three parties");
  check_bases(bases, rho.dims(), "dephased_gap");
  const ComplexMatrix u = tensor(std::span<const ComplexMatrix>(bases));
  const ComplexMatrix local = u.adjoint() * rho.matrix() * u;
  const ComplexMatrix off = local - ComplexMatrix(local.diagonal().asDiagonal());
  if (max_abs(off) > tol::kResidual) {
    throw ValidationError("dephased_gap: state is not diagonal in the declared product basis");
  }
  std::vector<double> joint(static_cast<std::size_t>(local.rows()));
  for (Eigen::Index i = 0; i < local.rows(); ++i) joint[static_cast<std::size_t>(i)] = local(i, i).real();
  return dephased_gap(joint, rho.dims());
}

ClassificationReport classify(const PureState& psi, double tol, std::optional<LocalBases> declared) {
  require_tripartite(psi, "classify");
  ClassificationReport r{ClassLabel::AmbiguousGHZorW, gap_signature(psi), std::nullopt, ""};
  const double g[] = {r.signature.gap_a_bc, r.signature.gap_b_ac, r.signature.gap_c_ab};
  const bool zero[] = {g[0] <= tol, g[1] <= tol, g[2] <= tol};
  const int zeros = zero[0] + zero[1] + zero[2];

  if (zeros == 3) {
    r.label = ClassLabel::Product;
    r.rule = "all cut gaps vanish";
    return r;
  }
  if (zeros == 2) {
    r.rule = "two vanishing cut gaps cannot occur for a pure state";
    return r;
  }
  if (zeros == 1) {
    const int z = zero[0] ? 0 : (zero[1] ? 1 : 2);
    const double u = g[(z + 1) % 3], v = g[(z + 2) % 3];
    if (std::abs(u - v) > tol) {
      r.rule = "one vanishing cut gap but unequal remaining gaps";
      return r;
    }
    static constexpr ClassLabel kBisep[] = {ClassLabel::BisepBC_A, ClassLabel::BisepAC_B, ClassLabel::BisepAB_C};
    r.label = kBisep[z];
    r.rule = "single vanishing cut gap";
    return r;
  }

  const bool all_equal = std::abs(g[0] - g[1]) <= tol && std::abs(g[1] - g[2]) <= tol && std::abs(g[0] - g[2]) <= tol;
  if (!all_equal) {
    // W row: (2 l3, 2 l2, 2 min(l1, l2 + l3)); GHZ signatures are always all-equal.
    const double l3 = g[0] / 2, l2 = g[1] / 2, l1 = 1.0 - l2 - l3;
    const bool ordered = l1 >= l2 - tol && l2 >= l3 - tol;
    if (ordered && std::abs(g[2] - 2.0 * std::min(l1, l2 + l3)) <= tol) {
      r.label = ClassLabel::W;
      r.rule = "unequal nonzero gaps matching the W row";
    } else {
      r.rule = "unequal nonzero gaps matching no canonical family";
    }
    return r;
  }

  const auto bases = declared ? declared : marginal_eigenbases(psi);
  if (!bases) {
    r.rule = "equal nonzero gaps; degenerate marginal leaves the local basis undetermined";
    return r;
  }
  const double dg = dephased_gap(psi, *bases);
  r.dephased_gap = dg;
  const double mean = (g[0] + g[1] + g[2]) / 3.0;
  if (std::abs(dg - mean) <= tol) {
    r.label = ClassLabel::GHZ;
    r.rule = "equal nonzero gaps; dephased gap equals the cut gap";
  } else if (std::abs(mean - 2.0 / 3.0) <= tol && std::abs(dg - 1.0 / 3.0) <= tol) {
    r.label = ClassLabel::W;
    r.rule = "equal nonzero gaps; dephased gap 1/3 of the symmetric W state";
  } else {
    r.rule = "equal nonzero gaps; dephased gap matches neither GHZ nor symmetric W";
  }
  return r;
}

}  // namespace ergo
