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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace ergo {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Dims = std::vector<std::size_t>;
using Rng = std::mt19937_64;

/// Malformed input such as a wrong shape or a non-Hermitian matrix.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input outside the domain where a quantity is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, int iterations)
      : std::runtime_error(what + " (after " + std::to_string(iterations) + " iterations)"),
        iterations_(iterations) {}
  int iterations() const { return iterations_; }

 private:
  int iterations_;
};

namespace tol {
inline constexpr double kInvariant = 1e-10;   // type invariants
inline constexpr double kResidual = 1e-9;     // reconstruction residuals
inline constexpr double kRank = 1e-12;        // support / rank cutoff
inline constexpr double kEnergyGroup = 1e-9;  // equal-energy grouping
}  // namespace tol

// ---------------------------------------------------------------------------
// Matrix helpers
// ---------------------------------------------------------------------------

double max_abs(const ComplexMatrix& m);
double hermiticity_defect(const ComplexMatrix& m);
double unitarity_defect(const ComplexMatrix& u);
std::size_t product(std::span<const std::size_t> dims);

struct EigenDecomposition {
  RealVector values;      // ascending
  ComplexMatrix vectors;  // columns are eigenvectors
};

/// Spectral decomposition of a Hermitian matrix. Throws ValidationError when
/// the input deviates from Hermitian by more than 1e-10 and NumericalError
/// when the solver fails to converge.
EigenDecomposition eig_hermitian(const ComplexMatrix& m);

/// Kronecker product; `a` is the most significant factor.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix tensor(std::span<const ComplexMatrix> factors);
ComplexVector tensor(const ComplexVector& a, const ComplexVector& b);

// ---------------------------------------------------------------------------
// States and Hamiltonians
// ---------------------------------------------------------------------------

/// Probability vector kept in non-increasing order.
class Spectrum {
 public:
  /// Sorts `probs` non-increasing. Entries in [-1e-10, 0) are clamped to zero.
  explicit Spectrum(std::vector<double> probs);

  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  double max() const { return probs_.front(); }
  std::size_t rank(double cutoff = tol::kRank) const;
  /// Copy zero-padded (or truncated, if the tail is zero) to length n.
  Spectrum padded(std::size_t n) const;

 private:
  std::vector<double> probs_;
};

class PureState {
 public:
  PureState(Dims dims, ComplexVector amplitudes);
  /// Normalizes before validating.
  static PureState normalized(Dims dims, ComplexVector amplitudes);
  static PureState basis(Dims dims, std::span<const std::size_t> digits);

  const Dims& dims() const { return dims_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  ComplexMatrix projector() const;

 private:
  Dims dims_;
  ComplexVector amplitudes_;
};

class DensityMatrix {
 public:
  /// Validates Hermiticity, unit trace and positivity at 1e-10. `dims`
  /// defaults to a single subsystem.
  explicit DensityMatrix(ComplexMatrix m, Dims dims = {});

  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix diagonal(std::span<const double> populations, Dims dims = {});
  static DensityMatrix maximally_mixed(std::size_t d);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const Dims& dims() const { return dims_; }
  const ComplexMatrix& matrix() const { return m_; }
  /// Eigenvalues, non-increasing.
  Spectrum spectrum() const;
  DensityMatrix with_dims(Dims dims) const;

 private:
  ComplexMatrix m_;
  Dims dims_;
};

/// One energy eigenspace: the energy and the eigenbasis columns spanning it.
struct EnergyLevel {
  double energy;
  std::vector<std::size_t> columns;
};

class Hamiltonian {
 public:
  /// `basis` columns are eigenvectors matching `energies`; both are reordered
  /// so energies are non-decreasing. An empty basis means the identity.
  explicit Hamiltonian(std::vector<double> energies, ComplexMatrix basis = {});

  static Hamiltonian from_matrix(const ComplexMatrix& h);
  /// Diagonal Hamiltonian with energies 0, 1, ..., d-1.
  static Hamiltonian ladder(std::size_t d);
  /// H_A (x) I + I (x) H_B.
  static Hamiltonian local_sum(const Hamiltonian& a, const Hamiltonian& b);

  std::size_t dim() const { return energies_.size(); }
  const std::vector<double>& energies() const { return energies_; }
  const ComplexMatrix& basis() const { return basis_; }
  ComplexMatrix matrix() const;
  double ground_energy() const { return energies_.front(); }
  /// Eigenspaces grouped with tolerance 1e-9, ascending in energy.
  std::vector<EnergyLevel> levels() const;
  ComplexMatrix projector(const EnergyLevel& level) const;

 private:
  std::vector<double> energies_;
  ComplexMatrix basis_;
};

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

/// Reduced state on the subsystems listed in `keep` (kept in original order).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);
DensityMatrix partial_trace(const PureState& psi, std::span<const std::size_t> keep);

/// Sum over energy eigenspaces of P_E rho P_E.
DensityMatrix dephase(const DensityMatrix& rho, const Hamiltonian& h);

struct SchmidtDecomposition {
  Spectrum coefficients;  // squared Schmidt values
  ComplexMatrix left;     // columns: orthonormal vectors on the first party
  ComplexMatrix right;    // columns: orthonormal vectors on the second party
};

/// Schmidt decomposition of a two-party pure state,
/// psi = sum_i sqrt(coefficients[i]) left.col(i) (x) right.col(i).
SchmidtDecomposition schmidt(const PureState& psi);

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

/// Haar-distributed unitary.
ComplexMatrix random_unitary(std::size_t d, Rng& rng);
ComplexMatrix random_unitary(std::size_t d, std::uint64_t seed);
/// Haar-distributed pure state over the product space.
PureState random_pure(Dims dims, Rng& rng);
PureState random_pure(Dims dims, std::uint64_t seed);
/// Mixed state with a random spectrum in a Haar-random basis.
DensityMatrix random_state(std::size_t d, Rng& rng);
DensityMatrix random_state(std::size_t d, std::uint64_t seed);
/// Flat-Dirichlet probability vector, sorted non-increasing.
Spectrum random_spectrum(std::size_t d, Rng& rng);

}  // namespace ergo
