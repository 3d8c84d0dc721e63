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

#include "ergo/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ergo {

namespace {

bool is_identity(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (m(r, c) != Complex(r == c ? 1.0 : 0.0, 0.0)) return false;
    }
  }
  return true;
}

void check_dims(const Dims& dims, std::size_t total, const char* what) {
  if (dims.empty()) throw ValidationError(std::string(what) + ": empty subsystem dimensions");
  for (auto d : dims) {
    if (d == 0) throw ValidationError(std::string(what) + ": zero subsystem dimension");
  }
  if (product(dims) != total) {
    throw ValidationError(std::string(what) + ": subsystem dimensions do not multiply to " +
                          std::to_string(total));
  }
}

}  // namespace

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(m - m.adjoint());
}

double unitarity_defect(const ComplexMatrix& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(u.adjoint() * u - ComplexMatrix::Identity(u.rows(), u.cols()));
}

std::size_t product(std::span<const std::size_t> dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

EigenDecomposition eig_hermitian(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("eig_hermitian: matrix is not square");
  const double defect = hermiticity_defect(m);
  if (defect > tol::kInvariant) {
    throw ValidationError("eig_hermitian: matrix is not Hermitian (defect " +
                          std::to_string(defect) + ")");
  }
  const ComplexMatrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(herm);
  if (solver.info() != Eigen::Success) {
    // Eigen's tridiagonal QR gives up after 30 sweeps per row.
    throw NumericalError("eig_hermitian: solver did not converge",
                         30 * static_cast<int>(m.rows()));
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix tensor(std::span<const ComplexMatrix> factors) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (const auto& f : factors) out = tensor(out, f);
  return out;
}

ComplexVector tensor(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

// ---------------------------------------------------------------------------

Spectrum::Spectrum(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.empty()) throw ValidationError("Spectrum: empty probability vector");
  double total = 0.0;
  for (auto& p : probs_) {
    if (!std::isfinite(p) || p < -tol::kInvariant || p > 1.0 + tol::kInvariant) {
      throw ValidationError("Spectrum: entry outside [0, 1]");
    }
    if (p < 0.0) p = 0.0;
    total += p;
  }
  if (std::abs(total - 1.0) > tol::kInvariant) {
    throw ValidationError("Spectrum: probabilities sum to " + std::to_string(total));
  }
  std::stable_sort(probs_.begin(), probs_.end(), std::greater<>());
}

std::size_t Spectrum::rank(double cutoff) const {
  return static_cast<std::size_t>(
      std::count_if(probs_.begin(), probs_.end(), [cutoff](double p) { return p > cutoff; }));
}

Spectrum Spectrum::padded(std::size_t n) const {
  std::vector<double> out = probs_;
  if (n < out.size()) {
    for (std::size_t i = n; i < out.size(); ++i) {
      if (out[i] > tol::kRank) throw ValidationError("Spectrum: cannot truncate nonzero tail");
    }
  }
  out.resize(n, 0.0);
  return Spectrum(std::move(out));
}

// ---------------------------------------------------------------------------

PureState::PureState(Dims dims, ComplexVector amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
  check_dims(dims_, dim(), "PureState");
  const double norm = amplitudes_.norm();
  if (std::abs(norm - 1.0) > tol::kInvariant) {
    throw ValidationError("PureState: amplitude vector has norm " + std::to_string(norm));
  }
}

PureState PureState::normalized(Dims dims, ComplexVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) throw ValidationError("PureState: zero vector");
  return PureState(std::move(dims), amplitudes / norm);
}

PureState PureState::basis(Dims dims, std::span<const std::size_t> digits) {
  if (digits.size() != dims.size()) throw ValidationError("PureState::basis: digit count");
  std::size_t index = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (digits[k] >= dims[k]) throw ValidationError("PureState::basis: digit out of range");
    index = index * dims[k] + digits[k];
  }
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(product(dims)));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(std::move(dims), std::move(v));
}

ComplexMatrix PureState::projector() const { return amplitudes_ * amplitudes_.adjoint(); }

// ---------------------------------------------------------------------------

DensityMatrix::DensityMatrix(ComplexMatrix m, Dims dims) : m_(std::move(m)), dims_(std::move(dims)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) {
    throw ValidationError("DensityMatrix: matrix must be square and non-empty");
  }
  if (dims_.empty()) dims_ = {dim()};
  check_dims(dims_, dim(), "DensityMatrix");
  if (!m_.allFinite()) throw ValidationError("DensityMatrix: non-finite entry");
  const double defect = hermiticity_defect(m_);
  if (defect > tol::kInvariant) {
    throw ValidationError("DensityMatrix: not Hermitian (defect " + std::to_string(defect) + ")");
  }
  m_ = 0.5 * (m_ + m_.adjoint()).eval();
  const double trace = m_.trace().real();
  if (std::abs(trace - 1.0) > tol::kInvariant) {
    throw ValidationError("DensityMatrix: trace is " + std::to_string(trace));
  }
  const double lowest = eig_hermitian(m_).values(0);
  if (lowest < -tol::kInvariant) {
    throw ValidationError("DensityMatrix: negative eigenvalue " + std::to_string(lowest));
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.projector(), psi.dims());
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> populations, Dims dims) {
  RealVector p(static_cast<Eigen::Index>(populations.size()));
  for (std::size_t i = 0; i < populations.size(); ++i) p(static_cast<Eigen::Index>(i)) = populations[i];
  return DensityMatrix(p.cast<Complex>().asDiagonal(), std::move(dims));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return DensityMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(d));
}

Spectrum DensityMatrix::spectrum() const {
  const RealVector values = eig_hermitian(m_).values;
  return Spectrum(std::vector<double>(values.data(), values.data() + values.size()));
}

DensityMatrix DensityMatrix::with_dims(Dims dims) const { return DensityMatrix(m_, std::move(dims)); }

// ---------------------------------------------------------------------------

Hamiltonian::Hamiltonian(std::vector<double> energies, ComplexMatrix basis) {
  const auto d = static_cast<Eigen::Index>(energies.size());
  if (d == 0) throw ValidationError("Hamiltonian: no energies");
  for (double e : energies) {
    if (!std::isfinite(e)) throw ValidationError("Hamiltonian: non-finite energy");
  }
  if (basis.size() == 0) basis = ComplexMatrix::Identity(d, d);
  if (basis.rows() != d || basis.cols() != d) {
    throw ValidationError("Hamiltonian: basis shape does not match energy count");
  }
  const double defect = unitarity_defect(basis);
  if (defect > tol::kInvariant) {
    throw ValidationError("Hamiltonian: basis is not unitary (defect " + std::to_string(defect) + ")");
  }
  std::vector<std::size_t> order(energies.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return energies[a] < energies[b]; });
  energies_.resize(energies.size());
  basis_.resize(d, d);
  for (std::size_t k = 0; k < order.size(); ++k) {
    energies_[k] = energies[order[k]];
    basis_.col(static_cast<Eigen::Index>(k)) = basis.col(static_cast<Eigen::Index>(order[k]));
  }
}

Hamiltonian Hamiltonian::from_matrix(const ComplexMatrix& h) {
  auto eig = eig_hermitian(h);
  return Hamiltonian(std::vector<double>(eig.values.data(), eig.values.data() + eig.values.size()),
                     std::move(eig.vectors));
}

Hamiltonian Hamiltonian::ladder(std::size_t d) {
  std::vector<double> e(d);
  std::iota(e.begin(), e.end(), 0.0);
  return Hamiltonian(std::move(e));
}

Hamiltonian Hamiltonian::local_sum(const Hamiltonian& a, const Hamiltonian& b) {
  std::vector<double> e;
  e.reserve(a.dim() * b.dim());
  for (double ea : a.energies_) {
    for (double eb : b.energies_) e.push_back(ea + eb);
  }
  return Hamiltonian(std::move(e), tensor(a.basis_, b.basis_));
}

ComplexMatrix Hamiltonian::matrix() const {
  RealVector e = Eigen::Map<const RealVector>(energies_.data(), static_cast<Eigen::Index>(dim()));
  return basis_ * e.cast<Complex>().asDiagonal() * basis_.adjoint();
}

std::vector<EnergyLevel> Hamiltonian::levels() const {
  std::vector<EnergyLevel> out;
  for (std::size_t k = 0; k < energies_.size(); ++k) {
    if (!out.empty() && energies_[k] - out.back().energy <= tol::kEnergyGroup) {
      out.back().columns.push_back(k);
    } else {
      out.push_back({energies_[k], {k}});
    }
  }
  return out;
}

ComplexMatrix Hamiltonian::projector(const EnergyLevel& level) const {
  const auto d = static_cast<Eigen::Index>(dim());
  ComplexMatrix p = ComplexMatrix::Zero(d, d);
  for (auto c : level.columns) {
    const auto v = basis_.col(static_cast<Eigen::Index>(c));
    p += v * v.adjoint();
  }
  return p;
}

// ---------------------------------------------------------------------------

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> dims,
                            std::span<const std::size_t> keep) {
  const Dims dimv(dims.begin(), dims.end());
  check_dims(dimv, rho.dim(), "partial_trace");
  std::vector<bool> kept(dims.size(), false);
  for (auto k : keep) {
    if (k >= dims.size()) throw ValidationError("partial_trace: subsystem index out of range");
    kept[k] = true;
  }
  Dims kept_dims;
  for (std::size_t s = 0; s < dims.size(); ++s) {
    if (kept[s]) kept_dims.push_back(dims[s]);
  }
  if (kept_dims.empty()) kept_dims.push_back(1);

  // Split every full index into (kept index, traced index).
  const std::size_t total = rho.dim();
  std::vector<std::size_t> kept_index(total), traced_index(total);
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t rest = i, stride_k = 1, stride_t = 1, ki = 0, ti = 0;
    for (std::size_t s = dims.size(); s-- > 0;) {
      const std::size_t digit = rest % dims[s];
      rest /= dims[s];
      if (kept[s]) {
        ki += digit * stride_k;
        stride_k *= dims[s];
      } else {
        ti += digit * stride_t;
        stride_t *= dims[s];
      }
    }
    kept_index[i] = ki;
    traced_index[i] = ti;
  }

  const auto kd = static_cast<Eigen::Index>(product(kept_dims));
  ComplexMatrix out = ComplexMatrix::Zero(kd, kd);
  const ComplexMatrix& m = rho.matrix();
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      if (traced_index[i] == traced_index[j]) {
        out(static_cast<Eigen::Index>(kept_index[i]), static_cast<Eigen::Index>(kept_index[j])) +=
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      }
    }
  }
  return DensityMatrix(std::move(out), std::move(kept_dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  return partial_trace(rho, rho.dims(), keep);
}

DensityMatrix partial_trace(const PureState& psi, std::span<const std::size_t> keep) {
  return partial_trace(DensityMatrix::from_pure(psi), keep);
}

DensityMatrix dephase(const DensityMatrix& rho, const Hamiltonian& h) {
  if (rho.dim() != h.dim()) throw ValidationError("dephase: dimension mismatch");
  const bool trivial_basis = is_identity(h.basis());
  ComplexMatrix in_energy = trivial_basis ? rho.matrix() : ComplexMatrix(h.basis().adjoint() * rho.matrix() * h.basis());
  const auto levels = h.levels();
  std::vector<std::size_t> level_of(h.dim());
  for (std::size_t l = 0; l < levels.size(); ++l) {
    for (auto c : levels[l].columns) level_of[c] = l;
  }
  for (Eigen::Index r = 0; r < in_energy.rows(); ++r) {
    for (Eigen::Index c = 0; c < in_energy.cols(); ++c) {
      if (level_of[static_cast<std::size_t>(r)] != level_of[static_cast<std::size_t>(c)]) in_energy(r, c) = 0.0;
    }
  }
  if (!trivial_basis) in_energy = h.basis() * in_energy * h.basis().adjoint();
  return DensityMatrix(std::move(in_energy), rho.dims());
}

SchmidtDecomposition schmidt(const PureState& psi) {
  if (psi.dims().size() != 2) throw ValidationError("schmidt: state must have exactly two parties");
  const auto da = static_cast<Eigen::Index>(psi.dims()[0]);
  const auto db = static_cast<Eigen::Index>(psi.dims()[1]);
  ComplexMatrix coeff(da, db);
  for (Eigen::Index a = 0; a < da; ++a) {
    for (Eigen::Index b = 0; b < db; ++b) coeff(a, b) = psi.amplitudes()(a * db + b);
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(coeff, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector s = svd.singularValues();
  std::vector<double> probs(static_cast<std::size_t>(s.size()));
  for (Eigen::Index i = 0; i < s.size(); ++i) probs[static_cast<std::size_t>(i)] = s(i) * s(i);
  // JacobiSVD already orders singular values non-increasing.
  return {Spectrum(std::move(probs)), svd.matrixU(), svd.matrixV().conjugate()};
}

// ---------------------------------------------------------------------------

ComplexMatrix random_unitary(std::size_t d, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix z(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    for (Eigen::Index r = 0; r < n; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      z(r, c) = Complex(re, im);
    }
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the column phases so the distribution is Haar rather than QR-biased.
  for (Eigen::Index k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

ComplexMatrix random_unitary(std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitary(d, rng);
}

PureState random_pure(Dims dims, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(product(dims));
  ComplexVector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return PureState::normalized(std::move(dims), std::move(v));
}

PureState random_pure(Dims dims, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(std::move(dims), rng);
}

Spectrum random_spectrum(std::size_t d, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(d);
  double total = 0.0;
  for (auto& x : p) {
    x = expo(rng);
    total += x;
  }
  for (auto& x : p) x /= total;
  return Spectrum(std::move(p));
}

DensityMatrix random_state(std::size_t d, Rng& rng) {
  const Spectrum eigs = random_spectrum(d, rng);
  const ComplexMatrix u = random_unitary(d, rng);
  RealVector p = Eigen::Map<const RealVector>(eigs.probs().data(), static_cast<Eigen::Index>(d));
  ComplexMatrix m = u * p.cast<Complex>().asDiagonal() * u.adjoint();
  return DensityMatrix(std::move(m));
}

DensityMatrix random_state(std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  return random_state(d, rng);
}

}  // namespace ergo
