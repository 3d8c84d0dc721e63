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

#include <cstdint>
#include <string>
#include <vector>

#include "ergo/qcore.hpp"

namespace ergo {

/// Environment Hamiltonian and the inverse temperature of its Gibbs state.
/// beta may be negative or +-inf.
struct EnvironmentSpec {
  Hamiltonian hamiltonian;
  double beta;
};

/// diag(0, 0, 1, 1): degenerate enough that the induced channels move
/// population inside degenerate system eigenspaces.
Hamiltonian default_environment_hamiltonian();

/// Kraus representation of an energy-preserving operation on a system with
/// Hamiltonian `system_hamiltonian`. Construction checks shapes only; use
/// validate_epo() for the physical invariants.
class EpoChannel {
 public:
  EpoChannel(Hamiltonian system_hamiltonian, std::vector<ComplexMatrix> kraus);
  static EpoChannel identity(Hamiltonian system_hamiltonian);

  const Hamiltonian& system_hamiltonian() const { return system_; }
  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  std::size_t dim() const { return system_.dim(); }

 private:
  Hamiltonian system_;
  std::vector<ComplexMatrix> kraus_;
};

struct ValidationCheck {
  std::string name;
  double residual;
  bool pass;
};

struct EpoValidation {
  std::vector<ValidationCheck> checks;  // completeness, unitality, commutation
  bool pass() const;
};

inline constexpr double kEpoTol = 1e-9;

EpoValidation validate_epo(const EpoChannel& channel, double tol = kEpoTol);

/// Joint unitary on system (x) environment that is block-diagonal, with an
/// independent Haar block on every joint eigenspace of (H_S, H_E). Such a U
/// commutes with H_S (x) I and with I (x) H_E.
ComplexMatrix sample_energy_preserving_unitary(const Hamiltonian& system, const Hamiltonian& environment,
                                               Rng& rng);

/// Tr_E[U (rho (x) tau_E) U^dag] written in Kraus form
/// M_jk = sqrt(p_k) <e_j| U |e_k>, with e_k the environment eigenbasis.
EpoChannel channel_from_unitary(const Hamiltonian& system, const EnvironmentSpec& env, const ComplexMatrix& u);

EpoChannel sample_epo_channel(const Hamiltonian& system, const EnvironmentSpec& env, Rng& rng);
EpoChannel sample_epo_channel(const Hamiltonian& system, const EnvironmentSpec& env, std::uint64_t seed);

/// sum_k M_k rho M_k^dag
DensityMatrix apply(const EpoChannel& channel, const DensityMatrix& rho);

struct MonotoneCheck {
  std::string name;
  double lhs;  // value on the input state
  double rhs;  // value on the output state
  bool pass;
};

struct MonotoneReport {
  std::vector<MonotoneCheck> checks;
  bool pass() const;
};

/// Evaluates the resource monotones on rho and on the channel output:
/// spectral majorization, Renyi entropies for alpha in {0, 1/2, 1, 2, inf},
/// passive energy, ergotropy, single-shot work and free energy at beta_bath,
/// plus energy conservation. Throws ValidationError for a channel that fails
/// validate_epo() and DomainError unless beta_bath is finite and positive.
MonotoneReport monotone_report(const DensityMatrix& rho, const EpoChannel& channel, double beta_bath,
                               double tol = kEpoTol);

}  // namespace ergo
