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

#include <limits>
#include <span>
#include <string>
#include <vector>

#include "ergo/qcore.hpp"

namespace ergo {

enum class EntropyUnit { Bits, Nats };

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Tr(rho H).
double energy(const DensityMatrix& rho, const Hamiltonian& h);

/// The unitary-orbit minimum-energy state: the spectrum of `rho` sorted
/// non-increasing, laid on the energy eigenbasis sorted non-decreasing.
/// Ties keep the eigen-solver order.
DensityMatrix passive_state(const DensityMatrix& rho, const Hamiltonian& h);

/// Passive-state energy sum_i p_i e_i for a spectrum no longer than h.dim().
double passive_energy(const Spectrum& spectrum, const Hamiltonian& h);
double passive_energy(std::span<const double> probs, std::span<const double> energies);

/// Maximum work extractable by a unitary: E(rho) - E(rho^p).
double ergotropy(const DensityMatrix& rho, const Hamiltonian& h);

struct ThermalState {
  double beta;
  Hamiltonian hamiltonian;
  DensityMatrix state;
  std::vector<double> populations;  // in the Hamiltonian's energy order
  double log_z;                     // natural log of the partition function
};

/// exp(-beta H)/Z. Infinite beta selects the uniform mixture over the ground
/// (beta = +inf) or top (beta = -inf) eigenspace.
ThermalState gibbs_state(const Hamiltonian& h, double beta);
std::vector<double> gibbs_populations(const Hamiltonian& h, double beta);

/// Von Neumann entropy of the Gibbs state, in nats.
double thermal_entropy(const Hamiltonian& h, double beta);

/// The beta >= 0 whose Gibbs state has entropy `entropy_nats`. Returns +inf
/// when the target is the ground-space entropy ln(g0). Throws DomainError when
/// the target lies outside [ln g0, ln d].
double match_beta_by_entropy(double entropy_nats, const Hamiltonian& h);

/// E(rho) - E(tau_beta) with tau_beta entropy-matched to rho.
double thermodynamic_work(const DensityMatrix& rho, const Hamiltonian& h);

struct WorkReport {
  double internal_energy;
  double passive_energy;
  double ergotropy;
  double thermodynamic_work;
  double matched_beta;
  double entropy_nats;
  double entropy_bits;
};

WorkReport work_report(const DensityMatrix& rho, const Hamiltonian& h);

/// Renyi entropy S_alpha for alpha in [0, inf], with the alpha = 0, 1, inf
/// limits taken explicitly. Rank uses the 1e-12 eigenvalue cutoff.
double renyi_entropy(const Spectrum& spectrum, double alpha, EntropyUnit unit = EntropyUnit::Bits);
double renyi_entropy(const DensityMatrix& rho, double alpha, EntropyUnit unit = EntropyUnit::Bits);

/// Renyi divergence D_alpha(rho || sigma) in nats for alpha in [0, 2].
///
/// alpha = 0 is -ln Tr(P_rho sigma) and alpha = 1 the Umegaki relative
/// entropy; both accept any pair. Other alpha require [rho, sigma] = 0 within
/// 1e-10 and throw ValidationError otherwise. Returns +inf when the support
/// condition fails.
double renyi_divergence(const DensityMatrix& rho, const DensityMatrix& sigma, double alpha);

/// Work extractable deterministically with a bath at inverse temperature
/// beta > 0: D_0(dephase(rho) || tau_beta) / beta.
double single_shot_work(const DensityMatrix& rho, const Hamiltonian& h, double beta);

/// E(rho) - S(rho)/beta for finite nonzero beta (entropy in nats).
double free_energy(const DensityMatrix& rho, const Hamiltonian& h, double beta);

struct DiagramPoint {
  std::string label;
  double entropy_nats;
  double entropy_bits;
  double energy;
};

/// Energy-entropy diagram points for rho, its passive state, the
/// entropy-matched Gibbs state and the ground state.
std::vector<DiagramPoint> energy_entropy_diagram(const DensityMatrix& rho, const Hamiltonian& h);

}  // namespace ergo
