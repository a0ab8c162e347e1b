// Copyright 2026 the qbcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <vector>

#include "qbcap/qops.hpp"

namespace qbcap {

/// Spectral core: everything here works on plain eigenvalue vectors, so it
/// scales to large diagonal problems (e.g. truncated Fock spaces) where the
/// dense-operator wrappers below would be wasteful.
namespace spectral {

/// Energy of the passive rearrangement: state eigenvalues sorted descending
/// against energy levels sorted ascending.
double passive_energy(std::span<const double> state_eigs, std::span<const double> levels);

/// -sum p ln p with eigenvalues below 1e-14 contributing zero.
double entropy(std::span<const double> probs);

double gibbs_energy(std::span<const double> levels, double beta);
double gibbs_entropy(std::span<const double> levels, double beta);

/// Inverse temperature with gibbs_entropy(levels, beta) = target. Bisection
/// after doubling the bracket from 1; returns +infinity when the target lies
/// below the reachable floor (degenerate ground space) or the bracket search
/// exceeds 1e6 / (smallest positive level).
double solve_beta(std::span<const double> levels, double target_entropy);

}  // namespace spectral

struct PassiveDecomposition {
    DensityMatrix passive_state;
    double passive_energy = 0.0;
    double ergotropy = 0.0;
};

struct GibbsState {
    double beta = 0.0;  // +infinity marks the ground projector
    DensityMatrix state;
    double energy = 0.0;
    double entropy = 0.0;
};

double mean_energy(const DensityMatrix& rho, const Hamiltonian& h);

PassiveDecomposition passive_decompose(const DensityMatrix& rho, const Hamiltonian& h);

/// Ergotropy without materializing the passive state.
double ergotropy(const DensityMatrix& rho, const Hamiltonian& h);

double von_neumann_entropy(const DensityMatrix& rho);

/// Gibbs state tau_beta with von Neumann entropy equal to target_entropy.
/// target outside [0, ln d] raises TargetOutOfRange.
GibbsState find_beta_star(const Hamiltonian& h, double target_entropy);

/// Mean energy minus the energy of the entropy-matched Gibbs state.
double total_ergotropy(const DensityMatrix& rho, const Hamiltonian& h);

}  // namespace qbcap
