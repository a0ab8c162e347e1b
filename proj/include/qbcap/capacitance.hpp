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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qbcap/ergotropy.hpp"
#include "qbcap/qops.hpp"

namespace qbcap {

struct OptimizerConfig {
    int n_starts = 32;
    long max_iters = 2000;
    double ftol = 1e-9;
    std::uint64_t seed = 1;
    double penalty_weight = 1000.0;

    void validate() const;
};

/// Sampled energy curve on a uniform grid over [0, e_max].
struct EnergyCurve {
    std::vector<double> e_grid;
    std::vector<double> values;
    std::string meta;

    /// Linear interpolation inside the grid range.
    double at(double e) const;
};

struct PointDiagnostics {
    int best_start = -1;  // winning start index; -1 means a seed-state floor won
    long iterations = 0;
    double feasibility_residual = 0.0;
    double wall_ms = 0.0;
};

enum class OutputObjective { ergotropy, total_ergotropy };

/// Best found output (total) ergotropy over input states with mean energy at
/// most e. Multi-start Nelder-Mead over rho = V diag(softmax w) V' with V a
/// product of Givens rotations; deterministic for a fixed cfg.seed. The
/// result is a certified lower bound: it is always realized by an explicit
/// feasible input state.
double max_output_ergotropy(const KrausChannel& ch, const Hamiltonian& h, double e,
                            const OptimizerConfig& cfg);

/// Same search with the total-ergotropy objective. Internally also runs the
/// plain-ergotropy search and re-evaluates its best state, so the result
/// never falls below max_output_ergotropy(ch, h, e, cfg).
double max_output_total_ergotropy(const KrausChannel& ch, const Hamiltonian& h, double e,
                                  const OptimizerConfig& cfg);

/// Least concave majorant of the piecewise-linear interpolant, sampled on the
/// same grid. Equals the input when the input is already concave.
EnergyCurve concave_envelope(const EnergyCurve& curve);

/// Raw single-shot curves with their per-point diagnostics. The two curves
/// exchange their best states (the total objective dominates the plain one on
/// every state), so e1_tot >= e1 holds pointwise by construction and both are
/// non-decreasing after the warm-start pass. jobs == 1 selects the serial
/// reference kernel, any other value the OpenMP kernel (0 = all threads).
struct RawSweep {
    EnergyCurve e1;
    EnergyCurve e1_tot;  // empty unless want_total
    std::vector<PointDiagnostics> diag_e1;
    std::vector<PointDiagnostics> diag_tot;
};

RawSweep raw_output_sweep(const KrausChannel& ch, const Hamiltonian& h, int grid_size,
                          const OptimizerConfig& cfg, int jobs = 0, bool want_total = true);

/// chi = concave envelope of the single-shot maximal output ergotropy curve.
EnergyCurve chi(const KrausChannel& ch, const Hamiltonian& h, int grid_size,
                const OptimizerConfig& cfg, int jobs = 0);

/// chi_tot = same construction with total ergotropy; >= chi pointwise.
EnergyCurve chi_tot(const KrausChannel& ch, const Hamiltonian& h, int grid_size,
                    const OptimizerConfig& cfg, int jobs = 0);

/// chi_tot - chi, a lower bound on the capacitance gap; >= 0 pointwise.
EnergyCurve gap_curve(const KrausChannel& ch, const Hamiltonian& h, int grid_size,
                      const OptimizerConfig& cfg, int jobs = 0);

struct FiniteNReport {
    double lhs_per_cell = 0.0;
    double chi_at_e = 0.0;
    bool ok = false;
};

/// Maximizes the mean per-cell output ergotropy over n-fold product inputs
/// whose mean energies average to at most e, and compares against chi(e).
FiniteNReport finite_n_check(const KrausChannel& ch, const Hamiltonian& h, int n, double e,
                             const OptimizerConfig& cfg);

}  // namespace qbcap
