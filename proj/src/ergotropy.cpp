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

#include "qbcap/ergotropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qbcap/errors.hpp"

namespace qbcap {

namespace spectral {

double passive_energy(std::span<const double> state_eigs, std::span<const double> levels) {
    if (state_eigs.size() != levels.size())
        throw DimensionMismatch("passive_energy: spectra of different size");
    std::vector<double> lam(state_eigs.begin(), state_eigs.end());
    std::vector<double> en(levels.begin(), levels.end());
    std::sort(lam.begin(), lam.end(), std::greater<>());
    std::sort(en.begin(), en.end());
    double s = 0.0;
    for (std::size_t i = 0; i < lam.size(); ++i) s += lam[i] * en[i];
    return s;
}

double entropy(std::span<const double> probs) {
    constexpr double kFloor = 1e-14;
    double s = 0.0;
    for (double p : probs)
        if (p > kFloor) s -= p * std::log(p);
    return std::max(s, 0.0);
}

namespace {

struct GibbsMoments {
    double energy;
    double entropy;
};

// levels have ground energy zero, so Z >= 1 and nothing overflows for beta >= 0.
GibbsMoments gibbs_moments(std::span<const double> levels, double beta) {
    double z = 0.0, ze = 0.0;
    for (double e : levels) {
        const double w = std::exp(-beta * e);
        z += w;
        ze += w * e;
    }
    const double energy = ze / z;
    return {energy, std::log(z) + beta * energy};
}

}  // namespace

double gibbs_energy(std::span<const double> levels, double beta) {
    if (std::isinf(beta)) return 0.0;
    return gibbs_moments(levels, beta).energy;
}

double gibbs_entropy(std::span<const double> levels, double beta) {
    if (std::isinf(beta)) {
        std::size_t ground_deg = 0;
        for (double e : levels)
            if (e <= 0.0) ++ground_deg;
        return std::log(static_cast<double>(std::max<std::size_t>(ground_deg, 1)));
    }
    return gibbs_moments(levels, beta).entropy;
}

double solve_beta(std::span<const double> levels, double target_entropy) {
    const double inf = std::numeric_limits<double>::infinity();
    const double s0 = gibbs_entropy(levels, 0.0);  // ln d
    if (target_entropy >= s0) return 0.0;

    double gap = inf;
    for (double e : levels)
        if (e > 0.0) gap = std::min(gap, e);
    if (std::isinf(gap)) return inf;  // fully degenerate Hamiltonian
    const double beta_cap = 1e6 / gap;

    double hi = 1.0;
    while (gibbs_entropy(levels, hi) > target_entropy) {
        hi *= 2.0;
        if (hi > beta_cap) return inf;
    }
    double lo = hi > 1.0 ? hi / 2.0 : 0.0;
    double mid = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        mid = 0.5 * (lo + hi);
        const double s = gibbs_entropy(levels, mid);
        if (std::abs(s - target_entropy) < 1e-13) break;
        if (s > target_entropy)
            lo = mid;
        else
            hi = mid;
    }
    return mid;
}

}  // namespace spectral

double mean_energy(const DensityMatrix& rho, const Hamiltonian& h) {
    if (rho.dim() != h.dim()) throw DimensionMismatch("mean_energy: dimension mismatch");
    cplx s = 0.0;
    const Mat& r = rho.op();
    const Mat& hm = h.op();
    for (std::size_t i = 0; i < r.rows(); ++i)
        for (std::size_t j = 0; j < r.cols(); ++j) s += r(i, j) * hm(j, i);
    return s.real();
}

PassiveDecomposition passive_decompose(const DensityMatrix& rho, const Hamiltonian& h) {
    if (rho.dim() != h.dim()) throw DimensionMismatch("passive_decompose: dimension mismatch");
    std::vector<double> lam = eigvals_hermitian(rho.op());
    std::sort(lam.begin(), lam.end(), std::greater<>());
    // h.spectrum() eigenvalues are ascending, so lam and the basis line up.
    DensityMatrix passive = DensityMatrix::from_eigensystem(h.spectrum().eigenvectors, lam);
    double pe = 0.0;
    for (std::size_t i = 0; i < lam.size(); ++i) pe += lam[i] * h.spectrum().eigenvalues[i];
    const double erg = std::max(mean_energy(rho, h) - pe, 0.0);
    return {std::move(passive), pe, erg};
}

double ergotropy(const DensityMatrix& rho, const Hamiltonian& h) {
    if (rho.dim() != h.dim()) throw DimensionMismatch("ergotropy: dimension mismatch");
    const double pe =
        spectral::passive_energy(eigvals_hermitian(rho.op()), h.spectrum().eigenvalues);
    return std::max(mean_energy(rho, h) - pe, 0.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
    return spectral::entropy(eigvals_hermitian(rho.op()));
}

GibbsState find_beta_star(const Hamiltonian& h, double target_entropy) {
    const double ln_d = std::log(static_cast<double>(h.dim()));
    if (target_entropy < -1e-12 || target_entropy > ln_d + 1e-12)
        throw TargetOutOfRange("find_beta_star: target entropy outside [0, ln d]");
    target_entropy = std::clamp(target_entropy, 0.0, ln_d);

    const auto& levels = h.spectrum().eigenvalues;
    const double beta = spectral::solve_beta(levels, target_entropy);

    std::vector<double> probs(levels.size());
    if (std::isinf(beta)) {
        std::size_t g = 0;
        for (double e : levels)
            if (e <= 0.0) ++g;
        for (std::size_t i = 0; i < levels.size(); ++i)
            probs[i] = levels[i] <= 0.0 ? 1.0 / static_cast<double>(g) : 0.0;
    } else {
        double z = 0.0;
        for (std::size_t i = 0; i < levels.size(); ++i) {
            probs[i] = std::exp(-beta * levels[i]);
            z += probs[i];
        }
        for (double& p : probs) p /= z;
    }
    DensityMatrix state = DensityMatrix::from_eigensystem(h.spectrum().eigenvectors, probs);
    return {beta, std::move(state), spectral::gibbs_energy(levels, beta),
            spectral::gibbs_entropy(levels, beta)};
}

double total_ergotropy(const DensityMatrix& rho, const Hamiltonian& h) {
    if (rho.dim() != h.dim()) throw DimensionMismatch("total_ergotropy: dimension mismatch");
    const double s = von_neumann_entropy(rho);
    const auto& levels = h.spectrum().eigenvalues;
    const double beta = spectral::solve_beta(levels, s);
    return std::max(mean_energy(rho, h) - spectral::gibbs_energy(levels, beta), 0.0);
}

}  // namespace qbcap
