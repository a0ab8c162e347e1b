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

#include <cstddef>
#include <span>
#include <vector>

#include "qbcap/matrix.hpp"

namespace qbcap {

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdClipTol = 1e-10;
inline constexpr std::size_t kDefaultDimCap = 64;

/// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending,
/// eigenvectors stored as the aligned columns of a unitary matrix.
struct Spectrum {
    std::vector<double> eigenvalues;
    Mat eigenvectors;

    Mat reconstruct() const;
};

/// Cyclic Jacobi diagonalization. Deterministic pivot order; converged when
/// the off-diagonal Frobenius mass drops below 1e-14 (relative to scale).
/// Throws NonHermitian if the input symmetry defect exceeds 1e-12.
Spectrum eig_hermitian(const Mat& m);

/// Eigenvalues only (ascending), same sweep without accumulating vectors.
std::vector<double> eigvals_hermitian(const Mat& m);

class DensityMatrix {
public:
    /// Validates Hermiticity, unit trace and positivity. Eigenvalues in
    /// [-1e-10, 0) are clipped to zero and the state renormalized; anything
    /// more negative raises NotPSD.
    explicit DensityMatrix(Mat m);

    /// Trusted constructor for states assembled as V diag(p) V' with p a
    /// probability vector and V unitary by construction. Skips the spectral
    /// validation; p is renormalized to unit sum.
    static DensityMatrix from_eigensystem(const Mat& basis, std::span<const double> probs);

    static DensityMatrix pure(const std::vector<cplx>& amplitudes);
    static DensityMatrix diagonal(std::span<const double> probs);
    static DensityMatrix maximally_mixed(std::size_t d);

    const Mat& op() const { return op_; }
    std::size_t dim() const { return op_.rows(); }

private:
    struct Trusted {};
    DensityMatrix(Mat m, Trusted) : op_(std::move(m)) {}
    Mat op_;
};

class Hamiltonian {
public:
    /// Shifts the ground energy to exactly zero and caches the spectrum.
    explicit Hamiltonian(Mat m);

    static Hamiltonian from_eigenvalues(std::span<const double> energies);

    const Mat& op() const { return op_; }
    std::size_t dim() const { return op_.rows(); }
    double e_max() const { return e_max_; }
    /// Cached spectrum of the shifted operator; eigenvalues ascending, ground = 0.
    const Spectrum& spectrum() const { return spec_; }
    bool is_diagonal() const { return diagonal_; }

private:
    Mat op_;
    double e_max_ = 0.0;
    Spectrum spec_;
    bool diagonal_ = false;
};

class KrausChannel {
public:
    /// Validates trace preservation: || sum K'K - I ||_F < 1e-10.
    explicit KrausChannel(std::vector<Mat> kraus_ops);

    static KrausChannel identity(std::size_t d);

    std::size_t dim_in() const { return dim_in_; }
    std::size_t dim_out() const { return dim_out_; }
    const std::vector<Mat>& kraus_ops() const { return ops_; }

    /// sum_k K rho K' on a raw matrix, no state validation. Hot path.
    Mat apply_raw(const Mat& rho) const;

private:
    std::size_t dim_in_ = 0;
    std::size_t dim_out_ = 0;
    std::vector<Mat> ops_;
};

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho);

/// n-fold Kronecker closure of the Kraus list. dim^n above the cap raises
/// DimensionCap.
KrausChannel tensor_power(const KrausChannel& ch, int n, std::size_t cap = kDefaultDimCap);

/// Non-interacting sum h x I x ... + I x h x ... + ...; ground energy stays 0.
Hamiltonian tensor_hamiltonian(const Hamiltonian& h, int n, std::size_t cap = kDefaultDimCap);

/// Reduced matrix of a bipartite operator on C^{d_left} x C^{d_right};
/// keep_left selects which factor survives.
Mat partial_trace(const Mat& joint, std::size_t d_left, std::size_t d_right, bool keep_left);

}  // namespace qbcap
