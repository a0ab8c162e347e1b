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

#include "qbcap/qops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qbcap/errors.hpp"

namespace qbcap {

namespace {

double offdiag_norm(const Mat& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j) s += 2.0 * std::norm(a(i, j));
    return std::sqrt(s);
}

// One cyclic Jacobi pass over all (p, q) pairs. Each rotation is the unitary
//   G[p][p] = c, G[p][q] = s, G[q][p] = -s e^{-i phi}, G[q][q] = c e^{-i phi}
// with phi = arg(a_pq), which reduces the pivot to the standard real
// symmetric Schur rotation. vectors may be null (eigenvalue-only path).
void jacobi_sweep(Mat& a, Mat* vectors, double skip_tol) {
    const std::size_t d = a.rows();
    for (std::size_t p = 0; p < d; ++p) {
        for (std::size_t q = p + 1; q < d; ++q) {
            const cplx apq = a(p, q);
            const double absb = std::abs(apq);
            if (absb <= skip_tol) continue;
            const cplx phase = apq / absb;  // e^{i phi}
            const double app = a(p, p).real();
            const double aqq = a(q, q).real();
            const double tau = (aqq - app) / (2.0 * absb);
            const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;
            const cplx se_m = s * std::conj(phase);  // s e^{-i phi}
            const cplx ce_m = c * std::conj(phase);
            const cplx se_p = s * phase;
            const cplx ce_p = c * phase;

            // columns: A <- A G
            for (std::size_t i = 0; i < d; ++i) {
                const cplx ap = a(i, p), aq = a(i, q);
                a(i, p) = c * ap - se_m * aq;
                a(i, q) = s * ap + ce_m * aq;
            }
            // rows: A <- G' A
            for (std::size_t j = 0; j < d; ++j) {
                const cplx bp = a(p, j), bq = a(q, j);
                a(p, j) = c * bp - se_p * bq;
                a(q, j) = s * bp + ce_p * bq;
            }
            // keep the invariants exact against rounding drift
            a(p, p) = a(p, p).real();
            a(q, q) = a(q, q).real();
            a(q, p) = std::conj(a(p, q));

            if (vectors) {
                Mat& v = *vectors;
                for (std::size_t i = 0; i < d; ++i) {
                    const cplx vp = v(i, p), vq = v(i, q);
                    v(i, p) = c * vp - se_m * vq;
                    v(i, q) = s * vp + ce_m * vq;
                }
            }
        }
    }
}

void jacobi_diagonalize(Mat& a, Mat* vectors) {
    if (a.rows() != a.cols()) throw NonHermitian("eig_hermitian: matrix not square");
    if (a.hermiticity_defect() > kHermitianTol)
        throw NonHermitian("eig_hermitian: symmetry defect exceeds 1e-12");
    // exact Hermitization so rounding asymmetries cannot seed drift
    for (std::size_t i = 0; i < a.rows(); ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            const cplx m = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = m;
            a(j, i) = std::conj(m);
        }
    }
    const double scale = std::max(1.0, a.frobenius_norm());
    const double tol = 1e-14 * scale;
    const double skip_tol = tol / std::max<std::size_t>(1, a.rows() * a.rows());
    constexpr int kMaxSweeps = 64;
    int sweep = 0;
    while (offdiag_norm(a) > tol) {
        if (++sweep > kMaxSweeps) throw NoConvergence("eig_hermitian: Jacobi did not converge");
        jacobi_sweep(a, vectors, skip_tol);
    }
}

std::vector<std::size_t> ascending_order(const std::vector<double>& vals) {
    std::vector<std::size_t> idx(vals.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t i, std::size_t j) { return vals[i] < vals[j]; });
    return idx;
}

}  // namespace

Mat Spectrum::reconstruct() const {
    const std::size_t d = eigenvalues.size();
    Mat m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < d; ++k)
                s += eigenvalues[k] * eigenvectors(i, k) * std::conj(eigenvectors(j, k));
            m(i, j) = s;
        }
    return m;
}

Spectrum eig_hermitian(const Mat& m) {
    Mat a = m;
    Mat v = Mat::identity(m.rows());
    jacobi_diagonalize(a, &v);

    std::vector<double> raw(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) raw[i] = a(i, i).real();
    const auto order = ascending_order(raw);

    Spectrum s;
    s.eigenvalues.resize(m.rows());
    s.eigenvectors = Mat(m.rows(), m.rows());
    for (std::size_t k = 0; k < order.size(); ++k) {
        s.eigenvalues[k] = raw[order[k]];
        for (std::size_t i = 0; i < m.rows(); ++i) s.eigenvectors(i, k) = v(i, order[k]);
    }
    return s;
}

std::vector<double> eigvals_hermitian(const Mat& m) {
    Mat a = m;
    jacobi_diagonalize(a, nullptr);
    std::vector<double> vals(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) vals[i] = a(i, i).real();
    std::sort(vals.begin(), vals.end());
    return vals;
}

DensityMatrix::DensityMatrix(Mat m) : op_(std::move(m)) {
    if (op_.rows() != op_.cols()) throw NonHermitian("density matrix: not square");
    if (op_.hermiticity_defect() > kHermitianTol)
        throw NonHermitian("density matrix: symmetry defect exceeds 1e-12");
    const double tr = op_.trace().real();
    if (std::abs(tr - 1.0) > kTraceTol) throw InvalidParams("density matrix: trace differs from 1");

    const Spectrum spec = eig_hermitian(op_);
    const double min_eig = spec.eigenvalues.front();
    if (min_eig < -kPsdClipTol) throw NotPSD("density matrix: negative eigenvalue beyond 1e-10");
    if (min_eig < 0.0) {
        // round-off negatives: clip and renormalize through the eigensystem
        std::vector<double> clipped = spec.eigenvalues;
        double sum = 0.0;
        for (double& v : clipped) {
            v = std::max(v, 0.0);
            sum += v;
        }
        for (double& v : clipped) v /= sum;
        *this = from_eigensystem(spec.eigenvectors, clipped);
        return;
    }
    if (tr != 1.0) op_ *= cplx{1.0 / tr, 0.0};
}

DensityMatrix DensityMatrix::from_eigensystem(const Mat& basis, std::span<const double> probs) {
    const std::size_t d = basis.rows();
    double sum = 0.0;
    for (double p : probs) sum += p;
    Mat m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            cplx s = 0.0;
            for (std::size_t k = 0; k < probs.size(); ++k)
                s += (probs[k] / sum) * basis(i, k) * std::conj(basis(j, k));
            m(i, j) = s;
        }
    for (std::size_t i = 0; i < d; ++i) m(i, i) = m(i, i).real();
    return DensityMatrix(std::move(m), Trusted{});
}

DensityMatrix DensityMatrix::pure(const std::vector<cplx>& amplitudes) {
    double n2 = 0.0;
    for (const cplx& a : amplitudes) n2 += std::norm(a);
    if (n2 <= 0.0) throw InvalidParams("pure state: zero vector");
    const std::size_t d = amplitudes.size();
    Mat m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = amplitudes[i] * std::conj(amplitudes[j]) / n2;
    return DensityMatrix(std::move(m), Trusted{});
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> probs) {
    Mat m(probs.size(), probs.size());
    for (std::size_t i = 0; i < probs.size(); ++i) m(i, i) = probs[i];
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t d) {
    Mat m(d, d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = 1.0 / static_cast<double>(d);
    return DensityMatrix(std::move(m), Trusted{});
}

Hamiltonian::Hamiltonian(Mat m) : op_(std::move(m)) {
    spec_ = eig_hermitian(op_);
    const double ground = spec_.eigenvalues.front();
    if (ground != 0.0) {
        for (std::size_t i = 0; i < op_.rows(); ++i) op_(i, i) -= ground;
        for (double& e : spec_.eigenvalues) e -= ground;
        spec_.eigenvalues.front() = 0.0;
    }
    for (double& e : spec_.eigenvalues) e = std::max(e, 0.0);
    e_max_ = spec_.eigenvalues.back();

    diagonal_ = true;
    for (std::size_t i = 0; i < op_.rows() && diagonal_; ++i)
        for (std::size_t j = 0; j < op_.cols(); ++j)
            if (i != j && std::abs(op_(i, j)) > 1e-14) {
                diagonal_ = false;
                break;
            }
}

Hamiltonian Hamiltonian::from_eigenvalues(std::span<const double> energies) {
    Mat m(energies.size(), energies.size());
    for (std::size_t i = 0; i < energies.size(); ++i) m(i, i) = energies[i];
    return Hamiltonian(std::move(m));
}

KrausChannel::KrausChannel(std::vector<Mat> kraus_ops) : ops_(std::move(kraus_ops)) {
    if (ops_.empty()) throw InvalidParams("Kraus channel: empty operator list");
    dim_out_ = ops_.front().rows();
    dim_in_ = ops_.front().cols();
    for (const Mat& k : ops_)
        if (k.rows() != dim_out_ || k.cols() != dim_in_)
            throw DimensionMismatch("Kraus channel: inconsistent operator shapes");
    Mat sum(dim_in_, dim_in_);
    for (const Mat& k : ops_) sum += k.adjoint() * k;
    if (frobenius_distance(sum, Mat::identity(dim_in_)) > kTraceTol)
        throw NotTracePreserving("Kraus channel: sum K'K deviates from identity beyond 1e-10");
}

KrausChannel KrausChannel::identity(std::size_t d) {
    return KrausChannel({Mat::identity(d)});
}

Mat KrausChannel::apply_raw(const Mat& rho) const {
    Mat out(dim_out_, dim_out_);
    for (const Mat& k : ops_) out += k * rho * k.adjoint();
    return out;
}

DensityMatrix apply_channel(const KrausChannel& ch, const DensityMatrix& rho) {
    if (rho.dim() != ch.dim_in()) throw DimensionMismatch("apply_channel: state dimension mismatch");
    return DensityMatrix(ch.apply_raw(rho.op()));
}

namespace {

std::size_t checked_power(std::size_t d, int n, std::size_t cap) {
    if (n < 1) throw InvalidParams("tensor power: n must be >= 1");
    std::size_t r = 1;
    for (int i = 0; i < n; ++i) {
        r *= d;
        if (r > cap) throw DimensionCap("tensor power: dimension exceeds cap");
    }
    return r;
}

}  // namespace

KrausChannel tensor_power(const KrausChannel& ch, int n, std::size_t cap) {
    checked_power(std::max(ch.dim_in(), ch.dim_out()), n, cap);
    std::vector<Mat> acc = {Mat::identity(1)};
    for (int step = 0; step < n; ++step) {
        std::vector<Mat> next;
        next.reserve(acc.size() * ch.kraus_ops().size());
        for (const Mat& a : acc)
            for (const Mat& k : ch.kraus_ops()) next.push_back(kron(a, k));
        acc = std::move(next);
    }
    return KrausChannel(std::move(acc));
}

Hamiltonian tensor_hamiltonian(const Hamiltonian& h, int n, std::size_t cap) {
    const std::size_t dn = checked_power(h.dim(), n, cap);
    Mat total(dn, dn);
    for (int pos = 0; pos < n; ++pos) {
        Mat term = Mat::identity(1);
        for (int i = 0; i < n; ++i)
            term = kron(term, i == pos ? h.op() : Mat::identity(h.dim()));
        total += term;
    }
    return Hamiltonian(std::move(total));
}

Mat partial_trace(const Mat& joint, std::size_t d_left, std::size_t d_right, bool keep_left) {
    if (joint.rows() != d_left * d_right || joint.cols() != d_left * d_right)
        throw DimensionMismatch("partial_trace: shape mismatch");
    if (keep_left) {
        Mat out(d_left, d_left);
        for (std::size_t i = 0; i < d_left; ++i)
            for (std::size_t j = 0; j < d_left; ++j) {
                cplx s = 0.0;
                for (std::size_t k = 0; k < d_right; ++k)
                    s += joint(i * d_right + k, j * d_right + k);
                out(i, j) = s;
            }
        return out;
    }
    Mat out(d_right, d_right);
    for (std::size_t k = 0; k < d_right; ++k)
        for (std::size_t l = 0; l < d_right; ++l) {
            cplx s = 0.0;
            for (std::size_t i = 0; i < d_left; ++i) s += joint(i * d_right + k, i * d_right + l);
            out(k, l) = s;
        }
    return out;
}

}  // namespace qbcap
