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

#include <complex>
#include <cstddef>
#include <vector>

namespace qbcap {

using cplx = std::complex<double>;

/// Dense complex matrix with row-major storage. Dimensions stay small
/// (tensor products are capped at 64), so everything is kept contiguous
/// and value-semantic.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(std::size_t d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<cplx>& data() const { return data_; }
    std::vector<cplx>& data() { return data_; }

    Mat adjoint() const;
    cplx trace() const;
    double frobenius_norm() const;

    /// max_ij |a_ij - conj(a_ji)|
    double hermiticity_defect() const;

    Mat& operator+=(const Mat& o);
    Mat& operator-=(const Mat& o);
    Mat& operator*=(cplx s);

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(cplx s, Mat a) { return a *= s; }
    friend Mat operator*(Mat a, cplx s) { return a *= s; }
    Mat operator*(const Mat& o) const;

    bool operator==(const Mat& o) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

Mat kron(const Mat& a, const Mat& b);

/// Frobenius norm of a - b.
double frobenius_distance(const Mat& a, const Mat& b);

}  // namespace qbcap
