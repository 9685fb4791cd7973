// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Dense complex linear-algebra kernels shared by the rest of the library.
//
// All functions are pure: they read their arguments and return fresh values,
// so they can be called concurrently. Dense kernels are delegated to Eigen;
// this layer adds the tolerance policy and the error reporting.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>
#include <utility>

#include <Eigen/Dense>

#include "cssplit/error.hpp"

namespace cssplit::matkit {

using cd = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Relative residual target for solve().
inline constexpr double kSolveTol = 1e-9;
/// Default relative singular-value cutoff for right_nullspace().
inline constexpr double kRankTol = 1e-10;
/// A pivot below kPivotTol * ||A||_F marks A as numerically singular.
inline constexpr double kPivotTol = 1e-12;
/// Allowed ||A - A^H||_F / ||A||_F for inputs that must be Hermitian.
inline constexpr double kHermitianTol = 1e-10;

/// Eigenvalues ordered by descending modulus, then descending real part,
/// then descending imaginary part.
class Spectrum {
public:
    Spectrum() = default;
    explicit Spectrum(std::vector<cd> values);

    const std::vector<cd>& values() const& noexcept { return values_; }
    std::vector<cd> values() && noexcept { return std::move(values_); }
    std::size_t size() const noexcept { return values_.size(); }
    const cd& operator[](std::size_t i) const { return values_[i]; }

    double spectral_radius() const;
    cd sum() const;

private:
    std::vector<cd> values_;
};

/// Strict weak ordering used by Spectrum.
bool spectrum_order(const cd& lhs, const cd& rhs);

/// Builds a rows x cols matrix from row-major entries; rejects NaN/Inf and
/// inconsistent sizes.
CMatrix make_matrix(std::size_t rows, std::size_t cols, std::span<const cd> row_major);

CMatrix identity(std::size_t n);
std::string shape_of(const CMatrix& a);

CMatrix matmul(const CMatrix& a, const CMatrix& b);

/// X with A X = B, LU with partial pivoting plus one refinement step.
/// Throws SingularityError when a pivot falls below kPivotTol * ||A||_F.
CMatrix solve(const CMatrix& a, const CMatrix& b);

Spectrum eigenvalues(const CMatrix& a);
Spectrum hermitian_eigenvalues(const CMatrix& a);

double hermitian_asymmetry(const CMatrix& a);
bool is_hermitian(const CMatrix& a, double rel_tol = kHermitianTol);

/// Orthonormal basis of {x : A x ~ 0}. The rank counts singular values
/// above tol_rank * sigma_max. An empty null space gives an n x 0 matrix.
CMatrix right_nullspace(const CMatrix& a, double tol_rank = kRankTol);

/// Principal inverse square root B of a Hermitian positive-definite A,
/// so that B A B^H = I and B = B^H.
CMatrix inv_sqrt_hermitian_pd(const CMatrix& a);

/// Principal square root of a Hermitian positive-semidefinite A.
CMatrix sqrt_hermitian_psd(const CMatrix& a);

/// log2 |det A| through an LU factorization.
double logdet2(const CMatrix& a);

} // namespace cssplit::matkit
