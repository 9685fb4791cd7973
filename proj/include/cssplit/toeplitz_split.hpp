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

// Toeplitz matrices and their circulant + skew-circulant decomposition.
//
// Index conventions (K = dimension):
//   Toeplitz          T[i][j] = t_{i-j}
//                     first_col = (t_0, t_1, ..., t_{K-1})
//                     first_row = (t_0, t_{-1}, ..., t_{-(K-1)})
//   circulant         C[i][j] = a_{(j-i) mod K}
//   skew-circulant    S[i][j] = b_{j-i} for j >= i, -b_{K-(i-j)} for j < i
//
// With a_0 = b_0 = t_0 / 2 and, for j >= 1,
//   a_j = (t_{-j} + t_{K-j}) / 2,   b_j = (t_{-j} - t_{K-j}) / 2,
// the identity T = C + S holds exactly.

#pragma once

#include <cstddef>
#include <vector>

#include "cssplit/matkit.hpp"

namespace cssplit::toeplitz {

using matkit::cd;
using matkit::CMatrix;
using matkit::Spectrum;

class ToeplitzSpec {
public:
    /// first_row[0] must equal first_col[0]; both must have the same length >= 1.
    ToeplitzSpec(std::vector<cd> first_row, std::vector<cd> first_col);

    /// Hermitian Toeplitz matrix with first column (t_0, t_1, ...);
    /// first row is the conjugate. t_0 must be real.
    static ToeplitzSpec hermitian(std::vector<cd> first_col);

    std::size_t k() const noexcept { return first_row_.size(); }
    const std::vector<cd>& first_row() const noexcept { return first_row_; }
    const std::vector<cd>& first_col() const noexcept { return first_col_; }

    /// t_d for d in (-K, K).
    cd coeff(std::ptrdiff_t d) const;

    CMatrix dense() const;

private:
    std::vector<cd> first_row_;
    std::vector<cd> first_col_;
};

/// Circulant matrix given by its first row (a_0, ..., a_{K-1}).
struct CirculantMatrix {
    std::vector<cd> gen;
    std::size_t k() const noexcept { return gen.size(); }
};

/// Skew-circulant matrix given by its first row (b_0, ..., b_{K-1}).
struct SkewCirculantMatrix {
    std::vector<cd> gen;
    std::size_t k() const noexcept { return gen.size(); }
};

struct SplitPair {
    CirculantMatrix circ;
    SkewCirculantMatrix skew;
    /// ||M - T||_F for the Toeplitz projection T of the matrix that was split;
    /// 0 when the input was already Toeplitz.
    double projection_residual = 0.0;
};

struct ToeplitzProjection {
    ToeplitzSpec spec;
    double residual;
};

/// Frobenius-nearest Toeplitz matrix: every diagonal replaced by its mean.
ToeplitzProjection nearest_toeplitz(const CMatrix& m);

SplitPair split(const ToeplitzSpec& t);

/// nearest_toeplitz followed by split, carrying the projection residual.
SplitPair split_matrix(const CMatrix& m);

CMatrix circulant_dense(const CirculantMatrix& c);
CMatrix skew_circulant_dense(const SkewCirculantMatrix& s);

/// lambda_m = sum_k a_k exp(-2 pi i m k / K).
Spectrum circulant_eigenvalues(const CirculantMatrix& c);

/// mu_m = sum_k b_k eta^k exp(-2 pi i m k / K), eta = exp(-i pi / K).
/// S = D C' D^{-1} with D = diag(eta^k) and C' the circulant with
/// generator b_k eta^k, and eta^K = -1 supplies the wrap-around sign.
Spectrum skew_circulant_eigenvalues(const SkewCirculantMatrix& s);

} // namespace cssplit::toeplitz
