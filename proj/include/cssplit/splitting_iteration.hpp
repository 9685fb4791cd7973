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

// Shift-parameterized circulant/skew-circulant splitting iteration matrix
//
//   E(alpha) = (alpha I + S)^{-1} (alpha I - C) (alpha I + C)^{-1} (alpha I - S)
//
// and its spectral-radius bound
//
//   sigma(alpha) = max_j |alpha - lambda_j| / |alpha + lambda_j|
//                * max_j |alpha - mu_j|     / |alpha + mu_j|
//
// where lambda, mu are the spectra of C and S. When C and S are both
// Hermitian positive definite, rho(E(alpha)) <= sigma(alpha) < 1.

#pragma once

#include <cstddef>
#include <vector>

#include "cssplit/toeplitz_split.hpp"

namespace cssplit::iteration {

using matkit::CMatrix;
using matkit::Spectrum;
using toeplitz::CirculantMatrix;
using toeplitz::SkewCirculantMatrix;

struct IterationMatrix {
    double alpha = 0.0;
    CMatrix m;
    double rho = 0.0;
};

/// Logarithmically spaced alpha values.
struct AlphaGrid {
    double min = 1e-3;
    double max = 1e3;
    std::size_t points = 50;

    std::vector<double> values() const;
};

struct AlphaSample {
    double alpha = 0.0;
    double sigma = 0.0;
    double rho = 0.0;
    /// log2 det(E(alpha)^{-1}); +inf when E(alpha) is singular.
    double capacity_bits = 0.0;
};

struct AlphaSearchResult {
    double alpha_star = 0.0;
    double sigma_at_star = 0.0;
    double rho_at_star = 0.0;
    /// Grid points, the refined optimum and (when bound_valid) the
    /// sqrt(lambda_min * lambda_max) candidate, ordered by alpha.
    std::vector<AlphaSample> sweep;
    /// Both split parts Hermitian positive definite, so sigma bounds rho.
    bool bound_valid = false;
};

IterationMatrix iteration_matrix(const CirculantMatrix& circ, const SkewCirculantMatrix& skew, double alpha);

/// The product with the inner factors left as (alpha I + C)(alpha I + C)^{-1}.
/// Those cancel, so this is the identity for every input; kept for the
/// regression test that guards iteration_matrix() against that form.
CMatrix uncorrected_iteration_matrix(const CirculantMatrix& circ, const SkewCirculantMatrix& skew, double alpha);

/// max_j |alpha - v_j| / |alpha + v_j| over one spectrum.
double shift_ratio_max(const Spectrum& spectrum, double alpha);

double sigma_bound(const CirculantMatrix& circ, const SkewCirculantMatrix& skew, double alpha);

/// Same bound with precomputed spectra; the sweep uses this to avoid
/// recomputing the DFTs at every alpha.
double sigma_bound(const Spectrum& circ_spectrum, const Spectrum& skew_spectrum, double alpha);

AlphaSearchResult optimize_alpha(const CirculantMatrix& circ, const SkewCirculantMatrix& skew, const AlphaGrid& grid);

/// log2 det(E^{-1}). Throws SingularityError when E is singular.
double capacity_of_iteration(const IterationMatrix& m);

/// Hermitian and all eigenvalues > 0.
bool is_hermitian_pd(const CMatrix& a);

} // namespace cssplit::iteration
