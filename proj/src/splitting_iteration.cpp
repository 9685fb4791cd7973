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

#include "cssplit/splitting_iteration.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace cssplit::iteration {

namespace {

constexpr double kDegenerateShift = 1e-14;
constexpr double kRefineRelWidth = 1e-6;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require_alpha(double alpha, const char* op)
{
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw DomainError(std::string(op) + ": alpha must be a finite positive number, got " + std::to_string(alpha));
}

void require_same_size(const CirculantMatrix& circ, const SkewCirculantMatrix& skew, const char* op)
{
    if (circ.k() == 0 || circ.k() != skew.k()) {
        throw DimensionError(std::string(op) + ": circulant (" + std::to_string(circ.k())
                             + ") and skew-circulant (" + std::to_string(skew.k())
                             + ") parts must have the same nonzero dimension");
    }
}

CMatrix shifted_solve(const CMatrix& shifted, const CMatrix& rhs, const char* factor)
{
    try {
        return matkit::solve(shifted, rhs);
    } catch (const SingularityError& e) {
        throw SingularityError(std::string("iteration_matrix: shifted factor ") + factor + " is singular",
                               e.pivot());
    }
}

// Evaluates one alpha for the sweep; failures become +inf/NaN entries.
AlphaSample sample_at(const CirculantMatrix& circ, const SkewCirculantMatrix& skew,
                      const Spectrum& lam, const Spectrum& mu, double alpha)
{
    AlphaSample s;
    s.alpha = alpha;
    try {
        s.sigma = sigma_bound(lam, mu, alpha);
    } catch (const DomainError&) {
        s.sigma = kInf;
    }
    try {
        const auto it = iteration_matrix(circ, skew, alpha);
        s.rho = it.rho;
        try {
            s.capacity_bits = capacity_of_iteration(it);
        } catch (const SingularityError&) {
            s.capacity_bits = kInf;
        }
    } catch (const Error&) {
        s.rho = std::numeric_limits<double>::quiet_NaN();
        s.capacity_bits = std::numeric_limits<double>::quiet_NaN();
    }
    return s;
}

double sigma_or_inf(const Spectrum& lam, const Spectrum& mu, double alpha)
{
    try {
        return sigma_bound(lam, mu, alpha);
    } catch (const DomainError&) {
        return kInf;
    }
}

} // namespace

std::vector<double> AlphaGrid::values() const
{
    if (points == 0) throw DomainError("AlphaGrid: grid must contain at least one point");
    if (!(min > 0.0) || !(max >= min) || !std::isfinite(max))
        throw DomainError("AlphaGrid: need 0 < min <= max < inf");
    std::vector<double> out(points);
    if (points == 1) {
        out[0] = min;
        return out;
    }
    const double lo = std::log10(min);
    const double hi = std::log10(max);
    for (std::size_t i = 0; i < points; ++i)
        out[i] = std::pow(10.0, lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1));
    out.front() = min;
    out.back() = max;
    return out;
}

IterationMatrix iteration_matrix(const CirculantMatrix& circ, const SkewCirculantMatrix& skew, double alpha)
{
    require_alpha(alpha, "iteration_matrix");
    require_same_size(circ, skew, "iteration_matrix");

    const CMatrix c = toeplitz::circulant_dense(circ);
    const CMatrix s = toeplitz::skew_circulant_dense(skew);
    const CMatrix shift = alpha * matkit::identity(circ.k());

    // (aI + S)^{-1} (aI - C) (aI + C)^{-1} (aI - S), right to left.
    const CMatrix inner = shifted_solve(shift + c, shift - s, "(alpha I + circulant)");
    const CMatrix outer = shifted_solve(shift + s, (shift - c) * inner, "(alpha I + skew-circulant)");

    IterationMatrix out;
    out.alpha = alpha;
    out.m = outer;
    out.rho = matkit::eigenvalues(outer).spectral_radius();
    return out;
}

CMatrix uncorrected_iteration_matrix(const CirculantMatrix& circ, const SkewCirculantMatrix& skew, double alpha)
{
    require_alpha(alpha, "uncorrected_iteration_matrix");
    require_same_size(circ, skew, "uncorrected_iteration_matrix");

    const CMatrix c = toeplitz::circulant_dense(circ);
    const CMatrix s = toeplitz::skew_circulant_dense(skew);
    const CMatrix shift = alpha * matkit::identity(circ.k());

    const CMatrix inner = shifted_solve(shift + c, shift + s, "(alpha I + circulant)");
    return shifted_solve(shift + s, (shift + c) * inner, "(alpha I + skew-circulant)");
}

double shift_ratio_max(const Spectrum& spectrum, double alpha)
{
    require_alpha(alpha, "shift_ratio_max");
    double worst = 0.0;
    for (const auto& v : spectrum.values()) {
        const double den = std::abs(alpha + v);
        if (den < kDegenerateShift)
            throw DomainError("sigma_bound: degenerate shift, |alpha + eigenvalue| = " + std::to_string(den));
        worst = std::max(worst, std::abs(alpha - v) / den);
    }
    return worst;
}

double sigma_bound(const Spectrum& circ_spectrum, const Spectrum& skew_spectrum, double alpha)
{
    return shift_ratio_max(circ_spectrum, alpha) * shift_ratio_max(skew_spectrum, alpha);
}

double sigma_bound(const CirculantMatrix& circ, const SkewCirculantMatrix& skew, double alpha)
{
    require_same_size(circ, skew, "sigma_bound");
    return sigma_bound(toeplitz::circulant_eigenvalues(circ), toeplitz::skew_circulant_eigenvalues(skew), alpha);
}

bool is_hermitian_pd(const CMatrix& a)
{
    if (!matkit::is_hermitian(a)) return false;
    const auto spec = matkit::hermitian_eigenvalues(a);
    // Spectrum is ordered by modulus, so scan for the minimum.
    double lmin = kInf;
    for (const auto& v : spec.values()) lmin = std::min(lmin, v.real());
    return lmin > 0.0;
}

AlphaSearchResult optimize_alpha(const CirculantMatrix& circ, const SkewCirculantMatrix& skew, const AlphaGrid& grid)
{
    require_same_size(circ, skew, "optimize_alpha");
    const std::vector<double> alphas = grid.values();

    const Spectrum lam = toeplitz::circulant_eigenvalues(circ);
    const Spectrum mu = toeplitz::skew_circulant_eigenvalues(skew);

    AlphaSearchResult out;
    out.bound_valid = is_hermitian_pd(toeplitz::circulant_dense(circ))
                      && is_hermitian_pd(toeplitz::skew_circulant_dense(skew));

    std::vector<double> sigmas(alphas.size());
    for (std::size_t i = 0; i < alphas.size(); ++i) sigmas[i] = sigma_or_inf(lam, mu, alphas[i]);
    const auto best = static_cast<std::size_t>(std::min_element(sigmas.begin(), sigmas.end()) - sigmas.begin());

    std::vector<double> candidates = alphas;

    // Golden-section refinement in log(alpha) over the neighbours of the grid argmin.
    if (alphas.size() > 1 && std::isfinite(sigmas[best])) {
        double lo = std::log(alphas[best == 0 ? 0 : best - 1]);
        double hi = std::log(alphas[std::min(best + 1, alphas.size() - 1)]);
        const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
        double x1 = hi - inv_phi * (hi - lo);
        double x2 = lo + inv_phi * (hi - lo);
        double f1 = sigma_or_inf(lam, mu, std::exp(x1));
        double f2 = sigma_or_inf(lam, mu, std::exp(x2));
        // hi - lo is a log-width, so this is the relative width in alpha.
        while (std::expm1(hi - lo) > kRefineRelWidth) {
            if (f1 <= f2) {
                hi = x2;
                x2 = x1;
                f2 = f1;
                x1 = hi - inv_phi * (hi - lo);
                f1 = sigma_or_inf(lam, mu, std::exp(x1));
            } else {
                lo = x1;
                x1 = x2;
                f1 = f2;
                x2 = lo + inv_phi * (hi - lo);
                f2 = sigma_or_inf(lam, mu, std::exp(x2));
            }
        }
        candidates.push_back(std::exp(0.5 * (lo + hi)));
    }

    if (out.bound_valid) {
        double lmin = kInf;
        double lmax = 0.0;
        for (const auto& v : lam.values()) {
            lmin = std::min(lmin, v.real());
            lmax = std::max(lmax, v.real());
        }
        candidates.push_back(std::sqrt(lmin * lmax));
    }

    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    out.sweep.reserve(candidates.size());
    for (double a : candidates) out.sweep.push_back(sample_at(circ, skew, lam, mu, a));

    // Ties go to the smallest alpha so the result does not depend on evaluation order.
    const AlphaSample* star = &out.sweep.front();
    for (const auto& s : out.sweep)
        if (s.sigma < star->sigma) star = &s;
    out.alpha_star = star->alpha;
    out.sigma_at_star = star->sigma;
    out.rho_at_star = star->rho;
    return out;
}

double capacity_of_iteration(const IterationMatrix& m)
{
    return -matkit::logdet2(m.m);
}

} // namespace cssplit::iteration
