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

// Random inputs and independent oracles shared by the unit and acceptance
// tests. Nothing here calls into Eigen's decompositions, so the oracles
// stay independent of the code they check.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "cssplit/matkit.hpp"
#include "cssplit/toeplitz_split.hpp"

namespace cssplit::testing {

using matkit::cd;
using matkit::CMatrix;
using Index = Eigen::Index;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
    std::size_t index(std::size_t lo, std::size_t hi) // inclusive
    {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(eng_);
    }
    cd gaussian()
    {
        std::normal_distribution<double> n(0.0, std::sqrt(0.5));
        const double re = n(eng_);
        const double im = n(eng_);
        return {re, im};
    }

    CMatrix matrix(Index rows, Index cols)
    {
        CMatrix m(rows, cols);
        for (Index i = 0; i < rows; ++i)
            for (Index j = 0; j < cols; ++j) m(i, j) = gaussian();
        return m;
    }

    std::vector<cd> vector(std::size_t n)
    {
        std::vector<cd> v(n);
        for (auto& z : v) z = gaussian();
        return v;
    }

    /// A A^H + shift I, Hermitian positive definite.
    CMatrix hermitian_pd(Index n, double shift = 0.5)
    {
        const CMatrix a = matrix(n, n);
        CMatrix h = a * a.adjoint() + shift * CMatrix::Identity(n, n);
        return (h + h.adjoint()) * 0.5;
    }

    /// Random square matrix with condition number bounded by construction:
    /// unitary-ish mix of a diagonal with entries in [1, 10].
    CMatrix well_conditioned(Index n)
    {
        CMatrix m = matrix(n, n) * (0.3 / std::sqrt(static_cast<double>(n)));
        m += 2.0 * CMatrix::Identity(n, n);
        return m;
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

/// Hermitian Toeplitz spec with random off-diagonals and real t_0.
inline toeplitz::ToeplitzSpec random_hermitian_toeplitz(Rng& rng, std::size_t k)
{
    std::vector<cd> col = rng.vector(k);
    col[0] = cd(rng.uniform(1.0, 3.0), 0.0);
    return toeplitz::ToeplitzSpec::hermitian(std::move(col));
}

inline toeplitz::ToeplitzSpec random_toeplitz(Rng& rng, std::size_t k)
{
    std::vector<cd> row = rng.vector(k);
    std::vector<cd> col = rng.vector(k);
    col[0] = row[0];
    return toeplitz::ToeplitzSpec(std::move(row), std::move(col));
}

// Inverse DFT: gen_k = (1/K) sum_m v_m exp(+2 pi i m k / K).
inline std::vector<cd> inverse_dft(const std::vector<double>& spectrum)
{
    const std::size_t k = spectrum.size();
    std::vector<cd> gen(k);
    for (std::size_t j = 0; j < k; ++j) {
        cd acc{0.0, 0.0};
        for (std::size_t m = 0; m < k; ++m)
            acc += spectrum[m] * std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>((m * j) % k)
                                                       / static_cast<double>(k));
        gen[j] = acc / static_cast<double>(k);
    }
    return gen;
}

/// Hermitian positive-definite circulant with eigenvalues drawn from [lo, hi].
inline toeplitz::CirculantMatrix random_hpd_circulant(Rng& rng, std::size_t k, double lo = 0.05, double hi = 3.0)
{
    std::vector<double> lam(k);
    for (auto& l : lam) l = rng.uniform(lo, hi);
    return {inverse_dft(lam)};
}

/// Hermitian positive-definite skew-circulant: D C' D^{-1} with C' an HPD
/// circulant and D = diag(exp(-i pi k / K)) unitary.
inline toeplitz::SkewCirculantMatrix random_hpd_skew(Rng& rng, std::size_t k, double lo = 0.05, double hi = 3.0)
{
    std::vector<double> mu(k);
    for (auto& m : mu) m = rng.uniform(lo, hi);
    std::vector<cd> c = inverse_dft(mu);
    for (std::size_t j = 0; j < k; ++j)
        c[j] *= std::polar(1.0, std::numbers::pi * static_cast<double>(j) / static_cast<double>(k));
    return {c};
}

inline CMatrix naive_matmul(const CMatrix& a, const CMatrix& b)
{
    CMatrix c = CMatrix::Zero(a.rows(), b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < b.cols(); ++j) {
            cd acc{0.0, 0.0};
            for (Index k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            c(i, j) = acc;
        }
    return c;
}

/// Greedy nearest matching of two multisets; returns the largest distance
/// between matched pairs (inf on size mismatch).
inline double multiset_distance(std::vector<cd> expected, std::vector<cd> actual)
{
    if (expected.size() != actual.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    std::vector<bool> used(actual.size(), false);
    for (const auto& e : expected) {
        std::size_t best = actual.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < actual.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(actual[j] - e);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        used[best] = true;
        worst = std::max(worst, best_d);
    }
    return worst;
}

/// Characteristic polynomial coefficients c_0..c_n (c_n = 1) by the
/// Faddeev-LeVerrier recursion.
inline std::vector<cd> characteristic_polynomial(const CMatrix& a)
{
    const Index n = a.rows();
    std::vector<cd> c(static_cast<std::size_t>(n + 1));
    c[static_cast<std::size_t>(n)] = 1.0;
    CMatrix m = CMatrix::Zero(n, n);
    for (Index k = 1; k <= n; ++k) {
        m = naive_matmul(a, m) + c[static_cast<std::size_t>(n - k + 1)] * CMatrix::Identity(n, n);
        const CMatrix am = naive_matmul(a, m);
        c[static_cast<std::size_t>(n - k)] = -am.trace() / static_cast<double>(k);
    }
    return c;
}

inline cd poly_eval(const std::vector<cd>& c, cd x)
{
    cd acc{0.0, 0.0};
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

/// Roots of the monic polynomial by Durand-Kerner iteration, i.e. the
/// eigenvalues of its companion matrix without forming an eigensolver.
inline std::vector<cd> polynomial_roots(const std::vector<cd>& c)
{
    const std::size_t n = c.size() - 1;
    std::vector<cd> z(n);
    double radius = 0.0;
    for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(c[i]));
    radius = 1.0 + radius;
    for (std::size_t i = 0; i < n; ++i)
        z[i] = std::polar(radius * 0.9, 0.4 + 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n));
    for (int iter = 0; iter < 5000; ++iter) {
        double change = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            cd den{1.0, 0.0};
            for (std::size_t j = 0; j < n; ++j)
                if (j != i) den *= (z[i] - z[j]);
            const cd step = poly_eval(c, z[i]) / den;
            z[i] -= step;
            change = std::max(change, std::abs(step));
        }
        if (change < 1e-15) break;
    }
    return z;
}

/// Spectral radius by power iteration with a two-step ratio, which also
/// converges when the dominant eigenvalues are a +/- pair.
inline double power_iteration_radius(const CMatrix& m, int iters = 20000)
{
    const Index n = m.rows();
    Eigen::VectorXcd x = Eigen::VectorXcd::Ones(n);
    for (Index i = 0; i < n; ++i) x(i) += cd(0.1 * static_cast<double>(i), -0.05 * static_cast<double>(i));
    x.normalize();
    double est = 0.0;
    for (int k = 0; k < iters; ++k) {
        Eigen::VectorXcd y = m * x;
        Eigen::VectorXcd z = m * y;
        const double ny = y.norm();
        if (ny == 0.0) return 0.0;
        est = std::sqrt(z.norm() / x.norm());
        x = y / ny;
    }
    return est;
}

/// max_j |alpha - v_j| / |alpha + v_j| by explicit enumeration.
inline double ratio_max(const std::vector<cd>& eig, double alpha)
{
    double worst = 0.0;
    for (const auto& v : eig) worst = std::max(worst, std::abs(alpha - v) / std::abs(alpha + v));
    return worst;
}

inline std::vector<cd> diag_of(const CMatrix& m)
{
    std::vector<cd> out;
    for (Index i = 0; i < m.rows(); ++i) out.push_back(m(i, i));
    return out;
}

} // namespace cssplit::testing
