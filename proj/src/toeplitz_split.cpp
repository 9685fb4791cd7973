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

#include "cssplit/toeplitz_split.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace cssplit::toeplitz {

namespace {

using Index = Eigen::Index;

bool all_finite(const std::vector<cd>& v)
{
    for (const auto& z : v)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

void require_generator(const std::vector<cd>& gen, const char* op)
{
    if (gen.empty()) throw DimensionError(std::string(op) + ": generator must have at least one entry");
    if (!all_finite(gen)) throw DomainError(std::string(op) + ": generator contains NaN or Inf");
}

// Direct O(K^2) DFT of gen[k] * twist^k. twist = 1 gives the circulant
// spectrum; twist = exp(-i pi / K) the skew-circulant one.
std::vector<cd> twisted_dft(const std::vector<cd>& gen, double twist_angle)
{
    const std::size_t n = gen.size();
    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<cd> out(n);
    for (std::size_t m = 0; m < n; ++m) {
        cd acc{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) {
            // Reduce m*k mod n before scaling so the phase stays accurate.
            const double phase = -two_pi * static_cast<double>((m * k) % n) / static_cast<double>(n)
                                 + twist_angle * static_cast<double>(k);
            acc += gen[k] * std::polar(1.0, phase);
        }
        out[m] = acc;
    }
    return out;
}

} // namespace

ToeplitzSpec::ToeplitzSpec(std::vector<cd> first_row, std::vector<cd> first_col)
    : first_row_(std::move(first_row)), first_col_(std::move(first_col))
{
    if (first_row_.empty() || first_row_.size() != first_col_.size()) {
        throw DimensionError("ToeplitzSpec: first row (" + std::to_string(first_row_.size())
                             + ") and first column (" + std::to_string(first_col_.size())
                             + ") must have the same nonzero length");
    }
    if (first_row_[0] != first_col_[0])
        throw DomainError("ToeplitzSpec: first row and first column disagree on t_0");
    if (!all_finite(first_row_) || !all_finite(first_col_))
        throw DomainError("ToeplitzSpec: generators contain NaN or Inf");
}

ToeplitzSpec ToeplitzSpec::hermitian(std::vector<cd> first_col)
{
    if (first_col.empty()) throw DimensionError("ToeplitzSpec::hermitian: empty generator");
    if (first_col[0].imag() != 0.0) throw DomainError("ToeplitzSpec::hermitian: t_0 must be real");
    std::vector<cd> first_row(first_col.size());
    for (std::size_t i = 0; i < first_col.size(); ++i) first_row[i] = std::conj(first_col[i]);
    return ToeplitzSpec(std::move(first_row), std::move(first_col));
}

cd ToeplitzSpec::coeff(std::ptrdiff_t d) const
{
    const auto n = static_cast<std::ptrdiff_t>(k());
    if (d <= -n || d >= n) throw DomainError("ToeplitzSpec::coeff: diagonal index out of range");
    return d >= 0 ? first_col_[static_cast<std::size_t>(d)] : first_row_[static_cast<std::size_t>(-d)];
}

CMatrix ToeplitzSpec::dense() const
{
    const auto n = static_cast<Index>(k());
    CMatrix t(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) t(i, j) = coeff(static_cast<std::ptrdiff_t>(i - j));
    return t;
}

ToeplitzProjection nearest_toeplitz(const CMatrix& m)
{
    if (m.rows() != m.cols() || m.rows() == 0)
        throw DimensionError("nearest_toeplitz: expected a nonempty square matrix, got " + matkit::shape_of(m));
    if (!m.allFinite()) throw DomainError("nearest_toeplitz: matrix contains NaN or Inf entries");

    const Index n = m.rows();
    std::vector<cd> row(static_cast<std::size_t>(n));
    std::vector<cd> col(static_cast<std::size_t>(n));
    for (Index d = 0; d < n; ++d) {
        cd lower{0.0, 0.0};
        cd upper{0.0, 0.0};
        for (Index i = 0; i + d < n; ++i) {
            lower += m(i + d, i);
            upper += m(i, i + d);
        }
        const double len = static_cast<double>(n - d);
        col[static_cast<std::size_t>(d)] = lower / len;
        row[static_cast<std::size_t>(d)] = upper / len;
    }
    row[0] = col[0];

    ToeplitzSpec spec(std::move(row), std::move(col));
    const double residual = (m - spec.dense()).norm();
    return {std::move(spec), residual};
}

SplitPair split(const ToeplitzSpec& t)
{
    const std::size_t n = t.k();
    SplitPair out;
    out.circ.gen.resize(n);
    out.skew.gen.resize(n);
    out.circ.gen[0] = t.coeff(0) / 2.0;
    out.skew.gen[0] = t.coeff(0) / 2.0;
    for (std::size_t j = 1; j < n; ++j) {
        const cd upper = t.coeff(-static_cast<std::ptrdiff_t>(j));
        const cd wrapped = t.coeff(static_cast<std::ptrdiff_t>(n - j));
        out.circ.gen[j] = (upper + wrapped) / 2.0;
        out.skew.gen[j] = (upper - wrapped) / 2.0;
    }
    return out;
}

SplitPair split_matrix(const CMatrix& m)
{
    auto projection = nearest_toeplitz(m);
    SplitPair out = split(projection.spec);
    out.projection_residual = projection.residual;
    return out;
}

CMatrix circulant_dense(const CirculantMatrix& c)
{
    require_generator(c.gen, "circulant_dense");
    const auto n = static_cast<Index>(c.k());
    CMatrix out(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) out(i, j) = c.gen[static_cast<std::size_t>(((j - i) % n + n) % n)];
    return out;
}

CMatrix skew_circulant_dense(const SkewCirculantMatrix& s)
{
    require_generator(s.gen, "skew_circulant_dense");
    const auto n = static_cast<Index>(s.k());
    CMatrix out(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) {
            if (j >= i)
                out(i, j) = s.gen[static_cast<std::size_t>(j - i)];
            else
                out(i, j) = -s.gen[static_cast<std::size_t>(n - (i - j))];
        }
    }
    return out;
}

Spectrum circulant_eigenvalues(const CirculantMatrix& c)
{
    require_generator(c.gen, "circulant_eigenvalues");
    return Spectrum(twisted_dft(c.gen, 0.0));
}

Spectrum skew_circulant_eigenvalues(const SkewCirculantMatrix& s)
{
    require_generator(s.gen, "skew_circulant_eigenvalues");
    const double eta_angle = -std::numbers::pi / static_cast<double>(s.k());
    return Spectrum(twisted_dft(s.gen, eta_angle));
}

} // namespace cssplit::toeplitz
