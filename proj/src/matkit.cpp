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

#include "cssplit/matkit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace cssplit::matkit {

namespace {

void require_square(const CMatrix& a, const char* op)
{
    if (a.rows() != a.cols())
        throw DimensionError(std::string(op) + ": expected a square matrix, got " + shape_of(a));
}

void require_finite(const CMatrix& a, const char* op)
{
    if (!a.allFinite())
        throw DomainError(std::string(op) + ": matrix contains NaN or Inf entries");
}

std::string format_double(double v)
{
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

// Partial-pivot LU plus the singularity test shared by solve() and logdet2().
Eigen::PartialPivLU<CMatrix> checked_lu(const CMatrix& a, const char* op)
{
    const double scale = a.stableNorm();
    Eigen::PartialPivLU<CMatrix> lu(a);
    const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (!(min_pivot > kPivotTol * scale)) {
        throw SingularityError(std::string(op) + ": matrix is numerically singular (pivot "
                                   + format_double(min_pivot) + ", ||A||_F " + format_double(scale) + ")",
                               min_pivot);
    }
    return lu;
}

Eigen::SelfAdjointEigenSolver<CMatrix> hermitian_decomposition(const CMatrix& a, const char* op, bool vectors)
{
    require_square(a, op);
    require_finite(a, op);
    const double asym = hermitian_asymmetry(a);
    if (asym > kHermitianTol * a.norm()) {
        throw PreconditionError(std::string(op) + ": matrix is not Hermitian (||A - A^H||_F = "
                                    + format_double(asym) + ")",
                                asym);
    }
    const CMatrix sym = (a + a.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<CMatrix> es(sym, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw ConvergenceError(std::string(op) + ": Hermitian eigensolver did not converge");
    return es;
}

} // namespace

bool spectrum_order(const cd& lhs, const cd& rhs)
{
    const double ml = std::abs(lhs);
    const double mr = std::abs(rhs);
    if (ml != mr) return ml > mr;
    if (lhs.real() != rhs.real()) return lhs.real() > rhs.real();
    return lhs.imag() > rhs.imag();
}

Spectrum::Spectrum(std::vector<cd> values) : values_(std::move(values))
{
    std::sort(values_.begin(), values_.end(), spectrum_order);
}

double Spectrum::spectral_radius() const
{
    return values_.empty() ? 0.0 : std::abs(values_.front());
}

cd Spectrum::sum() const
{
    cd s{0.0, 0.0};
    for (const auto& v : values_) s += v;
    return s;
}

CMatrix make_matrix(std::size_t rows, std::size_t cols, std::span<const cd> row_major)
{
    if (rows * cols != row_major.size()) {
        throw DimensionError("make_matrix: " + std::to_string(rows) + "x" + std::to_string(cols)
                             + " needs " + std::to_string(rows * cols) + " entries, got "
                             + std::to_string(row_major.size()));
    }
    CMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = row_major[i * cols + j];
    require_finite(m, "make_matrix");
    return m;
}

CMatrix identity(std::size_t n)
{
    const auto k = static_cast<Eigen::Index>(n);
    return CMatrix::Identity(k, k);
}

std::string shape_of(const CMatrix& a)
{
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

CMatrix matmul(const CMatrix& a, const CMatrix& b)
{
    if (a.cols() != b.rows())
        throw DimensionError("matmul: incompatible shapes " + shape_of(a) + " and " + shape_of(b));
    return a * b;
}

CMatrix solve(const CMatrix& a, const CMatrix& b)
{
    require_square(a, "solve");
    if (b.rows() != a.rows())
        throw DimensionError("solve: incompatible shapes " + shape_of(a) + " and " + shape_of(b));
    require_finite(a, "solve");
    require_finite(b, "solve");
    if (a.rows() == 0) return b;

    const auto lu = checked_lu(a, "solve");
    CMatrix x = lu.solve(b);
    x += lu.solve(b - a * x);
    return x;
}

Spectrum eigenvalues(const CMatrix& a)
{
    require_square(a, "eigenvalues");
    require_finite(a, "eigenvalues");
    if (a.rows() == 0) return Spectrum{};
    Eigen::ComplexEigenSolver<CMatrix> es(a, false);
    if (es.info() != Eigen::Success)
        throw ConvergenceError("eigenvalues: QR iteration did not converge for " + shape_of(a));
    const CVector& ev = es.eigenvalues();
    return Spectrum(std::vector<cd>(ev.data(), ev.data() + ev.size()));
}

Spectrum hermitian_eigenvalues(const CMatrix& a)
{
    if (a.rows() == 0 && a.cols() == 0) return Spectrum{};
    const auto es = hermitian_decomposition(a, "hermitian_eigenvalues", false);
    std::vector<cd> values;
    values.reserve(static_cast<std::size_t>(a.rows()));
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) values.emplace_back(es.eigenvalues()(i), 0.0);
    return Spectrum(std::move(values));
}

double hermitian_asymmetry(const CMatrix& a)
{
    if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
    return (a - a.adjoint()).norm();
}

bool is_hermitian(const CMatrix& a, double rel_tol)
{
    return a.rows() == a.cols() && hermitian_asymmetry(a) <= rel_tol * a.norm();
}

CMatrix right_nullspace(const CMatrix& a, double tol_rank)
{
    if (a.rows() == 0 || a.cols() == 0)
        throw DimensionError("right_nullspace: empty matrix " + shape_of(a));
    require_finite(a, "right_nullspace");

    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (smax > 0.0 && sv(i) > tol_rank * smax) ++rank;
    return svd.matrixV().rightCols(a.cols() - rank);
}

CMatrix inv_sqrt_hermitian_pd(const CMatrix& a)
{
    const auto es = hermitian_decomposition(a, "inv_sqrt_hermitian_pd", true);
    const auto& lam = es.eigenvalues();
    const double lmin = lam.minCoeff();
    const double lmax = lam.maxCoeff();
    if (!(lmin > 0.0) || !(lmin > kPivotTol * lmax)) {
        throw DefinitenessError("inv_sqrt_hermitian_pd: matrix is not positive definite (min eigenvalue "
                                    + format_double(lmin) + ")",
                                lmin);
    }
    const Eigen::VectorXd inv_root = lam.cwiseSqrt().cwiseInverse();
    const CMatrix& v = es.eigenvectors();
    return v * inv_root.cast<cd>().asDiagonal() * v.adjoint();
}

CMatrix sqrt_hermitian_psd(const CMatrix& a)
{
    const auto es = hermitian_decomposition(a, "sqrt_hermitian_psd", true);
    const auto& lam = es.eigenvalues();
    const double lmax = std::max(lam.maxCoeff(), 0.0);
    const double lmin = lam.minCoeff();
    if (lmin < -kRankTol * std::max(lmax, 1.0)) {
        throw DefinitenessError("sqrt_hermitian_psd: matrix is not positive semidefinite (min eigenvalue "
                                    + format_double(lmin) + ")",
                                lmin);
    }
    const Eigen::VectorXd root = lam.cwiseMax(0.0).cwiseSqrt();
    const CMatrix& v = es.eigenvectors();
    return v * root.cast<cd>().asDiagonal() * v.adjoint();
}

double logdet2(const CMatrix& a)
{
    require_square(a, "logdet2");
    require_finite(a, "logdet2");
    if (a.rows() == 0) return 0.0;
    const auto lu = checked_lu(a, "logdet2");
    double acc = 0.0;
    const auto diag = lu.matrixLU().diagonal();
    for (Eigen::Index i = 0; i < diag.size(); ++i) acc += std::log2(std::abs(diag(i)));
    return acc;
}

} // namespace cssplit::matkit
