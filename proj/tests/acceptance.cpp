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

// Acceptance gate. Prints one PASS/FAIL line per criterion; exit status is
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cssplit/commands.hpp"
#include "cssplit/mimo_sim.hpp"
#include "cssplit/splitting_iteration.hpp"
#include "cssplit/toeplitz_split.hpp"
#include "support/test_support.hpp"

using namespace cssplit;
using matkit::cd;
using matkit::CMatrix;
using Eigen::Index;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(double v)
{
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << v;
    return s.str();
}

// Dense builders written from the element definitions, independent of the
// library's own constructors.
CMatrix oracle_toeplitz(const toeplitz::ToeplitzSpec& t)
{
    const auto k = static_cast<Index>(t.k());
    CMatrix m(k, k);
    for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j)
            m(i, j) = i >= j ? t.first_col()[static_cast<std::size_t>(i - j)]
                             : t.first_row()[static_cast<std::size_t>(j - i)];
    return m;
}

CMatrix oracle_circulant(const std::vector<cd>& a)
{
    const auto k = static_cast<Index>(a.size());
    CMatrix m(k, k);
    for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j) m(i, j) = a[static_cast<std::size_t>(((j - i) % k + k) % k)];
    return m;
}

CMatrix oracle_skew(const std::vector<cd>& b)
{
    const auto k = static_cast<Index>(b.size());
    CMatrix m(k, k);
    for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j)
            m(i, j) = j >= i ? b[static_cast<std::size_t>(j - i)] : -b[static_cast<std::size_t>(k - (i - j))];
    return m;
}

std::vector<cd> dense_eigs(const CMatrix& m)
{
    Eigen::ComplexEigenSolver<CMatrix> es(m, false);
    return {es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size()};
}

double log2_abs_det(const CMatrix& m)
{
    const Eigen::PartialPivLU<CMatrix> lu(m);
    double acc = 0.0;
    for (Index i = 0; i < m.rows(); ++i) acc += std::log2(std::abs(lu.matrixLU()(i, i)));
    return acc;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome example_golden()
{
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<cd> row{1.0, cd(0.6498, -0.6493), cd(0.6599, 0.7454), cd(0.1732, 0.9510)};
    const std::vector<cd> col{1.0, cd(0.6498, 0.6493), cd(0.6599, -0.7454), cd(0.1732, -0.9510)};
    const auto pair = toeplitz::split(toeplitz::ToeplitzSpec(row, col));
    const std::vector<cd> a{0.5, cd(0.4115, -0.8001), 0.6599, cd(0.4115, 0.8001)};
    const std::vector<cd> b{0.5, cd(0.2383, 0.1508), cd(0.0, 0.7454), cd(-0.2383, 0.1508)};
    double err = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        err = std::max(err, std::abs(pair.circ.gen[i] - a[i]));
        err = std::max(err, std::abs(pair.skew.gen[i] - b[i]));
    }
    const double dt = seconds_since(t0);
    return {err <= 1e-4 && dt < 1.0, "max err " + fmt(err) + ", " + fmt(dt) + " s"};
}

Outcome reconstruction()
{
    const auto t0 = std::chrono::steady_clock::now();
    testing::Rng rng(1001);
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        const auto spec = testing::random_toeplitz(rng, rng.index(1, 32));
        const auto pair = toeplitz::split(spec);
        const CMatrix sum = toeplitz::circulant_dense(pair.circ) + toeplitz::skew_circulant_dense(pair.skew);
        worst = std::max(worst, (sum - oracle_toeplitz(spec)).cwiseAbs().maxCoeff());
        // The library's dense forms must match the element definitions too.
        worst = std::max(worst, (toeplitz::circulant_dense(pair.circ) - oracle_circulant(pair.circ.gen))
                                    .cwiseAbs()
                                    .maxCoeff());
        worst = std::max(worst, (toeplitz::skew_circulant_dense(pair.skew) - oracle_skew(pair.skew.gen))
                                    .cwiseAbs()
                                    .maxCoeff());
    }
    const double dt = seconds_since(t0);
    return {worst <= 1e-13 && dt < 10.0, "max err " + fmt(worst) + ", " + fmt(dt) + " s"};
}

Outcome fast_eigenvalues()
{
    const auto t0 = std::chrono::steady_clock::now();
    testing::Rng rng(1002);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto gen = rng.vector(rng.index(1, 32));
        const auto fast = toeplitz::circulant_eigenvalues({gen}).values();
        worst = std::max(worst, testing::multiset_distance(dense_eigs(oracle_circulant(gen)), fast));
    }
    for (int trial = 0; trial < 200; ++trial) {
        const auto gen = rng.vector(rng.index(1, 32));
        const auto fast = toeplitz::skew_circulant_eigenvalues({gen}).values();
        worst = std::max(worst, testing::multiset_distance(dense_eigs(oracle_skew(gen)), fast));
    }
    const double dt = seconds_since(t0);
    return {worst <= 1e-9 && dt < 30.0, "max err " + fmt(worst) + ", " + fmt(dt) + " s"};
}

Outcome spectral_bound()
{
    const auto t0 = std::chrono::steady_clock::now();
    testing::Rng rng(1003);
    const std::vector<double> alphas = iteration::AlphaGrid{1e-2, 1e2, 20}.values();
    const std::size_t sizes[] = {2, 4, 8, 16};
    double worst_gap = -std::numeric_limits<double>::infinity();
    double worst_sigma = 0.0;
    double worst_rho_diff = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t k = sizes[trial % 4];
        const auto circ = testing::random_hpd_circulant(rng, k);
        const auto skew = testing::random_hpd_skew(rng, k);
        const CMatrix c = oracle_circulant(circ.gen);
        const CMatrix s = oracle_skew(skew.gen);
        const CMatrix id = CMatrix::Identity(c.rows(), c.cols());
        for (const double alpha : alphas) {
            const CMatrix e = (alpha * id + s).inverse() * (alpha * id - c) * (alpha * id + c).inverse()
                              * (alpha * id - s);
            double rho = 0.0;
            for (const auto& v : dense_eigs(e)) rho = std::max(rho, std::abs(v));
            const double sigma = iteration::sigma_bound(circ, skew, alpha);
            const auto lib = iteration::iteration_matrix(circ, skew, alpha);
            worst_gap = std::max(worst_gap, rho - sigma);
            worst_sigma = std::max(worst_sigma, sigma);
            worst_rho_diff = std::max(worst_rho_diff, std::abs(lib.rho - rho));
        }
    }
    const double dt = seconds_since(t0);
    const bool ok = worst_gap <= 1e-10 && worst_sigma < 1.0 && worst_rho_diff <= 1e-9 && dt < 60.0;
    return {ok, "max(rho - sigma) " + fmt(worst_gap) + ", max sigma " + fmt(worst_sigma) + ", |rho_lib - rho| "
                    + fmt(worst_rho_diff) + ", " + fmt(dt) + " s"};
}

Outcome literal_product()
{
    testing::Rng rng(1004);
    double worst = 0.0;
    double corrected_min = std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t k = rng.index(1, 16);
        const auto circ = testing::random_hpd_circulant(rng, k);
        const auto skew = testing::random_hpd_skew(rng, k);
        const double alpha = std::pow(10.0, rng.uniform(-2.0, 2.0));
        const CMatrix lit = iteration::uncorrected_iteration_matrix(circ, skew, alpha);
        worst = std::max(worst, (lit - CMatrix::Identity(lit.rows(), lit.cols())).cwiseAbs().maxCoeff());
        const CMatrix cor = iteration::iteration_matrix(circ, skew, alpha).m;
        corrected_min = std::min(corrected_min, (cor - CMatrix::Identity(k, k)).cwiseAbs().maxCoeff());
    }
    return {worst <= 1e-10 && corrected_min > 1e-6,
            "max |literal - I| " + fmt(worst) + ", min |corrected - I| " + fmt(corrected_min)};
}

Outcome bd_property()
{
    double worst = 0.0;
    std::size_t scenarios = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        mimo::SimConfig cfg;
        cfg.seed = seed * 7919;
        const auto sc = mimo::generate_scenario(cfg, seed, 10.0);
        const auto f = mimo::bd_precoders(sc, cfg);
        for (std::size_t l = 0; l < sc.channels.size(); ++l)
            for (std::size_t k = 0; k < f.size(); ++k)
                if (l != k) worst = std::max(worst, (sc.channels[l] * f[k]).norm());
        ++scenarios;
    }
    return {worst <= 1e-9 && scenarios == 100, "max cross residual " + fmt(worst)};
}

Outcome mmse_property()
{
    mimo::SimConfig cfg;
    double worst_herm = 0.0, worst_min = std::numeric_limits<double>::infinity(), worst_max = 0.0;
    double worst_cap = 0.0;
    std::size_t count = 0;
    for (const double snr : cfg.snr_db) {
        for (std::size_t frame = 0; frame < 30; ++frame) {
            const auto sc = mimo::generate_scenario(cfg, frame, snr);
            const auto chain = mimo::build_receiver_chain(sc, cfg);
            const CMatrix& eps = chain.error_cov;
            worst_herm = std::max(worst_herm, (eps - eps.adjoint()).cwiseAbs().maxCoeff());
            const Eigen::SelfAdjointEigenSolver<CMatrix> es(eps, Eigen::EigenvaluesOnly);
            worst_min = std::min(worst_min, es.eigenvalues().minCoeff());
            worst_max = std::max(worst_max, es.eigenvalues().maxCoeff());

            const CMatrix& h = chain.effective_channel;
            const CMatrix id = CMatrix::Identity(h.rows(), h.rows());
            const CMatrix inner = id + h * chain.q * h.adjoint() * chain.interference_cov.inverse();
            const double expected = log2_abs_det(inner);
            worst_cap = std::max(worst_cap, std::abs(-log2_abs_det(eps) - expected));
            worst_cap = std::max(worst_cap, std::abs(chain.capacity_bits - expected));
            ++count;
        }
    }
    const bool ok = worst_herm <= 1e-12 && worst_min > 0.0 && worst_max <= 1.0 + 1e-10 && worst_cap <= 1e-8;
    return {ok, std::to_string(count) + " frames, asym " + fmt(worst_herm) + ", eig in [" + fmt(worst_min) + ", "
                    + fmt(worst_max) + "], capacity err " + fmt(worst_cap)};
}

Outcome determinism()
{
    const fs::path base = fs::temp_directory_path() / "cssplit_acceptance_run";
    fs::remove_all(base);
    const fs::path config = fs::path(CSSPLIT_DATA_DIR).parent_path() / "configs" / "default.conf";
    std::ostringstream out, err;
    const auto t0 = std::chrono::steady_clock::now();
    const int rc1 = cli::cmd_run(config, base / "first", std::nullopt, out, err);
    const double dt = seconds_since(t0);
    const int rc2 = cli::cmd_run(config, base / "second", std::nullopt, out, err);
    bool same = rc1 == 0 && rc2 == 0;
    for (const char* name : {"sumrate.csv", "alpha_sweep.csv"}) {
        const std::string a = slurp(base / "first" / name);
        same = same && !a.empty() && a == slurp(base / "second" / name);
    }
    return {same && dt < 120.0, "exit " + std::to_string(rc1) + "/" + std::to_string(rc2)
                                    + (same ? ", identical" : ", differ") + ", " + fmt(dt) + " s per run"};
}

Outcome monotonicity()
{
    const std::vector<double> inr{-10.0, 0.0, 10.0};
    std::vector<double> mean, se;
    for (const double v : inr) {
        mimo::SimConfig cfg;
        cfg.frames = 200;
        cfg.snr_db = {10.0};
        cfg.inr_db = v;
        cfg.alpha_grid.points = 10;
        const auto table = mimo::run_experiment(cfg);
        for (const auto& row : table.rows)
            if (row.method == mimo::kMethodTraditional) {
                mean.push_back(row.mean_capacity_bits);
                se.push_back(row.stderr_capacity_bits);
            }
    }
    bool ok = mean.size() == inr.size();
    std::string detail = "means";
    for (std::size_t i = 0; i < mean.size(); ++i) detail += " " + fmt(mean[i]) + " (se " + fmt(se[i]) + ")";
    for (std::size_t i = 1; ok && i < mean.size(); ++i) ok = mean[i] - mean[i - 1] <= std::min(se[i], se[i - 1]);
    return {ok, detail};
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 worked 4x4 split", example_golden},
        {"2 reconstruction identity", reconstruction},
        {"3 fast eigenvalues", fast_eigenvalues},
        {"4 spectral-radius bound", spectral_bound},
        {"5 literal product degeneracy", literal_product},
        {"6 block-diagonalization residual", bd_property},
        {"7 MMSE covariance spectrum and capacity identity", mmse_property},
        {"8 end-to-end determinism", determinism},
        {"9 capacity monotone in INR", monotonicity},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << "\n";
        if (!o.pass) ++failures;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
    return failures == 0 ? 0 : 1;
}
