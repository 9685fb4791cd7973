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

#include "cssplit/mimo_sim.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "cssplit/toeplitz_split.hpp"

namespace cssplit::mimo {

namespace {

using Index = Eigen::Index;
using matkit::cd;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_count(std::size_t value, const char* key)
{
    if (value < 1) throw ConfigError(std::string(key) + " must be at least 1", 0, key);
}

// One generator per frame; seeding mixes the full 64 bits of both inputs.
std::mt19937_64 frame_rng(std::uint64_t seed, std::size_t frame_index)
{
    const auto f = static_cast<std::uint64_t>(frame_index);
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(f), static_cast<std::uint32_t>(f >> 32),
                      0x9e3779b9u};
    return std::mt19937_64(seq);
}

CMatrix complex_gaussian(std::mt19937_64& rng, Index rows, Index cols)
{
    std::normal_distribution<double> dist(0.0, std::sqrt(0.5));
    CMatrix m(rows, cols);
    // Row-major draw order so the stream layout does not depend on Eigen's storage.
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) {
            const double re = dist(rng);
            const double im = dist(rng);
            m(i, j) = cd(re, im);
        }
    return m;
}

struct Moments {
    double mean = kNaN;
    double stderr_ = kNaN;
};

Moments moments(const std::vector<double>& xs)
{
    Moments m;
    if (xs.empty()) return m;
    double sum = 0.0;
    for (double x : xs) sum += x;
    m.mean = sum / static_cast<double>(xs.size());
    if (xs.size() < 2) {
        m.stderr_ = 0.0;
        return m;
    }
    double ss = 0.0;
    for (double x : xs) ss += (x - m.mean) * (x - m.mean);
    const double n = static_cast<double>(xs.size());
    m.stderr_ = std::sqrt(ss / (n - 1.0) / n);
    return m;
}

double mean_or_nan(const std::vector<double>& xs)
{
    return moments(xs).mean;
}

} // namespace

void SimConfig::validate() const
{
    require_count(m_t, "m_t");
    require_count(k_total, "k_total");
    require_count(k_active, "k_active");
    require_count(m_r, "m_r");
    require_count(m_i, "m_i");
    require_count(frames, "frames");
    require_count(packets, "packets");
    if (k_active > k_total) throw ConfigError("k_active must not exceed k_total", 0, "k_active");
    if (k_active * m_r > m_t)
        throw ConfigError("k_active * m_r must not exceed m_t for block diagonalization", 0, "k_active");
    if (snr_db.empty()) throw ConfigError("snr_db must list at least one value", 0, "snr_db");
    for (double s : snr_db)
        if (!std::isfinite(s)) throw ConfigError("snr_db values must be finite", 0, "snr_db");
    if (std::isnan(inr_db) || inr_db == std::numeric_limits<double>::infinity())
        throw ConfigError("inr_db must be finite or -inf", 0, "inr_db");
    if (!(alpha_grid.min > 0.0) || !std::isfinite(alpha_grid.min))
        throw ConfigError("alpha_grid_min must be a finite positive number", 0, "alpha_grid_min");
    if (!(alpha_grid.max >= alpha_grid.min) || !std::isfinite(alpha_grid.max))
        throw ConfigError("alpha_grid_max must be finite and >= alpha_grid_min", 0, "alpha_grid_max");
    require_count(alpha_grid.points, "alpha_grid_points");
}

bool operator==(const SimConfig& a, const SimConfig& b)
{
    return a.m_t == b.m_t && a.k_total == b.k_total && a.k_active == b.k_active && a.m_r == b.m_r
           && a.m_i == b.m_i && a.snr_db == b.snr_db && a.inr_db == b.inr_db && a.frames == b.frames
           && a.packets == b.packets && a.seed == b.seed && a.alpha_grid.min == b.alpha_grid.min
           && a.alpha_grid.max == b.alpha_grid.max && a.alpha_grid.points == b.alpha_grid.points;
}

std::size_t MimoScenario::rx_dim() const
{
    return static_cast<std::size_t>(interference_channel.rows());
}

CMatrix MimoScenario::stacked_channel() const
{
    if (channels.empty()) return CMatrix(0, 0);
    Index rows = 0;
    for (const auto& h : channels) rows += h.rows();
    CMatrix out(rows, channels.front().cols());
    Index r = 0;
    for (const auto& h : channels) {
        out.middleRows(r, h.rows()) = h;
        r += h.rows();
    }
    return out;
}

MimoScenario generate_scenario(const SimConfig& cfg, std::size_t frame_index, double snr_db)
{
    cfg.validate();
    auto rng = frame_rng(cfg.seed, frame_index);

    MimoScenario s;
    s.channels.reserve(cfg.k_active);
    for (std::size_t k = 0; k < cfg.k_active; ++k)
        s.channels.push_back(complex_gaussian(rng, static_cast<Index>(cfg.m_r), static_cast<Index>(cfg.m_t)));
    s.interference_channel =
        complex_gaussian(rng, static_cast<Index>(cfg.k_active * cfg.m_r), static_cast<Index>(cfg.m_i));

    s.signal_power = 1.0;
    s.noise_var = std::pow(10.0, -snr_db / 10.0);
    s.interference_power = s.noise_var * std::pow(10.0, cfg.inr_db / 10.0);
    return s;
}

std::vector<CMatrix> bd_precoders(const MimoScenario& scenario, const SimConfig& cfg)
{
    const std::size_t users = scenario.channels.size();
    if (users == 0) throw DimensionError("bd_precoders: scenario has no active users");
    const Index m_t = scenario.channels.front().cols();
    if (m_t != static_cast<Index>(cfg.m_t))
        throw DimensionError("bd_precoders: channel width does not match m_t");

    std::vector<CMatrix> precoders;
    precoders.reserve(users);
    for (std::size_t k = 0; k < users; ++k) {
        const CMatrix& hk = scenario.channels[k];

        CMatrix basis;
        if (users == 1) {
            basis = CMatrix::Identity(m_t, m_t);
        } else {
            Index rows = 0;
            for (std::size_t l = 0; l < users; ++l)
                if (l != k) rows += scenario.channels[l].rows();
            CMatrix others(rows, m_t);
            Index r = 0;
            for (std::size_t l = 0; l < users; ++l) {
                if (l == k) continue;
                others.middleRows(r, scenario.channels[l].rows()) = scenario.channels[l];
                r += scenario.channels[l].rows();
            }
            basis = matkit::right_nullspace(others);
        }
        if (basis.cols() == 0)
            throw FeasibilityError("bd_precoders: no interference-free subspace for user " + std::to_string(k), k);

        const Index streams = std::min<Index>(static_cast<Index>(cfg.m_r), basis.cols());
        const CMatrix projected = hk * basis;
        Eigen::JacobiSVD<CMatrix> svd(projected, Eigen::ComputeFullV);
        CMatrix fk = basis * svd.matrixV().leftCols(streams);

        const CMatrix gain = hk * fk;
        for (Index j = 0; j < streams && j < gain.rows(); ++j) {
            const double mag = std::abs(gain(j, j));
            if (mag > 0.0) fk.col(j) *= std::conj(gain(j, j)) / mag;
        }
        precoders.push_back(std::move(fk));
    }
    return precoders;
}

CMatrix interference_covariance(const MimoScenario& scenario)
{
    const CMatrix& hi = scenario.interference_channel;
    const Index n = hi.rows();
    const double per_dim = hi.cols() > 0 ? scenario.interference_power / static_cast<double>(hi.cols()) : 0.0;
    CMatrix r = per_dim * (hi * hi.adjoint());
    r += scenario.noise_var * CMatrix::Identity(n, n);
    return (r + r.adjoint()) * 0.5;
}

CMatrix whitening_filter(const CMatrix& r)
{
    return matkit::inv_sqrt_hermitian_pd(r);
}

CMatrix mmse_error_covariance(const CMatrix& h_eff, const CMatrix& q, const CMatrix& upsilon)
{
    if (q.rows() != q.cols() || q.rows() != h_eff.cols())
        throw DimensionError("mmse_error_covariance: q is " + matkit::shape_of(q) + " but the effective channel is "
                             + matkit::shape_of(h_eff));
    if (upsilon.rows() != upsilon.cols() || upsilon.rows() != h_eff.rows())
        throw DimensionError("mmse_error_covariance: upsilon is " + matkit::shape_of(upsilon)
                             + " but the effective channel is " + matkit::shape_of(h_eff));

    const CMatrix q_root = matkit::sqrt_hermitian_psd(q);
    const CMatrix scaled = h_eff * q_root;
    const CMatrix gram = scaled.adjoint() * matkit::solve(upsilon, scaled);
    const Index n = q.rows();
    CMatrix eps = matkit::solve(CMatrix::Identity(n, n) + gram, CMatrix::Identity(n, n));
    return (eps + eps.adjoint()) * 0.5;
}

double sum_capacity(const std::vector<CMatrix>& error_covs)
{
    double total = 0.0;
    for (const auto& e : error_covs) total -= matkit::logdet2(e);
    return total;
}

ReceiverChain build_receiver_chain(const MimoScenario& scenario, const SimConfig& cfg)
{
    ReceiverChain chain;
    chain.precoders = bd_precoders(scenario, cfg);

    Index streams = 0;
    for (const auto& f : chain.precoders) streams += f.cols();
    const Index m_t = static_cast<Index>(cfg.m_t);

    CMatrix f_all(m_t, streams);
    chain.q = CMatrix::Zero(streams, streams);
    Index c = 0;
    for (const auto& f : chain.precoders) {
        f_all.middleCols(c, f.cols()) = f;
        const double per_stream = scenario.signal_power / static_cast<double>(f.cols());
        chain.q.block(c, c, f.cols(), f.cols()) = per_stream * CMatrix::Identity(f.cols(), f.cols());
        c += f.cols();
    }

    chain.interference_plus_noise = interference_covariance(scenario);
    chain.whitener = whitening_filter(chain.interference_plus_noise);
    chain.effective_channel = chain.whitener * scenario.stacked_channel() * f_all;
    chain.interference_cov = chain.whitener * chain.interference_plus_noise * chain.whitener.adjoint();
    chain.interference_cov = (chain.interference_cov + chain.interference_cov.adjoint()) * 0.5;
    chain.error_cov = mmse_error_covariance(chain.effective_channel, chain.q, chain.interference_cov);
    chain.capacity_bits = sum_capacity({chain.error_cov});
    return chain;
}

FrameResult run_frame(const SimConfig& cfg, double snr_db, std::size_t frame, std::vector<SweepRow>* sweep_out)
{
    FrameResult res;
    res.snr_db = snr_db;
    res.frame = frame;

    ReceiverChain chain;
    try {
        const auto scenario = generate_scenario(cfg, frame, snr_db);
        chain = build_receiver_chain(scenario, cfg);
        res.traditional_capacity = chain.capacity_bits;
        res.traditional_ok = std::isfinite(res.traditional_capacity);
        if (!res.traditional_ok) res.error = "traditional:nonfinite_capacity";
    } catch (const Error& e) {
        res.error = std::string("traditional:") + e.what();
        return res;
    }

    try {
        const auto parts = toeplitz::split_matrix(chain.error_cov);
        res.projection_residual = parts.projection_residual;
        const auto search = iteration::optimize_alpha(parts.circ, parts.skew, cfg.alpha_grid);
        res.alpha_star = search.alpha_star;
        res.sigma = search.sigma_at_star;
        res.rho = search.rho_at_star;
        res.bound_valid = search.bound_valid;
        if (sweep_out != nullptr)
            for (const auto& s : search.sweep) sweep_out->push_back({snr_db, frame, s});

        const auto it = iteration::iteration_matrix(parts.circ, parts.skew, search.alpha_star);
        res.split_capacity = iteration::capacity_of_iteration(it);
        res.split_ok = std::isfinite(res.split_capacity);
        if (!res.split_ok) res.error = "split:nonfinite_capacity";
    } catch (const Error& e) {
        res.error = std::string("split:") + e.what();
    }
    return res;
}

ExperimentTable run_experiment(const SimConfig& cfg)
{
    cfg.validate();
    ExperimentTable table;
    table.frames.reserve(cfg.snr_db.size() * cfg.frames);

    for (double snr : cfg.snr_db) {
        std::vector<double> trad;
        std::vector<double> split;
        std::vector<double> rho;
        std::vector<double> sigma;
        std::vector<double> residual;
        std::size_t trad_failed = 0;
        std::size_t split_failed = 0;

        for (std::size_t f = 0; f < cfg.frames; ++f) {
            FrameResult r = run_frame(cfg, snr, f, &table.sweep);
            if (r.traditional_ok)
                trad.push_back(r.traditional_capacity);
            else
                ++trad_failed;
            if (r.split_ok) {
                split.push_back(r.split_capacity);
                rho.push_back(r.rho);
                sigma.push_back(r.sigma);
                residual.push_back(r.projection_residual);
            } else {
                ++split_failed;
            }
            table.frames.push_back(std::move(r));
        }

        const Moments mt = moments(trad);
        table.rows.push_back({snr, kMethodTraditional, mt.mean, mt.stderr_, kNaN, kNaN, kNaN, trad.size(), trad_failed});
        const Moments ms = moments(split);
        table.rows.push_back({snr, kMethodSplit, ms.mean, ms.stderr_, mean_or_nan(rho), mean_or_nan(sigma),
                              mean_or_nan(residual), split.size(), split_failed});
    }
    return table;
}

} // namespace cssplit::mimo
