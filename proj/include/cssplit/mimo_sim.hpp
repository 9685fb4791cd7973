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

// Multiuser MIMO downlink Monte Carlo engine.
//
// Received signal of active user k:
//   y_k = H_k sum_l F_l x_l + H_I,k x_I,k + z_k
// with block-diagonalization precoders F_l (H_k F_l = 0 for l != k), an
// interference-plus-noise whitener W = R^{-1/2},
//   R = H_I Q_I H_I^H + sigma_z^2 I,
// and the normalized MMSE error covariance of the stacked system
//   E = (I + Q^{1/2} Ht^H Y^{-1} Ht Q^{1/2})^{-1},   Ht = W H F,  Y = W R W^H.
// -log2 det E equals log2 det(I + Ht Q Ht^H Y^{-1}), the sum capacity.
//
// Frames are independent: every random draw comes from a generator seeded
// by (seed, frame_index), so any subset of frames can be evaluated in any
// order.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cssplit/matkit.hpp"
#include "cssplit/splitting_iteration.hpp"

namespace cssplit::mimo {

using matkit::CMatrix;

struct SimConfig {
    std::size_t m_t = 4;
    std::size_t k_total = 20;
    std::size_t k_active = 4;
    /// Receive antennas per user; the splitting pipeline assumes 1.
    std::size_t m_r = 1;
    std::size_t m_i = 4;
    std::vector<double> snr_db{-10.0, -5.0, 0.0, 5.0, 10.0, 15.0, 20.0};
    /// Interference-to-noise ratio; -inf disables inter-cell interference.
    double inr_db = 0.0;
    std::size_t frames = 10;
    std::size_t packets = 200;
    std::uint64_t seed = 42;
    iteration::AlphaGrid alpha_grid{};

    /// Throws ConfigError naming the offending key.
    void validate() const;
};

bool operator==(const SimConfig& a, const SimConfig& b);

struct MimoScenario {
    /// Per active user, m_r x m_t.
    std::vector<CMatrix> channels;
    /// (k_active * m_r) x m_i.
    CMatrix interference_channel;
    double noise_var = 1.0;
    /// Total interferer power P_I; Q_I = (P_I / m_i) I.
    double interference_power = 0.0;
    /// Per-user signal power P_k.
    double signal_power = 1.0;

    std::size_t rx_dim() const;
    CMatrix stacked_channel() const;
};

struct ReceiverChain {
    std::vector<CMatrix> precoders;
    /// Q = blockdiag((P_k / streams_k) I).
    CMatrix q;
    /// R = H_I Q_I H_I^H + sigma_z^2 I before whitening.
    CMatrix interference_plus_noise;
    CMatrix whitener;
    CMatrix effective_channel;
    /// W R W^H.
    CMatrix interference_cov;
    CMatrix error_cov;
    double capacity_bits = 0.0;
};

/// Channels depend only on (cfg.seed, frame_index); snr_db and cfg.inr_db
/// set sigma_z^2 = 10^{-snr/10} and P_I = sigma_z^2 10^{inr/10} with P_k = 1.
MimoScenario generate_scenario(const SimConfig& cfg, std::size_t frame_index, double snr_db);

/// Orthonormal-column precoders in the null space of the other active
/// users' channels, aligned with the dominant right-singular directions of
/// the user's own projected channel. The phase of each column is fixed so
/// that the diagonal of H_k F_k is real and non-negative.
std::vector<CMatrix> bd_precoders(const MimoScenario& scenario, const SimConfig& cfg);

CMatrix interference_covariance(const MimoScenario& scenario);

CMatrix whitening_filter(const CMatrix& r);

CMatrix mmse_error_covariance(const CMatrix& h_eff, const CMatrix& q, const CMatrix& upsilon);

/// sum over the list of -log2 det(E).
double sum_capacity(const std::vector<CMatrix>& error_covs);

/// Runs precoding, whitening and the MMSE stage for one scenario.
ReceiverChain build_receiver_chain(const MimoScenario& scenario, const SimConfig& cfg);

inline constexpr const char* kMethodTraditional = "traditional";
inline constexpr const char* kMethodSplit = "split_alpha_star";

struct FrameResult {
    double snr_db = 0.0;
    std::size_t frame = 0;
    bool traditional_ok = false;
    double traditional_capacity = 0.0;
    bool split_ok = false;
    double split_capacity = 0.0;
    double alpha_star = 0.0;
    double rho = 0.0;
    double sigma = 0.0;
    double projection_residual = 0.0;
    bool bound_valid = false;
    /// Empty when both methods succeeded.
    std::string error;
};

struct SumRateRow {
    double snr_db = 0.0;
    std::string method;
    double mean_capacity_bits = 0.0;
    double stderr_capacity_bits = 0.0;
    /// NaN for the traditional method, which has no iteration matrix.
    double mean_rho = 0.0;
    double mean_sigma = 0.0;
    double mean_projection_residual = 0.0;
    std::size_t frames_ok = 0;
    std::size_t frames_failed = 0;
};

struct SweepRow {
    double snr_db = 0.0;
    std::size_t frame = 0;
    iteration::AlphaSample sample;
};

struct ExperimentTable {
    std::vector<SumRateRow> rows;
    std::vector<FrameResult> frames;
    std::vector<SweepRow> sweep;
};

/// Evaluates both methods for a single (snr, frame) point.
FrameResult run_frame(const SimConfig& cfg, double snr_db, std::size_t frame,
                      std::vector<SweepRow>* sweep_out = nullptr);

ExperimentTable run_experiment(const SimConfig& cfg);

} // namespace cssplit::mimo
