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

// Subcommands behind the cssplit executable. Kept in the library so tests
// can drive them without spawning processes.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "cssplit/mimo_sim.hpp"

namespace cssplit::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitConfigError = 1,
    kExitRuntimeError = 2,
};

std::string tool_version();

struct RunManifest {
    std::string config_path;
    std::string output_dir;
    mimo::SimConfig config;
    std::string tool_version;
    /// ISO-8601 UTC.
    std::string started_at;
};

std::string manifest_text(const RunManifest& m);

/// Header: snr_db,method,mean_capacity_bits,stderr_capacity_bits,mean_rho,
/// mean_sigma,mean_projection_residual,frames_ok,frames_failed
std::string sumrate_csv(const mimo::ExperimentTable& table);

/// Header: snr_db,frame,alpha,sigma,rho,capacity_bits
std::string alpha_sweep_csv(const mimo::ExperimentTable& table);

/// Writes manifest.txt, sumrate.csv and alpha_sweep.csv into out_dir.
int cmd_run(const std::filesystem::path& config_path, const std::filesystem::path& out_dir,
            std::optional<std::uint64_t> seed_override, std::ostream& out, std::ostream& err);

/// Projects the matrix onto Toeplitz form, splits it and reports the
/// generators, fast spectra and the optimal shift. Writes eps1.csv and
/// eps2.csv (dense circulant and skew-circulant parts) into out_dir.
int cmd_split(const std::filesystem::path& matrix_path, const std::filesystem::path& out_dir, std::ostream& out,
              std::ostream& err);

} // namespace cssplit::cli
