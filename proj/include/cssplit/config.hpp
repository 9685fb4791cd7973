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

// Experiment config files: one "key = value" pair per line, '#' starts a
// comment. Keys:
//
//   m_t, k_total, k_active, m_i, frames, packets   positive integers
//   snr_db                                          comma-separated dB list
//   inr_db                                          dB, or -inf for none
//   seed                                            unsigned 64-bit
//   alpha_grid_min, alpha_grid_max                  positive reals
//   alpha_grid_points                               positive integer
//
// Missing keys keep the SimConfig defaults.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cssplit/mimo_sim.hpp"

namespace cssplit::cli {

mimo::SimConfig parse_config_text(std::string_view text);
mimo::SimConfig parse_config(const std::filesystem::path& path);

/// Every key, defaults included, in a form parse_config_text reads back
/// to an equal SimConfig.
std::string serialize_config(const mimo::SimConfig& cfg);

} // namespace cssplit::cli
