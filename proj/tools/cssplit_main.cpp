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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cssplit/commands.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Circulant/skew-circulant splitting of MMSE error covariances in a multiuser MIMO downlink"};
    app.require_subcommand(1);

    std::string config_path;
    std::string run_out;
    std::optional<std::uint64_t> seed;
    auto* run = app.add_subcommand("run", "Run the Monte Carlo experiment and write CSV tables");
    run->add_option("--config", config_path, "key = value config file")->required();
    run->add_option("--out", run_out, "Output directory")->required();
    run->add_option("--seed", seed, "Override the config seed");

    std::string matrix_path;
    std::string split_out;
    auto* split = app.add_subcommand("split", "Split a square complex matrix into circulant + skew-circulant parts");
    split->add_option("--matrix", matrix_path, "CSV of complex entries (a+bi)")->required();
    split->add_option("--out", split_out, "Output directory for eps1.csv and eps2.csv")->required();

    auto* version = app.add_subcommand("version", "Print the tool version");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? cssplit::cli::kExitOk : cssplit::cli::kExitConfigError;
    }

    if (*run) return cssplit::cli::cmd_run(config_path, run_out, seed, std::cout, std::cerr);
    if (*split) return cssplit::cli::cmd_split(matrix_path, split_out, std::cout, std::cerr);
    if (*version) {
        std::cout << "cssplit " << cssplit::cli::tool_version() << '\n';
        return cssplit::cli::kExitOk;
    }
    return cssplit::cli::kExitConfigError;
}
