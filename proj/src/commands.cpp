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

#include "cssplit/commands.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>

#include "cssplit/complex_text.hpp"
#include "cssplit/config.hpp"
#include "cssplit/splitting_iteration.hpp"
#include "cssplit/toeplitz_split.hpp"

namespace cssplit::cli {

namespace {

namespace fs = std::filesystem;

void write_file(const fs::path& path, const std::string& contents)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open " + path.string() + " for writing");
    f << contents;
    if (!f) throw Error("failed writing " + path.string());
}

std::string utc_now_iso8601()
{
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string optional_field(double v)
{
    return std::isnan(v) ? std::string() : text::format_real(v);
}

void print_vector(std::ostream& out, const char* label, const std::vector<matkit::cd>& v)
{
    out << label << ":";
    for (const auto& z : v) out << ' ' << text::format_complex(z);
    out << '\n';
}

} // namespace

std::string tool_version()
{
    return CSSPLIT_VERSION;
}

std::string manifest_text(const RunManifest& m)
{
    std::string out;
    out += "tool_version = " + m.tool_version + "\n";
    out += "config_path = " + m.config_path + "\n";
    out += "output_dir = " + m.output_dir + "\n";
    out += "started_at = " + m.started_at + "\n";
    out += "m_r = " + std::to_string(m.config.m_r) + "\n";
    out += serialize_config(m.config);
    return out;
}

std::string sumrate_csv(const mimo::ExperimentTable& table)
{
    std::string out = "snr_db,method,mean_capacity_bits,stderr_capacity_bits,mean_rho,mean_sigma,"
                      "mean_projection_residual,frames_ok,frames_failed\n";
    for (const auto& r : table.rows) {
        out += text::format_real(r.snr_db) + ',' + r.method + ',' + text::format_real(r.mean_capacity_bits) + ','
               + text::format_real(r.stderr_capacity_bits) + ',' + optional_field(r.mean_rho) + ','
               + optional_field(r.mean_sigma) + ',' + optional_field(r.mean_projection_residual) + ','
               + std::to_string(r.frames_ok) + ',' + std::to_string(r.frames_failed) + '\n';
    }
    return out;
}

std::string alpha_sweep_csv(const mimo::ExperimentTable& table)
{
    std::string out = "snr_db,frame,alpha,sigma,rho,capacity_bits\n";
    for (const auto& r : table.sweep) {
        out += text::format_real(r.snr_db) + ',' + std::to_string(r.frame) + ',' + text::format_real(r.sample.alpha)
               + ',' + text::format_real(r.sample.sigma) + ',' + text::format_real(r.sample.rho) + ','
               + text::format_real(r.sample.capacity_bits) + '\n';
    }
    return out;
}

int cmd_run(const fs::path& config_path, const fs::path& out_dir, std::optional<std::uint64_t> seed_override,
            std::ostream& out, std::ostream& err)
{
    mimo::SimConfig cfg;
    try {
        cfg = parse_config(config_path);
        if (seed_override) cfg.seed = *seed_override;
    } catch (const Error& e) {
        err << "config error: " << e.what() << '\n';
        return kExitConfigError;
    }

    try {
        fs::create_directories(out_dir);
        RunManifest manifest{config_path.string(), out_dir.string(), cfg, tool_version(), utc_now_iso8601()};
        write_file(out_dir / "manifest.txt", manifest_text(manifest));

        const auto table = mimo::run_experiment(cfg);
        write_file(out_dir / "sumrate.csv", sumrate_csv(table));
        write_file(out_dir / "alpha_sweep.csv", alpha_sweep_csv(table));

        std::size_t ok = 0;
        for (const auto& f : table.frames) {
            if (!f.error.empty())
                err << "snr " << text::format_real(f.snr_db) << " frame " << f.frame << ": " << f.error << '\n';
            if (f.traditional_ok) ++ok;
        }
        for (const auto& r : table.rows) {
            out << "snr_db=" << text::format_real(r.snr_db) << ' ' << r.method
                << " capacity=" << text::format_real(r.mean_capacity_bits) << " bits (+/- "
                << text::format_real(r.stderr_capacity_bits) << ", " << r.frames_ok << " ok, " << r.frames_failed
                << " failed)\n";
        }
        if (ok == 0) {
            err << "every frame failed\n";
            return kExitRuntimeError;
        }
    } catch (const std::exception& e) {
        err << "runtime error: " << e.what() << '\n';
        return kExitRuntimeError;
    }
    return kExitOk;
}

int cmd_split(const fs::path& matrix_path, const fs::path& out_dir, std::ostream& out, std::ostream& err)
{
    matkit::CMatrix m;
    try {
        m = text::read_complex_csv(matrix_path);
        if (m.rows() != m.cols()) throw DimensionError("matrix is " + matkit::shape_of(m) + ", expected square");
    } catch (const Error& e) {
        err << "matrix error: " << e.what() << '\n';
        return kExitConfigError;
    }

    try {
        const auto parts = toeplitz::split_matrix(m);
        const auto lam = toeplitz::circulant_eigenvalues(parts.circ);
        const auto mu = toeplitz::skew_circulant_eigenvalues(parts.skew);
        const auto search = iteration::optimize_alpha(parts.circ, parts.skew, iteration::AlphaGrid{});

        out << "dimension: " << m.rows() << '\n';
        out << "projection_residual: " << text::format_real(parts.projection_residual) << '\n';
        print_vector(out, "circulant_generator", parts.circ.gen);
        print_vector(out, "skew_circulant_generator", parts.skew.gen);
        print_vector(out, "circulant_eigenvalues", lam.values());
        print_vector(out, "skew_circulant_eigenvalues", mu.values());
        out << "bound_valid: " << (search.bound_valid ? "true" : "false") << '\n';
        out << "alpha_star: " << text::format_real(search.alpha_star) << '\n';
        out << "sigma_at_star: " << text::format_real(search.sigma_at_star) << '\n';
        out << "rho_at_star: " << text::format_real(search.rho_at_star) << '\n';

        fs::create_directories(out_dir);
        write_file(out_dir / "eps1.csv", text::complex_csv(toeplitz::circulant_dense(parts.circ)));
        write_file(out_dir / "eps2.csv", text::complex_csv(toeplitz::skew_circulant_dense(parts.skew)));
    } catch (const std::exception& e) {
        err << "runtime error: " << e.what() << '\n';
        return kExitRuntimeError;
    }
    return kExitOk;
}

} // namespace cssplit::cli
