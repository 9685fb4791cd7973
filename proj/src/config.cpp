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

#include "cssplit/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "cssplit/complex_text.hpp"

namespace cssplit::cli {

namespace {

std::uint64_t parse_unsigned(const std::string& value, const std::string& key, std::size_t line)
{
    std::uint64_t v = 0;
    const char* end = value.data() + value.size();
    const auto res = std::from_chars(value.data(), end, v);
    if (value.empty() || res.ec != std::errc{} || res.ptr != end)
        throw ConfigError("line " + std::to_string(line) + ": " + key + " expects a non-negative integer, got '"
                              + value + "'",
                          line, key);
    return v;
}

double parse_double(const std::string& value, const std::string& key, std::size_t line)
{
    try {
        return text::parse_real(value);
    } catch (const DomainError&) {
        throw ConfigError("line " + std::to_string(line) + ": " + key + " expects a number, got '" + value + "'",
                          line, key);
    }
}

} // namespace

mimo::SimConfig parse_config_text(std::string_view text)
{
    mimo::SimConfig cfg;
    std::map<std::string, std::size_t> seen;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string content = text::trim(raw);
        if (content.empty()) continue;

        const auto eq = content.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line) + ": expected 'key = value'", line, "");
        const std::string key = text::trim(std::string_view(content).substr(0, eq));
        const std::string value = text::trim(std::string_view(content).substr(eq + 1));
        if (key.empty()) throw ConfigError("line " + std::to_string(line) + ": missing key", line, "");
        if (seen.count(key) != 0)
            throw ConfigError("line " + std::to_string(line) + ": duplicate key " + key, line, key);
        seen[key] = line;

        if (key == "m_t") {
            cfg.m_t = parse_unsigned(value, key, line);
        } else if (key == "k_total") {
            cfg.k_total = parse_unsigned(value, key, line);
        } else if (key == "k_active") {
            cfg.k_active = parse_unsigned(value, key, line);
        } else if (key == "m_i") {
            cfg.m_i = parse_unsigned(value, key, line);
        } else if (key == "frames") {
            cfg.frames = parse_unsigned(value, key, line);
        } else if (key == "packets") {
            cfg.packets = parse_unsigned(value, key, line);
        } else if (key == "seed") {
            cfg.seed = parse_unsigned(value, key, line);
        } else if (key == "alpha_grid_points") {
            cfg.alpha_grid.points = parse_unsigned(value, key, line);
        } else if (key == "inr_db") {
            cfg.inr_db = parse_double(value, key, line);
        } else if (key == "alpha_grid_min") {
            cfg.alpha_grid.min = parse_double(value, key, line);
        } else if (key == "alpha_grid_max") {
            cfg.alpha_grid.max = parse_double(value, key, line);
        } else if (key == "snr_db") {
            cfg.snr_db.clear();
            std::size_t start = 0;
            while (true) {
                const auto comma = value.find(',', start);
                cfg.snr_db.push_back(parse_double(
                    text::trim(std::string_view(value).substr(start, comma == std::string::npos ? std::string::npos
                                                                                               : comma - start)),
                    key, line));
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
        } else {
            throw ConfigError("line " + std::to_string(line) + ": unknown key " + key, line, key);
        }
    }

    try {
        cfg.validate();
    } catch (const ConfigError& e) {
        const auto it = seen.find(e.key());
        const std::size_t at = it == seen.end() ? 0 : it->second;
        throw ConfigError(at == 0 ? std::string(e.what()) : "line " + std::to_string(at) + ": " + e.what(), at,
                          e.key());
    }
    return cfg;
}

mimo::SimConfig parse_config(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file " + path.string(), 0, "");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string serialize_config(const mimo::SimConfig& cfg)
{
    std::string snr;
    for (std::size_t i = 0; i < cfg.snr_db.size(); ++i) {
        if (i > 0) snr += ',';
        snr += text::format_roundtrip(cfg.snr_db[i]);
    }
    std::string out;
    out += "m_t = " + std::to_string(cfg.m_t) + "\n";
    out += "k_total = " + std::to_string(cfg.k_total) + "\n";
    out += "k_active = " + std::to_string(cfg.k_active) + "\n";
    out += "m_i = " + std::to_string(cfg.m_i) + "\n";
    out += "snr_db = " + snr + "\n";
    out += "inr_db = " + text::format_roundtrip(cfg.inr_db) + "\n";
    out += "frames = " + std::to_string(cfg.frames) + "\n";
    out += "packets = " + std::to_string(cfg.packets) + "\n";
    out += "seed = " + std::to_string(cfg.seed) + "\n";
    out += "alpha_grid_min = " + text::format_roundtrip(cfg.alpha_grid.min) + "\n";
    out += "alpha_grid_max = " + text::format_roundtrip(cfg.alpha_grid.max) + "\n";
    out += "alpha_grid_points = " + std::to_string(cfg.alpha_grid.points) + "\n";
    return out;
}

} // namespace cssplit::cli
