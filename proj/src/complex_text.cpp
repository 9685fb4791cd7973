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

#include "cssplit/complex_text.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace cssplit::text {

namespace {

std::string chars_to_string(double v, bool shortest)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) v = 0.0; // drop the sign of negative zero
    std::array<char, 64> buf{};
    const auto res = shortest ? std::to_chars(buf.data(), buf.data() + buf.size(), v)
                              : std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general,
                                              kCsvDigits);
    return std::string(buf.data(), res.ptr);
}

std::string strip_spaces(std::string_view s)
{
    std::string out;
    out.reserve(s.size());
    for (char c : s)
        if (c != ' ' && c != '\t' && c != '\r') out.push_back(c);
    return out;
}

} // namespace

std::string trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(first, last - first + 1));
}

std::string format_roundtrip(double v)
{
    return chars_to_string(v, true);
}

std::string format_real(double v)
{
    return chars_to_string(v, false);
}

namespace {

std::string join_complex(std::string re, std::string im)
{
    if (im.front() != '-') im.insert(im.begin(), '+');
    return re + im + "i";
}

} // namespace

std::string format_complex(const matkit::cd& z)
{
    return join_complex(format_real(z.real()), format_real(z.imag()));
}

std::string format_complex_exact(const matkit::cd& z)
{
    return join_complex(format_roundtrip(z.real()), format_roundtrip(z.imag()));
}

double parse_real(std::string_view text)
{
    std::string s = trim(text);
    std::string_view body = s;
    if (!body.empty() && body.front() == '+') body.remove_prefix(1);
    if (body.empty() || body.front() == '+') throw DomainError("malformed number '" + std::string(text) + "'");
    double v = 0.0;
    const auto res = std::from_chars(body.data(), body.data() + body.size(), v);
    if (res.ec != std::errc{} || res.ptr != body.data() + body.size())
        throw DomainError("malformed number '" + std::string(text) + "'");
    return v;
}

matkit::cd parse_complex(std::string_view text)
{
    const std::string s = strip_spaces(text);
    if (s.empty()) throw DomainError("empty complex entry");

    const char last = s.back();
    if (last != 'i' && last != 'j') return {parse_real(s), 0.0};

    const std::string body = s.substr(0, s.size() - 1);
    // Split at the last sign that is not an exponent sign or the leading sign.
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }

    const auto imag_of = [&](const std::string& part) -> double {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        return parse_real(part);
    };

    try {
        if (split == std::string::npos) return {0.0, imag_of(body)};
        return {parse_real(body.substr(0, split)), imag_of(body.substr(split))};
    } catch (const DomainError&) {
        throw DomainError("malformed complex entry '" + std::string(text) + "'");
    }
}

matkit::CMatrix parse_complex_csv(std::string_view text)
{
    std::vector<std::vector<matkit::cd>> rows;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (trim(line).empty()) continue;

        std::vector<matkit::cd> row;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            const auto cell = line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
            try {
                row.push_back(parse_complex(cell));
            } catch (const DomainError& e) {
                throw DomainError("line " + std::to_string(line_no) + ": " + e.what());
            }
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw DimensionError("line " + std::to_string(line_no) + ": expected "
                                 + std::to_string(rows.front().size()) + " entries, got "
                                 + std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw DimensionError("matrix file contains no rows");

    std::vector<matkit::cd> flat;
    for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    return matkit::make_matrix(rows.size(), rows.front().size(), flat);
}

matkit::CMatrix read_complex_csv(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open matrix file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_complex_csv(ss.str());
}

std::string complex_csv(const matkit::CMatrix& m)
{
    std::string out;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ',';
            out += format_complex_exact(m(i, j));
        }
        out += '\n';
    }
    return out;
}

} // namespace cssplit::text
