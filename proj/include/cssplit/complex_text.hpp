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

// Locale-independent text forms for real and complex numbers and complex
// CSV matrices. Complex values are written "a+bi" / "a-bi".

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cssplit/matkit.hpp"

namespace cssplit::text {

/// Significant digits used by every numeric CSV field.
inline constexpr int kCsvDigits = 10;

/// Shortest text that parses back to exactly v.
std::string format_roundtrip(double v);

/// v with kCsvDigits significant digits; "inf", "-inf", "nan" otherwise.
std::string format_real(double v);

std::string format_complex(const matkit::cd& z);
/// Complex value with each part in format_roundtrip form.
std::string format_complex_exact(const matkit::cd& z);

/// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i", with optional spaces and
/// 'j' in place of 'i'. Throws DomainError on malformed input.
matkit::cd parse_complex(std::string_view text);

/// Parses a double from the whole of text (no trailing characters).
/// Accepts a leading '+', "inf" and "-inf".
double parse_real(std::string_view text);

/// One row per line, entries separated by commas. Blank lines are ignored.
matkit::CMatrix parse_complex_csv(std::string_view text);
matkit::CMatrix read_complex_csv(const std::filesystem::path& path);

/// Entries are written with format_complex_exact so that a reread matrix
/// is bit-identical.
std::string complex_csv(const matkit::CMatrix& m);

std::string trim(std::string_view s);

} // namespace cssplit::text
