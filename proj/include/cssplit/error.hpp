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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cssplit {

// Root of every error raised by the library. Callers that only need a
// message can catch this; the subclasses carry the offending quantity.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class SingularityError : public Error {
public:
    SingularityError(const std::string& what, double pivot)
        : Error(what), pivot_(pivot) {}
    double pivot() const noexcept { return pivot_; }

private:
    double pivot_;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Input expected Hermitian; carries ||A - A^H||_F.
class PreconditionError : public Error {
public:
    PreconditionError(const std::string& what, double asymmetry)
        : Error(what), asymmetry_(asymmetry) {}
    double asymmetry() const noexcept { return asymmetry_; }

private:
    double asymmetry_;
};

// Input expected positive (semi)definite; carries the minimum eigenvalue.
class DefinitenessError : public Error {
public:
    DefinitenessError(const std::string& what, double min_eigenvalue)
        : Error(what), min_eigenvalue_(min_eigenvalue) {}
    double min_eigenvalue() const noexcept { return min_eigenvalue_; }

private:
    double min_eigenvalue_;
};

class FeasibilityError : public Error {
public:
    FeasibilityError(const std::string& what, std::size_t user)
        : Error(what), user_(user) {}
    std::size_t user() const noexcept { return user_; }

private:
    std::size_t user_;
};

// Config file problems. line is 0 when the error is not tied to a line.
class ConfigError : public Error {
public:
    ConfigError(const std::string& what, std::size_t line, std::string key)
        : Error(what), line_(line), key_(std::move(key)) {}
    std::size_t line() const noexcept { return line_; }
    const std::string& key() const noexcept { return key_; }

private:
    std::size_t line_;
    std::string key_;
};

} // namespace cssplit
