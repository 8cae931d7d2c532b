// Copyright 2026 The symtomo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace symtomo {

/// Error classes; the numeric values double as CLI exit codes.
enum class ErrorCode : int {
    Validation = 2,
    NumericAccuracy = 3,
    Io = 4,
};

/// Base exception for every failure raised by the library.
///
/// `kind()` is a short machine-readable tag ("invalid-frame", "coverage", ...)
/// that ends up in CLI error records.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, std::string kind, const std::string &message);

    ErrorCode code() const noexcept { return code_; }
    const std::string &kind() const noexcept { return kind_; }

  private:
    ErrorCode code_;
    std::string kind_;
};

/// Raised by interpolation when the query point lies outside the grid.
class BoundaryError : public Error {
  public:
    BoundaryError(std::array<double, 3> point, const std::string &message);

    const std::array<double, 3> &point() const noexcept { return point_; }

  private:
    std::array<double, 3> point_;
};

[[noreturn]] void throw_validation(const std::string &kind, const std::string &message);
[[noreturn]] void throw_numeric(const std::string &kind, const std::string &message);
[[noreturn]] void throw_io(const std::string &message);

}  // namespace symtomo
