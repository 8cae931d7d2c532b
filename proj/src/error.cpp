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

#include "symtomo/error.hpp"

#include <sstream>

namespace symtomo {

Error::Error(ErrorCode code, std::string kind, const std::string &message)
    : std::runtime_error(message), code_(code), kind_(std::move(kind)) {}

namespace {
std::string describe_point(const std::array<double, 3> &p, const std::string &message) {
    std::ostringstream os;
    os.precision(17);
    os << message << " (point " << p[0] << ", " << p[1] << ", " << p[2] << ")";
    return os.str();
}
}  // namespace

BoundaryError::BoundaryError(std::array<double, 3> point, const std::string &message)
    : Error(ErrorCode::NumericAccuracy, "boundary", describe_point(point, message)), point_(point) {}

void throw_validation(const std::string &kind, const std::string &message) {
    throw Error(ErrorCode::Validation, kind, message);
}

void throw_numeric(const std::string &kind, const std::string &message) {
    throw Error(ErrorCode::NumericAccuracy, kind, message);
}

void throw_io(const std::string &message) { throw Error(ErrorCode::Io, "io", message); }

}  // namespace symtomo
