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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace symtomo {

struct SelftestOptions {
    /// Multiplies every grid half-width at fixed spacing. Values below 1
    /// truncate supports and are expected to fail.
    double grid_scale = 1.0;
    std::uint64_t seed = 20260601;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

constexpr int kCriterionCount = 12;

/// Runs one check (id in 1..kCriterionCount). Library errors become failures
/// whose detail carries the error kind and message.
CriterionResult run_criterion(int id, const SelftestOptions &options = {});

/// Runs every check in order; `on_result` sees each result as soon as it is ready.
std::vector<CriterionResult> run_selftest(const SelftestOptions &options = {},
                                          const std::function<void(const CriterionResult &)> &on_result = {});

}  // namespace symtomo
