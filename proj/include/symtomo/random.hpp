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

namespace symtomo {

/// Counter-based generator: draw k of stream `seed` is splitmix64(seed, k), so
/// any draw can be reproduced without replaying the stream.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

    std::uint64_t bits(std::uint64_t counter) const noexcept;
    /// Uniform in the open interval (0, 1).
    double uniform(std::uint64_t counter) const noexcept;

  private:
    std::uint64_t seed_;
};

/// Quantile of the standard normal distribution for u in (0, 1).
double normal_quantile(double u);

}  // namespace symtomo
