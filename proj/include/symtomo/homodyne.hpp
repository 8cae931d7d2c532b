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
#include <span>
#include <string>
#include <vector>

#include "symtomo/density.hpp"
#include "symtomo/states.hpp"

namespace symtomo {

/// One homodyne outcome x_phi of the quadrature cos(phi) q + sin(phi) p.
struct HomodyneSample {
    double x = 0.0;
    double phi = 0.0;  ///< in [0, pi)
};

/// Seeded draws: phi uniform on [0, pi), x from the analytic marginal at time t.
/// Gaussian states use the exact normal quantile, the others a tabulated CDF.
std::vector<HomodyneSample> sample_homodyne(const StateSpec &state, std::size_t count, std::uint64_t seed,
                                            double t = 0.0);

struct HomodyneReconstruction {
    DensityMatrix rho;
    /// Vacuum fidelity the cutoff alone would allow, 1 - exp(-r_cutoff^2 / 2).
    double cutoff_fidelity = 1.0;
    std::vector<std::string> warnings;
};

/// Kernel average rho = (pi / N) sum <q| K_phi(x_phi) |q'>, with
/// K_phi(x) = (1/2pi) integral_{|r| <= r_cutoff} |r| exp(i r (x - X_phi)) dr.
/// Matrix elements are averaged over one q - q' cell of the output axis.
HomodyneReconstruction homodyne_reconstruct(std::span<const HomodyneSample> samples, const AxisGrid &q_axis,
                                            double r_cutoff = 8.0);

double cutoff_vacuum_fidelity(double r_cutoff);

}  // namespace symtomo
