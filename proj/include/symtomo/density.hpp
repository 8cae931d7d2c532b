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

#include <vector>

#include "symtomo/grid.hpp"
#include "symtomo/tomography.hpp"

namespace symtomo {

/// Density matrix rho(q_i, q_j) in the position representation. Traces and
/// products use trapezoid weights on the q axis.
class DensityMatrix {
  public:
    explicit DensityMatrix(AxisGrid q);

    const AxisGrid &q() const noexcept { return q_; }
    std::size_t n() const noexcept { return q_.n(); }
    Complex &operator()(std::size_t i, std::size_t j) noexcept { return v_[i * q_.n() + j]; }
    const Complex &operator()(std::size_t i, std::size_t j) const noexcept { return v_[i * q_.n() + j]; }

    double trace() const;
    /// max |rho_ij - conj(rho_ji)|
    double hermiticity_error() const;
    double purity() const;
    /// Eigenvalues of the weighted operator sqrt(w_i) rho_ij sqrt(w_j), ascending.
    std::vector<double> eigenvalues() const;
    /// <psi| rho |psi> for psi sampled on the q axis.
    double expectation(const std::vector<Complex> &psi) const;
    /// Diagonal quadrature sum of q^k rho(q, q).
    double position_moment(int k) const;
    std::vector<double> diagonal() const;

  private:
    AxisGrid q_;
    std::vector<Complex> v_;
};

/// rho(y, y') = (1/2pi) integral dmu exp(i mu (y + y') / 2) C_1(mu, nu = y' - y).
///
/// The nu axis must be symmetric with an odd node count. The default q axis
/// has spacing equal to the nu spacing and half-width nu_max / 2, so every
/// difference y' - y is a nu node. Throws coverage otherwise.
DensityMatrix reconstruct_density(const FullTomogram &tomogram);
DensityMatrix reconstruct_density(const FullTomogram &tomogram, const AxisGrid &q_axis);

/// q axis used by reconstruct_density(tomogram).
AxisGrid density_axis(const FullTomogram &tomogram);

}  // namespace symtomo
