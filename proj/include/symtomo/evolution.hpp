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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "symtomo/frames.hpp"
#include "symtomo/tomography.hpp"

namespace symtomo {

/// H = p^2 / 2 + V(q) with V(q) = omega^2 q^2 / 2 - f q (+ const).
struct HamiltonianSpec {
    double omega = 1.0;
    double f = 0.0;
    /// Optional polynomial coefficients c_0..c_d of V; must agree with omega and f.
    std::vector<double> potential_coeffs;

    /// omega = sqrt(2 c_2), f = -c_1. Degree >= 3 throws nonlocal-potential.
    static HamiltonianSpec from_potential(std::vector<double> coeffs);
};

void validate_hamiltonian(const HamiltonianSpec &ham);

/// Coefficients of d_t w = A mu d_nu w + B nu d_mu w + C nu d_x w.
struct AdvectionOperator {
    double nu_mu = 1.0;  ///< A
    double mu_nu = 0.0;  ///< B = -omega^2
    double x_nu = 0.0;   ///< C = -f

    double rhs(double mu, double nu, double dw_dx, double dw_dmu, double dw_dnu) const noexcept {
        return nu_mu * mu * dw_dnu + mu_nu * nu * dw_dmu + x_nu * nu * dw_dx;
    }
    /// Human-readable form, e.g. "mu d_nu - nu d_mu - 2 nu d_x".
    std::string describe() const;
};

AdvectionOperator marginal_evolution_operator(const HamiltonianSpec &ham);

/// Backward characteristic map over time tau: w(P, t + tau) = w(flow(P), t).
class FlowMap {
  public:
    FlowMap(const HamiltonianSpec &ham, double tau);

    double tau() const noexcept { return tau_; }
    double omega() const noexcept { return omega_; }
    double f() const noexcept { return f_; }

    /// (x, mu, nu) -> (x2, mu2, nu2).
    std::array<double, 3> operator()(double x, double mu, double nu) const noexcept;
    /// Frame relabeling: the evolved marginal at `frame` equals the initial one
    /// at the returned frame (the x shift is carried by delta).
    FrameParameters pull_frame(const FrameParameters &frame) const noexcept;
    /// d(mu2, nu2) / d(mu, nu) determinant.
    double jacobian() const noexcept;

  private:
    double tau_, omega_, f_;
    double m00_, m01_, m10_, m11_;  // (mu2, nu2) = M (mu, nu)
    double cx_mu_, cx_nu_;          // x2 = x - cx_mu mu - cx_nu nu
};

FlowMap flow_map(const HamiltonianSpec &ham, double tau);

/// Semi-Lagrangian pullback on the full grid with trilinear interpolation and
/// zero extension. Throws coverage when more than 20% of the nodes pull back
/// outside the grid.
struct CharacteristicsReport {
    double out_of_bounds_fraction = 0.0;
};
FullTomogram evolve_characteristics(const FullTomogram &w0, const HamiltonianSpec &ham, double t,
                                    CharacteristicsReport *report = nullptr);

/// Any source of marginal slices at arbitrary frames (analytic closure or
/// forward map of a sampled Wigner function).
using SliceSource = std::function<std::vector<double>(const FrameParameters &, const AxisGrid &)>;

/// Exact pullback of `source` along the flow: slice at frame F = source at pull_frame(F).
FrameSlices evolve_slices(const SliceSource &source, const std::vector<FrameParameters> &frames,
                          const AxisGrid &x_axis, const HamiltonianSpec &ham, double t);

/// max |evolve(w0, t1) - evolve(evolve(w0, t_mid), t1 - t_mid)|
double chapman_kolmogorov_check(const FullTomogram &w0, const HamiltonianSpec &ham, double t1, double t_mid);

struct DampingSpec {
    double gamma = 0.0;
    double n_bar = 0.0;
};

void validate_damping(const DampingSpec &damping);

/// Max-norm of the centered finite-difference residual over interior nodes.
/// `samples` are equally spaced in time by dt; 3 samples give a second-order
/// time difference at the middle one, 5 samples a fourth-order one. Spatial
/// derivatives are fourth-order central differences.
double pde_residual(std::span<const FullTomogram> samples, double dt, const HamiltonianSpec &ham);
double pde_residual(std::span<const FullTomogram> samples, double dt, const DampingSpec &damping);

}  // namespace symtomo
