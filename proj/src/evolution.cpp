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

#include "symtomo/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "symtomo/error.hpp"
#include "symtomo/interp.hpp"

namespace symtomo {

namespace {

// sin(t) / t
double sinc(double t) noexcept {
    if (std::abs(t) < 1e-4) return 1.0 - t * t / 6.0 + t * t * t * t / 120.0;
    return std::sin(t) / t;
}

std::size_t degree(const std::vector<double> &c) {
    std::size_t d = 0;
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0.0) d = k;
    return d;
}

void append_term(std::ostringstream &os, double coef, const char *factor, const char *deriv) {
    if (coef == 0.0) return;
    const bool first = os.tellp() == 0;
    if (coef < 0.0)
        os << (first ? "-" : " - ");
    else if (!first)
        os << " + ";
    const double mag = std::abs(coef);
    if (mag != 1.0) os << mag << " ";
    os << factor << " " << deriv;
}

}  // namespace

HamiltonianSpec HamiltonianSpec::from_potential(std::vector<double> coeffs) {
    if (degree(coeffs) >= 3)
        throw_validation("nonlocal-potential",
                         "potentials of degree >= 3 turn the marginal equation nonlocal in x (the q^3 term needs the "
                         "inverse of d/dx); only quadratic potentials are supported");
    coeffs.resize(3, 0.0);
    if (coeffs[2] < 0.0) throw_validation("invalid-hamiltonian", "potential needs c_2 >= 0");
    HamiltonianSpec h;
    h.omega = std::sqrt(2.0 * coeffs[2]);
    h.f = -coeffs[1];
    h.potential_coeffs = coeffs;
    return h;
}

void validate_hamiltonian(const HamiltonianSpec &ham) {
    if (!std::isfinite(ham.omega) || !std::isfinite(ham.f) || ham.omega < 0.0)
        throw_validation("invalid-hamiltonian", "omega must be finite and >= 0, f finite");
    if (ham.potential_coeffs.empty()) return;
    for (double c : ham.potential_coeffs)
        if (!std::isfinite(c)) throw_validation("invalid-hamiltonian", "potential coefficients must be finite");
    if (degree(ham.potential_coeffs) >= 3) HamiltonianSpec::from_potential(ham.potential_coeffs);
    auto c = ham.potential_coeffs;
    c.resize(3, 0.0);
    const double tol = 1e-12 * std::max({1.0, std::abs(c[1]), std::abs(c[2])});
    if (std::abs(c[2] - 0.5 * ham.omega * ham.omega) > tol || std::abs(c[1] + ham.f) > tol)
        throw_validation("invalid-hamiltonian", "potential coefficients disagree with omega and f (need c_2 = "
                                                "omega^2 / 2, c_1 = -f)");
}

std::string AdvectionOperator::describe() const {
    std::ostringstream os;
    append_term(os, nu_mu, "mu", "d_nu");
    append_term(os, mu_nu, "nu", "d_mu");
    append_term(os, x_nu, "nu", "d_x");
    if (os.tellp() == 0) os << "0";
    return os.str();
}

AdvectionOperator marginal_evolution_operator(const HamiltonianSpec &ham) {
    validate_hamiltonian(ham);
    return AdvectionOperator{1.0, -ham.omega * ham.omega, -ham.f};
}

FlowMap::FlowMap(const HamiltonianSpec &ham, double tau) : tau_(tau), omega_(ham.omega), f_(ham.f) {
    validate_hamiltonian(ham);
    if (!(tau >= 0.0) || !std::isfinite(tau)) throw_validation("invalid-argument", "flow time tau must be >= 0");
    const double th = omega_ * tau;
    const double half = sinc(0.5 * th);
    m00_ = std::cos(th);
    m01_ = -omega_ * std::sin(th);
    m10_ = tau * sinc(th);
    m11_ = std::cos(th);
    // (1 - cos th) / omega^2 = (tau^2 / 2) sinc(th / 2)^2 stays accurate as omega -> 0.
    cx_mu_ = f_ * 0.5 * tau * tau * half * half;
    cx_nu_ = f_ * tau * sinc(th);
}

std::array<double, 3> FlowMap::operator()(double x, double mu, double nu) const noexcept {
    return {x - cx_mu_ * mu - cx_nu_ * nu, m00_ * mu + m01_ * nu, m10_ * mu + m11_ * nu};
}

FrameParameters FlowMap::pull_frame(const FrameParameters &frame) const noexcept {
    return {m00_ * frame.mu + m01_ * frame.nu, m10_ * frame.mu + m11_ * frame.nu,
            frame.delta + cx_mu_ * frame.mu + cx_nu_ * frame.nu};
}

double FlowMap::jacobian() const noexcept { return m00_ * m11_ - m01_ * m10_; }

FlowMap flow_map(const HamiltonianSpec &ham, double tau) { return FlowMap(ham, tau); }

FullTomogram evolve_characteristics(const FullTomogram &w0, const HamiltonianSpec &ham, double t,
                                    CharacteristicsReport *report) {
    const FlowMap flow(ham, t);
    FullTomogram out{ScalarField3D(w0.mu(), w0.nu(), w0.x())};
    const auto &mu = w0.mu();
    const auto &nu = w0.nu();
    const auto &x = w0.x();
    std::size_t outside = 0;
    for (std::size_t i = 0; i < mu.n(); ++i)
        for (std::size_t j = 0; j < nu.n(); ++j) {
            auto line = out.values.line(i, j);
            for (std::size_t k = 0; k < x.n(); ++k) {
                auto p = flow(x[k], mu[i], nu[j]);
                auto v = try_interp_trilinear(w0.values, p[1], p[2], p[0]);
                if (!v) ++outside;
                line[k] = v.value_or(0.0);
            }
        }
    const double frac = static_cast<double>(outside) / static_cast<double>(out.values.values().size());
    if (report) report->out_of_bounds_fraction = frac;
    if (frac > 0.2) {
        std::ostringstream os;
        os << 100.0 * frac << "% of the grid pulls back outside it at t = " << t
           << " (limit 20%); enlarge the (x, mu, nu) grid or shorten t";
        throw_numeric("coverage", os.str());
    }
    return out;
}

FrameSlices evolve_slices(const SliceSource &source, const std::vector<FrameParameters> &frames,
                          const AxisGrid &x_axis, const HamiltonianSpec &ham, double t) {
    const FlowMap flow(ham, t);
    FrameSlices out{frames, x_axis, {}};
    for (const auto &f : frames) {
        validate_frame(f);
        out.values.push_back(source(flow.pull_frame(f), x_axis));
    }
    return out;
}

double chapman_kolmogorov_check(const FullTomogram &w0, const HamiltonianSpec &ham, double t1, double t_mid) {
    if (!(t_mid >= 0.0 && t_mid <= t1)) throw_validation("invalid-argument", "need 0 <= t_mid <= t1");
    auto direct = evolve_characteristics(w0, ham, t1);
    auto two_leg = evolve_characteristics(evolve_characteristics(w0, ham, t_mid), ham, t1 - t_mid);
    double err = 0.0;
    auto a = direct.values.values();
    auto b = two_leg.values.values();
    for (std::size_t k = 0; k < a.size(); ++k) err = std::max(err, std::abs(a[k] - b[k]));
    return err;
}

void validate_damping(const DampingSpec &d) {
    if (!std::isfinite(d.gamma) || d.gamma < 0.0) throw_validation("invalid-damping", "gamma must be finite and >= 0");
    if (!std::isfinite(d.n_bar) || d.n_bar < 0.0) throw_validation("invalid-damping", "n_bar must be >= 0");
    if (d.n_bar > 0.0) throw_validation("unsupported", "thermal baths (n_bar > 0) are not supported; use n_bar = 0");
}

namespace {

struct Stencil {
    const ScalarField3D &w;
    double d1(const AxisGrid &axis, std::size_t i, std::size_t j, std::size_t k, int which) const noexcept {
        auto at = [&](long o) {
            return which == 0 ? w(i + o, j, k) : which == 1 ? w(i, j + o, k) : w(i, j, k + o);
        };
        return (-at(2) + 8.0 * at(1) - 8.0 * at(-1) + at(-2)) / (12.0 * axis.spacing());
    }
    double d2x(std::size_t i, std::size_t j, std::size_t k) const noexcept {
        const double h = w.axis2().spacing();
        return (-w(i, j, k + 2) + 16.0 * w(i, j, k + 1) - 30.0 * w(i, j, k) + 16.0 * w(i, j, k - 1) -
                w(i, j, k - 2)) /
               (12.0 * h * h);
    }
};

template <class Rhs>
double residual(std::span<const FullTomogram> s, double dt, Rhs rhs) {
    if (s.size() < 3) throw_validation("input", "pde_residual needs at least 3 time samples");
    if (!(dt > 0.0)) throw_validation("invalid-argument", "pde_residual needs dt > 0");
    for (const auto &t : s)
        if (!(t.mu() == s[0].mu()) || !(t.nu() == s[0].nu()) || !(t.x() == s[0].x()))
            throw_validation("dimension", "pde_residual samples must share one grid");
    const bool fourth = s.size() >= 5;
    const std::size_t m = s.size() / 2;
    const auto &w = s[m].values;
    const auto &mu = w.axis0();
    const auto &nu = w.axis1();
    const auto &x = w.axis2();
    Stencil st{w};
    double err = 0.0;
    for (std::size_t i = 2; i + 2 < mu.n(); ++i)
        for (std::size_t j = 2; j + 2 < nu.n(); ++j)
            for (std::size_t k = 2; k + 2 < x.n(); ++k) {
                double wt;
                if (fourth)
                    wt = (-s[m + 2].values(i, j, k) + 8.0 * s[m + 1].values(i, j, k) - 8.0 * s[m - 1].values(i, j, k) +
                          s[m - 2].values(i, j, k)) /
                         (12.0 * dt);
                else
                    wt = (s[m + 1].values(i, j, k) - s[m - 1].values(i, j, k)) / (2.0 * dt);
                err = std::max(err, std::abs(wt - rhs(st, i, j, k)));
            }
    return err;
}

}  // namespace

double pde_residual(std::span<const FullTomogram> samples, double dt, const HamiltonianSpec &ham) {
    const auto op = marginal_evolution_operator(ham);
    return residual(samples, dt, [&](const Stencil &st, std::size_t i, std::size_t j, std::size_t k) {
        const auto &w = st.w;
        return op.rhs(w.axis0()[i], w.axis1()[j], st.d1(w.axis2(), i, j, k, 2), st.d1(w.axis0(), i, j, k, 0),
                      st.d1(w.axis1(), i, j, k, 1));
    });
}

double pde_residual(std::span<const FullTomogram> samples, double dt, const DampingSpec &damping) {
    validate_damping(damping);
    const double g = damping.gamma;
    return residual(samples, dt, [&](const Stencil &st, std::size_t i, std::size_t j, std::size_t k) {
        const auto &w = st.w;
        const double mu = w.axis0()[i], nu = w.axis1()[j];
        const double r2 = mu * mu + nu * nu;
        return 0.5 * g *
               (-mu * st.d1(w.axis0(), i, j, k, 0) - nu * st.d1(w.axis1(), i, j, k, 1) + 0.5 * r2 * st.d2x(i, j, k));
    });
}

}  // namespace symtomo
