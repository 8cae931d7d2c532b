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

#include "symtomo/states.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "symtomo/error.hpp"

namespace symtomo {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

struct Point {
    double q, p;
};

// Classical trajectory of the free oscillator starting at (q0, p0).
Point rotate(double q0, double p0, double t) {
    const double c = std::cos(t), s = std::sin(t);
    return {q0 * c + p0 * s, p0 * c - q0 * s};
}

double gaussian_wigner(const GaussianMoments &m, double q, double p) {
    const double det = m.determinant();
    const double dq = q - m.mean_q, dp = p - m.mean_p;
    // d^T Sigma^{-1} d with Sigma = [[var_q, cov], [cov, var_p]].
    const double quad = (m.var_p * dq * dq - 2.0 * m.cov_qp * dq * dp + m.var_q * dp * dp) / det;
    return std::exp(-0.5 * quad) / std::sqrt(det);
}

double normal_pdf(double u, double var) { return std::exp(-0.5 * u * u / var) / std::sqrt(2.0 * kPi * var); }

void require_finite(std::initializer_list<double> values, const char *what) {
    for (double v : values)
        if (!std::isfinite(v)) throw_validation("invalid-state", std::string(what) + ": parameters must be finite");
}

}  // namespace

void validate_state(const StateSpec &state) {
    std::visit(Overloaded{
                   [](const Ground &) {},
                   [](const FockOne &) {},
                   [](const Coherent &c) { require_finite({c.q0, c.p0}, "coherent"); },
                   [](const OddCat &c) {
                       require_finite({c.q0, c.p0}, "oddcat");
                       if (c.q0 * c.q0 + c.p0 * c.p0 <= 0.0)
                           throw_validation("invalid-state", "oddcat requires q0^2 + p0^2 > 0 (alpha = 0 has no norm)");
                   },
                   [](const SqueezedCoherent &c) {
                       require_finite({c.q0, c.p0, c.s}, "squeezed");
                       if (!(c.s > 0.0)) throw_validation("invalid-state", "squeezed requires s > 0");
                   },
                   [](const DampedCoherent &c) {
                       require_finite({c.q0, c.p0, c.gamma}, "damped");
                       if (c.gamma < 0.0) throw_validation("invalid-state", "damped requires gamma >= 0");
                   },
               },
               state);
}

std::string state_key(const StateSpec &state) {
    static const char *keys[] = {"ground", "fock1", "coherent", "oddcat", "squeezed", "damped"};
    return keys[state.index()];
}

StateSpec parse_state(std::string_view json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception &e) {
        throw_validation("config", std::string("state JSON does not parse: ") + e.what());
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw_validation("config", "state must be an object with a string \"kind\"");
    const std::string kind = j["kind"];
    auto num = [&](const char *key, double fallback) {
        if (!j.contains(key)) return fallback;
        if (!j[key].is_number()) throw_validation("config", std::string("state parameter ") + key + " must be a number");
        return j[key].get<double>();
    };
    auto allow = [&](std::initializer_list<const char *> keys) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.key() == "kind") continue;
            bool ok = false;
            for (const char *k : keys) ok = ok || it.key() == k;
            if (!ok) throw_validation("config", "unknown parameter \"" + it.key() + "\" for state " + kind);
        }
    };
    StateSpec out;
    if (kind == "ground") {
        allow({});
        out = Ground{};
    } else if (kind == "fock1") {
        allow({});
        out = FockOne{};
    } else if (kind == "coherent") {
        allow({"q0", "p0"});
        out = Coherent{num("q0", 0), num("p0", 0)};
    } else if (kind == "oddcat") {
        allow({"q0", "p0"});
        out = OddCat{num("q0", 0), num("p0", 0)};
    } else if (kind == "squeezed") {
        allow({"q0", "p0", "s"});
        out = SqueezedCoherent{num("q0", 0), num("p0", 0), num("s", 1)};
    } else if (kind == "damped") {
        allow({"q0", "p0", "gamma"});
        out = DampedCoherent{num("q0", 0), num("p0", 0), num("gamma", 0)};
    } else {
        throw_validation("config", "unknown state kind \"" + kind + "\"");
    }
    validate_state(out);
    return out;
}

std::string state_to_json(const StateSpec &state) {
    nlohmann::json j;
    j["kind"] = state_key(state);
    std::visit(Overloaded{
                   [](const Ground &) {},
                   [](const FockOne &) {},
                   [&](const Coherent &c) { j["q0"] = c.q0, j["p0"] = c.p0; },
                   [&](const OddCat &c) { j["q0"] = c.q0, j["p0"] = c.p0; },
                   [&](const SqueezedCoherent &c) { j["q0"] = c.q0, j["p0"] = c.p0, j["s"] = c.s; },
                   [&](const DampedCoherent &c) { j["q0"] = c.q0, j["p0"] = c.p0, j["gamma"] = c.gamma; },
               },
               state);
    return j.dump();
}

std::optional<GaussianMoments> gaussian_moments(const StateSpec &state, double t) {
    return std::visit(
        Overloaded{
            [](const Ground &) -> std::optional<GaussianMoments> { return GaussianMoments{}; },
            [](const FockOne &) -> std::optional<GaussianMoments> { return std::nullopt; },
            [](const OddCat &) -> std::optional<GaussianMoments> { return std::nullopt; },
            [&](const Coherent &c) -> std::optional<GaussianMoments> {
                auto m = rotate(c.q0, c.p0, t);
                return GaussianMoments{m.q, m.p, 0.5, 0.5, 0.0};
            },
            [&](const SqueezedCoherent &c) -> std::optional<GaussianMoments> {
                auto m = rotate(c.q0, c.p0, t);
                const double co = std::cos(t), si = std::sin(t), s = c.s;
                GaussianMoments g;
                g.mean_q = m.q;
                g.mean_p = m.p;
                g.var_q = 0.5 * (co * co / s + s * si * si);
                g.var_p = 0.5 * (s * co * co + si * si / s);
                g.cov_qp = 0.5 * (s - 1.0 / s) * si * co;
                return g;
            },
            [&](const DampedCoherent &c) -> std::optional<GaussianMoments> {
                const double decay = std::exp(-0.5 * c.gamma * t);
                return GaussianMoments{c.q0 * decay, c.p0 * decay, 0.5, 0.5, 0.0};
            },
        },
        state);
}

double cat_norm(double q0, double p0) {
    const double a = q0 * q0 + p0 * p0;
    if (!(a > 0.0)) throw_validation("invalid-state", "cat_norm: zero amplitude");
    return 1.0 / std::sqrt(-2.0 * std::expm1(-a));
}

double wigner_at(const StateSpec &state, double q, double p, double t) {
    if (t < 0.0) throw_validation("invalid-argument", "wigner_at: t must be >= 0");
    validate_state(state);
    if (auto g = gaussian_moments(state, t)) return gaussian_wigner(*g, q, p);
    if (std::holds_alternative<FockOne>(state)) {
        const double r2 = q * q + p * p;
        return -2.0 * (1.0 - 2.0 * r2) * std::exp(-r2);
    }
    const auto &cat = std::get<OddCat>(state);
    const double n2 = std::pow(cat_norm(cat.q0, cat.p0), 2);
    const auto m = rotate(cat.q0, cat.p0, t);
    const double plus = std::exp(-(q - m.q) * (q - m.q) - (p - m.p) * (p - m.p));
    const double minus = std::exp(-(q + m.q) * (q + m.q) - (p + m.p) * (p + m.p));
    const double fringe = std::exp(-q * q - p * p) * std::cos(2.0 * (q * m.p - p * m.q));
    return 2.0 * n2 * (plus + minus) - 4.0 * n2 * fringe;
}

double marginal_at(const StateSpec &state, double x, const FrameParameters &frame, double t) {
    if (t < 0.0) throw_validation("invalid-argument", "marginal_at: t must be >= 0");
    validate_frame(frame);
    validate_state(state);
    if (auto g = gaussian_moments(state, t)) {
        return normal_pdf(x - g->quadrature_mean(frame), g->quadrature_variance(frame));
    }
    const double r2 = frame.scale_squared();
    const double u = x - frame.delta;
    if (std::holds_alternative<FockOne>(state)) {
        return 2.0 / std::sqrt(kPi) * std::pow(r2, -1.5) * u * u * std::exp(-u * u / r2);
    }
    const auto &cat = std::get<OddCat>(state);
    const double n2 = std::pow(cat_norm(cat.q0, cat.p0), 2);
    const auto c = rotate(cat.q0, cat.p0, t);
    const double a = cat.q0 * cat.q0 + cat.p0 * cat.p0;
    const double mean = frame.mu * c.q + frame.nu * c.p;
    const double b = frame.mu * c.p - frame.nu * c.q;
    const double var = 0.5 * r2;
    const double lobes = n2 * (normal_pdf(u - mean, var) + normal_pdf(u + mean, var));
    // b^2 <= r2 * a, so the exponent is never positive.
    const double fringe = 2.0 * n2 / std::sqrt(kPi * r2) * std::exp(-a + (b * b - u * u) / r2) *
                          std::cos(2.0 * b * u / r2);
    return lobes - fringe;
}

std::optional<Complex> wavefunction_at(const StateSpec &state, double q) {
    const double norm0 = std::pow(kPi, -0.25);
    auto coherent = [&](double q0, double p0) {
        return norm0 * std::exp(Complex(-0.5 * (q - q0) * (q - q0), p0 * q - 0.5 * q0 * p0));
    };
    return std::visit(
        Overloaded{
            [&](const Ground &) -> std::optional<Complex> { return norm0 * std::exp(-0.5 * q * q); },
            [&](const FockOne &) -> std::optional<Complex> {
                return norm0 * std::sqrt(2.0) * q * std::exp(-0.5 * q * q);
            },
            [&](const Coherent &c) -> std::optional<Complex> { return coherent(c.q0, c.p0); },
            [&](const OddCat &c) -> std::optional<Complex> {
                return cat_norm(c.q0, c.p0) * (coherent(c.q0, c.p0) - coherent(-c.q0, -c.p0));
            },
            [&](const SqueezedCoherent &c) -> std::optional<Complex> {
                return std::pow(c.s / kPi, 0.25) *
                       std::exp(Complex(-0.5 * c.s * (q - c.q0) * (q - c.q0), c.p0 * q - 0.5 * c.q0 * c.p0));
            },
            [&](const DampedCoherent &c) -> std::optional<Complex> { return coherent(c.q0, c.p0); },
        },
        state);
}

ScalarField2D sample_wigner(const StateSpec &state, const PhaseSpaceGrid &grid, double t) {
    ScalarField2D w(grid.q, grid.p);
    for (std::size_t i = 0; i < grid.q.n(); ++i)
        for (std::size_t j = 0; j < grid.p.n(); ++j) w(i, j) = wigner_at(state, grid.q[i], grid.p[j], t);
    return w;
}

std::vector<std::string> formula_corrections(const StateSpec &state) {
    std::vector<std::string> notes;
    std::visit(Overloaded{
                   [](const Ground &) {},
                   [](const FockOne &) {},
                   [&](const Coherent &) {
                       notes.push_back("coherent-wigner-rotation-phase: exponent uses 2(q p0 - p q0) sin t");
                   },
                   [&](const OddCat &) {
                       notes.push_back("oddcat-wigner-prefactor: 4 N^2 (gives W(0,0) = -2 and unit normalization)");
                   },
                   [&](const SqueezedCoherent &) {
                       notes.push_back("squeezed-covariance: third variance line is sigma_pq");
                       notes.push_back("squeezed-quadrature-variance: sigma_x = mu^2 sq + nu^2 sp + 2 mu nu spq");
                   },
                   [&](const DampedCoherent &) {
                       notes.push_back("damped-marginal: mean +(mu q0 + nu p0) e^{-gamma t/2}, prefactor "
                                       "(pi (mu^2 + nu^2))^{-1/2}");
                   },
               },
               state);
    return notes;
}

}  // namespace symtomo
