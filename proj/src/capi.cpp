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


#include "symtomo/symtomo.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "symtomo/damped.hpp"
#include "symtomo/density.hpp"
#include "symtomo/error.hpp"
#include "symtomo/evolution.hpp"
#include "symtomo/homodyne.hpp"
#include "symtomo/io.hpp"
#include "symtomo/moments.hpp"
#include "symtomo/selftest.hpp"
#include "symtomo/spectrum.hpp"
#include "symtomo/states.hpp"
#include "symtomo/tomography.hpp"

using namespace symtomo;

struct st_state {
    StateSpec spec;
};
struct st_wigner {
    WignerSpectrum spectrum;
};
struct st_slices {
    FrameSlices slices;
};
struct st_tomogram {
    FullTomogram tomogram;
};
struct st_density {
    DensityMatrix rho;
};
struct st_table {
    Table table;
};

namespace {

constexpr const char *kVersion = "0.1.0";

thread_local std::string g_message;
thread_local std::string g_kind;

void set_error(std::string kind, std::string message) {
    g_kind = std::move(kind);
    g_message = std::move(message);
}

template <class F>
st_status guard(F &&body) noexcept {
    try {
        body();
        g_kind.clear();
        g_message.clear();
        return ST_OK;
    } catch (const Error &e) {
        set_error(e.kind(), e.what());
        return static_cast<st_status>(static_cast<int>(e.code()));
    } catch (const std::bad_alloc &) {
        set_error("internal", "out of memory");
    } catch (const std::exception &e) {
        set_error("internal", e.what());
    } catch (...) {
        set_error("internal", "unknown exception");
    }
    return ST_ERR_INTERNAL;
}

template <class T>
const T &need(const T *p, const char *name) {
    if (!p) throw_validation("null-argument", std::string(name) + " is NULL");
    return *p;
}

void need_out(const void *p) {
    if (!p) throw_validation("null-argument", "output pointer is NULL");
}

AxisGrid axis(const st_axis &a) { return AxisGrid(a.min, a.max, a.n); }
st_axis to_c(const AxisGrid &a) { return st_axis{a.min(), a.max(), a.n()}; }
FrameParameters frame(const st_frame &f) { return FrameParameters{f.mu, f.nu, f.delta}; }
st_frame to_c(const FrameParameters &f) { return st_frame{f.mu, f.nu, f.delta}; }
HamiltonianSpec ham(const st_hamiltonian &h) { return HamiltonianSpec{h.omega, h.f, {}}; }

std::vector<FrameParameters> frames(const st_frame *f, std::size_t count) {
    if (count && !f) throw_validation("null-argument", "frames is NULL");
    std::vector<FrameParameters> out;
    for (std::size_t k = 0; k < count; ++k) out.push_back(frame(f[k]));
    return out;
}

char *dup(const std::string &s) {
    char *p = static_cast<char *>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

std::string json_string(const std::string &s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
            out += c;
        } else if (static_cast<unsigned char>(c) < 0x20) {
            out += ' ';
        } else {
            out += c;
        }
    }
    return out + "\"";
}

DiffusionScheme scheme(int s) {
    if (s == 0) return DiffusionScheme::Spectral;
    if (s == 1) return DiffusionScheme::Explicit;
    throw_validation("invalid-argument", "diffusion scheme must be 0 (spectral) or 1 (explicit)");
}

}  // namespace

extern "C" {

const char *st_version(void) { return kVersion; }
const char *st_last_error_message(void) { return g_message.c_str(); }
const char *st_last_error_kind(void) { return g_kind.c_str(); }
void st_string_free(char *s) { std::free(s); }

st_status st_state_parse(const char *json, st_state **out) {
    return guard([&] {
        need_out(out);
        if (!json) throw_validation("null-argument", "json is NULL");
        *out = new st_state{parse_state(json)};
    });
}

st_status st_state_to_json(const st_state *state, char **out) {
    return guard([&] {
        need_out(out);
        *out = dup(state_to_json(need(state, "state").spec));
    });
}

st_status st_state_formula_notes(const st_state *state, char **out) {
    return guard([&] {
        need_out(out);
        std::string s = "[";
        bool first = true;
        for (const auto &n : formula_corrections(need(state, "state").spec)) {
            s += (first ? "" : ",") + json_string(n);
            first = false;
        }
        *out = dup(s + "]");
    });
}

st_status st_state_wigner_at(const st_state *state, double q, double p, double t, double *out) {
    return guard([&] {
        need_out(out);
        *out = wigner_at(need(state, "state").spec, q, p, t);
    });
}

st_status st_state_marginal_at(const st_state *state, double x, st_frame f, double t, double *out) {
    return guard([&] {
        need_out(out);
        *out = marginal_at(need(state, "state").spec, x, frame(f), t);
    });
}

void st_state_free(st_state *state) { delete state; }

st_status st_frame_validate(st_frame f) {
    return guard([&] { validate_frame(frame(f)); });
}

st_status st_frame_from_squeezer(double s, double theta, st_frame *out) {
    return guard([&] {
        need_out(out);
        if (!std::isfinite(s) || !std::isfinite(theta)) throw_validation("invalid-frame", "squeezer must be finite");
        *out = to_c(frame_from_squeezer(s, theta));
    });
}

st_status st_frame_homodyne(double phi, st_frame *out) {
    return guard([&] {
        need_out(out);
        if (!std::isfinite(phi)) throw_validation("invalid-frame", "phase must be finite");
        *out = to_c(homodyne_frame(phi));
    });
}

st_status st_wigner_sample(const st_state *state, st_axis q, st_axis p, double t, st_wigner **out) {
    return guard([&] {
        need_out(out);
        const PhaseSpaceGrid grid(axis(q), axis(p));
        *out = new st_wigner{WignerSpectrum(sample_wigner(need(state, "state").spec, grid, t))};
    });
}

st_status st_wigner_from_values(st_axis q, st_axis p, const double *values, st_wigner **out) {
    return guard([&] {
        need_out(out);
        if (!values) throw_validation("null-argument", "values is NULL");
        const PhaseSpaceGrid grid(axis(q), axis(p));
        std::vector<double> v(values, values + q.n * p.n);
        *out = new st_wigner{WignerSpectrum(ScalarField2D(grid.q, grid.p, std::move(v)))};
    });
}

st_status st_wigner_read_columnar(const char *path, st_wigner **out) {
    return guard([&] {
        need_out(out);
        if (!path) throw_validation("null-argument", "path is NULL");
        auto field = read_columnar(path);
        PhaseSpaceGrid check(field.axis0(), field.axis1());
        *out = new st_wigner{WignerSpectrum(field)};
    });
}

st_status st_wigner_write_columnar(const st_wigner *w, const char *path) {
    return guard([&] {
        if (!path) throw_validation("null-argument", "path is NULL");
        write_columnar(path, need(w, "wigner").spectrum.wigner());
    });
}

st_status st_wigner_axes(const st_wigner *w, st_axis *q, st_axis *p) {
    return guard([&] {
        const auto &f = need(w, "wigner").spectrum.wigner();
        if (q) *q = to_c(f.axis0());
        if (p) *p = to_c(f.axis1());
    });
}

const double *st_wigner_values(const st_wigner *w) { return w ? w->spectrum.wigner().values().data() : nullptr; }

st_status st_wigner_norm(const st_wigner *w, double *out) {
    return guard([&] {
        need_out(out);
        *out = wigner_norm(need(w, "wigner").spectrum.wigner());
    });
}

st_status st_wigner_table(const st_wigner *w, st_table **out) {
    return guard([&] {
        need_out(out);
        *out = new st_table{field_table(need(w, "wigner").spectrum.wigner(), "q", "p", "W")};
    });
}

void st_wigner_free(st_wigner *w) { delete w; }

st_status st_forward_slices(const st_wigner *w, const st_frame *f, size_t count, st_axis x, int exact,
                            st_slices **out) {
    return guard([&] {
        need_out(out);
        ForwardOptions opt{exact ? RayMethod::Exact : RayMethod::Lagrange};
        *out = new st_slices{forward_slices(need(w, "wigner").spectrum, frames(f, count), axis(x), opt)};
    });
}

st_status st_analytic_slices(const st_state *state, const st_frame *f, size_t count, st_axis x, double t,
                             st_slices **out) {
    return guard([&] {
        need_out(out);
        const auto &s = need(state, "state").spec;
        const AxisGrid xa = axis(x);
        FrameSlices slices{frames(f, count), xa, {}};
        for (const auto &fr : slices.frames) {
            validate_frame(fr);
            std::vector<double> v(xa.n());
            for (std::size_t k = 0; k < xa.n(); ++k) v[k] = marginal_at(s, xa[k], fr, t);
            slices.values.push_back(std::move(v));
        }
        *out = new st_slices{std::move(slices)};
    });
}

st_status st_slices_read_csv(const char *path, st_slices **out) {
    return guard([&] {
        need_out(out);
        if (!path) throw_validation("null-argument", "path is NULL");
        *out = new st_slices{slices_from_table(read_table(path))};
    });
}

size_t st_slices_count(const st_slices *s) { return s ? s->slices.frames.size() : 0; }

st_status st_slices_axis(const st_slices *s, st_axis *x) {
    return guard([&] {
        need_out(x);
        *x = to_c(need(s, "slices").slices.x);
    });
}

st_status st_slices_get(const st_slices *s, size_t k, st_frame *f, const double **values) {
    return guard([&] {
        const auto &sl = need(s, "slices").slices;
        if (k >= sl.frames.size()) throw_validation("invalid-argument", "slice index out of range");
        if (f) *f = to_c(sl.frames[k]);
        if (values) *values = sl.values[k].data();
    });
}

st_status st_slices_table(const st_slices *s, st_table **out) {
    return guard([&] {
        need_out(out);
        *out = new st_table{slices_table(need(s, "slices").slices)};
    });
}

void st_slices_free(st_slices *s) { delete s; }

st_status st_forward_full(const st_wigner *w, st_axis mu, st_axis nu, st_axis x, int exact, st_tomogram **out) {
    return guard([&] {
        need_out(out);
        ForwardOptions opt{exact ? RayMethod::Exact : RayMethod::Lagrange};
        *out = new st_tomogram{forward_full(need(w, "wigner").spectrum, FullGridAxes{axis(mu), axis(nu), axis(x)}, opt)};
    });
}

st_status st_tomogram_sample(const st_state *state, st_axis mu, st_axis nu, st_axis x, double t, st_tomogram **out) {
    return guard([&] {
        need_out(out);
        *out = new st_tomogram{sample_full(need(state, "state").spec, FullGridAxes{axis(mu), axis(nu), axis(x)}, t)};
    });
}

st_status st_tomogram_axes(const st_tomogram *t, st_axis *mu, st_axis *nu, st_axis *x) {
    return guard([&] {
        const auto &tm = need(t, "tomogram").tomogram;
        if (mu) *mu = to_c(tm.mu());
        if (nu) *nu = to_c(tm.nu());
        if (x) *x = to_c(tm.x());
    });
}

const double *st_tomogram_line(const st_tomogram *t, size_t i, size_t j) {
    if (!t || i >= t->tomogram.mu().n() || j >= t->tomogram.nu().n()) return nullptr;
    return t->tomogram.values.line(i, j).data();
}

st_status st_tomogram_slices(const st_tomogram *t, const st_frame *f, size_t count, st_slices **out) {
    return guard([&] {
        need_out(out);
        const auto &tm = need(t, "tomogram").tomogram;
        const auto &x = tm.x();
        FrameSlices slices{frames(f, count), x, {}};
        for (const auto &fr : slices.frames) {
            validate_frame(fr);
            const long i = tm.mu().node_index(fr.mu), j = tm.nu().node_index(fr.nu);
            if (i < 0 || j < 0)
                throw_validation("off-grid", "frame (" + format_number(fr.mu) + ", " + format_number(fr.nu) +
                                                 ") is not a node of the tomogram grid");
            const auto line = tm.values.line(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            // w(x; mu, nu, delta) = w(x - delta; mu, nu, 0), linear in x, zero outside.
            std::vector<double> v(x.n(), 0.0);
            for (std::size_t k = 0; k < x.n(); ++k) {
                const double u = (x[k] - fr.delta - x.min()) / x.spacing();
                const double c = std::floor(u);
                if (c < 0.0 || c > static_cast<double>(x.n() - 1)) continue;
                const auto m = static_cast<std::size_t>(c);
                const double a = u - c;
                v[k] = m + 1 < x.n() ? (1.0 - a) * line[m] + a * line[m + 1] : line[m];
            }
            slices.values.push_back(std::move(v));
        }
        *out = new st_slices{std::move(slices)};
    });
}

st_status st_tomogram_table(const st_tomogram *t, st_table **out) {
    return guard([&] {
        need_out(out);
        *out = new st_table{full_tomogram_table(need(t, "tomogram").tomogram)};
    });
}

void st_tomogram_free(st_tomogram *t) { delete t; }

st_status st_inverse_wigner(const st_tomogram *t, st_axis q, st_axis p, double z, st_wigner **out) {
    return guard([&] {
        need_out(out);
        const PhaseSpaceGrid grid(axis(q), axis(p));
        *out = new st_wigner{WignerSpectrum(inverse_wigner(need(t, "tomogram").tomogram, grid, z))};
    });
}

st_status st_overcompleteness(const st_tomogram *t, st_axis q, st_axis p, double out[3]) {
    return guard([&] {
        need_out(out);
        const auto r = overcompleteness(need(t, "tomogram").tomogram, PhaseSpaceGrid(axis(q), axis(p)));
        out[0] = r.max_diff_half;
        out[1] = r.max_diff_two;
        out[2] = r.window;
    });
}

st_status st_density_reconstruct(const st_tomogram *t, st_density **out) {
    return guard([&] {
        need_out(out);
        *out = new st_density{reconstruct_density(need(t, "tomogram").tomogram)};
    });
}

st_status st_homodyne_sample(const st_state *state, size_t count, uint64_t seed, double t, double *x, double *phi) {
    return guard([&] {
        if (count && (!x || !phi)) throw_validation("null-argument", "sample buffers are NULL");
        const auto s = sample_homodyne(need(state, "state").spec, count, seed, t);
        for (std::size_t k = 0; k < count; ++k) {
            x[k] = s[k].x;
            phi[k] = s[k].phi;
        }
    });
}

st_status st_homodyne_reconstruct(const double *x, const double *phi, size_t count, st_axis q, double r_cutoff,
                                  st_density **out, double *cutoff_fidelity) {
    return guard([&] {
        need_out(out);
        if (count && (!x || !phi)) throw_validation("null-argument", "sample buffers are NULL");
        std::vector<HomodyneSample> s(count);
        for (std::size_t k = 0; k < count; ++k) s[k] = HomodyneSample{x[k], phi[k]};
        auto r = homodyne_reconstruct(s, axis(q), r_cutoff);
        if (cutoff_fidelity) *cutoff_fidelity = r.cutoff_fidelity;
        *out = new st_density{std::move(r.rho)};
    });
}

st_status st_density_summarize(const st_density *d, st_density_summary *out) {
    return guard([&] {
        need_out(out);
        const auto &rho = need(d, "density").rho;
        const auto ev = rho.eigenvalues();
        *out = st_density_summary{rho.trace(),  rho.hermiticity_error(), rho.purity(),
                                  ev.front(),   ev.back(),               rho.position_moment(1)};
    });
}

st_status st_density_fidelity(const st_density *d, const st_state *state, double *out) {
    return guard([&] {
        need_out(out);
        const auto &rho = need(d, "density").rho;
        const auto &s = need(state, "state").spec;
        std::vector<Complex> psi(rho.n());
        for (std::size_t k = 0; k < rho.n(); ++k) {
            auto v = wavefunction_at(s, rho.q()[k]);
            if (!v) throw_validation("unsupported", "state " + state_key(s) + " has no closed-form wavefunction");
            psi[k] = *v;
        }
        *out = rho.expectation(psi);
    });
}

st_status st_density_table(const st_density *d, st_table **out) {
    return guard([&] {
        need_out(out);
        *out = new st_table{density_table(need(d, "density").rho)};
    });
}

void st_density_free(st_density *d) { delete d; }

st_status st_hamiltonian_from_potential(const double *coeffs, size_t count, st_hamiltonian *out) {
    return guard([&] {
        need_out(out);
        if (count && !coeffs) throw_validation("null-argument", "coeffs is NULL");
        const auto h = HamiltonianSpec::from_potential(std::vector<double>(coeffs, coeffs + count));
        *out = st_hamiltonian{h.omega, h.f};
    });
}

st_status st_hamiltonian_describe(st_hamiltonian h, char **out) {
    return guard([&] {
        need_out(out);
        *out = dup(marginal_evolution_operator(ham(h)).describe());
    });
}

st_status st_flow_apply(st_hamiltonian h, double tau, const double in[3], double out[3]) {
    return guard([&] {
        need_out(out);
        if (!in) throw_validation("null-argument", "in is NULL");
        const auto r = flow_map(ham(h), tau)(in[0], in[1], in[2]);
        std::copy(r.begin(), r.end(), out);
    });
}

st_status st_flow_pull_frame(st_hamiltonian h, double tau, st_frame f, st_frame *out) {
    return guard([&] {
        need_out(out);
        *out = to_c(flow_map(ham(h), tau).pull_frame(frame(f)));
    });
}

st_status st_evolve_tomogram(const st_tomogram *t, st_hamiltonian h, double time, st_tomogram **out,
                             double *out_of_bounds) {
    return guard([&] {
        need_out(out);
        CharacteristicsReport report;
        auto r = evolve_characteristics(need(t, "tomogram").tomogram, ham(h), time, &report);
        if (out_of_bounds) *out_of_bounds = report.out_of_bounds_fraction;
        *out = new st_tomogram{std::move(r)};
    });
}

st_status st_evolve_wigner_slices(const st_wigner *w, const st_frame *f, size_t count, st_axis x, st_hamiltonian h,
                                  double time, st_slices **out) {
    return guard([&] {
        need_out(out);
        const auto &spec = need(w, "wigner").spectrum;
        const SliceSource source = [&](const FrameParameters &fr, const AxisGrid &ax) {
            return forward_marginal(spec, fr, ax);
        };
        *out = new st_slices{evolve_slices(source, frames(f, count), axis(x), ham(h), time)};
    });
}

st_status st_evolve_state_slices(const st_state *state, const st_frame *f, size_t count, st_axis x, st_hamiltonian h,
                                 double time, st_slices **out) {
    return guard([&] {
        need_out(out);
        const auto &s = need(state, "state").spec;
        const SliceSource source = [&](const FrameParameters &fr, const AxisGrid &ax) {
            std::vector<double> v(ax.n());
            for (std::size_t k = 0; k < ax.n(); ++k) v[k] = marginal_at(s, ax[k], fr, 0.0);
            return v;
        };
        *out = new st_slices{evolve_slices(source, frames(f, count), axis(x), ham(h), time)};
    });
}

st_status st_chapman_kolmogorov(const st_tomogram *t, st_hamiltonian h, double t1, double t_mid, double *out) {
    return guard([&] {
        need_out(out);
        *out = chapman_kolmogorov_check(need(t, "tomogram").tomogram, ham(h), t1, t_mid);
    });
}

st_status st_pde_residual(const st_tomogram *const *samples, size_t count, double dt, st_hamiltonian h, double *out) {
    return guard([&] {
        need_out(out);
        if (count && !samples) throw_validation("null-argument", "samples is NULL");
        std::vector<FullTomogram> v;
        for (std::size_t k = 0; k < count; ++k) v.push_back(need(samples[k], "sample").tomogram);
        *out = pde_residual(v, dt, ham(h));
    });
}

st_status st_damped_slices(const st_slices *s, st_damping d, double time, int steps, int sch, st_slices **out) {
    return guard([&] {
        need_out(out);
        const DampedOptions opt{scheme(sch)};
        *out = new st_slices{
            evolve_damped(need(s, "slices").slices, DampingSpec{d.gamma, d.n_bar}, time, steps, opt)};
    });
}

st_status st_damped_tomogram(const st_tomogram *t, st_damping d, double time, int steps, int sch,
                             st_tomogram **out) {
    return guard([&] {
        need_out(out);
        const DampedOptions opt{scheme(sch)};
        *out = new st_tomogram{
            evolve_damped(need(t, "tomogram").tomogram, DampingSpec{d.gamma, d.n_bar}, time, steps, opt)};
    });
}

st_status st_moments(const st_slices *s, size_t k, int n_max, double *out) {
    return guard([&] {
        need_out(out);
        const auto &sl = need(s, "slices").slices;
        if (k >= sl.frames.size()) throw_validation("invalid-argument", "slice index out of range");
        const auto t = moment_table(sl.values[k], sl.x, sl.frames[k], n_max);
        std::copy(t.moments.begin(), t.moments.end(), out);
    });
}

st_status st_generating(const st_wigner *w, double lambda, st_frame f, double value[2], double spectral[2],
                        int *spectral_ok) {
    return guard([&] {
        need_out(value);
        const auto g = generating_function(need(w, "wigner").spectrum, lambda, frame(f));
        value[0] = g.value.real();
        value[1] = g.value.imag();
        if (spectral) {
            spectral[0] = g.spectral.real();
            spectral[1] = g.spectral.imag();
        }
        if (spectral_ok) *spectral_ok = g.spectral_ok ? 1 : 0;
    });
}

st_status st_generating_taylor(const st_wigner *w, st_frame f, double h, double *d1, double *d2) {
    return guard([&] {
        need_out(d1);
        need_out(d2);
        const auto t = generating_taylor(need(w, "wigner").spectrum, frame(f), h);
        *d1 = t.d1;
        *d2 = t.d2;
    });
}

st_status st_wigner_from_generating(const st_wigner *w, st_axis mu, st_axis nu, st_axis q, st_axis p,
                                    st_wigner **out) {
    return guard([&] {
        need_out(out);
        const auto g = generating_grid(need(w, "wigner").spectrum.wigner(), axis(mu), axis(nu));
        *out = new st_wigner{WignerSpectrum(wigner_from_generating(g, PhaseSpaceGrid(axis(q), axis(p))))};
    });
}

size_t st_table_column_count(const st_table *t) { return t ? t->table.columns.size() : 0; }

const char *st_table_column(const st_table *t, size_t c) {
    return t && c < t->table.columns.size() ? t->table.columns[c].c_str() : nullptr;
}

size_t st_table_row_count(const st_table *t) { return t ? t->table.rows.size() : 0; }

double st_table_value(const st_table *t, size_t r, size_t c) {
    if (!t || r >= t->table.rows.size() || c >= t->table.rows[r].size()) return std::nan("");
    return t->table.rows[r][c];
}

st_status st_table_write_csv(const st_table *t, const char *path) {
    return guard([&] {
        if (!path) throw_validation("null-argument", "path is NULL");
        write_table(path, need(t, "table").table);
    });
}

void st_table_free(st_table *t) { delete t; }

void st_format_number(double v, char buf[32]) {
    const std::string s = format_number(v);
    std::snprintf(buf, 32, "%s", s.c_str());
}

st_status st_selftest(double grid_scale, uint64_t seed, st_selftest_callback cb, void *user, int *all_passed) {
    return guard([&] {
        need_out(all_passed);
        SelftestOptions opt{grid_scale, seed};
        bool ok = true;
        run_selftest(opt, [&](const CriterionResult &r) {
            ok = ok && r.passed;
            if (cb) cb(r.id, r.name.c_str(), r.passed ? 1 : 0, r.detail.c_str(), user);
        });
        *all_passed = ok ? 1 : 0;
    });
}

}  // extern "C"
