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


// Scenario runner over the C API. Each subcommand reads a JSON config, writes
// CSV or JSON tables plus manifest.json into --out, and exits with the
// library status code (0 ok, 2 validation, 3 numeric accuracy, 4 I/O).

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "symtomo/symtomo.h"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Failure {
    int status;
    std::string kind;
    std::string message;
};

[[noreturn]] void fail(int status, std::string kind, std::string message) {
    throw Failure{status, std::move(kind), std::move(message)};
}

[[noreturn]] void config_error(const std::string &message) { fail(ST_ERR_VALIDATION, "config", message); }

void check(st_status s) {
    if (s != ST_OK) fail(s, st_last_error_kind(), st_last_error_message());
}

template <class T, void (*Free)(T *)>
struct Deleter {
    void operator()(T *p) const { Free(p); }
};
using State = std::unique_ptr<st_state, Deleter<st_state, st_state_free>>;
using Wigner = std::unique_ptr<st_wigner, Deleter<st_wigner, st_wigner_free>>;
using Slices = std::unique_ptr<st_slices, Deleter<st_slices, st_slices_free>>;
using Tomogram = std::unique_ptr<st_tomogram, Deleter<st_tomogram, st_tomogram_free>>;
using Density = std::unique_ptr<st_density, Deleter<st_density, st_density_free>>;
using TablePtr = std::unique_ptr<st_table, Deleter<st_table, st_table_free>>;

std::string take_string(char *s) {
    std::string out(s ? s : "");
    st_string_free(s);
    return out;
}

// ---- options and config ----

struct Options {
    std::string config;
    std::string out = "symtomo_out";
    double grid_scale = 1.0;
    std::optional<std::uint64_t> seed;
    std::string format = "csv";
};

// Axis spec: {"half_width": h, "n": n} or {"min": a, "max": b, "n": n}.
// The grid scale multiplies the half-width about the centre at fixed spacing.
st_axis read_axis(const json &cfg, const char *key, double half_width, std::size_t n, double scale) {
    double lo = -half_width, hi = half_width;
    if (cfg.contains(key)) {
        const auto &a = cfg.at(key);
        if (!a.is_object() || !a.contains("n")) config_error(std::string("grid '") + key + "' needs an object with n");
        n = a.at("n").get<std::size_t>();
        if (a.contains("half_width")) {
            lo = -a.at("half_width").get<double>();
            hi = -lo;
        } else if (a.contains("min") && a.contains("max")) {
            lo = a.at("min").get<double>();
            hi = a.at("max").get<double>();
        } else {
            config_error(std::string("grid '") + key + "' needs half_width or min/max");
        }
    }
    if (n < 2 || !(hi > lo)) config_error(std::string("grid '") + key + "' is empty");
    if (scale == 1.0) return st_axis{lo, hi, n};
    const double centre = 0.5 * (lo + hi), h = (hi - lo) / static_cast<double>(n - 1);
    const long k = static_cast<long>(n) - 1;
    long k2 = (k % 2 == 0) ? 2 * std::lround(0.5 * k * scale) : std::lround(k * scale);
    k2 = std::max<long>(k2, 1);
    const double half = 0.5 * h * static_cast<double>(k2);
    return st_axis{centre - half, centre + half, static_cast<std::size_t>(k2 + 1)};
}

json axis_json(const st_axis &a) { return json{{"min", a.min}, {"max", a.max}, {"n", a.n}}; }

struct Scenario {
    json raw;
    json grids;
    double scale = 1.0;
    double time = 0.0;
    std::string source = "wigner";

    const json &section(const char *key) const {
        static const json empty = json::object();
        return raw.contains(key) ? raw.at(key) : empty;
    }
    st_axis axis(const char *key, double half_width, std::size_t n) const {
        return read_axis(grids, key, half_width, n, scale);
    }
    st_axis phase() const { return axis("phase", 8.0, 256); }
    st_axis x() const { return axis("x", 12.0, 961); }
    st_axis full_mu() const { return axis("full_mu", 12.0, 65); }
    st_axis full_nu() const { return axis("full_nu", 12.0, 65); }
    st_axis full_x() const { return axis("full_x", 80.0, 1281); }
    st_axis output() const { return axis("output", 8.0, 65); }
};

Scenario load_scenario(const Options &opt) {
    Scenario sc;
    sc.scale = opt.grid_scale;
    if (!(opt.grid_scale > 0.0)) config_error("--grid-scale must be positive");
    if (opt.config.empty()) {
        sc.raw = json::object();
    } else {
        std::ifstream in(opt.config);
        if (!in) fail(ST_ERR_IO, "io", "cannot read config " + opt.config);
        try {
            sc.raw = json::parse(in);
        } catch (const json::exception &e) {
            config_error(std::string("config is not valid JSON: ") + e.what());
        }
        if (!sc.raw.is_object()) config_error("config must be a JSON object");
    }
    static const std::vector<std::string> known{"state",    "time",    "grids",      "frames",   "source",
                                                "wigner_file", "homodyne", "evolve", "moments", "generating",
                                                "propagate",   "invert",   "full",       "tomogram"};
    for (const auto &[k, v] : sc.raw.items())
        if (std::find(known.begin(), known.end(), k) == known.end()) config_error("unknown config key '" + k + "'");
    sc.grids = sc.raw.value("grids", json::object());
    sc.time = sc.raw.value("time", 0.0);
    sc.source = sc.raw.value("source", std::string("wigner"));
    if (sc.source != "wigner" && sc.source != "analytic") config_error("source must be 'wigner' or 'analytic'");
    return sc;
}

std::optional<State> load_state(const Scenario &sc) {
    if (!sc.raw.contains("state")) return std::nullopt;
    st_state *s = nullptr;
    check(st_state_parse(sc.raw.at("state").dump().c_str(), &s));
    return State(s);
}

State require_state(const Scenario &sc) {
    auto s = load_state(sc);
    if (!s) config_error("this action needs a 'state'");
    return std::move(*s);
}

Wigner load_wigner(const Scenario &sc, const st_state *state) {
    st_wigner *w = nullptr;
    if (sc.raw.contains("wigner_file")) {
        check(st_wigner_read_columnar(sc.raw.at("wigner_file").get<std::string>().c_str(), &w));
    } else {
        if (!state) config_error("need 'state' or 'wigner_file'");
        const auto ax = sc.phase();
        check(st_wigner_sample(state, ax, ax, sc.time, &w));
    }
    return Wigner(w);
}

st_frame parse_frame(const json &f) {
    st_frame out{0.0, 0.0, 0.0};
    if (f.is_array()) {
        if (f.size() < 2 || f.size() > 3) config_error("frame arrays are [mu, nu] or [mu, nu, delta]");
        out.mu = f[0].get<double>();
        out.nu = f[1].get<double>();
        if (f.size() == 3) out.delta = f[2].get<double>();
    } else if (f.is_object()) {
        out.mu = f.value("mu", 0.0);
        out.nu = f.value("nu", 0.0);
        out.delta = f.value("delta", 0.0);
    } else {
        config_error("frames must be arrays or objects");
    }
    return out;
}

// Explicit list, phi sweep and squeezer list, in that order.
std::vector<st_frame> load_frames(const Scenario &sc) {
    std::vector<st_frame> out;
    const auto &f = sc.section("frames");
    for (const auto &e : f.value("list", json::array())) out.push_back(parse_frame(e));
    for (const auto &phi : f.value("phi", json::array())) {
        st_frame fr;
        check(st_frame_homodyne(phi.get<double>(), &fr));
        out.push_back(fr);
    }
    for (const auto &sq : f.value("squeezer", json::array())) {
        if (!sq.is_array() || sq.size() != 2) config_error("squeezer entries are [s, theta]");
        st_frame fr;
        check(st_frame_from_squeezer(sq[0].get<double>(), sq[1].get<double>(), &fr));
        out.push_back(fr);
    }
    if (out.empty()) out = {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}};
    for (const auto &fr : out) check(st_frame_validate(fr));
    return out;
}

json frame_json(const st_frame &f) { return json{{"mu", f.mu}, {"nu", f.nu}, {"delta", f.delta}}; }

st_hamiltonian load_hamiltonian(const json &e) {
    st_hamiltonian h{1.0, 0.0};
    if (!e.contains("hamiltonian")) return h;
    const auto &j = e.at("hamiltonian");
    if (j.contains("potential")) {
        const auto c = j.at("potential").get<std::vector<double>>();
        check(st_hamiltonian_from_potential(c.data(), c.size(), &h));
    } else {
        h.omega = j.value("omega", 1.0);
        h.f = j.value("f", 0.0);
    }
    return h;
}

// ---- outputs ----

class Run {
  public:
    Run(const Options &opt, std::string command, const Scenario &sc) : opt_(opt), command_(std::move(command)) {
        std::error_code ec;
        fs::create_directories(opt.out, ec);
        if (ec) fail(ST_ERR_IO, "io", "cannot create output directory " + opt.out + ": " + ec.message());
        manifest_["tool"] = "symtomo";
        manifest_["version"] = st_version();
        manifest_["command"] = command_;
        manifest_["grid_scale"] = opt.grid_scale;
        if (opt.seed) manifest_["seed"] = *opt.seed;
        manifest_["format"] = opt.format;
        manifest_["config"] = sc.raw;
        manifest_["grids"] = json::object();
        manifest_["diagnostics"] = json::object();
        manifest_["artifacts"] = json::array();
    }

    void grid(const std::string &name, const st_axis &a) { manifest_["grids"][name] = axis_json(a); }
    json &diagnostics() { return manifest_["diagnostics"]; }
    json &manifest() { return manifest_; }

    void table(const std::string &stem, st_table *raw) {
        TablePtr t(raw);
        const std::string name = stem + (opt_.format == "json" ? ".json" : ".csv");
        const std::string path = (fs::path(opt_.out) / name).string();
        if (opt_.format == "json") {
            json j;
            j["columns"] = json::array();
            for (std::size_t c = 0; c < st_table_column_count(t.get()); ++c) j["columns"].push_back(st_table_column(t.get(), c));
            j["rows"] = json::array();
            for (std::size_t r = 0; r < st_table_row_count(t.get()); ++r) {
                json row = json::array();
                for (std::size_t c = 0; c < st_table_column_count(t.get()); ++c) row.push_back(st_table_value(t.get(), r, c));
                j["rows"].push_back(std::move(row));
            }
            write_text(path, j.dump(1) + "\n");
        } else {
            check(st_table_write_csv(t.get(), path.c_str()));
        }
        manifest_["artifacts"].push_back(name);
    }

    void rows(const std::string &stem, const std::vector<std::string> &columns,
              const std::vector<std::vector<double>> &rows) {
        const std::string name = stem + (opt_.format == "json" ? ".json" : ".csv");
        const std::string path = (fs::path(opt_.out) / name).string();
        if (opt_.format == "json") {
            json j{{"columns", columns}, {"rows", json::array()}};
            for (const auto &r : rows) {
                json row = json::array();
                for (double v : r)
                    if (std::isfinite(v)) row.push_back(v);
                    else row.push_back(nullptr);
                j["rows"].push_back(std::move(row));
            }
            write_text(path, j.dump(1) + "\n");
        } else {
            std::ostringstream os;
            char buf[32];
            for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << columns[c];
            os << '\n';
            for (const auto &r : rows) {
                for (std::size_t c = 0; c < r.size(); ++c) {
                    st_format_number(r[c], buf);
                    os << (c ? "," : "") << buf;
                }
                os << '\n';
            }
            write_text(path, os.str());
        }
        manifest_["artifacts"].push_back(name);
    }

    void finish() { write_text((fs::path(opt_.out) / "manifest.json").string(), manifest_.dump(2) + "\n"); }

    static void write_text(const std::string &path, const std::string &text) {
        std::ofstream out(path, std::ios::binary);
        if (!out) fail(ST_ERR_IO, "io", "cannot open " + path + " for writing");
        out << text;
        if (!out) fail(ST_ERR_IO, "io", "write failed for " + path);
    }

  private:
    const Options &opt_;
    std::string command_;
    json manifest_;
};

st_table *slices_table(const st_slices *s) {
    st_table *t = nullptr;
    check(st_slices_table(s, &t));
    return t;
}

// Norm, mean, variance and minimum of every slice.
json slice_diagnostics(const st_slices *s) {
    json out = json::array();
    st_axis x;
    check(st_slices_axis(s, &x));
    for (std::size_t k = 0; k < st_slices_count(s); ++k) {
        st_frame f;
        const double *v = nullptr;
        check(st_slices_get(s, k, &f, &v));
        double m[3];
        check(st_moments(s, k, 2, m));
        const double lo = *std::min_element(v, v + x.n);
        out.push_back(json{{"frame", frame_json(f)},
                           {"norm", m[0]},
                           {"mean", m[1]},
                           {"variance", m[2] - m[1] * m[1]},
                           {"min", lo}});
    }
    return out;
}

void record_state(Run &run, const st_state *state) {
    if (!state) return;
    run.manifest()["state"] = json::parse(take_string([&] {
        char *s = nullptr;
        check(st_state_to_json(state, &s));
        return s;
    }()));
    char *notes = nullptr;
    check(st_state_formula_notes(state, &notes));
    run.manifest()["formula_notes"] = json::parse(take_string(notes));
}

Slices make_slices(const Scenario &sc, const st_state *state, const st_wigner *w, const std::vector<st_frame> &frames,
                   const st_axis &x) {
    st_slices *s = nullptr;
    if (sc.source == "analytic") {
        if (!state) config_error("source 'analytic' needs a 'state'");
        check(st_analytic_slices(state, frames.data(), frames.size(), x, sc.time, &s));
    } else {
        check(st_forward_slices(w, frames.data(), frames.size(), x, sc.section("tomogram").value("exact", false), &s));
    }
    return Slices(s);
}

Tomogram make_full(Run &run, const Scenario &sc, const st_wigner *w) {
    const auto mu = sc.full_mu(), nu = sc.full_nu(), x = sc.full_x();
    run.grid("full_mu", mu);
    run.grid("full_nu", nu);
    run.grid("full_x", x);
    st_tomogram *t = nullptr;
    check(st_forward_full(w, mu, nu, x, 0, &t));
    return Tomogram(t);
}

// ---- subcommands ----

int cmd_tomogram(Run &run, const Scenario &sc) {
    auto state = load_state(sc);
    const st_state *sp = state ? state->get() : nullptr;
    Wigner w = sc.source == "wigner" ? load_wigner(sc, sp) : Wigner();
    if (w) run.grid("phase", sc.phase());
    const auto frames = load_frames(sc);
    const auto x = sc.x();
    run.grid("x", x);
    record_state(run, sp);
    auto s = make_slices(sc, sp, w.get(), frames, x);
    run.diagnostics()["slices"] = slice_diagnostics(s.get());
    run.table("slices", slices_table(s.get()));
    if (sc.raw.value("full", false)) {
        if (!w) config_error("'full' output needs the sampled Wigner source");
        auto t = make_full(run, sc, w.get());
        st_table *tab = nullptr;
        check(st_tomogram_table(t.get(), &tab));
        run.table("tomogram_full", tab);
    }
    return 0;
}

int cmd_invert(Run &run, const Scenario &sc) {
    auto state = load_state(sc);
    const st_state *sp = state ? state->get() : nullptr;
    auto w = load_wigner(sc, sp);
    run.grid("phase", sc.phase());
    record_state(run, sp);
    auto t = make_full(run, sc, w.get());
    const auto out = sc.output();
    run.grid("output", out);
    const double z = sc.section("invert").value("z", 1.0);
    st_wigner *inv = nullptr;
    check(st_inverse_wigner(t.get(), out, out, z, &inv));
    Wigner back(inv);
    const double *v = st_wigner_values(back.get());
    const std::size_t n = out.n * out.n;
    double norm = 0.0;
    check(st_wigner_norm(back.get(), &norm));
    json d{{"z", z}, {"norm", norm}, {"min", *std::min_element(v, v + n)}, {"max", *std::max_element(v, v + n)}};
    if (out.n % 2 == 1 && out.min == -out.max) d["origin"] = v[(out.n / 2) * out.n + out.n / 2];
    if (sp) {
        double err = 0.0;
        for (std::size_t i = 0; i < out.n; ++i)
            for (std::size_t j = 0; j < out.n; ++j) {
                const double q = out.min + (out.max - out.min) * static_cast<double>(i) / static_cast<double>(out.n - 1);
                const double p = out.min + (out.max - out.min) * static_cast<double>(j) / static_cast<double>(out.n - 1);
                double a = 0.0;
                check(st_state_wigner_at(sp, q, p, sc.time, &a));
                err = std::max(err, std::abs(a - v[i * out.n + j]));
            }
        d["max_error_vs_analytic"] = err;
    }
    if (sc.section("invert").value("overcompleteness", false)) {
        double oc[3];
        check(st_overcompleteness(t.get(), out, out, oc));
        d["overcompleteness"] = json{{"max_diff_half", oc[0]}, {"max_diff_two", oc[1]}, {"window", oc[2]}};
    }
    run.diagnostics()["wigner"] = d;
    st_table *tab = nullptr;
    check(st_wigner_table(back.get(), &tab));
    run.table("wigner", tab);
    return 0;
}

json density_json(const st_density *d, const st_state *state) {
    st_density_summary s;
    check(st_density_summarize(d, &s));
    json j{{"trace", s.trace},
           {"hermiticity_error", s.hermiticity_error},
           {"purity", s.purity},
           {"min_eigenvalue", s.min_eigenvalue},
           {"max_eigenvalue", s.max_eigenvalue},
           {"mean_q", s.mean_q}};
    if (state) {
        double fid = 0.0;
        if (st_density_fidelity(d, state, &fid) == ST_OK) j["fidelity"] = fid;
    }
    return j;
}

int cmd_density(Run &run, const Scenario &sc) {
    auto state = load_state(sc);
    const st_state *sp = state ? state->get() : nullptr;
    auto w = load_wigner(sc, sp);
    run.grid("phase", sc.phase());
    record_state(run, sp);
    auto t = make_full(run, sc, w.get());
    st_density *d = nullptr;
    check(st_density_reconstruct(t.get(), &d));
    Density rho(d);
    run.diagnostics()["density"] = density_json(rho.get(), sp);
    st_table *tab = nullptr;
    check(st_density_table(rho.get(), &tab));
    run.table("density", tab);
    return 0;
}

int cmd_homodyne(Run &run, const Scenario &sc, const Options &opt) {
    auto state = require_state(sc);
    record_state(run, state.get());
    const auto &h = sc.section("homodyne");
    std::optional<std::uint64_t> seed = opt.seed;
    if (!seed && h.contains("seed")) seed = h.at("seed").get<std::uint64_t>();
    if (!seed) config_error("homodyne sampling needs a seed (config homodyne.seed or --seed)");
    run.manifest()["seed"] = *seed;
    const auto n = h.value("n_samples", static_cast<std::size_t>(100000));
    const double r = h.value("r_cutoff", 8.0);
    const auto q = sc.axis("q", 5.0, 41);
    run.grid("q", q);
    std::vector<double> x(n), phi(n);
    check(st_homodyne_sample(state.get(), n, *seed, sc.time, x.data(), phi.data()));
    st_density *d = nullptr;
    double cutoff = 1.0;
    check(st_homodyne_reconstruct(x.data(), phi.data(), n, q, r, &d, &cutoff));
    Density rho(d);
    json diag = density_json(rho.get(), state.get());
    diag["n_samples"] = n;
    diag["r_cutoff"] = r;
    diag["cutoff_vacuum_fidelity"] = cutoff;
    diag["warnings"] = json::array();
    if (cutoff < 0.9) {
        diag["warnings"].push_back("r_cutoff too small: fidelity is capped near " + std::to_string(cutoff));
        std::cerr << "warning: r_cutoff " << r << " caps the vacuum fidelity at " << cutoff << "\n";
    }
    run.diagnostics()["homodyne"] = diag;
    std::vector<std::vector<double>> rows(n);
    for (std::size_t k = 0; k < n; ++k) rows[k] = {x[k], phi[k]};
    run.rows("samples", {"x", "phi"}, rows);
    st_table *tab = nullptr;
    check(st_density_table(rho.get(), &tab));
    run.table("density", tab);
    return 0;
}

std::string time_stem(std::size_t k) { return "evolved_t" + std::to_string(k); }

int cmd_evolve(Run &run, const Scenario &sc) {
    auto state = load_state(sc);
    const st_state *sp = state ? state->get() : nullptr;
    record_state(run, sp);
    const auto &e = sc.section("evolve");
    const auto times = e.value("times", std::vector<double>{1.0});
    const std::string method = e.value("method", std::string("slices"));
    if (method != "slices" && method != "full") config_error("evolve.method must be 'slices' or 'full'");
    const auto frames = load_frames(sc);
    const bool damped = e.contains("damping");
    if (damped && e.contains("hamiltonian")) config_error("evolve takes either 'hamiltonian' or 'damping'");

    Wigner w;
    if (sc.source == "wigner" || method == "full") {
        w = load_wigner(sc, sp);
        run.grid("phase", sc.phase());
    }
    json per_time = json::array();

    if (damped) {
        const auto &dj = e.at("damping");
        const st_damping d{dj.value("gamma", 0.0), dj.value("n_bar", 0.0)};
        const int steps = dj.value("steps", 32);
        const std::string sch = dj.value("scheme", std::string("spectral"));
        if (sch != "spectral" && sch != "explicit") config_error("damping.scheme must be 'spectral' or 'explicit'");
        const int scheme = sch == "explicit" ? 1 : 0;
        run.diagnostics()["generator"] = "damped oscillator, gamma = " + std::to_string(d.gamma);
        Slices s0;
        Tomogram t0;
        if (method == "full") {
            t0 = make_full(run, sc, w.get());
        } else {
            const auto x = sc.x();
            run.grid("x", x);
            s0 = make_slices(sc, sp, w.get(), frames, x);
        }
        for (std::size_t k = 0; k < times.size(); ++k) {
            st_slices *out = nullptr;
            if (method == "full") {
                st_tomogram *tt = nullptr;
                check(st_damped_tomogram(t0.get(), d, times[k], steps, scheme, &tt));
                Tomogram ev(tt);
                check(st_tomogram_slices(ev.get(), frames.data(), frames.size(), &out));
            } else {
                check(st_damped_slices(s0.get(), d, times[k], steps, scheme, &out));
            }
            Slices s(out);
            per_time.push_back(json{{"t", times[k]}, {"slices", slice_diagnostics(s.get())}});
            run.table(time_stem(k), slices_table(s.get()));
        }
    } else {
        const auto h = load_hamiltonian(e);
        char *desc = nullptr;
        check(st_hamiltonian_describe(h, &desc));
        run.diagnostics()["generator"] = "d_t w = " + take_string(desc);
        Tomogram t0;
        std::optional<st_axis> x;
        if (method == "full") {
            t0 = make_full(run, sc, w.get());
        } else {
            x = sc.x();
            run.grid("x", *x);
        }
        for (std::size_t k = 0; k < times.size(); ++k) {
            st_slices *out = nullptr;
            json entry{{"t", times[k]}};
            if (method == "full") {
                st_tomogram *tt = nullptr;
                double oob = 0.0;
                check(st_evolve_tomogram(t0.get(), h, times[k], &tt, &oob));
                Tomogram ev(tt);
                entry["out_of_bounds_fraction"] = oob;
                check(st_tomogram_slices(ev.get(), frames.data(), frames.size(), &out));
            } else if (sc.source == "analytic") {
                if (!sp) config_error("source 'analytic' needs a 'state'");
                check(st_evolve_state_slices(sp, frames.data(), frames.size(), *x, h, times[k], &out));
            } else {
                check(st_evolve_wigner_slices(w.get(), frames.data(), frames.size(), *x, h, times[k], &out));
            }
            Slices s(out);
            entry["slices"] = slice_diagnostics(s.get());
            per_time.push_back(entry);
            run.table(time_stem(k), slices_table(s.get()));
        }
    }
    run.diagnostics()["times"] = per_time;
    return 0;
}

int cmd_moments(Run &run, const Scenario &sc) {
    auto state = load_state(sc);
    const st_state *sp = state ? state->get() : nullptr;
    Wigner w = sc.source == "wigner" ? load_wigner(sc, sp) : Wigner();
    record_state(run, sp);
    const auto frames = load_frames(sc);
    const auto x = sc.x();
    run.grid("x", x);
    const int n_max = sc.section("moments").value("n_max", 4);
    auto s = make_slices(sc, sp, w.get(), frames, x);
    std::vector<std::vector<double>> rows;
    std::vector<double> m(static_cast<std::size_t>(std::max(n_max, 0)) + 1);
    for (std::size_t k = 0; k < frames.size(); ++k) {
        check(st_moments(s.get(), k, n_max, m.data()));
        for (int n = 0; n <= n_max; ++n)
            rows.push_back({frames[k].mu, frames[k].nu, frames[k].delta, static_cast<double>(n),
                            m[static_cast<std::size_t>(n)]});
    }
    run.rows("moments", {"mu", "nu", "delta", "n", "moment"}, rows);
    run.diagnostics()["slices"] = slice_diagnostics(s.get());
    return 0;
}

int cmd_generating(Run &run, const Scenario &sc) {
    auto state = load_state(sc);
    const st_state *sp = state ? state->get() : nullptr;
    auto w = load_wigner(sc, sp);
    run.grid("phase", sc.phase());
    record_state(run, sp);
    const auto frames = load_frames(sc);
    const auto &g = sc.section("generating");
    const auto lambdas = g.value("lambda", std::vector<double>{0.0, 0.5, 1.0, 2.0});
    std::vector<std::vector<double>> rows;
    json warnings = json::array();
    for (const auto &f : frames)
        for (double l : lambdas) {
            double v[2], s[2];
            int ok = 1;
            check(st_generating(w.get(), l, f, v, s, &ok));
            if (!ok) warnings.push_back("spectral cross-check skipped at lambda " + std::to_string(l));
            rows.push_back({l, f.mu, f.nu, f.delta, v[0], v[1], ok ? s[0] : NAN, ok ? s[1] : NAN});
        }
    run.rows("generating", {"lambda", "mu", "nu", "delta", "re", "im", "spectral_re", "spectral_im"}, rows);

    const auto x = sc.x();
    run.grid("x", x);
    st_slices *raw = nullptr;
    check(st_forward_slices(w.get(), frames.data(), frames.size(), x, 0, &raw));
    Slices s(raw);
    std::vector<std::vector<double>> taylor;
    for (std::size_t k = 0; k < frames.size(); ++k) {
        double d1 = 0.0, d2 = 0.0, m[3];
        check(st_generating_taylor(w.get(), frames[k], g.value("h", 1e-3), &d1, &d2));
        check(st_moments(s.get(), k, 2, m));
        taylor.push_back({frames[k].mu, frames[k].nu, frames[k].delta, d1, d2, m[1], m[2]});
    }
    run.rows("taylor", {"mu", "nu", "delta", "d1", "d2", "moment1", "moment2"}, taylor);

    json diag{{"warnings", warnings}};
    if (g.value("roundtrip", false)) {
        const auto gm = sc.axis("generating_mu", 16.0, 129), gn = sc.axis("generating_nu", 16.0, 129);
        const auto out = sc.output();
        run.grid("generating_mu", gm);
        run.grid("generating_nu", gn);
        run.grid("output", out);
        st_wigner *back = nullptr;
        check(st_wigner_from_generating(w.get(), gm, gn, out, out, &back));
        Wigner b(back);
        double norm = 0.0;
        check(st_wigner_norm(b.get(), &norm));
        diag["roundtrip_norm"] = norm;
        st_table *tab = nullptr;
        check(st_wigner_table(b.get(), &tab));
        run.table("wigner_from_generating", tab);
    }
    run.diagnostics()["generating"] = diag;
    return 0;
}

int cmd_propagate(Run &run, const Scenario &sc) {
    auto state = load_state(sc);
    const st_state *sp = state ? state->get() : nullptr;
    auto w = load_wigner(sc, sp);
    run.grid("phase", sc.phase());
    record_state(run, sp);
    const auto &p = sc.section("propagate");
    const double t1 = p.value("t1", kPi), t_mid = p.value("t_mid", 0.5 * p.value("t1", kPi));
    const auto h = load_hamiltonian(sc.section("evolve"));
    auto t0 = make_full(run, sc, w.get());
    double disc = 0.0;
    check(st_chapman_kolmogorov(t0.get(), h, t1, t_mid, &disc));
    st_tomogram *raw = nullptr;
    double oob = 0.0;
    check(st_evolve_tomogram(t0.get(), h, t1, &raw, &oob));
    Tomogram ev(raw);
    const auto frames = load_frames(sc);
    st_slices *s = nullptr;
    check(st_tomogram_slices(ev.get(), frames.data(), frames.size(), &s));
    Slices sl(s);
    run.diagnostics()["propagate"] =
        json{{"t1", t1}, {"t_mid", t_mid}, {"semigroup_discrepancy", disc}, {"out_of_bounds_fraction", oob},
             {"slices", slice_diagnostics(sl.get())}};
    run.table("propagated", slices_table(sl.get()));
    return 0;
}

int cmd_selftest(const Options &opt, bool write_manifest) {
    struct Ctx {
        json results = json::array();
    } ctx;
    auto cb = [](int id, const char *name, int passed, const char *detail, void *user) {
        std::printf("[%s] %2d %-28s %s\n", passed ? "PASS" : "FAIL", id, name, detail);
        std::fflush(stdout);
        static_cast<Ctx *>(user)->results.push_back(
            json{{"id", id}, {"name", name}, {"passed", passed != 0}, {"detail", detail}});
    };
    int all = 0;
    check(st_selftest(opt.grid_scale, opt.seed.value_or(20260601), cb, &ctx, &all));
    std::printf("%s\n", all ? "all checks passed" : "some checks FAILED");
    if (write_manifest) {
        std::error_code ec;
        fs::create_directories(opt.out, ec);
        if (ec) fail(ST_ERR_IO, "io", "cannot create output directory " + opt.out);
        json m{{"tool", "symtomo"},     {"version", st_version()}, {"command", "selftest"},
               {"grid_scale", opt.grid_scale}, {"seed", opt.seed.value_or(20260601)}, {"passed", all != 0},
               {"results", ctx.results}};
        Run::write_text((fs::path(opt.out) / "manifest.json").string(), m.dump(2) + "\n");
    }
    return all ? 0 : ST_ERR_NUMERIC;
}

void report(const Failure &f, const Options &opt, const std::string &command) {
    json rec{{"error", {{"status", f.status}, {"kind", f.kind}, {"message", f.message}, {"command", command}}}};
    std::cerr << rec.dump() << "\n";
    std::error_code ec;
    if (!opt.out.empty() && fs::is_directory(opt.out, ec)) {
        std::ofstream out(fs::path(opt.out) / "error.json");
        out << rec.dump(2) << "\n";
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"symtomo: symplectic tomography scenario runner"};
    app.require_subcommand(1);
    Options opt;
    std::uint64_t seed = 0;
    app.add_option("--config", opt.config, "scenario JSON file");
    app.add_option("--out", opt.out, "output directory")->capture_default_str();
    app.add_option("--grid-scale", opt.grid_scale, "scale grid half-widths at fixed spacing")->capture_default_str();
    auto *seed_opt = app.add_option("--seed", seed, "seed for homodyne sampling");
    app.add_option("--format", opt.format, "table format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    const std::vector<std::pair<const char *, const char *>> commands{
        {"tomogram", "marginals at the configured frames"},
        {"invert", "Wigner function from the full tomogram"},
        {"density", "density matrix from the full tomogram"},
        {"homodyne", "seeded homodyne sampling and kernel reconstruction"},
        {"evolve", "Hamiltonian or damped evolution of tomograms"},
        {"moments", "quadrature moments of the slices"},
        {"generating", "moment generating function and its Taylor check"},
        {"propagate", "Chapman-Kolmogorov composition check"},
        {"selftest", "run the acceptance checks"}};
    for (const auto &[name, help] : commands) {
        auto *sub = app.add_subcommand(name, help);
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : ST_ERR_VALIDATION;
    }
    if (*seed_opt) opt.seed = seed;
    const std::string command = app.get_subcommands().front()->get_name();

    try {
        if (command == "selftest") return cmd_selftest(opt, app.get_option("--out")->count() > 0);
        const Scenario sc = load_scenario(opt);
        Run run(opt, command, sc);
        int rc = 0;
        if (command == "tomogram") rc = cmd_tomogram(run, sc);
        else if (command == "invert") rc = cmd_invert(run, sc);
        else if (command == "density") rc = cmd_density(run, sc);
        else if (command == "homodyne") rc = cmd_homodyne(run, sc, opt);
        else if (command == "evolve") rc = cmd_evolve(run, sc);
        else if (command == "moments") rc = cmd_moments(run, sc);
        else if (command == "generating") rc = cmd_generating(run, sc);
        else if (command == "propagate") rc = cmd_propagate(run, sc);
        run.finish();
        return rc;
    } catch (const Failure &f) {
        report(f, opt, command);
        return f.status;
    } catch (const json::exception &e) {
        report(Failure{ST_ERR_VALIDATION, "config", e.what()}, opt, command);
        return ST_ERR_VALIDATION;
    }
}
