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


/* C interface to the symtomo library.
 *
 * Every fallible call returns an st_status. On failure the message and a short
 * machine-readable kind ("invalid-frame", "coverage", ...) are available from
 * st_last_error_message() / st_last_error_kind() on the calling thread until
 * the next call on that thread.
 *
 * Objects are opaque handles created by st_*(..., **out) functions and released
 * with the matching st_*_free; passing NULL to a free function is a no-op.
 * Pointers returned by accessor functions stay valid for the lifetime of the
 * owning handle. Strings returned through char** are released with
 * st_string_free. */

#ifndef SYMTOMO_SYMTOMO_H
#define SYMTOMO_SYMTOMO_H

#include <stddef.h>
#include <stdint.h>

#if defined(SYMTOMO_BUILDING_LIBRARY)
#define ST_API __attribute__((visibility("default")))
#else
#define ST_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum st_status {
    ST_OK = 0,
    ST_ERR_VALIDATION = 2,
    ST_ERR_NUMERIC = 3,
    ST_ERR_IO = 4,
    ST_ERR_INTERNAL = 5
} st_status;

typedef struct st_state st_state;
typedef struct st_wigner st_wigner;
typedef struct st_slices st_slices;
typedef struct st_tomogram st_tomogram;
typedef struct st_density st_density;
typedef struct st_table st_table;

/* Uniform axis: min + k (max - min) / (n - 1), k = 0..n-1. */
typedef struct st_axis {
    double min;
    double max;
    size_t n;
} st_axis;

typedef struct st_frame {
    double mu;
    double nu;
    double delta;
} st_frame;

/* H = p^2/2 + omega^2 q^2/2 - f q */
typedef struct st_hamiltonian {
    double omega;
    double f;
} st_hamiltonian;

typedef struct st_damping {
    double gamma;
    double n_bar;
} st_damping;

typedef struct st_density_summary {
    double trace;
    double hermiticity_error;
    double purity;
    double min_eigenvalue;
    double max_eigenvalue;
    double mean_q;
} st_density_summary;

ST_API const char *st_version(void);
ST_API const char *st_last_error_message(void);
ST_API const char *st_last_error_kind(void);
ST_API void st_string_free(char *s);

/* ---- states ---- */

/* JSON object such as {"kind": "coherent", "q0": 1, "p0": 0}. */
ST_API st_status st_state_parse(const char *json, st_state **out);
ST_API st_status st_state_to_json(const st_state *state, char **out);
/* JSON array of notes on closed forms that differ from the usual printed ones. */
ST_API st_status st_state_formula_notes(const st_state *state, char **out);
ST_API st_status st_state_wigner_at(const st_state *state, double q, double p, double t, double *out);
ST_API st_status st_state_marginal_at(const st_state *state, double x, st_frame frame, double t, double *out);
ST_API void st_state_free(st_state *state);

/* ---- frames ---- */

ST_API st_status st_frame_validate(st_frame frame);
ST_API st_status st_frame_from_squeezer(double s, double theta, st_frame *out);
ST_API st_status st_frame_homodyne(double phi, st_frame *out);

/* ---- Wigner fields ---- */

ST_API st_status st_wigner_sample(const st_state *state, st_axis q, st_axis p, double t, st_wigner **out);
/* Row-major values, values[i * p.n + j] = W(q_i, p_j). */
ST_API st_status st_wigner_from_values(st_axis q, st_axis p, const double *values, st_wigner **out);
ST_API st_status st_wigner_read_columnar(const char *path, st_wigner **out);
ST_API st_status st_wigner_write_columnar(const st_wigner *w, const char *path);
ST_API st_status st_wigner_axes(const st_wigner *w, st_axis *q, st_axis *p);
ST_API const double *st_wigner_values(const st_wigner *w);
/* Trapezoid integral of W dq dp / (2 pi). */
ST_API st_status st_wigner_norm(const st_wigner *w, double *out);
ST_API st_status st_wigner_table(const st_wigner *w, st_table **out);
ST_API void st_wigner_free(st_wigner *w);

/* ---- frame slices ---- */

/* exact != 0 uses direct quadrature along each ray instead of spectrum lookups. */
ST_API st_status st_forward_slices(const st_wigner *w, const st_frame *frames, size_t count, st_axis x, int exact,
                                   st_slices **out);
ST_API st_status st_analytic_slices(const st_state *state, const st_frame *frames, size_t count, st_axis x, double t,
                                    st_slices **out);
ST_API st_status st_slices_read_csv(const char *path, st_slices **out);
ST_API size_t st_slices_count(const st_slices *s);
ST_API st_status st_slices_axis(const st_slices *s, st_axis *x);
/* Frame and values (length x.n) of slice k. */
ST_API st_status st_slices_get(const st_slices *s, size_t k, st_frame *frame, const double **values);
ST_API st_status st_slices_table(const st_slices *s, st_table **out);
ST_API void st_slices_free(st_slices *s);

/* ---- full tomograms ---- */

ST_API st_status st_forward_full(const st_wigner *w, st_axis mu, st_axis nu, st_axis x, int exact, st_tomogram **out);
ST_API st_status st_tomogram_sample(const st_state *state, st_axis mu, st_axis nu, st_axis x, double t,
                                    st_tomogram **out);
ST_API st_status st_tomogram_axes(const st_tomogram *t, st_axis *mu, st_axis *nu, st_axis *x);
/* Line along x at node (i, j). */
ST_API const double *st_tomogram_line(const st_tomogram *t, size_t i, size_t j);
/* Slices at frames that are (mu, nu) grid nodes; delta shifts the x argument. */
ST_API st_status st_tomogram_slices(const st_tomogram *t, const st_frame *frames, size_t count, st_slices **out);
ST_API st_status st_tomogram_table(const st_tomogram *t, st_table **out);
ST_API void st_tomogram_free(st_tomogram *t);

ST_API st_status st_inverse_wigner(const st_tomogram *t, st_axis q, st_axis p, double z, st_wigner **out);
/* out[0], out[1]: max deviation of the z = 1/2 and z = 2 inversions from z = 1; out[2]: compared half-width. */
ST_API st_status st_overcompleteness(const st_tomogram *t, st_axis q, st_axis p, double out[3]);

/* ---- density matrices ---- */

ST_API st_status st_density_reconstruct(const st_tomogram *t, st_density **out);
/* Fills x[count] and phi[count]. */
ST_API st_status st_homodyne_sample(const st_state *state, size_t count, uint64_t seed, double t, double *x,
                                    double *phi);
ST_API st_status st_homodyne_reconstruct(const double *x, const double *phi, size_t count, st_axis q, double r_cutoff,
                                         st_density **out, double *cutoff_fidelity);
ST_API st_status st_density_summarize(const st_density *d, st_density_summary *out);
/* <psi|rho|psi> for the wavefunction of a pure catalog state. */
ST_API st_status st_density_fidelity(const st_density *d, const st_state *state, double *out);
ST_API st_status st_density_table(const st_density *d, st_table **out);
ST_API void st_density_free(st_density *d);

/* ---- evolution ---- */

/* Coefficients c_0..c_{count-1} of V(q); degree >= 3 fails with nonlocal-potential. */
ST_API st_status st_hamiltonian_from_potential(const double *coeffs, size_t count, st_hamiltonian *out);
/* Advection operator of the marginal equation as text. */
ST_API st_status st_hamiltonian_describe(st_hamiltonian h, char **out);
/* Backward characteristic map over tau >= 0; in and out hold (x, mu, nu). */
ST_API st_status st_flow_apply(st_hamiltonian h, double tau, const double in[3], double out[3]);
ST_API st_status st_flow_pull_frame(st_hamiltonian h, double tau, st_frame frame, st_frame *out);

/* Trilinear pullback on the full grid; out_of_bounds may be NULL. */
ST_API st_status st_evolve_tomogram(const st_tomogram *t, st_hamiltonian h, double time, st_tomogram **out,
                                    double *out_of_bounds);
/* Exact pullback of slices taken from a sampled Wigner function. */
ST_API st_status st_evolve_wigner_slices(const st_wigner *w, const st_frame *frames, size_t count, st_axis x,
                                         st_hamiltonian h, double time, st_slices **out);
/* Exact pullback of analytic slices of `state` at time 0. */
ST_API st_status st_evolve_state_slices(const st_state *state, const st_frame *frames, size_t count, st_axis x,
                                        st_hamiltonian h, double time, st_slices **out);
ST_API st_status st_chapman_kolmogorov(const st_tomogram *t, st_hamiltonian h, double t1, double t_mid, double *out);
/* Equally spaced samples; count 3 or 5. */
ST_API st_status st_pde_residual(const st_tomogram *const *samples, size_t count, double dt, st_hamiltonian h,
                                 double *out);

/* scheme 0 = spectral diffusion substep, 1 = explicit finite differences. */
ST_API st_status st_damped_slices(const st_slices *s, st_damping d, double time, int steps, int scheme,
                                  st_slices **out);
ST_API st_status st_damped_tomogram(const st_tomogram *t, st_damping d, double time, int steps, int scheme,
                                    st_tomogram **out);

/* ---- moments and generating function ---- */

/* out[0..n_max] = <x^n> of slice k. */
ST_API st_status st_moments(const st_slices *s, size_t k, int n_max, double *out);
/* value: direct quadrature; spectral: lookup in the padded spectrum (spectral_ok = 0 when off-grid). */
ST_API st_status st_generating(const st_wigner *w, double lambda, st_frame frame, double value[2],
                               double spectral[2], int *spectral_ok);
ST_API st_status st_generating_taylor(const st_wigner *w, st_frame frame, double h, double *d1, double *d2);
/* G(i; mu, nu) on the (mu, nu) grid from w, then W on the (q, p) grid from G. */
ST_API st_status st_wigner_from_generating(const st_wigner *w, st_axis mu, st_axis nu, st_axis q, st_axis p,
                                           st_wigner **out);

/* ---- tables ---- */

ST_API size_t st_table_column_count(const st_table *t);
ST_API const char *st_table_column(const st_table *t, size_t c);
ST_API size_t st_table_row_count(const st_table *t);
ST_API double st_table_value(const st_table *t, size_t r, size_t c);
ST_API st_status st_table_write_csv(const st_table *t, const char *path);
ST_API void st_table_free(st_table *t);
/* Shortest text that reads back to the same double; buf needs 32 bytes. */
ST_API void st_format_number(double v, char buf[32]);

/* ---- selftest ---- */

typedef void (*st_selftest_callback)(int id, const char *name, int passed, const char *detail, void *user);

/* Runs the acceptance checks; *all_passed is 1 when every check passed. */
ST_API st_status st_selftest(double grid_scale, uint64_t seed, st_selftest_callback cb, void *user, int *all_passed);

#ifdef __cplusplus
}
#endif

#endif /* SYMTOMO_SYMTOMO_H */
