/* polyproj — closed-form volumes of projections and sections of the regular
 * simplex, cube, and cross-polytope, with brute-force cross-checks.
 *
 * C interface of the shared library. All functions return pp_status;
 * results go through out parameters. Handles (pp_polygon, pp_report) are
 * opaque and must be released with the matching *_free call. Strings
 * returned through char** are heap-allocated; release with pp_string_free.
 */
#ifndef POLYPROJ_H
#define POLYPROJ_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pp_status {
  PP_OK = 0,
  PP_ERROR_INVALID_ARGUMENT = 1, /* bad value, dimension mismatch, ... */
  PP_ERROR_DEGENERATE = 2,       /* zero vector, dependent plane, ...  */
  PP_ERROR_TOO_LARGE = 3,        /* enumeration over the 2^n caps      */
  PP_ERROR_INTERNAL = 4,
} pp_status;

const char* pp_status_name(pp_status status);

/* Message of the most recent error on this thread ("" if none). */
const char* pp_last_error(void);

const char* pp_version(void);

/* ---- directions and pairs ------------------------------------------- */

/* x normalized to unit length; *zero_sum_out (optional) reports whether the
 * result lies on the zero-sum sphere. */
pp_status pp_normalize(const double* x, int len, double* out, int* zero_sum_out);

/* Mean-subtract, then normalize. */
pp_status pp_project_zero_sum(const double* x, int len, double* out);

/* Gram-Schmidt orthonormalization of two independent vectors. */
pp_status pp_orthonormal_pair(const double* x, const double* y, int len,
                              double* u_out, double* v_out);

/* Seeded uniform direction on the (zero-sum) unit sphere. */
pp_status pp_sample_direction(int m, int zero_sum, uint64_t seed, double* out);

/* Seeded random orthonormal pair in R^n. */
pp_status pp_sample_orthopair(int n, uint64_t seed, double* u_out, double* v_out);

/* The evenly rotated pair (u_i,v_i) = sqrt(2/n)(cos((i-1)pi/n), sin((i-1)pi/n)). */
pp_status pp_trig_pair(int n, double* u_out, double* v_out);

/* ---- closed-form volumes and widths --------------------------------- */

/* Shadow of the regular n-simplex on the hyperplane orthogonal to a
 * zero-sum direction a of length n+1. project_input != 0 projects a onto
 * the zero-sum sphere first. */
pp_status pp_simplex_hyperplane_shadow(const double* a, int len,
                                       int project_input, double* out);

/* Shadow of the volume-one cube orthogonal to a unit direction: sum |a_j|. */
pp_status pp_cube_hyperplane_shadow(const double* a, int len, double* out);

/* Planar cube shadow: the 2x2-minor sum over an orthonormal pair. */
pp_status pp_cube_planar_shadow(const double* u, const double* v, int len,
                                double* out);

/* Shadow of the cross-polytope orthogonal to a unit direction (facet sum;
 * len <= 20). */
pp_status pp_cross_hyperplane_shadow(const double* a, int len, double* out);

/* Width of the simplex and gauge of its difference body at a zero-sum
 * direction. */
pp_status pp_simplex_width(const double* a, int len, double* out);
pp_status pp_simplex_gauge(const double* a, int len, double* out);

/* shadow / gauge; constant sqrt(n+1)/(n-1)! in the direction. */
pp_status pp_width_projection_ratio(const double* a, int len, double* out);

/* ---- L_p projection bodies (p-th powers of support functions) -------- */

pp_status pp_lp_cube_support(const double* a, int len, double p, double* out);
pp_status pp_lp_simplex_support(const double* a, int len, double p, double* out);
pp_status pp_lp_cross_support_exact(const double* a, int len, double p,
                                    double* out);
pp_status pp_lp_cross_support_mc(const double* a, int len, double p,
                                 long long samples, uint64_t seed, double* out,
                                 double* stderr_out);

/* E|sum a_j eps_j|^p over random signs; exact enumeration (samples = 0,
 * len <= 20) or Monte Carlo. */
pp_status pp_rademacher_moment(const double* a, int len, double p,
                               long long samples, uint64_t seed, double* out,
                               double* stderr_out);

/* ---- extremal values -------------------------------------------------- */

/* Extremal hyperplane shadows of the simplex; argmin/argmax buffers of
 * length n+1 may be NULL. */
pp_status pp_simplex_extremal_volumes(int n, double* vmin, double* vmax,
                                      double* argmin, double* argmax);

/* Extremal widths of the simplex; argument buffers of length n+1. */
pp_status pp_simplex_extremal_widths(int n, double* wmin, double* wmax,
                                     double* argmin, double* argmax);

/* Planar cube shadow bounds 1 and cot(pi/2n); the maximizing pair goes to
 * u_out/v_out (length n each) when non-NULL. */
pp_status pp_planar_cube_bounds(int n, double* lower, double* upper,
                                double* u_out, double* v_out);

/* Extrema of sum |a_j|^p on the unit sphere of R^m, p >= 1, p != 2. */
pp_status pp_fp_extrema(int m, double p, double* min_out, double* max_out);

/* Projected subgradient search. objective: "l1" | "fp" | "minor-sum";
 * constraint: "sphere" | "zero-sum" | "pair". For directions the argument
 * buffer holds m doubles, for pairs 2m (u then v); may be NULL. */
pp_status pp_numeric_search(const char* objective, double p, int m,
                            const char* constraint, int maximize, int restarts,
                            uint64_t seed, double* value_out, double* arg_out);

/* ---- brute-force oracles ---------------------------------------------- */

/* Shadow volume of a standard body ("simplex" | "cube" | "cross")
 * orthogonal to direction a, computed without the closed forms: exact hull
 * geometry when the shadow is at most 2-dimensional, Monte-Carlo otherwise
 * (stderr_out reports 0 for exact results). For the simplex, a must be
 * zero-sum of length n+1; otherwise unit of length n. */
pp_status pp_oracle_hyperplane_shadow(const char* body, const double* a,
                                      int len, long long samples, uint64_t seed,
                                      double* out, double* stderr_out);

/* Exact planar shadow area of a standard body on span{u,v}. */
pp_status pp_oracle_planar_shadow(const char* body, const double* u,
                                  const double* v, int len, double* out);

/* ---- planar sections of the cross-polytope ---------------------------- */

typedef struct pp_polygon pp_polygon;

/* Section of the cross-polytope by span{u,v}, as a polygon in (s,t)
 * coordinates. */
pp_status pp_cross_section(const double* u, const double* v, int len,
                           pp_polygon** out);

/* Convex hull of the cube shadow on span{u,v}. */
pp_status pp_cube_shadow_polygon(const double* u, const double* v, int len,
                                 pp_polygon** out);

int pp_polygon_vertex_count(const pp_polygon* polygon);
/* Vertices as s,t pairs; buffer of 2 * vertex_count doubles. */
pp_status pp_polygon_vertices(const pp_polygon* polygon, double* st_out);
pp_status pp_polygon_area(const pp_polygon* polygon, double* out);
pp_status pp_polygon_polar(const pp_polygon* polygon, pp_polygon** out);
pp_status pp_polygon_mahler(const pp_polygon* polygon, double* out);
void pp_polygon_free(pp_polygon* polygon);

/* Lower bound for planar cross-polytope section areas, n >= 3. */
pp_status pp_nazarov_bound(int n, double* out);

/* Hausdorff distance between polar(section) and twice the cube shadow on
 * the same plane. */
pp_status pp_duality_gap(const double* u, const double* v, int len,
                         double* hausdorff_out, double* tolerance_out);

/* ---- verification suites ---------------------------------------------- */

typedef struct pp_report pp_report;

/* Runs a named suite: "simplex-hyperplane", "cube-planar", "duality",
 * "mahler", "nazarov", "lp-reduction", "width", or "all". Zero/negative
 * n_lo, n_hi, trials, samples select the suite defaults. */
pp_status pp_verify(const char* suite, int n_lo, int n_hi, int trials,
                    long long samples, uint64_t seed, pp_report** out);

int pp_report_case_count(const pp_report* report);
int pp_report_pass_count(const pp_report* report);
int pp_report_passed(const pp_report* report);
/* Serialized report: {suite, seed, cases:[...], wall_time_s}. */
pp_status pp_report_to_json(const pp_report* report, char** json_out);
void pp_report_free(pp_report* report);

void pp_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* POLYPROJ_H */
