#include "polyproj.h"

#include <array>
#include <cmath>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "polyproj/closedform.hpp"
#include "polyproj/extremal.hpp"
#include "polyproj/linalg.hpp"
#include "polyproj/lpbodies.hpp"
#include "polyproj/oracle.hpp"
#include "polyproj/sections.hpp"
#include "polyproj/verify.hpp"

using namespace polyproj;

namespace {

thread_local std::string g_last_error;

pp_status fail(pp_status code, const char* what) {
  g_last_error = what ? what : "";
  return code;
}

template <typename Fn>
pp_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return PP_OK;
  } catch (const std::domain_error& e) {
    return fail(PP_ERROR_DEGENERATE, e.what());
  } catch (const std::length_error& e) {
    return fail(PP_ERROR_TOO_LARGE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(PP_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(PP_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(PP_ERROR_INTERNAL, "unknown error");
  }
}

std::span<const double> as_span(const double* x, int len) {
  if (x == nullptr || len < 1) throw std::invalid_argument("null or empty input");
  return {x, static_cast<std::size_t>(len)};
}

Direction as_direction(const double* a, int len) {
  return normalize(as_span(a, len));
}

Direction as_zero_sum_direction(const double* a, int len) {
  Direction d = normalize(as_span(a, len));
  if (!d.zero_sum)
    throw std::invalid_argument("direction must lie in the zero-sum hyperplane");
  return d;
}

OrthoPair as_pair(const double* u, const double* v, int len) {
  return orthonormal_pair(as_span(u, len), as_span(v, len));
}

void write_vec(std::span<const double> src, double* dst) {
  if (dst != nullptr) std::memcpy(dst, src.data(), src.size() * sizeof(double));
}

void require_out(const void* p) {
  if (p == nullptr) throw std::invalid_argument("null output pointer");
}

BodyTag parse_body(const char* body) {
  if (body == nullptr) throw std::invalid_argument("null body name");
  const std::string s = body;
  if (s == "cube") return BodyTag::cube;
  if (s == "cross") return BodyTag::cross;
  if (s == "simplex" || s == "simplex_centered") return BodyTag::simplex_centered;
  throw std::invalid_argument("unknown body: " + s);
}

}  // namespace

struct pp_polygon {
  Polygon2 poly;
};

struct pp_report {
  VerificationReport report;
};

extern "C" {

const char* pp_status_name(pp_status status) {
  switch (status) {
    case PP_OK: return "ok";
    case PP_ERROR_INVALID_ARGUMENT: return "invalid argument";
    case PP_ERROR_DEGENERATE: return "degenerate input";
    case PP_ERROR_TOO_LARGE: return "enumeration too large";
    case PP_ERROR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pp_last_error(void) { return g_last_error.c_str(); }

const char* pp_version(void) { return "0.1.0"; }

pp_status pp_normalize(const double* x, int len, double* out, int* zero_sum_out) {
  return guarded([&] {
    require_out(out);
    const Direction d = normalize(as_span(x, len));
    write_vec(d.coords, out);
    if (zero_sum_out != nullptr) *zero_sum_out = d.zero_sum ? 1 : 0;
  });
}

pp_status pp_project_zero_sum(const double* x, int len, double* out) {
  return guarded([&] {
    require_out(out);
    write_vec(project_zero_sum(as_span(x, len)).coords, out);
  });
}

pp_status pp_orthonormal_pair(const double* x, const double* y, int len,
                              double* u_out, double* v_out) {
  return guarded([&] {
    require_out(u_out);
    require_out(v_out);
    const OrthoPair pair = orthonormal_pair(as_span(x, len), as_span(y, len));
    write_vec(pair.u, u_out);
    write_vec(pair.v, v_out);
  });
}

pp_status pp_sample_direction(int m, int zero_sum, uint64_t seed, double* out) {
  return guarded([&] {
    require_out(out);
    write_vec(sample_direction(m, zero_sum != 0, seed).coords, out);
  });
}

pp_status pp_sample_orthopair(int n, uint64_t seed, double* u_out, double* v_out) {
  return guarded([&] {
    require_out(u_out);
    require_out(v_out);
    SplitMix64 rng(seed);
    const OrthoPair pair = sample_orthopair(n, rng);
    write_vec(pair.u, u_out);
    write_vec(pair.v, v_out);
  });
}

pp_status pp_trig_pair(int n, double* u_out, double* v_out) {
  return guarded([&] {
    require_out(u_out);
    require_out(v_out);
    const OrthoPair pair = trig_pair(n);
    write_vec(pair.u, u_out);
    write_vec(pair.v, v_out);
  });
}

pp_status pp_simplex_hyperplane_shadow(const double* a, int len,
                                       int project_input, double* out) {
  return guarded([&] {
    require_out(out);
    const Direction d = project_input != 0 ? project_zero_sum(as_span(a, len))
                                           : as_direction(a, len);
    *out = simplex_hyperplane_shadow(d);
  });
}

pp_status pp_cube_hyperplane_shadow(const double* a, int len, double* out) {
  return guarded([&] {
    require_out(out);
    *out = cube_hyperplane_shadow(as_direction(a, len));
  });
}

pp_status pp_cube_planar_shadow(const double* u, const double* v, int len,
                                double* out) {
  return guarded([&] {
    require_out(out);
    *out = cube_planar_shadow(as_pair(u, v, len));
  });
}

pp_status pp_cross_hyperplane_shadow(const double* a, int len, double* out) {
  return guarded([&] {
    require_out(out);
    *out = cauchy_shadow(facet_data(BodyTag::cross, len), as_direction(a, len));
  });
}

pp_status pp_simplex_width(const double* a, int len, double* out) {
  return guarded([&] {
    require_out(out);
    *out = simplex_width(as_zero_sum_direction(a, len));
  });
}

pp_status pp_simplex_gauge(const double* a, int len, double* out) {
  return guarded([&] {
    require_out(out);
    *out = simplex_gauge_diff_body(as_zero_sum_direction(a, len));
  });
}

pp_status pp_width_projection_ratio(const double* a, int len, double* out) {
  return guarded([&] {
    require_out(out);
    *out = width_projection_ratio(as_zero_sum_direction(a, len));
  });
}

pp_status pp_lp_cube_support(const double* a, int len, double p, double* out) {
  return guarded([&] {
    require_out(out);
    *out = lp_cube_support_p(as_direction(a, len), LpOrder(p));
  });
}

pp_status pp_lp_simplex_support(const double* a, int len, double p, double* out) {
  return guarded([&] {
    require_out(out);
    *out = lp_simplex_support_p(as_zero_sum_direction(a, len), LpOrder(p));
  });
}

pp_status pp_lp_cross_support_exact(const double* a, int len, double p,
                                    double* out) {
  return guarded([&] {
    require_out(out);
    *out = lp_cross_support_p(as_direction(a, len), LpOrder(p));
  });
}

pp_status pp_lp_cross_support_mc(const double* a, int len, double p,
                                 long long samples, uint64_t seed, double* out,
                                 double* stderr_out) {
  return guarded([&] {
    require_out(out);
    const Direction d = as_direction(a, len);
    SplitMix64 rng(seed);
    const SignAverage avg =
        rademacher_moment(d, LpOrder(p), SignAverageMethod::monte_carlo, samples, rng);
    const double coeff = std::pow(2.0, len - 1.0) / factorial(len - 1);
    *out = coeff * avg.value;
    if (stderr_out != nullptr) *stderr_out = coeff * avg.std_error;
  });
}

pp_status pp_rademacher_moment(const double* a, int len, double p,
                               long long samples, uint64_t seed, double* out,
                               double* stderr_out) {
  return guarded([&] {
    require_out(out);
    const Direction d = as_direction(a, len);
    SplitMix64 rng(seed);
    const SignAverage avg =
        samples > 0
            ? rademacher_moment(d, LpOrder(p), SignAverageMethod::monte_carlo,
                                samples, rng)
            : rademacher_moment_exact(d, LpOrder(p));
    *out = avg.value;
    if (stderr_out != nullptr) *stderr_out = avg.std_error;
  });
}

pp_status pp_simplex_extremal_volumes(int n, double* vmin, double* vmax,
                                      double* argmin, double* argmax) {
  return guarded([&] {
    require_out(vmin);
    require_out(vmax);
    const auto [lo, hi] = simplex_extremal_volumes(n);
    *vmin = lo.value;
    *vmax = hi.value;
    write_vec(std::get<Direction>(lo.argument).coords, argmin);
    write_vec(std::get<Direction>(hi.argument).coords, argmax);
  });
}

pp_status pp_simplex_extremal_widths(int n, double* wmin, double* wmax,
                                     double* argmin, double* argmax) {
  return guarded([&] {
    require_out(wmin);
    require_out(wmax);
    const auto [lo, hi] = simplex_extremal_widths(n);
    *wmin = lo.value;
    *wmax = hi.value;
    write_vec(std::get<Direction>(lo.argument).coords, argmin);
    write_vec(std::get<Direction>(hi.argument).coords, argmax);
  });
}

pp_status pp_planar_cube_bounds(int n, double* lower, double* upper,
                                double* u_out, double* v_out) {
  return guarded([&] {
    require_out(lower);
    require_out(upper);
    const auto [lo, hi] = planar_cube_bounds(n);
    *lower = lo.value;
    *upper = hi.value;
    const OrthoPair& pair = std::get<OrthoPair>(hi.argument);
    write_vec(pair.u, u_out);
    write_vec(pair.v, v_out);
  });
}

pp_status pp_fp_extrema(int m, double p, double* min_out, double* max_out) {
  return guarded([&] {
    require_out(min_out);
    require_out(max_out);
    const auto [lo, hi] = fp_extrema_sphere(m, LpOrder(p));
    *min_out = lo.value;
    *max_out = hi.value;
  });
}

pp_status pp_numeric_search(const char* objective, double p, int m,
                            const char* constraint, int maximize, int restarts,
                            uint64_t seed, double* value_out, double* arg_out) {
  return guarded([&] {
    require_out(value_out);
    if (objective == nullptr || constraint == nullptr)
      throw std::invalid_argument("null selector");
    const std::string obj = objective, con = constraint;
    SearchObjective so;
    if (obj == "l1") so = SearchObjective::l1_sum;
    else if (obj == "fp") so = SearchObjective::fp_sum;
    else if (obj == "minor-sum") so = SearchObjective::planar_minor_sum;
    else throw std::invalid_argument("unknown objective: " + obj);
    SearchConstraint sc;
    if (con == "sphere") sc = SearchConstraint::unit_sphere;
    else if (con == "zero-sum") sc = SearchConstraint::zero_sum_unit_sphere;
    else if (con == "pair") sc = SearchConstraint::orthonormal_pair;
    else throw std::invalid_argument("unknown constraint: " + con);

    SearchOptions opts;
    opts.restarts = restarts;
    opts.seed = seed;
    opts.fp_p = p;
    const ExtremalResult res = numeric_search(
        so, m, sc, maximize != 0 ? ExtremalKind::max : ExtremalKind::min, opts);
    *value_out = res.value;
    if (arg_out != nullptr) {
      if (const auto* d = std::get_if<Direction>(&res.argument)) {
        write_vec(d->coords, arg_out);
      } else {
        const auto& pair = std::get<OrthoPair>(res.argument);
        write_vec(pair.u, arg_out);
        write_vec(pair.v, arg_out + pair.dim());
      }
    }
  });
}

pp_status pp_oracle_hyperplane_shadow(const char* body, const double* a,
                                      int len, long long samples, uint64_t seed,
                                      double* out, double* stderr_out) {
  return guarded([&] {
    require_out(out);
    const BodyTag tag = parse_body(body);
    double err = 0.0;
    if (tag == BodyTag::simplex_centered) {
      const Direction d = as_zero_sum_direction(a, len);
      const int n = len - 1;
      const auto bodies = standard_bodies(n);
      std::vector<double> ones(len, 1.0 / std::sqrt(static_cast<double>(len)));
      const auto basis = orthobasis_of_complement({ones, d.coords}, len);
      if (n == 2) {
        *out = shadow_length_1d(bodies.simplex, basis[0]);
      } else if (n == 3) {
        const auto pts = shadow_vertices(bodies.simplex, basis);
        std::vector<std::array<double, 2>> flat(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) flat[i] = {pts[i][0], pts[i][1]};
        *out = hull_area_2d(flat).area;
      } else {
        const McEstimate est = shadow_volume_mc(bodies.simplex, basis, samples, seed);
        *out = est.value;
        err = est.std_error;
      }
    } else {
      const Direction d = as_direction(a, len);
      const auto bodies = standard_bodies(len);
      const VPolytope& P = tag == BodyTag::cube ? bodies.cube : bodies.cross;
      const auto basis = orthobasis_of_complement({d.coords}, len);
      if (len == 2) {
        *out = shadow_length_1d(P, basis[0]);
      } else if (len == 3) {
        const auto pts = shadow_vertices(P, basis);
        std::vector<std::array<double, 2>> flat(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) flat[i] = {pts[i][0], pts[i][1]};
        *out = hull_area_2d(flat).area;
      } else {
        const McEstimate est = shadow_volume_mc(P, basis, samples, seed);
        *out = est.value;
        err = est.std_error;
      }
    }
    if (stderr_out != nullptr) *stderr_out = err;
  });
}

pp_status pp_oracle_planar_shadow(const char* body, const double* u,
                                  const double* v, int len, double* out) {
  return guarded([&] {
    require_out(out);
    const BodyTag tag = parse_body(body);
    const OrthoPair pair = as_pair(u, v, len);
    if (tag == BodyTag::simplex_centered) {
      // planar shadows of the simplex live in R^{n+1} with n = len - 1
      const auto bodies = standard_bodies(len - 1);
      *out = shadow_area_2d(bodies.simplex, pair);
    } else {
      const auto bodies = standard_bodies(len);
      *out = shadow_area_2d(tag == BodyTag::cube ? bodies.cube : bodies.cross, pair);
    }
  });
}

pp_status pp_cross_section(const double* u, const double* v, int len,
                           pp_polygon** out) {
  return guarded([&] {
    require_out(out);
    auto handle = std::make_unique<pp_polygon>();
    handle->poly = cross_section_polygon(as_pair(u, v, len)).polygon;
    *out = handle.release();
  });
}

pp_status pp_cube_shadow_polygon(const double* u, const double* v, int len,
                                 pp_polygon** out) {
  return guarded([&] {
    require_out(out);
    auto handle = std::make_unique<pp_polygon>();
    handle->poly = cube_shadow_polygon(as_pair(u, v, len));
    *out = handle.release();
  });
}

int pp_polygon_vertex_count(const pp_polygon* polygon) {
  return polygon == nullptr ? 0 : static_cast<int>(polygon->poly.vertices.size());
}

pp_status pp_polygon_vertices(const pp_polygon* polygon, double* st_out) {
  return guarded([&] {
    if (polygon == nullptr) throw std::invalid_argument("null polygon");
    require_out(st_out);
    for (std::size_t i = 0; i < polygon->poly.vertices.size(); ++i) {
      st_out[2 * i] = polygon->poly.vertices[i][0];
      st_out[2 * i + 1] = polygon->poly.vertices[i][1];
    }
  });
}

pp_status pp_polygon_area(const pp_polygon* polygon, double* out) {
  return guarded([&] {
    if (polygon == nullptr) throw std::invalid_argument("null polygon");
    require_out(out);
    *out = polygon_area(polygon->poly);
  });
}

pp_status pp_polygon_polar(const pp_polygon* polygon, pp_polygon** out) {
  return guarded([&] {
    if (polygon == nullptr) throw std::invalid_argument("null polygon");
    require_out(out);
    auto handle = std::make_unique<pp_polygon>();
    handle->poly = polar_polygon(polygon->poly);
    *out = handle.release();
  });
}

pp_status pp_polygon_mahler(const pp_polygon* polygon, double* out) {
  return guarded([&] {
    if (polygon == nullptr) throw std::invalid_argument("null polygon");
    require_out(out);
    *out = mahler_product(polygon->poly);
  });
}

void pp_polygon_free(pp_polygon* polygon) { delete polygon; }

pp_status pp_nazarov_bound(int n, double* out) {
  return guarded([&] {
    require_out(out);
    *out = nazarov_bound(n);
  });
}

pp_status pp_duality_gap(const double* u, const double* v, int len,
                         double* hausdorff_out, double* tolerance_out) {
  return guarded([&] {
    require_out(hausdorff_out);
    const DualityCheck check = shadow_section_duality_check(as_pair(u, v, len));
    *hausdorff_out = check.hausdorff;
    if (tolerance_out != nullptr) *tolerance_out = check.tolerance;
  });
}

pp_status pp_verify(const char* suite, int n_lo, int n_hi, int trials,
                    long long samples, uint64_t seed, pp_report** out) {
  return guarded([&] {
    require_out(out);
    if (suite == nullptr) throw std::invalid_argument("null suite name");
    VerifyOptions opt;
    opt.n_lo = n_lo > 0 ? n_lo : 0;
    opt.n_hi = n_hi > 0 ? n_hi : 0;
    opt.trials = trials > 0 ? trials : 0;
    opt.samples = samples > 0 ? samples : 0;
    opt.seed = seed;
    auto handle = std::make_unique<pp_report>();
    handle->report = run_suite(parse_suite(suite), opt);
    *out = handle.release();
  });
}

int pp_report_case_count(const pp_report* report) {
  return report == nullptr ? 0 : static_cast<int>(report->report.cases.size());
}

int pp_report_pass_count(const pp_report* report) {
  return report == nullptr ? 0 : report->report.pass_count();
}

int pp_report_passed(const pp_report* report) {
  return report != nullptr && report->report.passed() ? 1 : 0;
}

pp_status pp_report_to_json(const pp_report* report, char** json_out) {
  return guarded([&] {
    if (report == nullptr) throw std::invalid_argument("null report");
    require_out(json_out);
    const std::string text = report_to_json(report->report).dump(2);
    char* buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *json_out = buf;
  });
}

void pp_report_free(pp_report* report) { delete report; }

void pp_string_free(char* s) { delete[] s; }

}  // extern "C"
