#include "polyproj/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polyproj/closedform.hpp"
#include "polyproj/extremal.hpp"
#include "polyproj/lpbodies.hpp"
#include "polyproj/oracle.hpp"
#include "polyproj/sections.hpp"

namespace polyproj {

namespace {

using nlohmann::json;

enum class Cmp { two_sided, le, ge };

VerifyCase make_case(json inputs, double formula, double oracle, double tol,
                     Cmp cmp = Cmp::two_sided) {
  VerifyCase c;
  switch (cmp) {
    case Cmp::two_sided:
      c.pass = std::abs(formula - oracle) <= tol;
      break;
    case Cmp::le:
      c.pass = formula <= oracle + tol;
      inputs["cmp"] = "le";
      break;
    case Cmp::ge:
      c.pass = formula >= oracle - tol;
      inputs["cmp"] = "ge";
      break;
  }
  c.inputs = std::move(inputs);
  c.formula_value = formula;
  c.oracle_value = oracle;
  c.tolerance = tol;
  return c;
}

struct SuiteSpec {
  int default_lo, default_hi;
  int min_allowed, max_allowed;
  int default_trials;
};

SuiteSpec spec_of(Suite suite) {
  switch (suite) {
    case Suite::simplex_hyperplane: return {3, 5, 2, 7, 1000};
    case Suite::cube_planar:        return {2, 8, 2, 16, 1000};
    case Suite::duality:            return {2, 8, 2, 12, 100};
    case Suite::mahler:             return {2, 8, 2, 50, 100};
    case Suite::nazarov:            return {3, 12, 3, 50, 100};
    case Suite::lp_reduction:       return {2, 12, 2, 20, 50};
    case Suite::width:              return {2, 10, 2, 50, 1000};
    case Suite::all:                return {0, 0, 0, 0, 0};
  }
  throw std::invalid_argument("unknown suite");
}

struct Resolved {
  int n_lo, n_hi, trials;
  std::int64_t samples;
  std::uint64_t seed;
};

Resolved resolve(Suite suite, const VerifyOptions& opt) {
  const SuiteSpec s = spec_of(suite);
  Resolved r;
  r.n_lo = opt.n_lo > 0 ? opt.n_lo : s.default_lo;
  r.n_hi = opt.n_hi > 0 ? opt.n_hi : s.default_hi;
  r.n_lo = std::max(r.n_lo, s.min_allowed);
  r.n_hi = std::min(r.n_hi, s.max_allowed);
  if (r.n_lo > r.n_hi) throw std::invalid_argument("empty dimension range for suite");
  r.trials = opt.trials > 0 ? opt.trials : s.default_trials;
  r.samples = opt.samples > 0 ? opt.samples : 200000;
  r.seed = opt.seed;
  return r;
}

// Orthonormal basis of the subspace orthogonal to both the all-ones
// direction and a, inside R^{n+1}; shadows of the simplex live there.
std::vector<std::vector<double>> simplex_shadow_basis(const Direction& a) {
  const int m = a.dim();
  std::vector<double> ones(m, 1.0 / std::sqrt(static_cast<double>(m)));
  return orthobasis_of_complement({ones, a.coords}, m);
}

void run_simplex_hyperplane(const Resolved& r, std::vector<VerifyCase>& cases,
                            SplitMix64& rng) {
  constexpr int kMcTrials = 20;
  for (int n = r.n_lo; n <= r.n_hi; ++n) {
    const auto bodies = standard_bodies(n);
    if (n <= 3) {
      for (int t = 0; t < r.trials; ++t) {
        const Direction a = sample_direction(n + 1, true, rng);
        const double formula = simplex_hyperplane_shadow(a);
        const auto basis = simplex_shadow_basis(a);
        double oracle;
        if (n == 2) {
          oracle = shadow_length_1d(bodies.simplex, basis[0]);
        } else {
          const auto pts = shadow_vertices(bodies.simplex, basis);
          std::vector<std::array<double, 2>> flat(pts.size());
          for (std::size_t i = 0; i < pts.size(); ++i)
            flat[i] = {pts[i][0], pts[i][1]};
          oracle = hull_area_2d(flat).area;
        }
        cases.push_back(make_case({{"n", n}, {"trial", t}, {"oracle", "hull"}},
                                  formula, oracle, 1e-9));
      }
    } else {
      for (int t = 0; t < kMcTrials; ++t) {
        const Direction a = sample_direction(n + 1, true, rng);
        const double formula = simplex_hyperplane_shadow(a);
        const auto basis = simplex_shadow_basis(a);
        const McEstimate est =
            shadow_volume_mc(bodies.simplex, basis, r.samples, rng.next());
        cases.push_back(make_case({{"n", n}, {"trial", t}, {"oracle", "mc"}},
                                  formula, est.value, 4.0 * est.std_error));
      }
    }
  }
}

void run_cube_planar(const Resolved& r, std::vector<VerifyCase>& cases,
                     SplitMix64& rng) {
  for (int n = r.n_lo; n <= r.n_hi; ++n) {
    const auto bodies = standard_bodies(n);
    for (int t = 0; t < r.trials; ++t) {
      const OrthoPair pair = sample_orthopair(n, rng);
      const double formula = cube_planar_shadow(pair);
      const double oracle = shadow_area_2d(bodies.cube, pair);
      cases.push_back(make_case({{"n", n}, {"trial", t}, {"check", "hull"}},
                                formula, oracle, 1e-9));
      double sq = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          const double mij = pair.u[i] * pair.v[j] - pair.u[j] * pair.v[i];
          sq += mij * mij;
        }
      cases.push_back(make_case({{"n", n}, {"trial", t}, {"check", "lagrange"}},
                                sq, 1.0, 1e-12));
    }
    const OrthoPair trig = trig_pair(n);
    cases.push_back(make_case({{"n", n}, {"check", "trig"}},
                              cube_planar_shadow(trig),
                              1.0 / std::tan(std::numbers::pi / (2.0 * n)), 1e-9));
    OrthoPair coord;
    coord.u.assign(n, 0.0);
    coord.v.assign(n, 0.0);
    coord.u[0] = 1.0;
    coord.v[1] = 1.0;
    cases.push_back(make_case({{"n", n}, {"check", "coordinate"}},
                              cube_planar_shadow(coord), 1.0, 0.0));
  }
}

void run_duality(const Resolved& r, std::vector<VerifyCase>& cases,
                 SplitMix64& rng) {
  for (int n = r.n_lo; n <= r.n_hi; ++n) {
    for (int t = 0; t < r.trials; ++t) {
      const OrthoPair pair = sample_orthopair(n, rng);
      const DualityCheck check = shadow_section_duality_check(pair);
      cases.push_back(make_case({{"n", n}, {"trial", t}}, check.hausdorff, 0.0,
                                check.tolerance));
    }
    const DualityCheck check = shadow_section_duality_check(trig_pair(n));
    cases.push_back(make_case({{"n", n}, {"pair", "trig"}}, check.hausdorff, 0.0,
                              check.tolerance));
  }
}

void run_mahler(const Resolved& r, std::vector<VerifyCase>& cases,
                SplitMix64& rng) {
  for (int n = r.n_lo; n <= r.n_hi; ++n) {
    for (int t = 0; t < r.trials; ++t) {
      const OrthoPair pair = sample_orthopair(n, rng);
      const SectionPolygon section = cross_section_polygon(pair);
      const int k = static_cast<int>(section.polygon.vertices.size()) / 2;
      const double sk = std::sin(std::numbers::pi / (2.0 * k));
      cases.push_back(make_case({{"n", n}, {"trial", t}, {"k", k}},
                                mahler_product(section.polygon),
                                4.0 * k * k * sk * sk, 1e-9, Cmp::le));
    }
    const SectionPolygon section = cross_section_polygon(trig_pair(n));
    const double sn = std::sin(std::numbers::pi / (2.0 * n));
    cases.push_back(make_case({{"n", n}, {"pair", "trig"}},
                              mahler_product(section.polygon),
                              4.0 * n * n * sn * sn, 1e-8));
  }
}

void run_nazarov(const Resolved& r, std::vector<VerifyCase>& cases,
                 SplitMix64& rng) {
  for (int n = r.n_lo; n <= r.n_hi; ++n) {
    const double bound = nazarov_bound(n);
    for (int t = 0; t < r.trials; ++t) {
      const OrthoPair pair = sample_orthopair(n, rng);
      const double area = polygon_area(cross_section_polygon(pair).polygon);
      cases.push_back(
          make_case({{"n", n}, {"trial", t}}, area, bound, 1e-9, Cmp::ge));
    }
    const double trig_area = polygon_area(cross_section_polygon(trig_pair(n)).polygon);
    cases.push_back(make_case({{"n", n}, {"pair", "trig"}}, trig_area, bound, 1e-6));
  }
}

void run_lp_reduction(const Resolved& r, std::vector<VerifyCase>& cases,
                      SplitMix64& rng) {
  const LpOrder p1(1.0);
  for (int n = r.n_lo; n <= r.n_hi; ++n) {
    const FacetData cross_facets = facet_data(BodyTag::cross, n);
    for (int t = 0; t < r.trials; ++t) {
      const Direction a = sample_direction(n, false, rng);
      cases.push_back(make_case({{"n", n}, {"trial", t}, {"body", "cube"}},
                                lp_cube_support_p(a, p1),
                                cube_hyperplane_shadow(a), 1e-12));
      cases.push_back(make_case({{"n", n}, {"trial", t}, {"body", "cross"}},
                                lp_cross_support_p(a, p1),
                                cauchy_shadow(cross_facets, a), 1e-12));
      const Direction az = sample_direction(n + 1, true, rng);
      cases.push_back(make_case({{"n", n}, {"trial", t}, {"body", "simplex"}},
                                lp_simplex_support_p(az, p1),
                                simplex_hyperplane_shadow(az), 1e-12));
    }
  }
}

void run_width(const Resolved& r, std::vector<VerifyCase>& cases,
               SplitMix64& rng) {
  for (int n = r.n_lo; n <= r.n_hi; ++n) {
    const double ratio_const = width_projection_ratio_constant(n);
    for (int t = 0; t < r.trials; ++t) {
      const Direction a = sample_direction(n + 1, true, rng);
      cases.push_back(make_case({{"n", n}, {"trial", t}, {"check", "ratio"}},
                                width_projection_ratio(a), ratio_const, 1e-12));
      cases.push_back(make_case(
          {{"n", n}, {"trial", t}, {"check", "width-gauge"}},
          simplex_width(a) * simplex_gauge_diff_body(a), 1.0, 1e-12, Cmp::ge));
    }
    const auto [wmin, wmax] = simplex_extremal_widths(n);
    for (const auto* res : {&wmin, &wmax}) {
      const Direction& arg = std::get<Direction>(res->argument);
      const char* kind = res->kind == ExtremalKind::min ? "min" : "max";
      cases.push_back(make_case({{"n", n}, {"check", "extremal-width"}, {"kind", kind}},
                                simplex_width(arg), res->value, 1e-10));
      cases.push_back(make_case(
          {{"n", n}, {"check", "width-gauge-equality"}, {"kind", kind}},
          simplex_width(arg) * simplex_gauge_diff_body(arg), 1.0, 1e-10));
    }
  }
}

}  // namespace

bool VerificationReport::passed() const {
  return pass_count() == static_cast<int>(cases.size());
}

int VerificationReport::pass_count() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(),
                                        [](const VerifyCase& c) { return c.pass; }));
}

Suite parse_suite(const std::string& name) {
  if (name == "simplex-hyperplane") return Suite::simplex_hyperplane;
  if (name == "cube-planar") return Suite::cube_planar;
  if (name == "duality") return Suite::duality;
  if (name == "mahler") return Suite::mahler;
  if (name == "nazarov") return Suite::nazarov;
  if (name == "lp-reduction") return Suite::lp_reduction;
  if (name == "width") return Suite::width;
  if (name == "all") return Suite::all;
  throw std::invalid_argument("unknown suite: " + name);
}

const char* suite_name(Suite suite) {
  switch (suite) {
    case Suite::simplex_hyperplane: return "simplex-hyperplane";
    case Suite::cube_planar: return "cube-planar";
    case Suite::duality: return "duality";
    case Suite::mahler: return "mahler";
    case Suite::nazarov: return "nazarov";
    case Suite::lp_reduction: return "lp-reduction";
    case Suite::width: return "width";
    case Suite::all: return "all";
  }
  return "?";
}

VerificationReport run_suite(Suite suite, const VerifyOptions& options) {
  VerificationReport report;
  report.suite = suite_name(suite);
  report.seed = options.seed;

  if (suite == Suite::all) {
    for (Suite s : {Suite::simplex_hyperplane, Suite::cube_planar, Suite::duality,
                    Suite::mahler, Suite::nazarov, Suite::lp_reduction,
                    Suite::width}) {
      VerificationReport sub = run_suite(s, options);
      for (VerifyCase& c : sub.cases) {
        c.inputs["suite"] = sub.suite;
        report.cases.push_back(std::move(c));
      }
    }
    return report;
  }

  const Resolved r = resolve(suite, options);
  // every suite draws from its own substream, so "all" reproduces the
  // individually run suites case for case
  SplitMix64 rng = SplitMix64(r.seed).child(static_cast<std::uint64_t>(suite) + 1);
  switch (suite) {
    case Suite::simplex_hyperplane: run_simplex_hyperplane(r, report.cases, rng); break;
    case Suite::cube_planar: run_cube_planar(r, report.cases, rng); break;
    case Suite::duality: run_duality(r, report.cases, rng); break;
    case Suite::mahler: run_mahler(r, report.cases, rng); break;
    case Suite::nazarov: run_nazarov(r, report.cases, rng); break;
    case Suite::lp_reduction: run_lp_reduction(r, report.cases, rng); break;
    case Suite::width: run_width(r, report.cases, rng); break;
    case Suite::all: break;
  }
  return report;
}

nlohmann::json report_to_json(const VerificationReport& report) {
  json cases = json::array();
  for (const VerifyCase& c : report.cases) {
    cases.push_back({{"inputs", c.inputs},
                     {"formula_value", c.formula_value},
                     {"oracle_value", c.oracle_value},
                     {"tolerance", c.tolerance},
                     {"pass", c.pass}});
  }
  return json{{"suite", report.suite},
              {"seed", report.seed},
              {"cases", std::move(cases)},
              {"wall_time_s", report.wall_time_s}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport report;
  report.suite = j.at("suite").get<std::string>();
  report.seed = j.at("seed").get<std::uint64_t>();
  report.wall_time_s = j.at("wall_time_s").get<double>();
  for (const auto& jc : j.at("cases")) {
    VerifyCase c;
    c.inputs = jc.at("inputs");
    c.formula_value = jc.at("formula_value").get<double>();
    c.oracle_value = jc.at("oracle_value").get<double>();
    c.tolerance = jc.at("tolerance").get<double>();
    c.pass = jc.at("pass").get<bool>();
    report.cases.push_back(std::move(c));
  }
  return report;
}

}  // namespace polyproj
