#include <doctest.h>

#include <polyproj.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>
#include <vector>

#include <json.hpp>

TEST_CASE("status names and version") {
  CHECK(std::string(pp_status_name(PP_OK)) == "ok");
  CHECK(std::string(pp_status_name(PP_ERROR_TOO_LARGE)) == "enumeration too large");
  CHECK(pp_version() != nullptr);
}

TEST_CASE("normalize and error reporting") {
  const double x[3] = {2.0, 0.0, 0.0};
  double out[3];
  int zero_sum = -1;
  REQUIRE(pp_normalize(x, 3, out, &zero_sum) == PP_OK);
  CHECK(out[0] == 1.0);
  CHECK(zero_sum == 0);

  const double z[2] = {0.0, 0.0};
  CHECK(pp_normalize(z, 2, out, nullptr) == PP_ERROR_DEGENERATE);
  CHECK(std::string(pp_last_error()) == "degenerate direction");

  CHECK(pp_normalize(nullptr, 3, out, nullptr) == PP_ERROR_INVALID_ARGUMENT);
  CHECK(pp_normalize(x, 3, nullptr, nullptr) == PP_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("shadow formulas through the C surface") {
  const double half[4] = {0.5, 0.5, -0.5, -0.5};
  double value = 0.0;
  REQUIRE(pp_simplex_hyperplane_shadow(half, 4, 0, &value) == PP_OK);
  CHECK(value == doctest::Approx(1.0));

  const double e1[3] = {1.0, 0.0, 0.0};
  CHECK(pp_simplex_hyperplane_shadow(e1, 3, 0, &value) ==
        PP_ERROR_INVALID_ARGUMENT);
  REQUIRE(pp_simplex_hyperplane_shadow(e1, 3, 1, &value) == PP_OK);

  REQUIRE(pp_cube_hyperplane_shadow(e1, 3, &value) == PP_OK);
  CHECK(value == 1.0);

  REQUIRE(pp_cross_hyperplane_shadow(e1, 3, &value) == PP_OK);
  CHECK(value == doctest::Approx(2.0));
  std::vector<double> big(25, 0.0);
  big[0] = 1.0;
  CHECK(pp_cross_hyperplane_shadow(big.data(), 25, &value) == PP_ERROR_TOO_LARGE);

  double u[3], v[3];
  REQUIRE(pp_trig_pair(3, u, v) == PP_OK);
  REQUIRE(pp_cube_planar_shadow(u, v, 3, &value) == PP_OK);
  CHECK(value == doctest::Approx(std::sqrt(3.0)));

  const double edge[4] = {1.0, -1.0, 0.0, 0.0};
  double norm_edge[4];
  REQUIRE(pp_normalize(edge, 4, norm_edge, nullptr) == PP_OK);
  REQUIRE(pp_simplex_width(norm_edge, 4, &value) == PP_OK);
  CHECK(value == doctest::Approx(std::sqrt(2.0)));
  REQUIRE(pp_simplex_gauge(norm_edge, 4, &value) == PP_OK);
  CHECK(value == doctest::Approx(1.0 / std::sqrt(2.0)));
  REQUIRE(pp_width_projection_ratio(norm_edge, 4, &value) == PP_OK);
  CHECK(value == doctest::Approx(1.0));  // sqrt(n+1)/(n-1)! at n = 3
}

TEST_CASE("lp support functions through the C surface") {
  const double e1[3] = {1.0, 0.0, 0.0};
  double value = 0.0, err = 0.0;
  REQUIRE(pp_lp_cross_support_exact(e1, 3, 1.0, &value) == PP_OK);
  CHECK(value == doctest::Approx(2.0));

  REQUIRE(pp_lp_cross_support_mc(e1, 3, 1.0, 5000, 2, &value, &err) == PP_OK);
  CHECK(std::abs(value - 2.0) <= 1e-9);  // |eps_1| = 1 regardless of signs

  double dir[5];
  REQUIRE(pp_sample_direction(5, 0, 9, dir) == PP_OK);
  REQUIRE(pp_lp_cube_support(dir, 5, 2.0, &value) == PP_OK);
  CHECK(value == doctest::Approx(2.0));

  double zs[5];
  REQUIRE(pp_sample_direction(5, 1, 9, zs) == PP_OK);
  double lp1 = 0.0, shadow = 0.0;
  REQUIRE(pp_lp_simplex_support(zs, 5, 1.0, &lp1) == PP_OK);
  REQUIRE(pp_simplex_hyperplane_shadow(zs, 5, 0, &shadow) == PP_OK);
  CHECK(lp1 == doctest::Approx(shadow).epsilon(1e-14));

  REQUIRE(pp_rademacher_moment(e1, 3, 3.0, 0, 0, &value, &err) == PP_OK);
  CHECK(value == doctest::Approx(1.0));
  CHECK(err == 0.0);

  CHECK(pp_lp_cube_support(dir, 5, 0.5, &value) == PP_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("extremal results through the C surface") {
  double lo = 0.0, hi = 0.0;
  std::vector<double> argmin(6), argmax(6);
  REQUIRE(pp_simplex_extremal_volumes(5, &lo, &hi, argmin.data(), argmax.data()) ==
          PP_OK);
  CHECK(lo == doctest::Approx(std::sqrt(3.0) / 24.0));
  CHECK(hi == doctest::Approx(0.125));
  double check = 0.0;
  REQUIRE(pp_simplex_hyperplane_shadow(argmax.data(), 6, 0, &check) == PP_OK);
  CHECK(check == doctest::Approx(hi));

  REQUIRE(pp_simplex_extremal_widths(3, &lo, &hi, argmin.data(), argmax.data()) ==
          PP_OK);
  CHECK(lo == doctest::Approx(1.0));
  CHECK(hi == doctest::Approx(std::sqrt(2.0)));

  std::vector<double> u(4), v(4);
  REQUIRE(pp_planar_cube_bounds(4, &lo, &hi, u.data(), v.data()) == PP_OK);
  CHECK(lo == 1.0);
  CHECK(hi == doctest::Approx(1.0 / std::tan(std::numbers::pi / 8.0)));

  REQUIRE(pp_fp_extrema(4, 3.0, &lo, &hi) == PP_OK);
  CHECK(lo == doctest::Approx(0.5));
  CHECK(hi == doctest::Approx(1.0));
  CHECK(pp_fp_extrema(4, 2.0, &lo, &hi) == PP_ERROR_INVALID_ARGUMENT);

  double value = 0.0;
  std::vector<double> arg(4);
  REQUIRE(pp_numeric_search("l1", 0.0, 4, "zero-sum", 1, 60, 7, &value,
                            arg.data()) == PP_OK);
  CHECK(std::abs(value - 2.0) <= 1e-6);
  CHECK(pp_numeric_search("bogus", 0.0, 4, "zero-sum", 1, 10, 7, &value, nullptr) ==
        PP_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("oracles through the C surface") {
  const double e1[3] = {1.0, 0.0, 0.0};
  double value = 0.0, err = -1.0;
  REQUIRE(pp_oracle_hyperplane_shadow("cube", e1, 3, 0, 0, &value, &err) == PP_OK);
  CHECK(value == doctest::Approx(1.0));
  CHECK(err == 0.0);

  const double half[4] = {0.5, 0.5, -0.5, -0.5};
  REQUIRE(pp_oracle_hyperplane_shadow("simplex", half, 4, 0, 0, &value, &err) ==
          PP_OK);
  CHECK(std::abs(value - 1.0) <= 1e-9);

  double diag[5];
  REQUIRE(pp_sample_direction(5, 1, 3, diag) == PP_OK);
  REQUIRE(pp_oracle_hyperplane_shadow("simplex", diag, 5, 100000, 3, &value,
                                      &err) == PP_OK);
  double formula = 0.0;
  REQUIRE(pp_simplex_hyperplane_shadow(diag, 5, 0, &formula) == PP_OK);
  CHECK(err > 0.0);
  CHECK(std::abs(value - formula) <= 4.0 * err);

  double u[3], v[3];
  REQUIRE(pp_trig_pair(3, u, v) == PP_OK);
  REQUIRE(pp_oracle_planar_shadow("cube", u, v, 3, &value) == PP_OK);
  CHECK(value == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
}

TEST_CASE("polygon handles") {
  const double u[2] = {1.0, 0.0};
  const double v[2] = {0.0, 1.0};
  pp_polygon* section = nullptr;
  REQUIRE(pp_cross_section(u, v, 2, &section) == PP_OK);
  REQUIRE(section != nullptr);
  CHECK(pp_polygon_vertex_count(section) == 4);

  double area = 0.0;
  REQUIRE(pp_polygon_area(section, &area) == PP_OK);
  CHECK(area == doctest::Approx(2.0));

  double mahler = 0.0;
  REQUIRE(pp_polygon_mahler(section, &mahler) == PP_OK);
  CHECK(mahler == doctest::Approx(8.0));

  pp_polygon* polar = nullptr;
  REQUIRE(pp_polygon_polar(section, &polar) == PP_OK);
  REQUIRE(pp_polygon_area(polar, &area) == PP_OK);
  CHECK(area == doctest::Approx(4.0));

  std::vector<double> st(2 * pp_polygon_vertex_count(section));
  REQUIRE(pp_polygon_vertices(section, st.data()) == PP_OK);
  for (int i = 0; i < pp_polygon_vertex_count(section); ++i)
    CHECK(std::abs(st[2 * i]) + std::abs(st[2 * i + 1]) == doctest::Approx(1.0));

  pp_polygon* shadow = nullptr;
  REQUIRE(pp_cube_shadow_polygon(u, v, 2, &shadow) == PP_OK);
  REQUIRE(pp_polygon_area(shadow, &area) == PP_OK);
  CHECK(area == doctest::Approx(1.0));

  double gap = 0.0, tol = 0.0;
  REQUIRE(pp_duality_gap(u, v, 2, &gap, &tol) == PP_OK);
  CHECK(gap <= tol);

  double bound = 0.0;
  REQUIRE(pp_nazarov_bound(3, &bound) == PP_OK);
  CHECK(bound == doctest::Approx(9.0 / (4.0 * std::sqrt(3.0))));
  CHECK(pp_nazarov_bound(2, &bound) == PP_ERROR_INVALID_ARGUMENT);

  pp_polygon_free(section);
  pp_polygon_free(polar);
  pp_polygon_free(shadow);
}

TEST_CASE("verification reports through the C surface") {
  pp_report* report = nullptr;
  REQUIRE(pp_verify("width", 2, 4, 10, 0, 7, &report) == PP_OK);
  REQUIRE(report != nullptr);
  CHECK(pp_report_passed(report) == 1);
  CHECK(pp_report_case_count(report) > 0);
  CHECK(pp_report_pass_count(report) == pp_report_case_count(report));

  char* text = nullptr;
  REQUIRE(pp_report_to_json(report, &text) == PP_OK);
  const nlohmann::json parsed = nlohmann::json::parse(text);
  CHECK(parsed.at("suite") == "width");
  CHECK(parsed.at("seed") == 7);
  CHECK(parsed.at("cases").size() ==
        static_cast<std::size_t>(pp_report_case_count(report)));
  pp_string_free(text);
  pp_report_free(report);

  CHECK(pp_verify("bogus", 0, 0, 0, 0, 0, &report) == PP_ERROR_INVALID_ARGUMENT);
}
