#include <doctest.h>

#include <cmath>
#include <numbers>

#include "polyproj/closedform.hpp"
#include "polyproj/extremal.hpp"
#include "polyproj/oracle.hpp"

using namespace polyproj;

namespace {

Direction zero_sum(std::vector<double> raw) { return project_zero_sum(raw); }

}  // namespace

TEST_CASE("factorial is exact small and accurate large") {
  CHECK(factorial(0) == 1.0);
  CHECK(factorial(5) == 120.0);
  CHECK(factorial(20) == 2432902008176640000.0);
  CHECK(factorial(21) == doctest::Approx(51090942171709440000.0).epsilon(1e-9));
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("body volume constants") {
  const BodyVolumeConstants c = body_volume_constants(3);
  CHECK(c.simplex_volume == doctest::Approx(2.0 / 6.0));
  CHECK(c.simplex_facet_volume == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK(c.cross_facet_volume == doctest::Approx(std::sqrt(3.0) / 2.0));
}

TEST_CASE("simplex hyperplane shadow formula") {
  const Direction edge = zero_sum({1.0, -1.0, 0.0});
  CHECK(simplex_hyperplane_shadow(edge) ==
        doctest::Approx(std::sqrt(6.0) / 2.0).epsilon(1e-12));

  const Direction half = zero_sum({1.0, 1.0, -1.0, -1.0});
  CHECK(simplex_hyperplane_shadow(half) == doctest::Approx(1.0).epsilon(1e-12));

  // permutation and sign invariance
  const Direction perm = zero_sum({-1.0, 1.0, -1.0, 1.0});
  CHECK(simplex_hyperplane_shadow(perm) ==
        doctest::Approx(simplex_hyperplane_shadow(half)).epsilon(1e-14));

  Direction not_zero_sum = normalize(std::vector<double>{1.0, 0.0, 0.0});
  CHECK_THROWS_AS(simplex_hyperplane_shadow(not_zero_sum), std::invalid_argument);
  CHECK(simplex_hyperplane_shadow(not_zero_sum, true) ==
        doctest::Approx(simplex_hyperplane_shadow(zero_sum({1.0, 0.0, 0.0}))));
}

TEST_CASE("cube hyperplane shadow formula") {
  CHECK(cube_hyperplane_shadow(normalize(std::vector<double>{1, 0, 0})) == 1.0);
  CHECK(cube_hyperplane_shadow(normalize(std::vector<double>{1, 1, 1, 1})) ==
        doctest::Approx(2.0));
  CHECK(cube_hyperplane_shadow(normalize(std::vector<double>{1, 1, 0})) ==
        doctest::Approx(std::numbers::sqrt2));
}

TEST_CASE("cube planar shadow formula and bounds") {
  OrthoPair e12;
  e12.u = {1, 0, 0};
  e12.v = {0, 1, 0};
  CHECK(cube_planar_shadow(e12) == 1.0);

  CHECK(cube_planar_shadow(trig_pair(3)) ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

  SplitMix64 rng(2);
  for (int n : {2, 3, 5, 8, 20, 50}) {
    for (int t = 0; t < 50; ++t) {
      const OrthoPair pair = sample_orthopair(n, rng);
      const double v = cube_planar_shadow(pair);
      CHECK(v >= 1.0 - 1e-12);
      CHECK(v <= 1.0 / std::tan(std::numbers::pi / (2.0 * n)) + 1e-12);
    }
  }
}

TEST_CASE("simplex width and difference-body gauge") {
  const Direction edge = zero_sum({1.0, -1.0, 0.0, 0.0});
  CHECK(simplex_width(edge) == doctest::Approx(std::numbers::sqrt2));
  CHECK(simplex_gauge_diff_body(edge) ==
        doctest::Approx(1.0 / std::numbers::sqrt2));

  const Direction half = zero_sum({1.0, 1.0, -1.0, -1.0});
  CHECK(simplex_width(half) == doctest::Approx(1.0));  // 2/sqrt(n+1), n = 3
  CHECK(simplex_gauge_diff_body(half) == doctest::Approx(std::sqrt(4.0) / 2.0));

  Direction neg = half;
  for (double& c : neg.coords) c = -c;
  CHECK(simplex_width(neg) == doctest::Approx(simplex_width(half)));
}

TEST_CASE("points scaled by the gauge land on the difference-body boundary") {
  SplitMix64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const Direction a = sample_direction(6, true, rng);
    const double g = simplex_gauge_diff_body(a);
    double l1 = 0.0;
    for (double c : a.coords) l1 += std::abs(c / g);
    CHECK(l1 == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("facet data closes and matches the documented normals") {
  for (BodyTag tag : {BodyTag::cube, BodyTag::cross, BodyTag::simplex_centered}) {
    const FacetData f = facet_data(tag, 3);
    std::vector<double> resultant(f.ambient_dim, 0.0);
    for (std::size_t i = 0; i < f.normals.size(); ++i) {
      CHECK(std::abs(norm2(f.normals[i]) - 1.0) <= 1e-12);
      for (int d = 0; d < f.ambient_dim; ++d)
        resultant[d] += f.volumes[i] * f.normals[i][d];
    }
    CHECK(norm2(resultant) <= 1e-10);
  }

  const FacetData cube = facet_data(BodyTag::cube, 3);
  CHECK(cube.normals.size() == 6);

  const FacetData cross = facet_data(BodyTag::cross, 3);
  CHECK(cross.normals.size() == 8);
  for (double v : cross.volumes) CHECK(v == doctest::Approx(std::sqrt(3.0) / 2.0));
  CHECK_THROWS_AS(facet_data(BodyTag::cross, 21), std::length_error);

  const FacetData simp = facet_data(BodyTag::simplex_centered, 3);
  CHECK(simp.normals.size() == 4);
  for (std::size_t i = 0; i < simp.normals.size(); ++i)
    for (std::size_t j = i + 1; j < simp.normals.size(); ++j)
      CHECK(dot(simp.normals[i], simp.normals[j]) == doctest::Approx(-1.0 / 3.0));
}

TEST_CASE("facet sums reproduce the dedicated formulas") {
  SplitMix64 rng(8);
  for (int n : {2, 3, 6, 10}) {
    const FacetData cube = facet_data(BodyTag::cube, n);
    const FacetData simp = facet_data(BodyTag::simplex_centered, n);
    for (int t = 0; t < 50; ++t) {
      const Direction a = sample_direction(n, false, rng);
      CHECK(std::abs(cauchy_shadow(cube, a) - cube_hyperplane_shadow(a)) <=
            1e-12);
      const Direction az = sample_direction(n + 1, true, rng);
      CHECK(std::abs(cauchy_shadow(simp, az) - simplex_hyperplane_shadow(az)) <=
            1e-12);
    }
  }
  const FacetData cross3 = facet_data(BodyTag::cross, 3);
  CHECK(cauchy_shadow(cross3, normalize(std::vector<double>{1, 0, 0})) ==
        doctest::Approx(2.0));

  const FacetData cube4 = facet_data(BodyTag::cube, 4);
  CHECK_THROWS_AS(cauchy_shadow(cube4, normalize(std::vector<double>{1, 0, 0})),
                  std::invalid_argument);
}

TEST_CASE("shadow over gauge is constant in the direction") {
  SplitMix64 rng(9);
  CHECK(width_projection_ratio(sample_direction(3, true, rng)) ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(width_projection_ratio_constant(5) ==
        doctest::Approx(std::sqrt(6.0) / 24.0));
  for (int n : {2, 5, 10}) {
    const double expected = width_projection_ratio_constant(n);
    CHECK(expected ==
          doctest::Approx(n * body_volume_constants(n).simplex_volume));
    for (int t = 0; t < 100; ++t) {
      const Direction a = sample_direction(n + 1, true, rng);
      CHECK(std::abs(width_projection_ratio(a) - expected) <= 1e-12);
    }
  }
}

TEST_CASE("shadows stay inside the extremal range") {
  SplitMix64 rng(10);
  for (int n = 2; n <= 10; ++n) {
    const auto [lo, hi] = simplex_extremal_volumes(n);
    for (int t = 0; t < 100; ++t) {
      const Direction a = sample_direction(n + 1, true, rng);
      const double v = simplex_hyperplane_shadow(a);
      CHECK(v >= lo.value - 1e-12);
      CHECK(v <= hi.value + 1e-12);
    }
  }
}

TEST_CASE("width times gauge is at least one with equality at the extremizers") {
  SplitMix64 rng(12);
  for (int n : {2, 3, 4, 7, 10}) {
    for (int t = 0; t < 200; ++t) {
      const Direction a = sample_direction(n + 1, true, rng);
      CHECK(simplex_width(a) * simplex_gauge_diff_body(a) >= 1.0 - 1e-12);
    }
    const auto [wmin, wmax] = simplex_extremal_widths(n);
    for (const ExtremalResult* r : {&wmin, &wmax}) {
      const Direction& arg = std::get<Direction>(r->argument);
      CHECK(std::abs(simplex_width(arg) * simplex_gauge_diff_body(arg) - 1.0) <=
            1e-10);
    }
  }
}

TEST_CASE("simplex formula matches the 2D hull oracle at n = 3") {
  SplitMix64 rng(13);
  const StandardBodies bodies = standard_bodies(3);
  std::vector<double> ones(4, 0.5);  // (1,1,1,1)/2 is unit
  for (int t = 0; t < 200; ++t) {
    const Direction a = sample_direction(4, true, rng);
    const auto basis = orthobasis_of_complement({ones, a.coords}, 4);
    const auto pts = shadow_vertices(bodies.simplex, basis);
    std::vector<std::array<double, 2>> flat(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) flat[i] = {pts[i][0], pts[i][1]};
    CHECK(std::abs(simplex_hyperplane_shadow(a) - hull_area_2d(flat).area) <=
          1e-9);
  }
}
