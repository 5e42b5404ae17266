#include <doctest.h>

#include <cmath>

#include "polyproj/closedform.hpp"
#include "polyproj/oracle.hpp"

using namespace polyproj;

TEST_CASE("standard bodies have the documented vertex lists") {
  const StandardBodies b2 = standard_bodies(2);
  CHECK(b2.cube.vertices.size() == 4);
  CHECK(b2.cross.vertices.size() == 4);
  CHECK(b2.simplex.vertices.size() == 3);

  const StandardBodies b3 = standard_bodies(3);
  for (const auto& v : b3.simplex.vertices)
    CHECK(coord_sum(v) == doctest::Approx(1.0));
  for (const auto& v : b3.simplex_centered.vertices) {
    CHECK(std::abs(coord_sum(v)) <= 1e-12);
    CHECK(dot(v, v) == doctest::Approx(3.0 / 4.0));  // n/(n+1)
  }
  CHECK_THROWS_AS(standard_bodies(21), std::length_error);
}

TEST_CASE("shadow_vertices projects onto basis coordinates") {
  const StandardBodies b = standard_bodies(3);
  const std::vector<std::vector<double>> e12{{1, 0, 0}, {0, 1, 0}};
  const auto pts = shadow_vertices(b.cube, e12);
  CHECK(pts.size() == 8);
  for (const auto& p : pts) {
    CHECK(std::abs(p[0]) == doctest::Approx(0.5));
    CHECK(std::abs(p[1]) == doctest::Approx(0.5));
  }

  // full orthonormal basis is an isometry
  const std::vector<std::vector<double>> full{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  const auto img = shadow_vertices(b.cross, full);
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = i + 1; j < img.size(); ++j) {
      double da = 0.0, db = 0.0;
      for (int d = 0; d < 3; ++d) {
        const double u = b.cross.vertices[i][d] - b.cross.vertices[j][d];
        const double v = img[i][d] - img[j][d];
        da += u * u;
        db += v * v;
      }
      CHECK(std::abs(std::sqrt(da) - std::sqrt(db)) <= 1e-12);
    }
}

TEST_CASE("hull_area_2d computes convex hull areas") {
  std::vector<std::array<double, 2>> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const HullResult h = hull_area_2d(square);
  CHECK(h.area == doctest::Approx(1.0));
  CHECK(h.polygon.convex);
  CHECK(h.polygon.vertices.size() == 4);

  // interior points do not change the hull
  auto noisy = square;
  noisy.push_back({0.5, 0.5});
  noisy.push_back({0.25, 0.75});
  const HullResult h2 = hull_area_2d(noisy);
  CHECK(h2.area == doctest::Approx(1.0));
  CHECK(h2.polygon.vertices == h.polygon.vertices);

  // counterclockwise orientation: positive cross products
  const auto& v = h.polygon.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    const auto& c = v[(i + 2) % v.size()];
    CHECK((b[0] - a[0]) * (c[1] - b[1]) - (b[1] - a[1]) * (c[0] - b[0]) > 0.0);
  }

  const HullResult col =
      hull_area_2d({{0.0, 0.0}, {1.0, 1.0}, {2.0, 2.0}});
  CHECK(col.area == 0.0);
  CHECK_FALSE(col.polygon.convex);

  CHECK_THROWS_AS(hull_area_2d({}), std::invalid_argument);
}

TEST_CASE("planar shadows by hull") {
  const StandardBodies b = standard_bodies(3);
  OrthoPair e12;
  e12.u = {1, 0, 0};
  e12.v = {0, 1, 0};
  CHECK(shadow_area_2d(b.cube, e12) == doctest::Approx(1.0));
  CHECK(shadow_area_2d(b.cross, e12) == doctest::Approx(2.0));
}

TEST_CASE("hull shadow matches the minor-sum formula") {
  SplitMix64 rng(5);
  const StandardBodies b = standard_bodies(5);
  for (int t = 0; t < 50; ++t) {
    const OrthoPair pair = sample_orthopair(5, rng);
    CHECK(std::abs(shadow_area_2d(b.cube, pair) - cube_planar_shadow(pair)) <=
          1e-9);
  }
}

TEST_CASE("distance_to_hull and membership") {
  const std::vector<std::vector<double>> tri{{0, 0}, {1, 0}, {0, 1}};
  CHECK(distance_to_hull(std::vector<double>{0.25, 0.25}, tri) <= 1e-12);
  CHECK(distance_to_hull(std::vector<double>{2.0, 0.0}, tri) ==
        doctest::Approx(1.0));
  CHECK(membership_in_hull(std::vector<double>{1.0, 0.0}, tri));  // vertex
  CHECK(membership_in_hull(std::vector<double>{1.0 / 3, 1.0 / 3}, tri));
  CHECK_FALSE(membership_in_hull(std::vector<double>{1.0, 1.0}, tri));

  const StandardBodies b = standard_bodies(3);
  CHECK(distance_to_hull(std::vector<double>{2.0, 0.0, 0.0}, b.cube.vertices) ==
        doctest::Approx(1.5));
  // deep inside vs just outside a face
  CHECK(membership_in_hull(std::vector<double>{0.0, 0.0, 0.0}, b.cube.vertices));
  CHECK_FALSE(membership_in_hull(std::vector<double>{0.5 + 1e-6, 0.0, 0.0},
                                 b.cube.vertices));
}

TEST_CASE("MC volume of the cube with the full basis is exact") {
  const StandardBodies b = standard_bodies(4);
  const std::vector<std::vector<double>> full{
      {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  const McEstimate est = shadow_volume_mc(b.cube, full, 20000, 17);
  CHECK(std::abs(est.value - 1.0) <= 4.0 * est.std_error + 1e-6);
}

TEST_CASE("MC shadow estimates match the closed forms") {
  // cube shadow orthogonal to the main diagonal of R^4 has volume 2
  const StandardBodies b = standard_bodies(4);
  const Direction diag = normalize(std::vector<double>{1, 1, 1, 1});
  const auto basis = orthobasis_of_complement({diag.coords}, 4);
  const McEstimate est = shadow_volume_mc(b.cube, basis, 100000, 3);
  CHECK(std::abs(est.value - 2.0) <= 4.0 * est.std_error);

  // cross-polytope shadow along e_1 is the lower-dimensional cross-polytope
  const auto e1_basis = orthobasis_of_complement(
      {std::vector<double>{1, 0, 0, 0}}, 4);
  const McEstimate cross_est = shadow_volume_mc(b.cross, e1_basis, 100000, 4);
  CHECK(std::abs(cross_est.value - 8.0 / 6.0) <= 4.0 * cross_est.std_error);

  CHECK_THROWS_AS(shadow_volume_mc(b.cube, {{1, 0, 0, 0}, {0, 1, 0, 0}}, 100, 1),
                  std::invalid_argument);
}

TEST_CASE("MC estimates are deterministic per seed") {
  const StandardBodies b = standard_bodies(4);
  const auto basis = orthobasis_of_complement(
      {normalize(std::vector<double>{1, 2, 2, 1}).coords}, 4);
  const McEstimate a = shadow_volume_mc(b.cube, basis, 5000, 123);
  const McEstimate c = shadow_volume_mc(b.cube, basis, 5000, 123);
  CHECK(a.value == c.value);
  CHECK(a.std_error == c.std_error);
}
