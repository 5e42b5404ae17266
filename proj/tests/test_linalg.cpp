#include <doctest.h>

#include <cmath>
#include <numbers>

#include "polyproj/linalg.hpp"

using namespace polyproj;

namespace {
const double kSqrt2 = std::numbers::sqrt2;
}

TEST_CASE("normalize scales and flags zero-sum inputs") {
  const Direction a = normalize(std::vector<double>{2.0, 0.0, 0.0});
  CHECK(a.coords[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_FALSE(a.zero_sum);

  const Direction b = normalize(std::vector<double>{1.0, -1.0, 0.0});
  CHECK(b.coords[0] == doctest::Approx(1.0 / kSqrt2));
  CHECK(b.coords[1] == doctest::Approx(-1.0 / kSqrt2));
  CHECK(b.zero_sum);

  const Direction c = normalize(std::vector<double>{3.0, 4.0});
  CHECK(c.coords[0] == doctest::Approx(0.6));
  CHECK(c.coords[1] == doctest::Approx(0.8));

  CHECK_THROWS_AS(normalize(std::vector<double>{0.0, 0.0}), std::domain_error);
}

TEST_CASE("project_zero_sum subtracts the mean") {
  const Direction a = project_zero_sum(std::vector<double>{1.0, 0.0, 0.0});
  const double s6 = std::sqrt(6.0);
  CHECK(a.coords[0] == doctest::Approx(2.0 / s6));
  CHECK(a.coords[1] == doctest::Approx(-1.0 / s6));
  CHECK(a.coords[2] == doctest::Approx(-1.0 / s6));
  CHECK(a.zero_sum);

  const Direction b = project_zero_sum(std::vector<double>{1.0, -1.0});
  CHECK(b.coords[0] == doctest::Approx(1.0 / kSqrt2));

  CHECK_THROWS_AS(project_zero_sum(std::vector<double>{5.0, 5.0, 5.0}),
                  std::domain_error);
}

TEST_CASE("orthonormal_pair runs Gram-Schmidt") {
  const OrthoPair id = orthonormal_pair(std::vector<double>{1.0, 0.0},
                                        std::vector<double>{0.0, 1.0});
  CHECK(id.u[0] == 1.0);
  CHECK(id.v[1] == 1.0);

  const OrthoPair gs = orthonormal_pair(std::vector<double>{1.0, 1.0, 0.0},
                                        std::vector<double>{1.0, 0.0, 0.0});
  CHECK(gs.u[0] == doctest::Approx(1.0 / kSqrt2));
  CHECK(gs.u[1] == doctest::Approx(1.0 / kSqrt2));
  CHECK(gs.v[0] == doctest::Approx(1.0 / kSqrt2));
  CHECK(gs.v[1] == doctest::Approx(-1.0 / kSqrt2));
  CHECK(std::abs(dot(gs.u, gs.v)) <= 1e-12);

  CHECK_THROWS_AS(orthonormal_pair(std::vector<double>{1.0, 0.0},
                                   std::vector<double>{2.0, 0.0}),
                  std::domain_error);
}

TEST_CASE("sampled directions satisfy their constraints") {
  SplitMix64 rng(42);
  for (int t = 0; t < 200; ++t) {
    const Direction a = sample_direction(7, false, rng);
    CHECK(std::abs(norm2(a.coords) - 1.0) <= 1e-12);
    const Direction b = sample_direction(7, true, rng);
    CHECK(std::abs(norm2(b.coords) - 1.0) <= 1e-12);
    CHECK(std::abs(coord_sum(b.coords)) <= 1e-12);
    CHECK(b.zero_sum);
  }
  CHECK_THROWS_AS(sample_direction(1, false, rng), std::invalid_argument);
}

TEST_CASE("sampling is deterministic per seed") {
  const Direction a = sample_direction(5, true, std::uint64_t{99});
  const Direction b = sample_direction(5, true, std::uint64_t{99});
  CHECK(a.coords == b.coords);
  const Direction c = sample_direction(5, true, std::uint64_t{100});
  CHECK(a.coords != c.coords);

  SplitMix64 root(7);
  SplitMix64 s1 = root.child(1);
  SplitMix64 s1b = root.child(1);
  SplitMix64 s2 = root.child(2);
  CHECK(s1.next() == s1b.next());
  CHECK(s1.next() != s2.next());
}

TEST_CASE("zero-sum sampling has vanishing empirical mean") {
  SplitMix64 rng(3);
  const int m = 5, trials = 100000;
  std::vector<double> mean(m, 0.0);
  for (int t = 0; t < trials; ++t) {
    const Direction a = sample_direction(m, true, rng);
    for (int i = 0; i < m; ++i) mean[i] += a.coords[i];
  }
  for (double& c : mean) c /= trials;
  CHECK(norm2(mean) <= 5e-2);
}

TEST_CASE("orthobasis_of_complement completes a basis") {
  const auto comp = orthobasis_of_complement({{1.0, 0.0, 0.0}}, 3);
  REQUIRE(comp.size() == 2);
  for (const auto& w : comp) {
    CHECK(std::abs(norm2(w) - 1.0) <= 1e-10);
    CHECK(std::abs(w[0]) <= 1e-10);
  }
  CHECK(std::abs(dot(comp[0], comp[1])) <= 1e-10);

  const double r = 1.0 / kSqrt2;
  const auto flip = orthobasis_of_complement({{r, r}}, 2);
  REQUIRE(flip.size() == 1);
  CHECK(std::abs(std::abs(flip[0][0]) - r) <= 1e-12);
  CHECK(std::abs(flip[0][0] + flip[0][1]) <= 1e-12);

  CHECK_THROWS_AS(orthobasis_of_complement({{1.0, 1.0, 0.0}}, 3),
                  std::invalid_argument);
}

TEST_CASE("completed bases satisfy Parseval") {
  SplitMix64 rng(11);
  const int n = 6;
  const Direction d1 = sample_direction(n, false, rng);
  const Direction d2 = sample_direction(n, false, rng);
  const OrthoPair pair = orthonormal_pair(d1.coords, d2.coords);
  std::vector<std::vector<double>> basis{pair.u, pair.v};
  for (auto& w : orthobasis_of_complement(basis, n)) basis.push_back(std::move(w));
  REQUIRE(basis.size() == static_cast<std::size_t>(n));
  for (int t = 0; t < 100; ++t) {
    std::vector<double> x(n);
    for (double& c : x) c = rng.next_gaussian();
    double sq = 0.0;
    for (const auto& b : basis) {
      const double c = dot(x, b);
      sq += c * c;
    }
    CHECK(std::abs(sq - dot(x, x)) <= 1e-10 * (1.0 + dot(x, x)));
  }
}
