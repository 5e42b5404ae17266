#include "polyproj/lpbodies.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace polyproj {

namespace {

double pow_abs(double x, double p) {
  if (p == 1.0) return std::abs(x);
  if (p == 2.0) return x * x;
  return std::pow(std::abs(x), p);
}

}  // namespace

double lp_cube_support_p(const Direction& a, LpOrder p) {
  double s = 0.0;
  for (double ai : a.coords) s += pow_abs(ai, p.p);
  return std::pow(2.0, p.p - 1.0) * s;
}

SignAverage rademacher_moment_exact(const Direction& a, LpOrder p) {
  const int n = a.dim();
  if (n > 20) throw std::length_error("enumeration too large");
  if (n < 1) throw std::invalid_argument("empty direction");

  // Gray-code walk over all sign vectors; one coordinate flips per step.
  // The running sum is recomputed periodically to stop drift.
  std::vector<double> sign(n, 1.0);
  double s = coord_sum(a.coords);
  double acc = pow_abs(s, p.p);
  const std::uint64_t total = 1ull << n;
  for (std::uint64_t g = 1; g < total; ++g) {
    const int b = std::countr_zero(g);
    s -= 2.0 * sign[b] * a.coords[b];
    sign[b] = -sign[b];
    if ((g & 0xFFFu) == 0) {
      double fresh = 0.0;
      for (int j = 0; j < n; ++j) fresh += sign[j] * a.coords[j];
      s = fresh;
    }
    acc += pow_abs(s, p.p);
  }
  SignAverage out;
  out.value = acc / static_cast<double>(total);
  out.method = SignAverageMethod::exact_enumeration;
  return out;
}

SignAverage rademacher_moment(const Direction& a, LpOrder p,
                              SignAverageMethod mode, std::int64_t samples,
                              SplitMix64& rng) {
  if (mode == SignAverageMethod::exact_enumeration)
    return rademacher_moment_exact(a, p);

  const int n = a.dim();
  if (samples < 2) throw std::invalid_argument("need at least 2 samples");
  double acc = 0.0, acc2 = 0.0;
  for (std::int64_t t = 0; t < samples; ++t) {
    double s = 0.0;
    std::uint64_t bits = 0;
    for (int j = 0; j < n; ++j) {
      if (j % 64 == 0) bits = rng.next();
      s += (bits >> (j % 64) & 1ull) ? a.coords[j] : -a.coords[j];
    }
    const double v = pow_abs(s, p.p);
    acc += v;
    acc2 += v * v;
  }
  const double mean = acc / static_cast<double>(samples);
  const double var =
      std::max(0.0, (acc2 - mean * acc) / static_cast<double>(samples - 1));
  SignAverage out;
  out.value = mean;
  out.method = SignAverageMethod::monte_carlo;
  out.samples = samples;
  out.std_error = std::sqrt(var / static_cast<double>(samples));
  return out;
}

double lp_cross_support_p(const Direction& a, LpOrder p,
                          SignAverageMethod mode, std::int64_t samples,
                          SplitMix64& rng) {
  const int n = a.dim();
  const double coeff = std::pow(2.0, n - 1.0) / factorial(n - 1);
  return coeff * rademacher_moment(a, p, mode, samples, rng).value;
}

double lp_cross_support_p(const Direction& a, LpOrder p) {
  const int n = a.dim();
  const double coeff = std::pow(2.0, n - 1.0) / factorial(n - 1);
  return coeff * rademacher_moment_exact(a, p).value;
}

double lp_simplex_support_p(const Direction& a, LpOrder p) {
  const int n = a.dim() - 1;
  if (n < 2) throw std::invalid_argument("need at least 3 coordinates");
  if (!a.zero_sum)
    throw std::invalid_argument("direction must lie in the zero-sum hyperplane");
  double s = 0.0;
  for (double ai : a.coords) s += pow_abs(ai, p.p);
  return std::pow(n + 1.0, (2.0 * p.p - 1.0) / 2.0) / (2.0 * factorial(n - 1)) * s;
}

double lp_support_via_facets(const FacetData& facets,
                             std::span<const double> support_values,
                             const Direction& a, LpOrder p) {
  if (a.dim() != facets.ambient_dim)
    throw std::invalid_argument("dimension mismatch");
  if (support_values.size() != facets.normals.size())
    throw std::invalid_argument("one support value per facet required");
  double s = 0.0;
  for (std::size_t i = 0; i < facets.normals.size(); ++i) {
    const double h = support_values[i];
    if (!(h > 0.0)) throw std::invalid_argument("origin not interior");
    const double ip = dot(a.coords, facets.normals[i]);
    s += facets.volumes[i] * pow_abs(ip, p.p) * std::pow(h, 1.0 - p.p);
  }
  return 0.5 * s;
}

std::vector<double> facet_support_values(
    const std::vector<std::vector<double>>& vertices, const FacetData& facets) {
  std::vector<double> h(facets.normals.size());
  for (std::size_t i = 0; i < facets.normals.size(); ++i) {
    double best = -1e300;
    for (const auto& x : vertices) best = std::max(best, dot(x, facets.normals[i]));
    h[i] = best;
  }
  return h;
}

double support_from_p_power(double h_pow_p, LpOrder p) {
  if (h_pow_p < 0.0) throw std::invalid_argument("negative support power");
  return std::pow(h_pow_p, 1.0 / p.p);
}

}  // namespace polyproj
