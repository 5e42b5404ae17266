#include "polyproj/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace polyproj {

namespace {

double abs_sum(std::span<const double> x) {
  double s = 0.0;
  for (double xi : x) s += std::abs(xi);
  return s;
}

void require_zero_sum(const Direction& a) {
  if (!a.zero_sum)
    throw std::invalid_argument("direction must lie in the zero-sum hyperplane");
}

}  // namespace

double factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  if (n <= 20) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  }
  return std::exp(std::lgamma(static_cast<double>(n) + 1.0));
}

BodyVolumeConstants body_volume_constants(int n) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  BodyVolumeConstants c;
  c.n = n;
  c.simplex_volume = std::sqrt(n + 1.0) / factorial(n);
  c.simplex_facet_volume = std::sqrt(static_cast<double>(n)) / factorial(n - 1);
  c.cross_facet_volume = c.simplex_facet_volume;
  return c;
}

double simplex_hyperplane_shadow(const Direction& a, bool project_input) {
  const int n = a.dim() - 1;
  if (n < 2) throw std::invalid_argument("need at least 3 coordinates");
  if (!a.zero_sum) {
    if (!project_input)
      throw std::invalid_argument("direction must lie in the zero-sum hyperplane");
    return simplex_hyperplane_shadow(project_zero_sum(a.coords));
  }
  return 0.5 * std::sqrt(n + 1.0) / factorial(n - 1) * abs_sum(a.coords);
}

double cube_hyperplane_shadow(const Direction& a) {
  if (a.dim() < 1) throw std::invalid_argument("empty direction");
  return abs_sum(a.coords);
}

double cube_planar_shadow(const OrthoPair& pair) {
  const int n = pair.dim();
  if (n < 2) throw std::invalid_argument("need dimension at least 2");
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      s += std::abs(pair.u[i] * pair.v[j] - pair.u[j] * pair.v[i]);
  return s;
}

double simplex_width(const Direction& a) {
  require_zero_sum(a);
  const auto [lo, hi] = std::minmax_element(a.coords.begin(), a.coords.end());
  return *hi - *lo;
}

double simplex_gauge_diff_body(const Direction& a) {
  require_zero_sum(a);
  return 0.5 * abs_sum(a.coords);
}

FacetData facet_data(BodyTag body, int n) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  FacetData f;
  f.body = body;
  switch (body) {
    case BodyTag::cube: {
      f.ambient_dim = n;
      for (int j = 0; j < n; ++j) {
        for (double s : {1.0, -1.0}) {
          std::vector<double> nu(n, 0.0);
          nu[j] = s;
          f.normals.push_back(std::move(nu));
          f.volumes.push_back(1.0);
        }
      }
      break;
    }
    case BodyTag::cross: {
      if (n > 20) throw std::length_error("facet enumeration too large");
      f.ambient_dim = n;
      const double vol = std::sqrt(static_cast<double>(n)) / factorial(n - 1);
      const double c = 1.0 / std::sqrt(static_cast<double>(n));
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<double> nu(n);
        for (int j = 0; j < n; ++j) nu[j] = (mask >> j & 1u) ? c : -c;
        f.normals.push_back(std::move(nu));
        f.volumes.push_back(vol);
      }
      break;
    }
    case BodyTag::simplex_centered: {
      f.ambient_dim = n + 1;
      const double vol = std::sqrt(static_cast<double>(n)) / factorial(n - 1);
      const double denom = std::sqrt(n * (n + 1.0));
      for (int i = 0; i <= n; ++i) {
        std::vector<double> nu(n + 1, 1.0 / denom);
        nu[i] = -n / denom;
        f.normals.push_back(std::move(nu));
        f.volumes.push_back(vol);
      }
      break;
    }
    default:
      throw std::invalid_argument("unsupported body tag");
  }
  return f;
}

double cauchy_shadow(const FacetData& facets, const Direction& a) {
  if (a.dim() != facets.ambient_dim)
    throw std::invalid_argument("dimension mismatch");
  if (facets.body == BodyTag::simplex_centered) require_zero_sum(a);
  double s = 0.0;
  for (std::size_t i = 0; i < facets.normals.size(); ++i)
    s += facets.volumes[i] * std::abs(dot(a.coords, facets.normals[i]));
  return 0.5 * s;
}

double width_projection_ratio(const Direction& a) {
  return simplex_hyperplane_shadow(a) / simplex_gauge_diff_body(a);
}

double width_projection_ratio_constant(int n) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  return std::sqrt(n + 1.0) / factorial(n - 1);
}

}  // namespace polyproj
