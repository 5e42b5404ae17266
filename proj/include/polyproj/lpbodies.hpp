#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>

#include "polyproj/closedform.hpp"
#include "polyproj/linalg.hpp"

namespace polyproj {

/// Order of an L_p projection body, p >= 1.
struct LpOrder {
  double p;
  explicit LpOrder(double p_) : p(p_) {
    if (!(p >= 1.0)) throw std::invalid_argument("order must satisfy p >= 1");
  }
};

enum class SignAverageMethod { exact_enumeration, monte_carlo };

/// E |sum_j a_j e_j|^p over independent random signs e_j, either averaged
/// over all 2^n sign vectors or estimated by sampling.
struct SignAverage {
  double value = 0.0;
  SignAverageMethod method = SignAverageMethod::exact_enumeration;
  std::int64_t samples = 0;  // 0 if exact
  double std_error = 0.0;    // 0 if exact
};

/// p-th power of the support function of the L_p projection body of the
/// volume-one cube: 2^{p-1} * sum_j |a_j|^p.
double lp_cube_support_p(const Direction& a, LpOrder p);

/// Exact enumeration requires dim <= 20 (2^n sign vectors); Monte-Carlo mode
/// draws `samples` sign vectors from the given stream.
SignAverage rademacher_moment(const Direction& a, LpOrder p,
                              SignAverageMethod mode, std::int64_t samples,
                              SplitMix64& rng);
SignAverage rademacher_moment_exact(const Direction& a, LpOrder p);

/// p-th power of the support of the L_p projection body of the
/// cross-polytope: 2^{n-1}/(n-1)! * E|sum a_j e_j|^p.
double lp_cross_support_p(const Direction& a, LpOrder p,
                          SignAverageMethod mode, std::int64_t samples,
                          SplitMix64& rng);
double lp_cross_support_p(const Direction& a, LpOrder p);  // exact

/// p-th power of the support of the L_p projection body of the centered
/// regular simplex: (n+1)^{(2p-1)/2} / (2 (n-1)!) * sum_j |a_j|^p.
/// Requires a zero-sum direction of length n+1.
double lp_simplex_support_p(const Direction& a, LpOrder p);

/// Generic polytope route: (1/2) sum_F vol(F) |<a,nu_F>|^p h_P(nu_F)^{1-p}.
/// support_values are h_P at the facet normals, in facet order; all must be
/// positive (origin interior).
double lp_support_via_facets(const FacetData& facets,
                             std::span<const double> support_values,
                             const Direction& a, LpOrder p);

/// Support values h_P(nu) = max over vertices of <vertex, nu>.
std::vector<double> facet_support_values(
    const std::vector<std::vector<double>>& vertices, const FacetData& facets);

/// h from its stored p-th power.
double support_from_p_power(double h_pow_p, LpOrder p);

}  // namespace polyproj
