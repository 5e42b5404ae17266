#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <variant>

#include "polyproj/linalg.hpp"
#include "polyproj/lpbodies.hpp"

namespace polyproj {

enum class ExtremalKind { min, max };

struct ExtremalResult {
  double value = 0.0;
  ExtremalKind kind = ExtremalKind::min;
  bool certified = false;  // closed form vs numeric search
  std::variant<Direction, OrthoPair> argument;
  std::string note;
};

/// Minimum of sum |a_j| over the zero-sum unit sphere in R^m: sqrt(2),
/// attained at (1,-1,0,...,0)/sqrt(2).
ExtremalResult l1_min_zero_sum(int m);

/// Maximum of sum |a_j| over the zero-sum unit sphere in R^m. Even m:
/// sqrt(m) at the half-plus/half-minus vector. Odd m: sqrt((m^2-1)/m) at the
/// ((m-1)/2, (m+1)/2) split vector; the mirrored split attains it too.
ExtremalResult l1_max_zero_sum(int m);

/// Extremal hyperplane shadows of the regular n-simplex, as (min, max).
std::pair<ExtremalResult, ExtremalResult> simplex_extremal_volumes(int n);

/// Extremal widths of the regular n-simplex, as (min, max); the extremal
/// directions swap roles with the shadow ones.
std::pair<ExtremalResult, ExtremalResult> simplex_extremal_widths(int n);

/// Planar cube shadow bounds, as (lower, upper): 1 at a coordinate pair,
/// cot(pi/2n) at the evenly rotated configuration.
std::pair<ExtremalResult, ExtremalResult> planar_cube_bounds(int n);

/// The evenly rotated pair (u_i, v_i) = sqrt(2/n) (cos((i-1)pi/n),
/// sin((i-1)pi/n)); attains the planar shadow maximum.
OrthoPair trig_pair(int n);

/// Extrema of F_p(a) = sum |a_j|^p on the unit sphere, as (min, max).
/// 1 < p < 2: min 1 at e_1, max m^{1-p/2} at the uniform vector; p > 2:
/// roles reversed. p = 2 is rejected (F_2 is constant).
std::pair<ExtremalResult, ExtremalResult> fp_extrema_sphere(int m, LpOrder p);

/// True iff x is majorized by y (equal sums within 1e-10, dominated partial
/// sums of the decreasing rearrangements).
bool majorizes(std::span<const double> x, std::span<const double> y);

/// sum f(y_i) - sum f(x_i) for convex f; nonnegative whenever x is
/// majorized by y. Throws if the pair does not majorize.
double karamata_gap(std::span<const double> x, std::span<const double> y,
                    const std::function<double(double)>& f_convex);

/// f(t) = |t|^p, convex for p >= 1.
std::function<double(double)> abs_power(double p);

/// Piecewise-linear interpolant through sample points; slopes must be
/// nondecreasing (convexity is validated).
std::function<double(double)> piecewise_linear(
    std::vector<std::pair<double, double>> samples);

/// Canonical representative among permutations and the global sign flip:
/// coordinates sorted decreasing, sign chosen to make the sorted vector
/// lexicographically largest.
std::vector<double> canonical_coords(std::span<const double> coords);

enum class SearchObjective { l1_sum, fp_sum, planar_minor_sum };
enum class SearchConstraint { unit_sphere, zero_sum_unit_sphere, orthonormal_pair };

struct SearchOptions {
  int restarts = 100;
  std::uint64_t seed = 0;
  int max_iters = 10000;
  double step_tol = 1e-10;
  double init_step = 0.25;
  double fp_p = 2.0;  // only read for SearchObjective::fp_sum
};

/// Projected subgradient ascent/descent from random restarts. Steps on the
/// (sub)gradient, re-projects onto the constraint set, halves the step on
/// non-improvement. Results carry certified = false.
ExtremalResult numeric_search(SearchObjective objective, int m,
                              SearchConstraint constraint, ExtremalKind kind,
                              const SearchOptions& options);

}  // namespace polyproj
