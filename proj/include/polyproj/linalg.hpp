#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace polyproj {

/// Unit vector, optionally constrained to the zero-sum hyperplane
/// { x : sum_i x_i = 0 }. All projection formulas take one of these.
struct Direction {
  std::vector<double> coords;
  bool zero_sum = false;

  int dim() const { return static_cast<int>(coords.size()); }
};

/// Two mutually orthonormal vectors spanning a plane.
struct OrthoPair {
  std::vector<double> u;
  std::vector<double> v;

  int dim() const { return static_cast<int>(u.size()); }
};

/// Deterministic split-stream generator. SplitMix64 steps drive the raw
/// stream; gaussians come from Box-Muller on top of it. child(k) derives an
/// independent substream, so chunked or parallel callers stay reproducible
/// for a given root seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  double next_unit();      // uniform on [0,1)
  double next_gaussian();  // standard normal
  SplitMix64 child(std::uint64_t stream) const;

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

double dot(std::span<const double> x, std::span<const double> y);
double norm2(std::span<const double> x);
double coord_sum(std::span<const double> x);

/// x / ||x||. The zero_sum flag is set iff |sum x_i| / ||x|| <= 1e-12.
/// Throws std::domain_error("degenerate direction") on the zero vector.
Direction normalize(std::span<const double> x);

/// Subtract the coordinate mean, then normalize. The result always has
/// zero_sum = true. Throws std::domain_error("direction collapses") when x
/// is (numerically) proportional to the all-ones vector.
Direction project_zero_sum(std::span<const double> x);

/// Gram-Schmidt: u = x/||x||, v = normalized residual of y against u.
/// Throws std::domain_error("degenerate plane") when x, y are dependent
/// (residual norm < 1e-10 * ||y||).
OrthoPair orthonormal_pair(std::span<const double> x, std::span<const double> y);

/// Uniform on the unit sphere of R^m (normalized gaussians); with zero_sum,
/// uniform on the zero-sum sphere (mean-subtract before normalizing).
Direction sample_direction(int m, bool zero_sum, SplitMix64& rng);
Direction sample_direction(int m, bool zero_sum, std::uint64_t seed);

/// Random orthonormal pair in R^n, n >= 2.
OrthoPair sample_orthopair(int n, SplitMix64& rng);

/// Completes k orthonormal vectors in R^n to a full orthonormal basis and
/// returns the n-k new vectors. Inputs must be pairwise orthonormal within
/// 1e-10.
std::vector<std::vector<double>> orthobasis_of_complement(
    const std::vector<std::vector<double>>& vectors, int n);

}  // namespace polyproj
