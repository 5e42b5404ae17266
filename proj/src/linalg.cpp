#include "polyproj/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polyproj {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t SplitMix64::next() {
  state_ += kGamma;
  return mix64(state_);
}

double SplitMix64::next_unit() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::next_gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = next_unit();
  if (u1 <= 0.0) u1 = 0x1.0p-53;
  const double u2 = next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

SplitMix64 SplitMix64::child(std::uint64_t stream) const {
  return SplitMix64(mix64(state_ ^ mix64(stream + kGamma)));
}

double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double norm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

double coord_sum(std::span<const double> x) {
  double s = 0.0;
  for (double xi : x) s += xi;
  return s;
}

Direction normalize(std::span<const double> x) {
  const double n = norm2(x);
  if (n == 0.0) throw std::domain_error("degenerate direction");
  Direction d;
  d.coords.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) d.coords[i] = x[i] / n;
  d.zero_sum = std::abs(coord_sum(d.coords)) <= 1e-12;
  return d;
}

Direction project_zero_sum(std::span<const double> x) {
  const int m = static_cast<int>(x.size());
  if (m < 2) throw std::invalid_argument("need at least 2 coordinates");
  const double mean = coord_sum(x) / m;
  std::vector<double> y(x.begin(), x.end());
  for (double& yi : y) yi -= mean;
  const double rn = norm2(y);
  if (rn <= 1e-12 * std::max(norm2(x), 1.0))
    throw std::domain_error("direction collapses");
  Direction d;
  d.coords = std::move(y);
  for (double& c : d.coords) c /= rn;
  d.zero_sum = true;
  return d;
}

OrthoPair orthonormal_pair(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("dimension mismatch");
  const double nx = norm2(x);
  if (nx == 0.0) throw std::domain_error("degenerate plane");
  OrthoPair pair;
  pair.u.assign(x.begin(), x.end());
  for (double& c : pair.u) c /= nx;

  pair.v.assign(y.begin(), y.end());
  const double ny = norm2(y);
  // Two Gram-Schmidt passes keep |<u,v>| at machine precision even for
  // nearly dependent inputs above the rejection threshold.
  for (int pass = 0; pass < 2; ++pass) {
    const double c = dot(pair.v, pair.u);
    for (std::size_t i = 0; i < pair.v.size(); ++i) pair.v[i] -= c * pair.u[i];
    if (pass == 0 && norm2(pair.v) < 1e-10 * ny)
      throw std::domain_error("degenerate plane");
  }
  const double nv = norm2(pair.v);
  if (nv == 0.0) throw std::domain_error("degenerate plane");
  for (double& c : pair.v) c /= nv;
  return pair;
}

Direction sample_direction(int m, bool zero_sum, SplitMix64& rng) {
  if (m < 2) throw std::invalid_argument("dimension must be at least 2");
  std::vector<double> g(m);
  for (;;) {
    for (double& gi : g) gi = rng.next_gaussian();
    try {
      return zero_sum ? project_zero_sum(g) : normalize(g);
    } catch (const std::domain_error&) {
      // all-zero or constant draw; essentially never happens
    }
  }
}

Direction sample_direction(int m, bool zero_sum, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return sample_direction(m, zero_sum, rng);
}

OrthoPair sample_orthopair(int n, SplitMix64& rng) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  std::vector<double> x(n), y(n);
  for (;;) {
    for (double& c : x) c = rng.next_gaussian();
    for (double& c : y) c = rng.next_gaussian();
    try {
      return orthonormal_pair(x, y);
    } catch (const std::domain_error&) {
    }
  }
}

std::vector<std::vector<double>> orthobasis_of_complement(
    const std::vector<std::vector<double>>& vectors, int n) {
  const int k = static_cast<int>(vectors.size());
  if (k > n) throw std::invalid_argument("more vectors than dimensions");
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(vectors[i].size()) != n)
      throw std::invalid_argument("dimension mismatch");
    for (int j = i; j < k; ++j) {
      const double want = (i == j) ? 1.0 : 0.0;
      if (std::abs(dot(vectors[i], vectors[j]) - want) > 1e-10)
        throw std::invalid_argument("input vectors are not orthonormal");
    }
  }

  std::vector<std::vector<double>> basis = vectors;
  std::vector<std::vector<double>> result;
  result.reserve(n - k);
  while (static_cast<int>(basis.size()) < n) {
    // Greedy: orthogonalize every coordinate axis against the current basis
    // and keep the one with the largest residual.
    std::vector<double> best;
    double best_norm = -1.0;
    for (int j = 0; j < n; ++j) {
      std::vector<double> w(n, 0.0);
      w[j] = 1.0;
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& b : basis) {
          const double c = dot(w, b);
          for (int i = 0; i < n; ++i) w[i] -= c * b[i];
        }
      }
      const double wn = norm2(w);
      if (wn > best_norm) {
        best_norm = wn;
        best = std::move(w);
      }
    }
    for (double& c : best) c /= best_norm;
    basis.push_back(best);
    result.push_back(std::move(best));
  }
  return result;
}

}  // namespace polyproj
