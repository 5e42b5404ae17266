#include "polyproj/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace polyproj {

namespace {

constexpr double kCollinearTol = 1e-12;
constexpr double kMembershipTol = 1e-9;

double cross2(const std::array<double, 2>& o, const std::array<double, 2>& a,
              const std::array<double, 2>& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

StandardBodies standard_bodies(int n) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  if (n > 20) throw std::length_error("vertex enumeration too large");
  StandardBodies b;

  b.simplex.tag = "simplex";
  for (int i = 0; i <= n; ++i) {
    std::vector<double> v(n + 1, 0.0);
    v[i] = 1.0;
    b.simplex.vertices.push_back(std::move(v));
  }

  b.simplex_centered.tag = "simplex_centered";
  for (int i = 0; i <= n; ++i) {
    std::vector<double> v(n + 1, -1.0 / (n + 1));
    v[i] = static_cast<double>(n) / (n + 1);
    b.simplex_centered.vertices.push_back(std::move(v));
  }

  b.cube.tag = "cube";
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<double> v(n);
    for (int j = 0; j < n; ++j) v[j] = (mask >> j & 1u) ? 0.5 : -0.5;
    b.cube.vertices.push_back(std::move(v));
  }

  b.cross.tag = "cross";
  for (int j = 0; j < n; ++j) {
    for (double s : {1.0, -1.0}) {
      std::vector<double> v(n, 0.0);
      v[j] = s;
      b.cross.vertices.push_back(std::move(v));
    }
  }
  return b;
}

std::vector<std::vector<double>> shadow_vertices(
    const VPolytope& body, const std::vector<std::vector<double>>& basis) {
  for (const auto& b : basis) {
    if (static_cast<int>(b.size()) != body.dim())
      throw std::invalid_argument("basis dimension mismatch");
  }
  std::vector<std::vector<double>> out;
  out.reserve(body.vertices.size());
  for (const auto& x : body.vertices) {
    std::vector<double> p(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) p[i] = dot(x, basis[i]);
    out.push_back(std::move(p));
  }
  return out;
}

HullResult hull_area_2d(const std::vector<std::array<double, 2>>& points) {
  if (points.empty()) throw std::invalid_argument("hull of empty point set");
  std::vector<std::array<double, 2>> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  HullResult res;
  if (pts.size() < 3) {
    res.polygon.vertices = pts;
    res.polygon.convex = false;
    return res;
  }

  // Andrew's monotone chain; collinear points dropped.
  const std::size_t m = pts.size();
  std::vector<std::array<double, 2>> hull(2 * m);
  std::size_t k = 0;
  for (std::size_t i = 0; i < m; ++i) {
    while (k >= 2 && cross2(hull[k - 2], hull[k - 1], pts[i]) <= kCollinearTol) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = m - 1; i-- > 0;) {
    while (k >= lower && cross2(hull[k - 2], hull[k - 1], pts[i]) <= kCollinearTol) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);

  if (hull.size() < 3) {
    res.polygon.vertices = hull;
    res.polygon.convex = false;
    return res;
  }
  double area2 = 0.0;
  for (std::size_t i = 0, j = hull.size() - 1; i < hull.size(); j = i++)
    area2 += hull[j][0] * hull[i][1] - hull[i][0] * hull[j][1];
  res.area = 0.5 * area2;
  res.polygon.vertices = std::move(hull);
  res.polygon.convex = true;
  return res;
}

double shadow_area_2d(const VPolytope& body, const OrthoPair& pair) {
  if (pair.dim() != body.dim())
    throw std::invalid_argument("pair dimension mismatch");
  const auto pts = shadow_vertices(body, {pair.u, pair.v});
  std::vector<std::array<double, 2>> flat(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) flat[i] = {pts[i][0], pts[i][1]};
  return hull_area_2d(flat).area;
}

double shadow_length_1d(const VPolytope& body, std::span<const double> axis) {
  if (static_cast<int>(axis.size()) != body.dim())
    throw std::invalid_argument("axis dimension mismatch");
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& x : body.vertices) {
    const double t = dot(x, axis);
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  return hi - lo;
}

HullDistance::HullDistance(const std::vector<std::vector<double>>& points)
    : points_(points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  dim_ = static_cast<int>(points[0].size());
  if (dim_ < 1 || dim_ > 6) throw std::invalid_argument("dimension must be in [1,6]");
  if (points.size() > 256) throw std::length_error("too many hull points");
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != dim_)
      throw std::invalid_argument("inconsistent point dimensions");
  diff_.assign(points.size(), std::vector<double>(dim_));
}

double HullDistance::distance(std::span<const double> q) {
  if (static_cast<int>(q.size()) != dim_)
    throw std::invalid_argument("query dimension mismatch");
  const std::size_t npts = points_.size();
  double scale = 0.0;
  for (std::size_t i = 0; i < npts; ++i) {
    double nn = 0.0;
    for (int d = 0; d < dim_; ++d) {
      diff_[i][d] = points_[i][d] - q[d];
      nn += diff_[i][d] * diff_[i][d];
    }
    scale = std::max(scale, nn);
  }
  if (scale == 0.0) return 0.0;

  // Wolfe's min-norm point over conv(points - q).
  std::size_t start = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < npts; ++i) {
    const double nn = dot(diff_[i], diff_[i]);
    if (nn < best) {
      best = nn;
      start = i;
    }
  }
  corral_.assign(1, static_cast<int>(start));
  weights_.assign(1, 1.0);
  std::vector<double> x = diff_[start];

  const double eps = 1e-14 * scale;
  const int max_major = 64 + 8 * static_cast<int>(npts);
  double xx = dot(x, x);
  for (int major = 0; major < max_major; ++major) {
    if (xx <= 1e-26 * scale) return 0.0;
    // most improving vertex, lowest index on ties
    std::size_t j = 0;
    double minip = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < npts; ++i) {
      const double ip = dot(x, diff_[i]);
      if (ip < minip) {
        minip = ip;
        j = i;
      }
    }
    if (minip >= xx - eps) break;
    if (std::find(corral_.begin(), corral_.end(), static_cast<int>(j)) != corral_.end())
      break;  // numerical stall
    corral_.push_back(static_cast<int>(j));
    weights_.push_back(0.0);

    for (int minor = 0; minor < 64; ++minor) {
      // affine min-norm point over the corral: solve
      //   [G 1; 1^T 0] [mu; nu] = [0; 1]
      const int s = static_cast<int>(corral_.size());
      std::vector<double> mat((s + 1) * (s + 1), 0.0);
      std::vector<double> rhs(s + 1, 0.0);
      for (int r = 0; r < s; ++r) {
        for (int c = 0; c < s; ++c)
          mat[r * (s + 1) + c] = dot(diff_[corral_[r]], diff_[corral_[c]]);
        mat[r * (s + 1) + s] = 1.0;
        mat[s * (s + 1) + r] = 1.0;
      }
      rhs[s] = 1.0;
      // Gaussian elimination with partial pivoting
      std::vector<int> perm(s + 1);
      for (int i = 0; i <= s; ++i) perm[i] = i;
      bool singular = false;
      for (int col = 0; col <= s && !singular; ++col) {
        int piv = col;
        for (int r = col + 1; r <= s; ++r)
          if (std::abs(mat[perm[r] * (s + 1) + col]) >
              std::abs(mat[perm[piv] * (s + 1) + col]))
            piv = r;
        std::swap(perm[col], perm[piv]);
        const double d = mat[perm[col] * (s + 1) + col];
        if (std::abs(d) < 1e-30 * std::max(scale, 1.0)) {
          singular = true;
          break;
        }
        for (int r = col + 1; r <= s; ++r) {
          const double f = mat[perm[r] * (s + 1) + col] / d;
          if (f == 0.0) continue;
          for (int c = col; c <= s; ++c)
            mat[perm[r] * (s + 1) + c] -= f * mat[perm[col] * (s + 1) + c];
          rhs[perm[r]] -= f * rhs[perm[col]];
        }
      }
      std::vector<double> mu(s, 0.0);
      if (!singular) {
        std::vector<double> sol(s + 1, 0.0);
        for (int r = s; r >= 0; --r) {
          double acc = rhs[perm[r]];
          for (int c = r + 1; c <= s; ++c) acc -= mat[perm[r] * (s + 1) + c] * sol[c];
          sol[r] = acc / mat[perm[r] * (s + 1) + r];
        }
        for (int i = 0; i < s; ++i) mu[i] = sol[i];
      } else {
        // degenerate corral: drop the largest-index member and retry
        corral_.pop_back();
        weights_.pop_back();
        break;
      }

      bool interior = true;
      for (double m : mu)
        if (m < 1e-12) {
          interior = false;
          break;
        }
      if (interior) {
        weights_ = mu;
        break;
      }
      // step from weights_ toward mu until a coordinate hits zero
      double theta = 1.0;
      for (int i = 0; i < s; ++i) {
        if (mu[i] < 1e-12) {
          const double denom = weights_[i] - mu[i];
          if (denom > 0.0) theta = std::min(theta, weights_[i] / denom);
        }
      }
      for (int i = 0; i < s; ++i)
        weights_[i] = (1.0 - theta) * weights_[i] + theta * mu[i];
      // drop zeroed members (keep lowest indices on ties)
      for (int i = s - 1; i >= 0; --i) {
        if (weights_[i] <= 1e-12) {
          corral_.erase(corral_.begin() + i);
          weights_.erase(weights_.begin() + i);
        }
      }
      if (corral_.empty()) {
        corral_.assign(1, static_cast<int>(j));
        weights_.assign(1, 1.0);
        break;
      }
      // renormalize to guard drift
      double wsum = 0.0;
      for (double w : weights_) wsum += w;
      for (double& w : weights_) w /= wsum;
    }

    std::fill(x.begin(), x.end(), 0.0);
    for (std::size_t i = 0; i < corral_.size(); ++i)
      for (int d = 0; d < dim_; ++d) x[d] += weights_[i] * diff_[corral_[i]][d];
    xx = dot(x, x);
  }
  return std::sqrt(std::max(xx, 0.0));
}

double distance_to_hull(std::span<const double> q,
                        const std::vector<std::vector<double>>& points) {
  HullDistance solver(points);
  return solver.distance(q);
}

bool membership_in_hull(std::span<const double> q,
                        const std::vector<std::vector<double>>& points) {
  return distance_to_hull(q, points) <= kMembershipTol;
}

McEstimate shadow_volume_mc(const VPolytope& body,
                            const std::vector<std::vector<double>>& basis,
                            std::int64_t samples, std::uint64_t seed) {
  const int k = static_cast<int>(basis.size());
  if (k < 3 || k > 6)
    throw std::invalid_argument("MC oracle supports shadow dimension 3..6");
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  const auto pts = shadow_vertices(body, basis);

  std::vector<double> lo(k, std::numeric_limits<double>::infinity());
  std::vector<double> hi(k, -std::numeric_limits<double>::infinity());
  for (const auto& p : pts) {
    for (int d = 0; d < k; ++d) {
      lo[d] = std::min(lo[d], p[d]);
      hi[d] = std::max(hi[d], p[d]);
    }
  }
  double box_volume = 1.0;
  for (int d = 0; d < k; ++d) {
    lo[d] -= kMembershipTol;  // keep boundary mass inside the box
    hi[d] += kMembershipTol;
    box_volume *= hi[d] - lo[d];
  }

  HullDistance solver(pts);
  SplitMix64 rng = SplitMix64(seed).child(0x6d63);
  std::vector<double> q(k);
  std::int64_t hits = 0;
  for (std::int64_t s = 0; s < samples; ++s) {
    for (int d = 0; d < k; ++d) q[d] = lo[d] + (hi[d] - lo[d]) * rng.next_unit();
    if (solver.distance(q) <= kMembershipTol) ++hits;
  }
  const double r = static_cast<double>(hits) / static_cast<double>(samples);
  McEstimate est;
  est.value = box_volume * r;
  est.std_error = box_volume * std::sqrt(r * (1.0 - r) / static_cast<double>(samples));
  est.samples = samples;
  est.seed = seed;
  est.box_volume = box_volume;
  return est;
}

}  // namespace polyproj
