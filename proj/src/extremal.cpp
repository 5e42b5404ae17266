#include "polyproj/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "polyproj/closedform.hpp"

namespace polyproj {

namespace {

Direction make_zero_sum_direction(std::vector<double> coords) {
  Direction d;
  d.coords = std::move(coords);
  d.zero_sum = true;
  return d;
}

double sign_of(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

}  // namespace

ExtremalResult l1_min_zero_sum(int m) {
  if (m < 2) throw std::invalid_argument("need at least 2 coordinates");
  std::vector<double> arg(m, 0.0);
  arg[0] = 1.0 / std::numbers::sqrt2;
  arg[1] = -1.0 / std::numbers::sqrt2;
  ExtremalResult r;
  r.value = std::numbers::sqrt2;
  r.kind = ExtremalKind::min;
  r.certified = true;
  r.argument = make_zero_sum_direction(std::move(arg));
  return r;
}

ExtremalResult l1_max_zero_sum(int m) {
  if (m < 2) throw std::invalid_argument("need at least 2 coordinates");
  ExtremalResult r;
  r.kind = ExtremalKind::max;
  r.certified = true;
  std::vector<double> arg(m);
  if (m % 2 == 0) {
    const double c = 1.0 / std::sqrt(static_cast<double>(m));
    for (int i = 0; i < m; ++i) arg[i] = (i < m / 2) ? c : -c;
    r.value = std::sqrt(static_cast<double>(m));
  } else {
    const int k = (m - 1) / 2;  // positive entries
    const double pos = std::sqrt((m + 1.0) / (m * (m - 1.0)));
    const double neg = -std::sqrt((m - 1.0) / (m * (m + 1.0)));
    for (int i = 0; i < m; ++i) arg[i] = (i < k) ? pos : neg;
    r.value = std::sqrt((static_cast<double>(m) * m - 1.0) / m);
    r.note = "also attained with (m+1)/2 positive coordinates";
  }
  r.argument = make_zero_sum_direction(std::move(arg));
  return r;
}

std::pair<ExtremalResult, ExtremalResult> simplex_extremal_volumes(int n) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  const double scale = 0.5 * std::sqrt(n + 1.0) / factorial(n - 1);
  ExtremalResult lo = l1_min_zero_sum(n + 1);
  ExtremalResult hi = l1_max_zero_sum(n + 1);
  lo.value *= scale;
  hi.value *= scale;
  return {std::move(lo), std::move(hi)};
}

std::pair<ExtremalResult, ExtremalResult> simplex_extremal_widths(int n) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  // widths are reciprocal to the difference-body gauge, so the shadow
  // extremizers swap roles
  ExtremalResult gauge_min = l1_min_zero_sum(n + 1);
  ExtremalResult gauge_max = l1_max_zero_sum(n + 1);
  ExtremalResult wmax;
  wmax.value = std::numbers::sqrt2;
  wmax.kind = ExtremalKind::max;
  wmax.certified = true;
  wmax.argument = gauge_min.argument;
  ExtremalResult wmin;
  wmin.value = 2.0 / gauge_max.value;
  wmin.kind = ExtremalKind::min;
  wmin.certified = true;
  wmin.argument = gauge_max.argument;
  wmin.note = gauge_max.note;
  return {std::move(wmin), std::move(wmax)};
}

OrthoPair trig_pair(int n) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  OrthoPair pair;
  pair.u.resize(n);
  pair.v.resize(n);
  const double c = std::sqrt(2.0 / n);
  for (int i = 0; i < n; ++i) {
    const double theta = (i * std::numbers::pi) / n;
    pair.u[i] = c * std::cos(theta);
    pair.v[i] = c * std::sin(theta);
  }
  return pair;
}

std::pair<ExtremalResult, ExtremalResult> planar_cube_bounds(int n) {
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");
  OrthoPair coord;
  coord.u.assign(n, 0.0);
  coord.v.assign(n, 0.0);
  coord.u[0] = 1.0;
  coord.v[1] = 1.0;
  ExtremalResult lo;
  lo.value = 1.0;
  lo.kind = ExtremalKind::min;
  lo.certified = true;
  lo.argument = std::move(coord);

  ExtremalResult hi;
  hi.value = 1.0 / std::tan(std::numbers::pi / (2.0 * n));
  hi.kind = ExtremalKind::max;
  hi.certified = true;
  hi.argument = trig_pair(n);
  return {std::move(lo), std::move(hi)};
}

std::pair<ExtremalResult, ExtremalResult> fp_extrema_sphere(int m, LpOrder p) {
  if (m < 2) throw std::invalid_argument("need at least 2 coordinates");
  if (p.p == 2.0)
    throw std::invalid_argument("F_2 is constant on the sphere; no extremal problem");

  Direction spike;
  spike.coords.assign(m, 0.0);
  spike.coords[0] = 1.0;
  spike.zero_sum = false;
  Direction uniform;
  uniform.coords.assign(m, 1.0 / std::sqrt(static_cast<double>(m)));
  uniform.zero_sum = false;

  const double uniform_value = std::pow(static_cast<double>(m), 1.0 - p.p / 2.0);
  ExtremalResult spike_res, uniform_res;
  spike_res.value = 1.0;
  spike_res.certified = true;
  spike_res.argument = std::move(spike);
  uniform_res.value = uniform_value;
  uniform_res.certified = true;
  uniform_res.argument = std::move(uniform);

  if (p.p < 2.0) {
    spike_res.kind = ExtremalKind::min;
    uniform_res.kind = ExtremalKind::max;
    return {std::move(spike_res), std::move(uniform_res)};
  }
  uniform_res.kind = ExtremalKind::min;
  spike_res.kind = ExtremalKind::max;
  return {std::move(uniform_res), std::move(spike_res)};
}

bool majorizes(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("length mismatch");
  constexpr double tol = 1e-10;
  std::vector<double> xs(x.begin(), x.end()), ys(y.begin(), y.end());
  std::sort(xs.begin(), xs.end(), std::greater<>());
  std::sort(ys.begin(), ys.end(), std::greater<>());
  double px = 0.0, py = 0.0;
  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    px += xs[k];
    py += ys[k];
    if (px > py + tol) return false;
  }
  if (!xs.empty()) {
    px += xs.back();
    py += ys.back();
  }
  return std::abs(px - py) <= tol;
}

double karamata_gap(std::span<const double> x, std::span<const double> y,
                    const std::function<double(double)>& f_convex) {
  if (!majorizes(x, y))
    throw std::invalid_argument("pair does not majorize");
  double gap = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    gap += f_convex(y[i]) - f_convex(x[i]);
  return gap;
}

std::function<double(double)> abs_power(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("exponent must be >= 1 for convexity");
  return [p](double t) { return std::pow(std::abs(t), p); };
}

std::function<double(double)> piecewise_linear(
    std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 2)
    throw std::invalid_argument("need at least 2 sample points");
  std::sort(samples.begin(), samples.end());
  double prev_slope = -1e300;
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const double dx = samples[i + 1].first - samples[i].first;
    if (dx <= 0.0) throw std::invalid_argument("duplicate abscissae");
    const double slope = (samples[i + 1].second - samples[i].second) / dx;
    if (slope < prev_slope - 1e-12)
      throw std::invalid_argument("sample table is not convex");
    prev_slope = slope;
  }
  return [s = std::move(samples)](double t) {
    std::size_t i = 0;
    while (i + 2 < s.size() && t > s[i + 1].first) ++i;
    const double frac = (t - s[i].first) / (s[i + 1].first - s[i].first);
    return s[i].second + frac * (s[i + 1].second - s[i].second);
  };
}

std::vector<double> canonical_coords(std::span<const double> coords) {
  std::vector<double> a(coords.begin(), coords.end());
  std::vector<double> b(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) b[i] = -a[i];
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()) ? b : a;
}

namespace {

struct ObjectiveEval {
  SearchObjective objective;
  double p = 2.0;

  double value(std::span<const double> x, int m) const {
    switch (objective) {
      case SearchObjective::l1_sum: {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += std::abs(x[i]);
        return s;
      }
      case SearchObjective::fp_sum: {
        double s = 0.0;
        for (int i = 0; i < m; ++i) s += std::pow(std::abs(x[i]), p);
        return s;
      }
      case SearchObjective::planar_minor_sum: {
        double s = 0.0;
        for (int i = 0; i < m; ++i)
          for (int j = i + 1; j < m; ++j)
            s += std::abs(x[i] * x[m + j] - x[j] * x[m + i]);
        return s;
      }
    }
    return 0.0;
  }

  // subgradient; zero coordinates of the l1 objective contribute 0
  void gradient(std::span<const double> x, int m, std::vector<double>& g) const {
    std::fill(g.begin(), g.end(), 0.0);
    switch (objective) {
      case SearchObjective::l1_sum:
        for (int i = 0; i < m; ++i) g[i] = sign_of(x[i]);
        break;
      case SearchObjective::fp_sum:
        for (int i = 0; i < m; ++i)
          g[i] = x[i] == 0.0
                     ? 0.0
                     : p * sign_of(x[i]) * std::pow(std::abs(x[i]), p - 1.0);
        break;
      case SearchObjective::planar_minor_sum:
        for (int i = 0; i < m; ++i) {
          for (int j = i + 1; j < m; ++j) {
            const double s = sign_of(x[i] * x[m + j] - x[j] * x[m + i]);
            g[i] += s * x[m + j];
            g[j] -= s * x[m + i];
            g[m + j] += s * x[i];
            g[m + i] -= s * x[j];
          }
        }
        break;
    }
  }
};

// mean-subtract / normalize / re-orthonormalize back onto the constraint set
bool reproject(std::vector<double>& x, int m, SearchConstraint constraint) {
  switch (constraint) {
    case SearchConstraint::unit_sphere:
    case SearchConstraint::zero_sum_unit_sphere: {
      if (constraint == SearchConstraint::zero_sum_unit_sphere) {
        double mean = 0.0;
        for (int i = 0; i < m; ++i) mean += x[i];
        mean /= m;
        for (int i = 0; i < m; ++i) x[i] -= mean;
      }
      double nn = 0.0;
      for (int i = 0; i < m; ++i) nn += x[i] * x[i];
      if (nn <= 0.0) return false;
      const double inv = 1.0 / std::sqrt(nn);
      for (int i = 0; i < m; ++i) x[i] *= inv;
      return true;
    }
    case SearchConstraint::orthonormal_pair: {
      double nu = 0.0;
      for (int i = 0; i < m; ++i) nu += x[i] * x[i];
      if (nu <= 0.0) return false;
      double inv = 1.0 / std::sqrt(nu);
      for (int i = 0; i < m; ++i) x[i] *= inv;
      for (int pass = 0; pass < 2; ++pass) {
        double c = 0.0;
        for (int i = 0; i < m; ++i) c += x[m + i] * x[i];
        for (int i = 0; i < m; ++i) x[m + i] -= c * x[i];
      }
      double nv = 0.0;
      for (int i = 0; i < m; ++i) nv += x[m + i] * x[m + i];
      if (nv <= 1e-24) return false;
      inv = 1.0 / std::sqrt(nv);
      for (int i = 0; i < m; ++i) x[m + i] *= inv;
      return true;
    }
  }
  return false;
}

std::vector<double> random_start(int m, SearchConstraint constraint,
                                 SplitMix64& rng) {
  const int len = constraint == SearchConstraint::orthonormal_pair ? 2 * m : m;
  std::vector<double> x(len);
  for (;;) {
    for (double& c : x) c = rng.next_gaussian();
    if (reproject(x, m, constraint)) return x;
  }
}

}  // namespace

ExtremalResult numeric_search(SearchObjective objective, int m,
                              SearchConstraint constraint, ExtremalKind kind,
                              const SearchOptions& options) {
  if (m < 2) throw std::invalid_argument("need at least 2 coordinates");
  if (options.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (objective == SearchObjective::planar_minor_sum &&
      constraint != SearchConstraint::orthonormal_pair)
    throw std::invalid_argument("minor-sum objective needs an orthonormal pair");
  if (objective != SearchObjective::planar_minor_sum &&
      constraint == SearchConstraint::orthonormal_pair)
    throw std::invalid_argument("pair constraint only fits the minor-sum objective");

  const ObjectiveEval eval{objective, options.fp_p};
  const double orient = (kind == ExtremalKind::max) ? 1.0 : -1.0;
  SplitMix64 root(options.seed);

  std::vector<double> best;
  double best_value = -std::numeric_limits<double>::infinity();
  const int len = constraint == SearchConstraint::orthonormal_pair ? 2 * m : m;
  std::vector<double> grad(len), trial(len);

  for (int r = 0; r < options.restarts; ++r) {
    SplitMix64 rng = root.child(static_cast<std::uint64_t>(r));
    std::vector<double> x = random_start(m, constraint, rng);
    double fx = orient * eval.value(x, m);
    double step = options.init_step;
    for (int iter = 0; iter < options.max_iters && step >= options.step_tol; ++iter) {
      eval.gradient(x, m, grad);
      trial = x;
      for (int i = 0; i < len; ++i) trial[i] += orient * step * grad[i];
      if (!reproject(trial, m, constraint)) {
        step *= 0.5;
        continue;
      }
      const double ft = orient * eval.value(trial, m);
      if (ft > fx) {
        x.swap(trial);
        fx = ft;
      } else {
        step *= 0.5;
      }
    }
    if (fx > best_value) {
      best_value = fx;
      best = std::move(x);
    }
  }

  ExtremalResult result;
  result.value = orient * best_value;
  result.kind = kind;
  result.certified = false;
  if (constraint == SearchConstraint::orthonormal_pair) {
    OrthoPair pair;
    pair.u.assign(best.begin(), best.begin() + m);
    pair.v.assign(best.begin() + m, best.end());
    result.argument = std::move(pair);
  } else {
    Direction d;
    d.coords = std::move(best);
    d.zero_sum = constraint == SearchConstraint::zero_sum_unit_sphere;
    result.argument = std::move(d);
  }
  return result;
}

}  // namespace polyproj
