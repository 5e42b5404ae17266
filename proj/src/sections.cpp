#include "polyproj/sections.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "polyproj/closedform.hpp"

namespace polyproj {

namespace {

constexpr double kAngleTol = 1e-12;
constexpr double twopi = 2.0 * std::numbers::pi;

double piecewise_l1(const OrthoPair& pair, double s, double t) {
  double acc = 0.0;
  for (int i = 0; i < pair.dim(); ++i)
    acc += std::abs(s * pair.u[i] + t * pair.v[i]);
  return acc;
}

double point_segment_distance(const std::array<double, 2>& p,
                              const std::array<double, 2>& a,
                              const std::array<double, 2>& b) {
  const double abx = b[0] - a[0], aby = b[1] - a[1];
  const double apx = p[0] - a[0], apy = p[1] - a[1];
  const double denom = abx * abx + aby * aby;
  double t = denom > 0.0 ? (apx * abx + apy * aby) / denom : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const double dx = apx - t * abx, dy = apy - t * aby;
  return std::sqrt(dx * dx + dy * dy);
}

bool point_in_convex(const std::array<double, 2>& p, const Polygon2& poly) {
  const auto& v = poly.vertices;
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    const double cross = (v[i][0] - v[j][0]) * (p[1] - v[j][1]) -
                         (v[i][1] - v[j][1]) * (p[0] - v[j][0]);
    if (cross < 0.0) return false;
  }
  return true;
}

double point_polygon_distance(const std::array<double, 2>& p, const Polygon2& poly) {
  if (poly.vertices.size() >= 3 && point_in_convex(p, poly)) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  const auto& v = poly.vertices;
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++)
    best = std::min(best, point_segment_distance(p, v[j], v[i]));
  return best;
}

}  // namespace

SectionPolygon cross_section_polygon(const OrthoPair& pair) {
  const int n = pair.dim();
  if (n < 2) throw std::invalid_argument("dimension must be at least 2");

  std::vector<double> angles;
  angles.reserve(2 * n);
  for (int i = 0; i < n; ++i) {
    const double ui = pair.u[i], vi = pair.v[i];
    if (ui == 0.0 && vi == 0.0) continue;  // contributes no breakpoint
    double a = std::atan2(ui, -vi);  // direction orthogonal to (u_i, v_i)
    if (a < 0.0) a += twopi;
    angles.push_back(a);
    double b = a + std::numbers::pi;
    if (b >= twopi) b -= twopi;
    angles.push_back(b);
  }
  std::sort(angles.begin(), angles.end());
  std::vector<double> kept;
  for (double a : angles) {
    if (kept.empty() || a - kept.back() > kAngleTol) kept.push_back(a);
  }
  // wrap-around duplicate
  if (kept.size() >= 2 && (kept.front() + twopi) - kept.back() <= kAngleTol)
    kept.pop_back();
  if (kept.size() < 4) throw std::domain_error("degenerate section");

  SectionPolygon section;
  section.pair = pair;
  section.breakpoints = kept;
  section.polygon.vertices.reserve(kept.size());
  for (double a : kept) {
    const double c = std::cos(a), s = std::sin(a);
    const double norm = piecewise_l1(pair, c, s);
    section.polygon.vertices.push_back({c / norm, s / norm});
  }
  section.polygon.convex = true;
  return section;
}

double polygon_area(const Polygon2& polygon) {
  const auto& v = polygon.vertices;
  if (v.size() < 3) return 0.0;
  double area2 = 0.0;
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++)
    area2 += v[j][0] * v[i][1] - v[i][0] * v[j][1];
  return 0.5 * area2;
}

Polygon2 polar_polygon(const Polygon2& polygon) {
  const auto& v = polygon.vertices;
  if (v.size() < 3) throw std::invalid_argument("degenerate polygon");
  Polygon2 polar;
  polar.vertices.reserve(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    const auto& p = v[j];
    const auto& q = v[(j + 1) % v.size()];
    const double det = p[0] * q[1] - p[1] * q[0];
    const double ex = q[0] - p[0], ey = q[1] - p[1];
    const double elen = std::sqrt(ex * ex + ey * ey);
    // det/|edge| is the distance from the origin to the edge line
    if (elen == 0.0 || det <= 1e-10 * elen)
      throw std::invalid_argument("origin not interior");
    polar.vertices.push_back({(q[1] - p[1]) / det, (p[0] - q[0]) / det});
  }
  polar.convex = true;
  return polar;
}

double mahler_product(const Polygon2& polygon) {
  return polygon_area(polygon) * polygon_area(polar_polygon(polygon));
}

Polygon2 scale_polygon(const Polygon2& polygon, double factor) {
  Polygon2 out = polygon;
  for (auto& v : out.vertices) {
    v[0] *= factor;
    v[1] *= factor;
  }
  return out;
}

double hausdorff_distance(const Polygon2& a, const Polygon2& b) {
  double h = 0.0;
  for (const auto& p : a.vertices) h = std::max(h, point_polygon_distance(p, b));
  for (const auto& p : b.vertices) h = std::max(h, point_polygon_distance(p, a));
  return h;
}

Polygon2 cube_shadow_polygon(const OrthoPair& pair) {
  const int n = pair.dim();
  const auto bodies = standard_bodies(n);
  const auto pts = shadow_vertices(bodies.cube, {pair.u, pair.v});
  std::vector<std::array<double, 2>> flat(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) flat[i] = {pts[i][0], pts[i][1]};
  return hull_area_2d(flat).polygon;
}

double nazarov_bound(int n) {
  if (n < 3) throw std::invalid_argument("bound stated for n >= 3");
  const double x = std::numbers::pi / (2.0 * n);
  const double s = std::sin(x);
  return n * n * s * s * s / std::cos(x);
}

DualityCheck shadow_section_duality_check(const OrthoPair& pair) {
  DualityCheck check;
  check.polar_section = polar_polygon(cross_section_polygon(pair).polygon);
  check.doubled_shadow = scale_polygon(cube_shadow_polygon(pair), 2.0);
  check.hausdorff = hausdorff_distance(check.polar_section, check.doubled_shadow);
  double diameter = 0.0;
  for (const auto& v : check.doubled_shadow.vertices)
    diameter = std::max(diameter, 2.0 * std::sqrt(v[0] * v[0] + v[1] * v[1]));
  check.tolerance = 1e-8 * (1.0 + diameter);
  check.pass = check.hausdorff <= check.tolerance;
  return check;
}

ChainCheck mahler_chain_check(const OrthoPair& pair) {
  const int n = pair.dim();
  ChainCheck check;
  const SectionPolygon section = cross_section_polygon(pair);
  check.section_area = polygon_area(section.polygon);
  check.shadow_area = cube_planar_shadow(pair);
  check.product = check.section_area * check.shadow_area;
  check.half_vertices = static_cast<int>(section.polygon.vertices.size()) / 2;
  const double sk = std::sin(std::numbers::pi / (2.0 * check.half_vertices));
  const double sn = std::sin(std::numbers::pi / (2.0 * n));
  check.k_bound = check.half_vertices * check.half_vertices * sk * sk;
  check.n_bound = static_cast<double>(n) * n * sn * sn;
  check.cot_bound = 1.0 / std::tan(std::numbers::pi / (2.0 * n));
  check.pass = check.product <= check.k_bound + 1e-9 &&
               check.k_bound <= check.n_bound + 1e-9 &&
               check.shadow_area <= check.cot_bound + 1e-9;
  return check;
}

}  // namespace polyproj
