#pragma once

#include <vector>

#include "polyproj/linalg.hpp"
#include "polyproj/oracle.hpp"

namespace polyproj {

/// Planar section of the cross-polytope in (s,t) coordinates of span{u,v}.
/// Centrally symmetric with at most 2n vertices.
struct SectionPolygon {
  Polygon2 polygon;
  OrthoPair pair;
  std::vector<double> breakpoints;  // vertex angles, ascending in [0, 2pi)
};

/// The section is the unit ball of N(s,t) = sum_i |s u_i + t v_i|, piecewise
/// linear between the angles where some s u_i + t v_i vanishes; those angles
/// carry the polygon vertices (cos a, sin a)/N(cos a, sin a).
SectionPolygon cross_section_polygon(const OrthoPair& pair);

/// Shoelace area; degenerate polygons (< 3 vertices) give 0.
double polygon_area(const Polygon2& polygon);

/// Polar polygon: one vertex per edge, solving <y, p_j> = <y, p_{j+1}> = 1.
/// Requires the origin strictly interior.
Polygon2 polar_polygon(const Polygon2& polygon);

/// vol(P) * vol(polar(P)).
double mahler_product(const Polygon2& polygon);

Polygon2 scale_polygon(const Polygon2& polygon, double factor);

/// Symmetric Hausdorff distance between convex polygons, vertex-to-polygon
/// both ways.
double hausdorff_distance(const Polygon2& a, const Polygon2& b);

/// Convex hull of the cube's shadow on span{u,v}, in (s,t) coordinates.
Polygon2 cube_shadow_polygon(const OrthoPair& pair);

/// Lower bound n^2 sin^3(pi/2n)/cos(pi/2n) for the area of any planar
/// cross-polytope section, n >= 3; attained at the evenly rotated plane.
double nazarov_bound(int n);

/// Checks polar(section) against twice the cube shadow in the same plane
/// coordinates.
struct DualityCheck {
  double hausdorff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  Polygon2 polar_section;
  Polygon2 doubled_shadow;
};
DualityCheck shadow_section_duality_check(const OrthoPair& pair);

/// Chain of planar bounds: with A the section area, S the planar cube
/// shadow, and 2k the section vertex count,
///   A * S <= k^2 sin^2(pi/2k) <= n^2 sin^2(pi/2n)  and  S <= cot(pi/2n).
struct ChainCheck {
  double section_area = 0.0;
  double shadow_area = 0.0;
  double product = 0.0;
  int half_vertices = 0;
  double k_bound = 0.0;
  double n_bound = 0.0;
  double cot_bound = 0.0;
  bool pass = false;
};
ChainCheck mahler_chain_check(const OrthoPair& pair);

}  // namespace polyproj
