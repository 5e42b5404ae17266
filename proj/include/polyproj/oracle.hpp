#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polyproj/linalg.hpp"

namespace polyproj {

/// Polytope given by its vertex list.
struct VPolytope {
  std::vector<std::vector<double>> vertices;
  std::string tag;

  int dim() const {
    return vertices.empty() ? 0 : static_cast<int>(vertices[0].size());
  }
};

struct StandardBodies {
  VPolytope simplex;           // e_1..e_{n+1} in R^{n+1}
  VPolytope simplex_centered;  // permutations of (n,-1,...,-1)/(n+1)
  VPolytope cube;              // all of (+-1/2)^n
  VPolytope cross;             // +-e_j
};

/// Exact vertex lists of the standard bodies. The cube is capped at n <= 20
/// (2^n vertices); beyond that throws std::length_error.
StandardBodies standard_bodies(int n);

/// Ordered convex polygon in plane coordinates, counterclockwise.
struct Polygon2 {
  std::vector<std::array<double, 2>> vertices;
  bool convex = false;
};

struct HullResult {
  double area = 0.0;
  Polygon2 polygon;
};

/// Coordinates of each vertex in the given orthonormal basis of the target
/// subspace: vertex x maps to (<x,b_1>, ..., <x,b_k>).
std::vector<std::vector<double>> shadow_vertices(
    const VPolytope& body, const std::vector<std::vector<double>>& basis);

/// Convex hull by monotone chain, area by the shoelace formula. Collinear
/// input (within 1e-12 on cross products) gives area 0 and a degenerate
/// polygon with convex = false.
HullResult hull_area_2d(const std::vector<std::array<double, 2>>& points);

/// Area of the 2-dimensional shadow of a body on span{u,v}.
double shadow_area_2d(const VPolytope& body, const OrthoPair& pair);

/// Length of the 1-dimensional shadow (extent of projected vertices).
double shadow_length_1d(const VPolytope& body, std::span<const double> axis);

/// Euclidean distance from q to the convex hull of a point set, by Wolfe's
/// min-norm-point method. Deterministic (lowest-index tie breaking).
/// Preconditions: dimension <= 6, at most 256 points.
class HullDistance {
 public:
  explicit HullDistance(const std::vector<std::vector<double>>& points);
  double distance(std::span<const double> q);

 private:
  int dim_;
  std::vector<std::vector<double>> points_;
  // scratch for the active set and its Gram system
  std::vector<std::vector<double>> diff_;
  std::vector<int> corral_;
  std::vector<double> weights_;
};

double distance_to_hull(std::span<const double> q,
                        const std::vector<std::vector<double>>& points);

/// True iff q is within Euclidean distance 1e-9 of conv(points).
bool membership_in_hull(std::span<const double> q,
                        const std::vector<std::vector<double>>& points);

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  double box_volume = 0.0;
};

/// Monte-Carlo volume of the shadow of a body on the span of an orthonormal
/// basis (3 <= k <= 6): uniform samples in the bounding box of the projected
/// vertices, hit-tested against their convex hull.
McEstimate shadow_volume_mc(const VPolytope& body,
                            const std::vector<std::vector<double>>& basis,
                            std::int64_t samples, std::uint64_t seed);

}  // namespace polyproj
