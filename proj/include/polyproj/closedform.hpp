#pragma once

#include <vector>

#include "polyproj/linalg.hpp"

namespace polyproj {

enum class BodyTag { cube, cross, simplex_centered };

/// Discrete surface-area data of a polytope: unit facet normals with the
/// matching facet volumes. Closed under the origin: sum vol * normal = 0.
struct FacetData {
  BodyTag body;
  int ambient_dim;  // length of every normal
  std::vector<std::vector<double>> normals;
  std::vector<double> volumes;
};

struct BodyVolumeConstants {
  int n;
  double simplex_volume;        // sqrt(n+1)/n!
  double simplex_facet_volume;  // sqrt(n)/(n-1)!
  double cross_facet_volume;    // sqrt(n)/(n-1)!
};

/// n! as a double; exact products up to n = 20, log-gamma beyond.
double factorial(int n);

BodyVolumeConstants body_volume_constants(int n);

/// (n-1)-volume of the shadow of the regular n-simplex (side sqrt(2),
/// embedded in R^{n+1}) on the hyperplane orthogonal to a inside the
/// affine span: (1/2) * sqrt(n+1)/(n-1)! * sum_j |a_j|.
/// Requires a zero-sum direction of length n+1; with project_input the
/// direction is first projected onto the zero-sum sphere.
double simplex_hyperplane_shadow(const Direction& a, bool project_input = false);

/// (n-1)-volume of the shadow of the volume-one cube: sum_j |a_j|.
double cube_hyperplane_shadow(const Direction& a);

/// Planar shadow of the cube on span{u,v}: the 2x2-minor sum
/// sum_{i<j} |u_i v_j - u_j v_i|. Equals the (n-2)-dimensional shadow on
/// the orthogonal complement.
double cube_planar_shadow(const OrthoPair& pair);

/// Width of the simplex in a zero-sum direction: max_j a_j - min_j a_j.
double simplex_width(const Direction& a);

/// Gauge of the difference body of the simplex at a zero-sum direction:
/// (1/2) sum_j |a_j|.
double simplex_gauge_diff_body(const Direction& a);

/// Complete facet normal/volume lists for the three standard bodies.
/// Cross-polytope enumeration (2^n facets) is capped at n <= 20.
FacetData facet_data(BodyTag body, int n);

/// Shadow volume through the facet sum: (1/2) sum_F vol(F) |<a, n(F)>|.
double cauchy_shadow(const FacetData& facets, const Direction& a);

/// Shadow volume over difference-body gauge; constant in the direction,
/// equal to sqrt(n+1)/(n-1)! = n * vol_n(simplex).
double width_projection_ratio(const Direction& a);
double width_projection_ratio_constant(int n);

}  // namespace polyproj
