#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <utility>
#include <vector>

namespace insc {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Classification tolerance for hyperplane side tests.
inline constexpr double kSideTol = 1e-9;
// Two vertices closer than this are considered duplicates.
inline constexpr double kDuplicateTol = 1e-9;

// A d-polytope given by its ordered vertex list.
struct VertexPolytope {
  int dim = 0;
  std::vector<Vec> vertices;

  int n() const { return static_cast<int>(vertices.size()); }
};

// Boundary of a polytope as a simplicial complex: each facet is a d-tuple of
// vertex indices, ordered so the simplex spanned together with an interior
// reference point is positively oriented.
struct OrientedComplex {
  std::vector<std::vector<int>> facets;
};

Vec centroid(const std::vector<Vec>& pts);

// Affine rank of a point set (number of independent edge directions).
int affine_rank(const std::vector<Vec>& pts, double tol = kSideTol);

// Throws std::invalid_argument if the polytope violates its invariants
// (n >= d+1, full affine span, no duplicate vertices).
void validate(const VertexPolytope& p);

// Volume of the d-simplex with the given d+1 vertices: |det| / d!.
double simplex_volume(const std::vector<Vec>& verts);

// Facet enumeration by brute force over d-subsets.  Non-simplicial facets are
// split by the canonical smallest-index triangulation, so the result is always
// simplicial.  Throws on rank-deficient or duplicate input.
OrientedComplex convex_hull(const std::vector<Vec>& pts);
OrientedComplex convex_hull(const VertexPolytope& p);

double polytope_volume(const VertexPolytope& p);
double polytope_volume(const VertexPolytope& p, const OrientedComplex& c);

// Volume of conv(pts); points may be redundant.  Dispatches to fast paths
// (monotone chain in 2D, incremental hull for large 3D sets); degenerate
// input yields 0 on the fast paths.
double hull_volume(const std::vector<Vec>& pts);

// Incremental 3D hull; tolerates duplicate and interior points.  Facets are
// triangles oriented as in convex_hull; coplanar faces come back triangulated
// arbitrarily (not canonically).  Degenerate input yields an empty complex.
OrientedComplex incremental_hull3(const std::vector<Vec>& pts);

bool on_unit_sphere(const VertexPolytope& p, double tol);

// Cross product for 3-dimensional VectorXd.
Vec cross3(const Vec& a, const Vec& b);

// Unit normal of the hyperplane spanned by the d-1 columns of B (d x (d-1)).
// Throws if the columns are rank deficient.
Vec hyperplane_normal(const Mat& B);

// Facet indices incident to each vertex.
std::vector<std::vector<int>> vertex_stars(const OrientedComplex& c, int n);

// Undirected edge list of the complex.
std::vector<std::pair<int, int>> complex_edges(const OrientedComplex& c);

// Number of edges incident to each vertex.
std::vector<int> vertex_valences(const OrientedComplex& c, int n);

}  // namespace insc
