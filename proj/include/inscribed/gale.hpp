#pragma once

#include <vector>

#include "inscribed/geometry.hpp"

namespace insc::gale {

// Gale transform of an n-vertex d-polytope: n points in R^{n-d-1}, the rows
// of an orthonormal kernel basis of the homogeneous vertex matrix, scaled to
// unit Frobenius norm.  For n = d+1 the diagram dimension is 0.
struct GaleDiagram {
  int n = 0;
  int d = 0;
  Mat points;  // n x (n-d-1)

  int diagram_dim() const { return n - d - 1; }
  Vec point(int i) const { return points.row(i).transpose(); }
};

GaleDiagram gale_transform(const VertexPolytope& p);

struct GalePredicates {
  bool is_polytope_diagram = false;
  bool is_simplicial = false;
  bool is_pyramid = false;
  // d-subsets of vertex indices whose cofaces certify them as facets.
  std::vector<std::vector<int>> facet_cofaces;
  // Set when the point configuration was too degenerate for the spanned
  // hyperplane enumeration to be conclusive without random supplements.
  bool degenerate_position = false;
};

GalePredicates gale_predicates(const GaleDiagram& diag);

// True iff the origin lies in the relative interior of conv(points).
bool origin_in_relint(const std::vector<Vec>& points, double tol = kSideTol);

}  // namespace insc::gale
