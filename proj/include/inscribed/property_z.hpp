#pragma once

#include <map>
#include <vector>

#include "inscribed/geometry.hpp"

namespace insc::propz {

// Per-vertex stationarity residuals |p - m/|m|| and facet stars.
struct ZReport {
  std::vector<double> residuals;
  std::vector<std::vector<int>> stars;
  double max_residual = 0.0;
};

// Unnormalized stationarity vector m = sum_{F in F_p} A(F,p) m(F,p) for one
// vertex.  A(F,p) is the (d-1)-volume of conv((V(F) u {o}) \ {p}) and m(F,p)
// the unit normal of its span pointing toward p.
Vec stationarity_vector(const VertexPolytope& p, const OrientedComplex& c,
                        int vertex);

// 3D shortcut: m = sum of cross products (p_j x p_k)/6 over the oriented
// boundary of the vertex star.  Agrees in direction with the general form.
Vec stationarity_vector3(const VertexPolytope& p, const OrientedComplex& c,
                         int vertex);

ZReport z_residual(const VertexPolytope& p);
ZReport z_residual(const VertexPolytope& p, const OrientedComplex& c);

// One synchronous fixed-point update p_i <- m_i/|m_i|.
VertexPolytope bh_step(const VertexPolytope& p);

struct OptimizeResult {
  VertexPolytope polytope;
  ZReport report;
  double volume = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Damped fixed-point iteration: the step toward m/|m| is halved whenever the
// volume would decrease; a facet-set change resets the damping.
OptimizeResult local_optimize(const VertexPolytope& p, int max_iter = 5000,
                              double tol = 1e-9);

struct MedialReport {
  std::map<int, int> valences;  // valence -> vertex count
  bool is_medial = false;
};

// Valence multiset of the facet complex and the medial test (d = 3 only).
MedialReport medial_check(const VertexPolytope& p);
MedialReport medial_check(const VertexPolytope& p, const OrientedComplex& c);

}  // namespace insc::propz
