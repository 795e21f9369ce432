#pragma once

#include <cstdint>
#include <vector>

#include "inscribed/geometry.hpp"

namespace insc::twobody {

// An isometry applied to the second body of a pair.
struct PairPlacement {
  enum class Kind {
    Translation,
    PointReflection,
    FlatReflection,
    HyperplaneReflection,
    RigidMotion,
  };
  Kind kind = Kind::Translation;

  Vec translation;       // Translation
  Vec center;            // PointReflection
  Mat flat_basis;        // FlatReflection: d x i orthonormal columns
  Vec flat_point;        // FlatReflection: a point of the flat
  Vec plane_normal;      // HyperplaneReflection, unit
  double plane_offset = 0.0;
  Mat rotation;          // RigidMotion
  Vec shift;             // RigidMotion

  Vec apply(const Vec& x) const;

  static PairPlacement identity(int d);
  static PairPlacement translate(const Vec& t);
  static PairPlacement reflect_point(const Vec& center);
  static PairPlacement reflect_flat(const Mat& basis, const Vec& point);
  static PairPlacement reflect_hyperplane(const Vec& normal, double offset);
  static PairPlacement rigid(const Mat& rotation, const Vec& shift);
};

// Volume of conv(K u placement(K2)).
double pair_hull_volume(const VertexPolytope& k, const VertexPolytope& k2,
                        const PairPlacement& placement);

struct VolumeProfile {
  std::vector<double> parameters;
  std::vector<double> values;
};

// g(x) = vol conv(K u (K2 + x*direction)) sampled at x_values.
VolumeProfile g_profile(const VertexPolytope& k, const VertexPolytope& k2,
                        const Vec& direction,
                        const std::vector<double>& x_values);

// Max over interior samples of g(x_i) - (g(x_{i-1}) + g(x_{i+1}))/2 for a
// uniform grid; nonpositive up to tolerance certifies midpoint convexity.
double convexity_defect(const VolumeProfile& profile);

enum class IsometryFamily {
  Translations,
  PointReflections,
  FlatReflections,
  HyperplaneReflections,
  Congruences,
};

struct OptConfig {
  uint64_t seed = 0;
  int restarts = 32;
  int grid = 360;        // coarse scan resolution for 1-parameter families
  int flat_dim = 0;      // i for FlatReflections
  int max_eval = 4000;   // per local refinement
};

struct CQuantityResult {
  double value = 0.0;
  PairPlacement witness;
  int restarts = 0;
};

// c(K|S): maximal vol(conv(K u sigma K))/vol(K) over the family, subject to
// K and sigma K intersecting.  Seeded multi-start local search.
CQuantityResult c_quantity(const VertexPolytope& k, IsometryFamily family,
                           const OptConfig& config = {});

// d = 2: true iff the hull volume of two touching translates is independent
// of the contact direction (spread below tol over `samples` directions).
bool constant_volume_predicate(const VertexPolytope& k, int samples,
                               double tol);

enum class ReflectionBody { RStar, TStar };

// vol(R*K)/vol(K) or vol(T*K)/vol(K).
double reflection_body_ratio(const VertexPolytope& k, ReflectionBody kind,
                             const OptConfig& config = {});

// (width along u) * vol_{d-1}(projection) / vol_d(K) for a unit direction u.
double cylinder_ratio(const VertexPolytope& k, const Vec& u);
double max_cylinder_ratio(const VertexPolytope& k, const OptConfig& config = {});

struct SimplexReflection {
  double ratio = 0.0;        // prism-formula value
  double ratio_direct = 0.0; // via pair_hull_volume; must agree with ratio
  double bound = 0.0;        // Gram-matrix bound; NaN unless one upper facet
  int upper_facets = 0;
};

// Simplex S with a vertex on the hyperplane through that vertex with unit
// normal h_normal and the rest strictly on the positive side, reflected in
// the hyperplane.
SimplexReflection simplex_reflection(const VertexPolytope& s,
                                     const Vec& h_normal);

enum class CommonCenterKind { TwoTriangles, TwoTetrahedra };

struct CommonCenterResult {
  double max_volume = 0.0;
  Mat witness_rotation;
  std::vector<Vec> witness_vertices;
};

// Max hull volume of two concentric regular bodies of circumradius 1 over
// relative rotations.
CommonCenterResult common_center_search(CommonCenterKind kind,
                                        const OptConfig& config = {});

enum class Symmetricity { Inner, Outer };

// Brute-force grid oracle for the inner/outer symmetricity of a simplex,
// d in {2, 3}.
double symmetricity_oracle(const VertexPolytope& s, Symmetricity kind,
                           int resolution = 24);

// Support function h_K(u) = max_v <u, v>.
double support(const VertexPolytope& k, const Vec& u);

// Length of the maximal translation along unit u keeping K and K+t
// intersecting (radial function of the difference body).
double contact_length(const VertexPolytope& k, const Vec& u);

// Halfspace-intersection volume of the simplex S with its point reflection
// at a (vertex enumeration over the 2(d+1) constraints).
double simplex_self_intersection_volume(const VertexPolytope& s, const Vec& a);

// Vertex approximations of smooth test bodies.
VertexPolytope disc_polygon(int m = 256);                   // unit circumradius
VertexPolytope ball_polytope(int m = 1000, uint64_t seed = 2);
VertexPolytope reuleaux_polygon(int m = 120);               // width 1

}  // namespace insc::twobody
