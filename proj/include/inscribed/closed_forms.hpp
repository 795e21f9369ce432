#pragma once

#include <vector>

namespace insc::forms {

// Both sides of the Fejes-Toth volume inequality for a convex polyhedron.
struct FTBounds {
  double lower = 0.0;  // inradius-side bound
  double upper = 0.0;  // circumradius-side bound
};

// omega_n = n/(n-2) * pi/6
double omega(int n);

// Full edge/face/vertex form of the icosahedron inequality.  Requires
// Euler's relation v - e + f = 2.
FTBounds fejes_toth_bounds(int e, int f, int v, double r, double R);

// Circumradius-side bound in terms of the vertex count only.
double vertex_bound(int v, double R);

// Both sides of the face-count specialization.
FTBounds face_bound(int f, double r, double R);

// Upper bound v(tau, c) for the volume of a facial tetrahedron with spherical
// face area tau and longest edge arc c.
double facial_tetra_bound(double tau, double c);

// Upper bound for a triangular star-shaped polyhedron with f faces, given the
// per-face spherical areas and longest edge arcs; faces 0..f_prime-1 are in
// the concave regime, the rest enter through the Hessian-zero split curve.
double star_shaped_bound(const std::vector<double>& taus,
                         const std::vector<double>& cs, int f_prime);

// c-value of the Hessian-zero curve of v(tau, .) for a given tau, found
// numerically; NaN if no sign change is bracketed.  Approximate by nature.
double hessian_zero_split(double tau);

// Root omega of hessian_zero_split(omega) = 2*asin(sqrt(2/3)).
double hessian_split_omega();

// Maximal volume over d-polytopes inscribed in S^{d-1} with d+2 vertices.
double v_d_plus2(int d);

// Same with d+3 vertices (d odd; for d even the non-cyclic maximum).
double v_d_plus3(int d);

// Inner/outer symmetricity of an n-dimensional simplex.
double inner_symmetricity(int n);
double outer_symmetricity(int n);

// Volume of the d-dimensional unit ball.
double unit_ball_volume(int d);

// Lower bound 1 + 2 v_{d-1} / v_d shared by the translative, point-reflection
// and hyperplane-reflection hull-ratio minima.
double rs_lower(int d);

double binomial(int n, int k);

}  // namespace insc::forms
