#pragma once

#include <string>
#include <vector>

#include "inscribed/geometry.hpp"

namespace insc::constructions {

// d+1 unit vectors with pairwise inner product -1/d.
VertexPolytope regular_simplex(int d);

// Vertices +-e_1, ..., +-e_d.
VertexPolytope cross_polytope(int d);

// Two poles +-e_3 plus a regular (n-2)-gon on the equator, n >= 5.
VertexPolytope double_pyramid(int n);

// Trigonometric-moment cyclic polytope inscribed in S^{d-1}; d even >= 4,
// n >= d+3.  Consecutive coordinate pairs traverse circles at frequencies
// 1, ..., d/2 with base angle 2*pi*i/n.
VertexPolytope cyclic_polytope(int d, int n);

// Convex hull of regular simplices of the given dimensions placed in
// mutually orthogonal coordinate subspaces; sum of dims = ambient d.
VertexPolytope orthogonal_join(const std::vector<int>& dims);

enum class Named { Cube, Icosahedron, Max8, RemarkP3 };

VertexPolytope named_polytope(Named name);
VertexPolytope named_polytope(const std::string& name);

}  // namespace insc::constructions
