#include "inscribed/constructions.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace insc::constructions {

namespace {
constexpr double kPi = 3.14159265358979323846;

// Regular k-simplex inscribed in the unit sphere of R^k (k >= 1):
// scaled, centered standard-basis vectors of R^{k+1} expressed in an
// orthonormal basis of the hyperplane they span.
std::vector<Vec> unit_simplex_vertices(int k) {
  if (k == 1) {
    Vec a(1), b(1);
    a << 1.0;
    b << -1.0;
    return {a, b};
  }
  Vec ones = Vec::Ones(k + 1);
  Eigen::JacobiSVD<Mat> svd(Mat(ones), Eigen::ComputeFullU);
  Mat Q = svd.matrixU().rightCols(k);  // basis of { x : sum x_i = 0 }
  std::vector<Vec> out;
  double scale = std::sqrt(static_cast<double>(k + 1) / k);
  for (int i = 0; i <= k; ++i) {
    Vec u = -ones / (k + 1);
    u(i) += 1.0;
    out.push_back(scale * (Q.transpose() * u));
  }
  return out;
}
}  // namespace

VertexPolytope regular_simplex(int d) {
  if (d < 2) throw std::invalid_argument("regular_simplex needs d >= 2");
  return {d, unit_simplex_vertices(d)};
}

VertexPolytope cross_polytope(int d) {
  if (d < 2) throw std::invalid_argument("cross_polytope needs d >= 2");
  std::vector<Vec> verts;
  for (int i = 0; i < d; ++i) {
    Vec e = Vec::Zero(d);
    e(i) = 1.0;
    verts.push_back(e);
    verts.push_back(-e);
  }
  return {d, verts};
}

VertexPolytope double_pyramid(int n) {
  if (n < 5) throw std::invalid_argument("double_pyramid needs n >= 5");
  std::vector<Vec> verts;
  Vec pole = Vec::Zero(3);
  pole(2) = 1.0;
  verts.push_back(pole);
  verts.push_back(-pole);
  const int m = n - 2;
  for (int i = 0; i < m; ++i) {
    Vec v(3);
    v << std::cos(2.0 * kPi * i / m), std::sin(2.0 * kPi * i / m), 0.0;
    verts.push_back(v);
  }
  return {3, verts};
}

VertexPolytope cyclic_polytope(int d, int n) {
  if (d < 4 || d % 2 != 0)
    throw std::invalid_argument("cyclic_polytope needs even d >= 4");
  if (n < d + 3) throw std::invalid_argument("cyclic_polytope needs n >= d+3");
  const int h = d / 2;
  const double scale = std::sqrt(2.0 / d);
  std::vector<Vec> verts;
  for (int i = 0; i < n; ++i) {
    Vec v(d);
    for (int k = 1; k <= h; ++k) {
      double a = 2.0 * kPi * k * i / n;
      v(2 * (k - 1)) = std::cos(a);
      v(2 * (k - 1) + 1) = std::sin(a);
    }
    verts.push_back(scale * v);
  }
  return {d, verts};
}

VertexPolytope orthogonal_join(const std::vector<int>& dims) {
  int d = 0;
  for (int k : dims) {
    if (k < 1) throw std::invalid_argument("block dimension must be >= 1");
    d += k;
  }
  if (d < 2 || dims.empty())
    throw std::invalid_argument("orthogonal_join needs total dimension >= 2");
  std::vector<Vec> verts;
  int offset = 0;
  for (int k : dims) {
    for (const Vec& s : unit_simplex_vertices(k)) {
      Vec v = Vec::Zero(d);
      v.segment(offset, k) = s;
      verts.push_back(v);
    }
    offset += k;
  }
  return {d, verts};
}

namespace {
VertexPolytope cube3() {
  std::vector<Vec> verts;
  const double s = 1.0 / std::sqrt(3.0);
  for (int sx : {-1, 1})
    for (int sy : {-1, 1})
      for (int sz : {-1, 1}) {
        Vec v(3);
        v << s * sx, s * sy, s * sz;
        verts.push_back(v);
      }
  return {3, verts};
}

VertexPolytope icosahedron3() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double s = 1.0 / std::sqrt(1.0 + phi * phi);
  std::vector<Vec> verts;
  for (int a : {-1, 1})
    for (int b : {-1, 1}) {
      Vec v1(3), v2(3), v3(3);
      v1 << 0.0, a * s, b * phi * s;
      v2 << a * s, b * phi * s, 0.0;
      v3 << a * phi * s, 0.0, b * s;
      verts.push_back(v1);
      verts.push_back(v2);
      verts.push_back(v3);
    }
  return {3, verts};
}

// The 8-vertex medial maximizer.  Coordinates were produced by the
// multi-start search and then Newton-polished on the stationarity system to
// machine precision; they are regression-tested against the closed-form
// volume sqrt((475 + 29 sqrt(145)) / 250).
VertexPolytope max8() {
  static const double coords[8][3] = {
      {-0.4897150102680376, -0.52189256417763397, 0.69843207269874852},
      {0.59647876570455871, 0.058367697752940227, -0.80050377508328319},
      {-0.2743058453532774, -0.81305281495501325, -0.51351866889019027},
      {0.13824762162795695, 0.95365144946946068, -0.26727608953853305},
      {0.72157991905179075, 0.28229007140493301, 0.63216669954008886},
      {-0.82834367448831181, 0.1812347950197605, -0.53009499715555441},
      {0.63518861913124425, -0.75375362442566418, 0.16849596965897418},
      {-0.49913039540592391, 0.61315498991121664, 0.61229878876974908},
  };
  std::vector<Vec> verts;
  for (const auto& c : coords) {
    Vec v(3);
    v << c[0], c[1], c[2];
    verts.push_back(v);
  }
  return {3, verts};
}

VertexPolytope remark_p3() {
  const double t = 1.0 / 3.0;
  const double coords[6][3] = {
      {1.0, 0.0, 0.0},       {-2.0 * t, -2.0 * t, t}, {0.0, 1.0, 0.0},
      {t, -2.0 * t, -2.0 * t}, {0.0, 0.0, 1.0},       {-2.0 * t, t, -2.0 * t},
  };
  std::vector<Vec> verts;
  for (const auto& c : coords) {
    Vec v(3);
    v << c[0], c[1], c[2];
    verts.push_back(v);
  }
  return {3, verts};
}
}  // namespace

VertexPolytope named_polytope(Named name) {
  switch (name) {
    case Named::Cube:
      return cube3();
    case Named::Icosahedron:
      return icosahedron3();
    case Named::Max8:
      return max8();
    case Named::RemarkP3:
      return remark_p3();
  }
  throw std::invalid_argument("unknown polytope name");
}

VertexPolytope named_polytope(const std::string& name) {
  if (name == "cube") return named_polytope(Named::Cube);
  if (name == "icosahedron") return named_polytope(Named::Icosahedron);
  if (name == "max8") return named_polytope(Named::Max8);
  if (name == "remark_P3") return named_polytope(Named::RemarkP3);
  throw std::invalid_argument("unknown polytope name: " + name);
}

}  // namespace insc::constructions
