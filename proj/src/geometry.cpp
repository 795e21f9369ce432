#include "inscribed/geometry.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>

namespace insc {

namespace {

// Iterates over all k-subsets of {0,...,m-1}.
template <typename F>
void for_each_subset(int m, int k, F&& fn) {
  if (k > m) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

struct RawFacet {
  std::vector<int> support;  // positions into the local point list, sorted
  Vec outward;               // unit outward normal in local coordinates
};

// Supporting-hyperplane facets of a full-dimensional point set in R^k.
std::vector<RawFacet> raw_facets(const std::vector<Vec>& pts, int k) {
  const int m = static_cast<int>(pts.size());
  std::vector<RawFacet> out;
  Vec c = centroid(pts);

  if (k == 1) {
    int lo = 0, hi = 0;
    for (int i = 1; i < m; ++i) {
      if (pts[i](0) < pts[lo](0)) lo = i;
      if (pts[i](0) > pts[hi](0)) hi = i;
    }
    Vec minus(1), plus(1);
    minus << -1.0;
    plus << 1.0;
    out.push_back({{lo}, minus});
    out.push_back({{hi}, plus});
    return out;
  }

  std::set<std::vector<int>> seen;
  for_each_subset(m, k, [&](const std::vector<int>& sub) {
    Mat B(k, k - 1);
    for (int j = 1; j < k; ++j) B.col(j - 1) = pts[sub[j]] - pts[sub[0]];
    Eigen::JacobiSVD<Mat> svd(B, Eigen::ComputeFullU);
    if (k > 1 && svd.singularValues()(k - 2) < kSideTol) return;  // degenerate
    Vec nu = svd.matrixU().col(k - 1);

    double mx = 0.0, mn = 0.0;
    for (int i = 0; i < m; ++i) {
      double off = nu.dot(pts[i] - pts[sub[0]]);
      mx = std::max(mx, off);
      mn = std::min(mn, off);
    }
    if (mx > kSideTol && mn < -kSideTol) return;  // not supporting
    Vec outward = (mx <= kSideTol) ? nu : Vec(-nu);

    std::vector<int> support;
    for (int i = 0; i < m; ++i)
      if (std::abs(nu.dot(pts[i] - pts[sub[0]])) <= kSideTol)
        support.push_back(i);
    if (!seen.insert(support).second) return;
    if (outward.dot(c - pts[sub[0]]) > -kSideTol) return;  // centroid not inside
    out.push_back({std::move(support), std::move(outward)});
  });
  return out;
}

// Orthonormal basis of the complement of the unit vector u in R^k.
Mat complement_basis(const Vec& u) {
  const int k = static_cast<int>(u.size());
  Eigen::JacobiSVD<Mat> svd(Mat(u), Eigen::ComputeFullU);
  return svd.matrixU().rightCols(k - 1);
}

// Canonical triangulation of a full-dimensional polytope conv(pts) in R^k:
// cone from the vertex with the smallest global index over the recursively
// triangulated facets avoiding it.  Returns simplices as (k+1)-tuples of
// positions into the local point list.
std::vector<std::vector<int>> triangulate_full(const std::vector<Vec>& pts,
                                               const std::vector<int>& gidx,
                                               int k) {
  const int m = static_cast<int>(pts.size());
  std::vector<std::vector<int>> out;
  if (m == k + 1) {
    std::vector<int> all(m);
    for (int i = 0; i < m; ++i) all[i] = i;
    out.push_back(all);
    return out;
  }
  int apex = 0;
  for (int i = 1; i < m; ++i)
    if (gidx[i] < gidx[apex]) apex = i;

  for (const RawFacet& f : raw_facets(pts, k)) {
    if (std::find(f.support.begin(), f.support.end(), apex) != f.support.end())
      continue;
    if (k == 1) {
      out.push_back({apex, f.support[0]});
      continue;
    }
    Mat Q = complement_basis(f.outward);
    std::vector<Vec> sub_pts;
    std::vector<int> sub_gidx;
    for (int pos : f.support) {
      sub_pts.push_back(Q.transpose() * (pts[pos] - pts[f.support[0]]));
      sub_gidx.push_back(gidx[pos]);
    }
    for (const auto& s : triangulate_full(sub_pts, sub_gidx, k - 1)) {
      std::vector<int> simplex;
      simplex.push_back(apex);
      for (int pos : s) simplex.push_back(f.support[pos]);
      out.push_back(std::move(simplex));
    }
  }
  return out;
}

double signed_cone_volume(const std::vector<Vec>& pts,
                          const std::vector<int>& facet, const Vec& ref) {
  const int d = static_cast<int>(ref.size());
  Mat A(d, d);
  for (int j = 0; j < d; ++j) A.col(j) = pts[facet[j]] - ref;
  return A.determinant() / factorial(d);
}

// Reorders a facet tuple: indices ascending, then a final swap if needed so
// the cone from the reference point is positively oriented.
std::vector<int> orient_facet(const std::vector<Vec>& pts, std::vector<int> f,
                              const Vec& ref) {
  std::sort(f.begin(), f.end());
  if (signed_cone_volume(pts, f, ref) < 0.0 && f.size() >= 2)
    std::swap(f[f.size() - 2], f[f.size() - 1]);
  return f;
}

void check_input(const std::vector<Vec>& pts) {
  if (pts.empty()) throw std::invalid_argument("empty point set");
  const int d = static_cast<int>(pts[0].size());
  const int n = static_cast<int>(pts.size());
  for (const Vec& p : pts) {
    if (static_cast<int>(p.size()) != d)
      throw std::invalid_argument("inconsistent point dimensions");
    if (!p.allFinite()) throw std::invalid_argument("non-finite coordinate");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((pts[i] - pts[j]).norm() <= kDuplicateTol)
        throw std::invalid_argument("duplicate points");
  if (n < d + 1 || affine_rank(pts) < d)
    throw std::invalid_argument("points do not span dimension d");
}

// Fast path for generic 3D input; returns false when a coplanarity is found
// and the general (perturbation) path has to decide.
bool try_hull3(const std::vector<Vec>& pts, const Vec& c, OrientedComplex* out) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<int>> facets;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec nu = cross3(pts[j] - pts[i], pts[k] - pts[i]);
        double len = nu.norm();
        if (len < kSideTol) return false;  // collinear triple
        nu /= len;
        double mx = 0.0, mn = 0.0;
        for (int t = 0; t < n; ++t) {
          if (t == i || t == j || t == k) continue;
          double off = nu.dot(pts[t] - pts[i]);
          if (std::abs(off) <= kSideTol) return false;  // coplanar extra point
          mx = std::max(mx, off);
          mn = std::min(mn, off);
        }
        if (mx > kSideTol && mn < -kSideTol) continue;
        facets.push_back(orient_facet(pts, {i, j, k}, c));
      }
  out->facets = std::move(facets);
  return true;
}

// Monotone-chain hull area; collinear points are dropped, degenerate input
// gives 0.
double polygon_hull_area(const std::vector<Vec>& pts) {
  std::vector<std::pair<double, double>> p;
  p.reserve(pts.size());
  for (const Vec& v : pts) p.emplace_back(v(0), v(1));
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  const int m = static_cast<int>(p.size());
  if (m < 3) return 0.0;
  auto cross = [](const std::pair<double, double>& o,
                  const std::pair<double, double>& a,
                  const std::pair<double, double>& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<double, double>> h(2 * m);
  int k = 0;
  for (int i = 0; i < m; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0.0) --k;
    h[k++] = p[i];
  }
  for (int i = m - 2, lower = k + 1; i >= 0; --i) {
    while (k >= lower && cross(h[k - 2], h[k - 1], p[i]) <= 0.0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  double area2 = 0.0;
  for (size_t i = 0; i < h.size(); ++i) {
    const auto& a = h[i];
    const auto& b = h[(i + 1) % h.size()];
    area2 += a.first * b.second - b.first * a.second;
  }
  return std::abs(area2) / 2.0;
}

}  // namespace

OrientedComplex incremental_hull3(const std::vector<Vec>& raw) {
  const int n = static_cast<int>(raw.size());
  OrientedComplex out;
  if (n < 4) return out;

  // Deterministic jitter slightly above the side tolerance makes every
  // visibility decision generic, at the price of a ~1e-8 relative volume
  // bias; callers of this path work at coarser tolerances.
  double scale = 0.0;
  for (const Vec& p : raw) scale = std::max(scale, p.lpNorm<Eigen::Infinity>());
  if (scale == 0.0) scale = 1.0;
  uint64_t h = 0x9e3779b97f4a7c15ull;
  std::vector<Vec> pts(raw);
  for (Vec& p : pts)
    for (int j = 0; j < 3; ++j) {
      h ^= h >> 33;
      h *= 0xff51afd7ed558ccdull;
      h ^= h >> 29;
      p(j) += scale * 1e-8 *
              (static_cast<double>(h >> 11) / 9007199254740992.0 - 0.5);
    }

  // Initial tetrahedron from affinely independent points.
  int a = 0, b = -1, c = -1, d = -1;
  for (int i = 1; i < n && b < 0; ++i)
    if ((pts[i] - pts[a]).norm() > kSideTol) b = i;
  if (b < 0) return out;
  for (int i = 1; i < n && c < 0; ++i)
    if (cross3(pts[b] - pts[a], pts[i] - pts[a]).norm() > kSideTol) c = i;
  if (c < 0) return out;
  Vec base = cross3(pts[b] - pts[a], pts[c] - pts[a]).normalized();
  for (int i = 1; i < n && d < 0; ++i)
    if (std::abs(base.dot(pts[i] - pts[a])) > kSideTol) d = i;
  if (d < 0) return out;

  Vec inside = (pts[a] + pts[b] + pts[c] + pts[d]) / 4.0;

  struct Tri {
    int a, b, c;
    Vec normal;
    double offset;
  };
  auto make_tri = [&](int i, int j, int k) {
    Tri t{i, j, k, cross3(pts[j] - pts[i], pts[k] - pts[i]).normalized(), 0.0};
    if (t.normal.dot(inside - pts[i]) > 0.0) {
      std::swap(t.b, t.c);
      t.normal = -t.normal;
    }
    t.offset = t.normal.dot(pts[t.a]);
    return t;
  };
  std::vector<Tri> tris{make_tri(a, b, c), make_tri(a, b, d), make_tri(a, c, d),
                        make_tri(b, c, d)};

  for (int p = 0; p < n; ++p) {
    if (p == a || p == b || p == c || p == d) continue;
    std::vector<Tri> visible, kept;
    for (const Tri& t : tris)
      (t.normal.dot(pts[p]) - t.offset > kSideTol ? visible : kept)
          .push_back(t);
    if (visible.empty()) continue;
    // Horizon: directed edges of visible facets whose reverse is not visible.
    std::set<std::pair<int, int>> edges;
    for (const Tri& t : visible)
      for (auto [u, v] : {std::pair{t.a, t.b}, {t.b, t.c}, {t.c, t.a}}) {
        if (edges.count({v, u}))
          edges.erase({v, u});
        else
          edges.insert({u, v});
      }
    tris = std::move(kept);
    for (auto [u, v] : edges) tris.push_back(make_tri(u, v, p));
  }

  for (const Tri& t : tris)
    out.facets.push_back(orient_facet(pts, {t.a, t.b, t.c}, inside));
  return out;
}

Vec centroid(const std::vector<Vec>& pts) {
  Vec c = Vec::Zero(pts[0].size());
  for (const Vec& p : pts) c += p;
  return c / static_cast<double>(pts.size());
}

int affine_rank(const std::vector<Vec>& pts, double tol) {
  const int n = static_cast<int>(pts.size());
  if (n <= 1) return 0;
  Mat B(pts[0].size(), n - 1);
  for (int i = 1; i < n; ++i) B.col(i - 1) = pts[i] - pts[0];
  Eigen::JacobiSVD<Mat> svd(B);
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol) ++r;
  return r;
}

void validate(const VertexPolytope& p) {
  if (p.dim < 2) throw std::invalid_argument("dimension must be at least 2");
  if (p.n() < p.dim + 1) throw std::invalid_argument("too few vertices");
  for (const Vec& v : p.vertices) {
    if (static_cast<int>(v.size()) != p.dim)
      throw std::invalid_argument("vertex dimension mismatch");
    if (!v.allFinite()) throw std::invalid_argument("non-finite vertex");
  }
  for (int i = 0; i < p.n(); ++i)
    for (int j = i + 1; j < p.n(); ++j)
      if ((p.vertices[i] - p.vertices[j]).norm() <= kDuplicateTol)
        throw std::invalid_argument("duplicate vertices");
  if (affine_rank(p.vertices) < p.dim)
    throw std::invalid_argument("vertices do not span dimension d");
}

double simplex_volume(const std::vector<Vec>& verts) {
  if (verts.empty()) throw std::invalid_argument("empty simplex");
  const int d = static_cast<int>(verts[0].size());
  if (static_cast<int>(verts.size()) != d + 1)
    throw std::invalid_argument("simplex needs d+1 vertices");
  Mat A(d, d);
  for (int j = 0; j < d; ++j) {
    if (static_cast<int>(verts[j + 1].size()) != d)
      throw std::invalid_argument("simplex vertex dimension mismatch");
    A.col(j) = verts[j + 1] - verts[0];
  }
  return std::abs(A.determinant()) / factorial(d);
}

OrientedComplex convex_hull(const std::vector<Vec>& pts) {
  check_input(pts);
  const int d = static_cast<int>(pts[0].size());
  const int n = static_cast<int>(pts.size());
  Vec c = centroid(pts);

  OrientedComplex out;
  if (d == 3 && try_hull3(pts, c, &out)) return out;

  std::set<std::vector<int>> seen;  // facet support sets already handled
  for_each_subset(n, d, [&](const std::vector<int>& sub) {
    Mat B(d, d - 1);
    for (int j = 1; j < d; ++j) B.col(j - 1) = pts[sub[j]] - pts[sub[0]];
    Eigen::JacobiSVD<Mat> svd(B, Eigen::ComputeFullU);
    if (svd.singularValues()(d - 2) < kSideTol) return;
    Vec nu = svd.matrixU().col(d - 1);

    double mx = 0.0, mn = 0.0;
    for (int i = 0; i < n; ++i) {
      double off = nu.dot(pts[i] - pts[sub[0]]);
      mx = std::max(mx, off);
      mn = std::min(mn, off);
    }
    if (mx > kSideTol && mn < -kSideTol) return;
    Vec outward = (mx <= kSideTol) ? nu : Vec(-nu);

    std::vector<int> support;
    for (int i = 0; i < n; ++i)
      if (std::abs(nu.dot(pts[i] - pts[sub[0]])) <= kSideTol)
        support.push_back(i);
    if (!seen.insert(support).second) return;

    if (static_cast<int>(support.size()) == d) {
      out.facets.push_back(orient_facet(pts, support, c));
      return;
    }
    // Non-simplicial facet: canonical triangulation inside its hyperplane.
    Mat Q = complement_basis(outward);
    std::vector<Vec> local;
    local.reserve(support.size());
    for (int idx : support)
      local.push_back(Q.transpose() * (pts[idx] - pts[support[0]]));
    for (const auto& s : triangulate_full(local, support, d - 1)) {
      std::vector<int> f;
      for (int pos : s) f.push_back(support[pos]);
      out.facets.push_back(orient_facet(pts, f, c));
    }
  });
  return out;
}

OrientedComplex convex_hull(const VertexPolytope& p) {
  validate(p);
  return convex_hull(p.vertices);
}

double polytope_volume(const VertexPolytope& p, const OrientedComplex& c) {
  Vec ref = centroid(p.vertices);
  double vol = 0.0;
  for (const auto& f : c.facets)
    vol += std::abs(signed_cone_volume(p.vertices, f, ref));
  return vol;
}

double polytope_volume(const VertexPolytope& p) {
  return polytope_volume(p, convex_hull(p));
}

double hull_volume(const std::vector<Vec>& pts) {
  if (pts.empty()) throw std::invalid_argument("empty point set");
  const int d = static_cast<int>(pts[0].size());
  if (d == 2) return polygon_hull_area(pts);
  if (d == 3 && pts.size() > 48) {
    OrientedComplex c = incremental_hull3(pts);
    if (c.facets.empty()) return 0.0;
    Vec ref = centroid(pts);
    double vol = 0.0;
    for (const auto& f : c.facets)
      vol += std::abs(signed_cone_volume(pts, f, ref));
    return vol;
  }
  // Drop duplicates and interior points are harmless for the facet scan, but
  // duplicates must go before convex_hull sees them.
  std::vector<Vec> unique;
  for (const Vec& p : pts) {
    bool dup = false;
    for (const Vec& q : unique)
      if ((p - q).norm() <= kDuplicateTol) {
        dup = true;
        break;
      }
    if (!dup) unique.push_back(p);
  }
  VertexPolytope poly{static_cast<int>(unique[0].size()), unique};
  return polytope_volume(poly);
}

bool on_unit_sphere(const VertexPolytope& p, double tol) {
  for (const Vec& v : p.vertices) {
    double r = v.norm();
    if (r < 1.0 - tol || r > 1.0 + tol) return false;
  }
  return true;
}

Vec cross3(const Vec& a, const Vec& b) {
  Vec r(3);
  r(0) = a(1) * b(2) - a(2) * b(1);
  r(1) = a(2) * b(0) - a(0) * b(2);
  r(2) = a(0) * b(1) - a(1) * b(0);
  return r;
}

Vec hyperplane_normal(const Mat& B) {
  const int d = static_cast<int>(B.rows());
  Eigen::JacobiSVD<Mat> svd(B, Eigen::ComputeFullU);
  if (svd.singularValues()(d - 2) < kSideTol)
    throw std::invalid_argument("rank-deficient hyperplane basis");
  return svd.matrixU().col(d - 1);
}

std::vector<std::vector<int>> vertex_stars(const OrientedComplex& c, int n) {
  std::vector<std::vector<int>> stars(n);
  for (int f = 0; f < static_cast<int>(c.facets.size()); ++f)
    for (int v : c.facets[f]) stars[v].push_back(f);
  return stars;
}

std::vector<std::pair<int, int>> complex_edges(const OrientedComplex& c) {
  std::set<std::pair<int, int>> edges;
  for (const auto& f : c.facets)
    for (size_t i = 0; i < f.size(); ++i)
      for (size_t j = i + 1; j < f.size(); ++j)
        edges.insert({std::min(f[i], f[j]), std::max(f[i], f[j])});
  return {edges.begin(), edges.end()};
}

std::vector<int> vertex_valences(const OrientedComplex& c, int n) {
  std::vector<int> val(n, 0);
  for (const auto& e : complex_edges(c)) {
    ++val[e.first];
    ++val[e.second];
  }
  return val;
}

}  // namespace insc
