#include "inscribed/property_z.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace insc::propz {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Generalized cross product of d-1 vectors in R^d: perpendicular to all of
// them with norm (d-1)! times the (d-1)-volume of their parallelepiped.
Vec cofactor_normal(const std::vector<Vec>& vs) {
  const int d = static_cast<int>(vs[0].size());
  Mat B(d, d - 1);
  for (int j = 0; j < d - 1; ++j) B.col(j) = vs[j];
  Vec n(d);
  for (int i = 0; i < d; ++i) {
    Mat minor(d - 1, d - 1);
    int r = 0;
    for (int row = 0; row < d; ++row) {
      if (row == i) continue;
      minor.row(r++) = B.row(row);
    }
    n(i) = ((i % 2 == 0) ? 1.0 : -1.0) * minor.determinant();
  }
  return n;
}

std::set<std::vector<int>> facet_set(const OrientedComplex& c) {
  std::set<std::vector<int>> s;
  for (auto f : c.facets) {
    std::sort(f.begin(), f.end());
    s.insert(std::move(f));
  }
  return s;
}

// m for one vertex given its facet star.
Vec m_from_star(const VertexPolytope& p, const OrientedComplex& c,
                const std::vector<int>& star, int vertex) {
  const int d = p.dim;
  if (star.empty()) throw std::invalid_argument("vertex has empty facet star");
  Vec m = Vec::Zero(d);
  for (int fi : star) {
    if (d == 3) {
      const auto& f = c.facets[fi];
      int a = -1, b = -1;
      for (int v : f)
        if (v != vertex) (a < 0 ? a : b) = v;
      Vec n = cross3(p.vertices[a], p.vertices[b]);
      double sign = n.dot(p.vertices[vertex]) >= 0.0 ? 1.0 : -1.0;
      m += sign * n / 6.0;
      continue;
    }
    std::vector<Vec> others;
    for (int v : c.facets[fi])
      if (v != vertex) others.push_back(p.vertices[v]);
    Vec n = cofactor_normal(others);  // |n| = (d-1)! * (d-1)-volume
    double sign = n.dot(p.vertices[vertex]) >= 0.0 ? 1.0 : -1.0;
    m += sign * n / factorial(d);
  }
  return m;
}

// All m vectors at once.  In d = 3 coplanar hull triangles are merged back
// into polygonal facets and each facet contributes the gradient of its cone
// volume in centroid-fan form; for a triangle this reduces exactly to the
// cross-product formula, and for larger facets it is independent of the
// triangulation the hull happened to pick (e.g. the cube's square facets).
std::vector<Vec> m_vectors(const VertexPolytope& p, const OrientedComplex& c) {
  const int d = p.dim;
  if (d != 3) {
    auto stars = vertex_stars(c, p.n());
    std::vector<Vec> out;
    for (int i = 0; i < p.n(); ++i)
      out.push_back(m_from_star(p, c, stars[i], i));
    return out;
  }

  constexpr double kPlaneTol = 1e-9;
  struct Plane {
    Vec n;  // outward unit normal
    double off;
    std::set<int> verts;
  };
  std::vector<Plane> planes;
  for (const auto& f : c.facets) {
    Vec n = cross3(p.vertices[f[1]] - p.vertices[f[0]],
                   p.vertices[f[2]] - p.vertices[f[0]]);
    double len = n.norm();
    if (len < 1e-14) throw std::invalid_argument("degenerate hull facet");
    n /= len;
    double off = n.dot(p.vertices[f[0]]);
    if (off < 0) {
      n = -n;
      off = -off;
    }
    Plane* hit = nullptr;
    for (auto& pl : planes) {
      bool same = pl.n.dot(n) > 1.0 - 1e-9;
      for (int v : f)
        same = same && std::abs(pl.n.dot(p.vertices[v]) - pl.off) < kPlaneTol;
      if (same) {
        hit = &pl;
        break;
      }
    }
    if (!hit) {
      planes.push_back({n, off, {}});
      hit = &planes.back();
    }
    hit->verts.insert(f.begin(), f.end());
  }

  std::vector<Vec> out(p.n(), Vec::Zero(3));
  for (const auto& pl : planes) {
    // Order the facet polygon counterclockwise as seen from outside.
    Vec b = Vec::Zero(3);
    for (int v : pl.verts) b += p.vertices[v];
    b /= static_cast<double>(pl.verts.size());
    Vec e1 = (p.vertices[*pl.verts.begin()] - b).normalized();
    Vec e2 = cross3(pl.n, e1);
    std::vector<int> loop(pl.verts.begin(), pl.verts.end());
    std::sort(loop.begin(), loop.end(), [&](int a, int bb) {
      const Vec& va = p.vertices[a];
      const Vec& vb = p.vertices[bb];
      return std::atan2(e2.dot(va - b), e1.dot(va - b)) <
             std::atan2(e2.dot(vb - b), e1.dot(vb - b));
    });
    const int k = static_cast<int>(loop.size());
    Vec s = Vec::Zero(3);
    for (int j = 0; j < k; ++j)
      s += cross3(p.vertices[loop[j]], p.vertices[loop[(j + 1) % k]]);
    for (int j = 0; j < k; ++j) {
      const Vec& nxt = p.vertices[loop[(j + 1) % k]];
      const Vec& prv = p.vertices[(j == 0) ? loop[k - 1] : loop[j - 1]];
      out[loop[j]] += (s / k + cross3(nxt - prv, b)) / 6.0;
    }
  }
  return out;
}

}  // namespace

Vec stationarity_vector(const VertexPolytope& p, const OrientedComplex& c,
                        int vertex) {
  auto stars = vertex_stars(c, p.n());
  return m_from_star(p, c, stars[vertex], vertex);
}

Vec stationarity_vector3(const VertexPolytope& p, const OrientedComplex& c,
                         int vertex) {
  Vec m = Vec::Zero(3);
  bool found = false;
  for (const auto& f : c.facets) {
    int pos = -1;
    for (int i = 0; i < 3; ++i)
      if (f[i] == vertex) pos = i;
    if (pos < 0) continue;
    found = true;
    // Edge opposite the vertex, in the facet's orientation.
    int j = f[(pos + 1) % 3], k = f[(pos + 2) % 3];
    m += cross3(p.vertices[j], p.vertices[k]) / 6.0;
  }
  if (!found) throw std::invalid_argument("vertex has empty facet star");
  return m;
}

ZReport z_residual(const VertexPolytope& p, const OrientedComplex& c) {
  ZReport rep;
  rep.stars = vertex_stars(c, p.n());
  rep.residuals.resize(p.n());
  auto ms = m_vectors(p, c);
  for (int i = 0; i < p.n(); ++i) {
    if (rep.stars[i].empty())
      throw std::invalid_argument("vertex has empty facet star");
    const Vec& m = ms[i];
    double len = m.norm();
    if (len < 1e-12) throw std::invalid_argument("degenerate vertex star");
    rep.residuals[i] = (p.vertices[i] - m / len).norm();
    rep.max_residual = std::max(rep.max_residual, rep.residuals[i]);
  }
  return rep;
}

ZReport z_residual(const VertexPolytope& p) {
  if (!on_unit_sphere(p, 1e-6))
    throw std::invalid_argument("z_residual expects an inscribed polytope");
  return z_residual(p, convex_hull(p));
}

VertexPolytope bh_step(const VertexPolytope& p) {
  OrientedComplex c = convex_hull(p);
  VertexPolytope out;
  out.dim = p.dim;
  auto ms = m_vectors(p, c);
  for (int i = 0; i < p.n(); ++i) {
    const Vec& m = ms[i];
    double len = m.norm();
    if (len < 1e-12) throw std::invalid_argument("degenerate vertex star");
    out.vertices.push_back(m / len);
  }
  return out;
}

OptimizeResult local_optimize(const VertexPolytope& p, int max_iter,
                              double tol) {
  OptimizeResult res;
  VertexPolytope cur = p;
  OrientedComplex complex = convex_hull(cur);
  auto facets = facet_set(complex);
  double vol = polytope_volume(cur, complex);
  double alpha = 1.0;
  int it = 0;
  int stalled = 0;

  for (; it < max_iter && stalled < 20; ++it) {
    ZReport rep = z_residual(cur, complex);
    if (rep.max_residual < tol) break;

    std::vector<Vec> targets(cur.n());
    auto ms = m_vectors(cur, complex);
    for (int i = 0; i < cur.n(); ++i) targets[i] = ms[i] / ms[i].norm();

    bool accepted = false;
    while (alpha >= 1e-8) {
      VertexPolytope trial;
      trial.dim = cur.dim;
      for (int i = 0; i < cur.n(); ++i) {
        Vec v = (1.0 - alpha) * cur.vertices[i] + alpha * targets[i];
        double len = v.norm();
        if (len < 1e-12) break;
        trial.vertices.push_back(v / len);
      }
      if (trial.n() != cur.n()) {
        alpha *= 0.5;
        continue;
      }
      OrientedComplex tc;
      double tvol;
      try {
        tc = convex_hull(trial);
        tvol = polytope_volume(trial, tc);
      } catch (const std::invalid_argument&) {
        alpha *= 0.5;
        continue;
      }
      if (tvol + 1e-15 < vol) {
        alpha *= 0.5;
        continue;
      }
      auto tfacets = facet_set(tc);
      bool combinatorics_changed = (tfacets != facets);
      // Steps that no longer gain volume signal a neutral cycle of the
      // synchronous map; hand over to the sequential polish below.
      stalled = (tvol > vol + 1e-14) ? 0 : stalled + 1;
      cur = std::move(trial);
      complex = std::move(tc);
      facets = std::move(tfacets);
      vol = tvol;
      alpha = combinatorics_changed ? 1.0 : std::min(1.0, 2.0 * alpha);
      accepted = true;
      break;
    }
    if (!accepted) break;  // damped phase stalled near the fixed point
  }

  // Polish with sequential per-vertex updates.  Moving one vertex to m/|m|
  // maximizes the hull volume over that vertex with the others fixed, so the
  // sweep is monotone without damping, and unlike the synchronous map it has
  // no neutral rotation modes: it contracts the last few digits where the
  // volume gain per step is below machine epsilon.
  double best_res = z_residual(cur, complex).max_residual;
  for (; it < max_iter && best_res >= tol; ++it) {
    VertexPolytope trial = cur;
    OrientedComplex tc = complex;
    bool ok = true;
    try {
      for (int i = 0; i < trial.n(); ++i) {
        auto ms = m_vectors(trial, tc);
        double len = ms[i].norm();
        if (len < 1e-12) throw std::invalid_argument("degenerate vertex star");
        trial.vertices[i] = ms[i] / len;
        tc = convex_hull(trial);
      }
    } catch (const std::invalid_argument&) {
      ok = false;
    }
    if (!ok) break;
    double r = z_residual(trial, tc).max_residual;
    if (r >= best_res) break;
    cur = std::move(trial);
    complex = std::move(tc);
    best_res = r;
  }
  vol = polytope_volume(cur, complex);

  res.polytope = cur;
  res.report = z_residual(cur, complex);
  res.volume = vol;
  res.iterations = it;
  res.converged = res.report.max_residual < tol;
  return res;
}

MedialReport medial_check(const VertexPolytope& p, const OrientedComplex& c) {
  if (p.dim != 3) throw std::invalid_argument("medial_check needs d = 3");
  MedialReport rep;
  auto val = vertex_valences(c, p.n());
  for (int v : val) ++rep.valences[v];
  double avg = 6.0 - 12.0 / p.n();
  int m = static_cast<int>(std::floor(avg));
  bool integral = std::abs(avg - m) < 1e-12;
  rep.is_medial = true;
  for (int v : val) {
    if (integral ? (v != m) : (v != m && v != m + 1)) rep.is_medial = false;
  }
  return rep;
}

MedialReport medial_check(const VertexPolytope& p) {
  return medial_check(p, convex_hull(p));
}

}  // namespace insc::propz
