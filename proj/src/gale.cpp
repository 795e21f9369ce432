#include "inscribed/gale.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "inscribed/rng.hpp"

namespace insc::gale {

namespace {

template <typename F>
void for_each_subset(int m, int k, F&& fn) {
  if (k > m) {
    return;
  }
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

// Normals of hyperplanes through o spanned by (k-1)-subsets of the points.
// Degenerate subsets are completed with seeded random directions from the
// orthogonal complement of their span.
std::vector<Vec> candidate_normals(const std::vector<Vec>& pts, int k,
                                   bool* degenerate) {
  std::vector<Vec> normals;
  if (k == 1) {
    Vec e(1);
    e << 1.0;
    normals.push_back(e);
    return normals;
  }
  const int m = static_cast<int>(pts.size());
  Rng rng(0x9a1e5u);
  double scale = 0.0;
  for (const Vec& p : pts) scale = std::max(scale, p.norm());
  if (scale == 0.0) scale = 1.0;

  for_each_subset(m, k - 1, [&](const std::vector<int>& sub) {
    Mat B(k, k - 1);
    for (int j = 0; j < k - 1; ++j) B.col(j) = pts[sub[j]];
    Eigen::JacobiSVD<Mat> svd(B, Eigen::ComputeFullU);
    int rank = 0;
    for (int i = 0; i < svd.singularValues().size(); ++i)
      if (svd.singularValues()(i) > kSideTol * scale) ++rank;
    if (rank == k - 1) {
      normals.push_back(svd.matrixU().col(k - 1));
      return;
    }
    // Rank-deficient subset: supplement with random vectors orthogonal to it.
    *degenerate = true;
    Mat comp = svd.matrixU().rightCols(k - rank);
    for (int t = 0; t < 8; ++t) {
      Vec r = comp * rng.sphere_point(k - rank);
      normals.push_back(r / r.norm());
    }
  });
  return normals;
}

}  // namespace

GaleDiagram gale_transform(const VertexPolytope& p) {
  validate(p);
  const int n = p.n(), d = p.dim;
  Mat M(d + 1, n);
  for (int i = 0; i < n; ++i) {
    M.block(0, i, d, 1) = p.vertices[i];
    M(d, i) = 1.0;
  }
  Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeFullV);
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 1e-9 * svd.singularValues()(0)) ++rank;
  if (rank < d + 1)
    throw std::invalid_argument("homogeneous vertex matrix is rank deficient");

  GaleDiagram diag;
  diag.n = n;
  diag.d = d;
  const int k = n - d - 1;
  if (k == 0) {
    diag.points = Mat::Zero(n, 0);
    return diag;
  }
  Mat kernel = svd.matrixV().rightCols(k);  // n x k, orthonormal columns
  diag.points = kernel / kernel.norm();
  return diag;
}

bool origin_in_relint(const std::vector<Vec>& points, double tol) {
  if (points.empty()) return false;
  const int k = static_cast<int>(points[0].size());
  double scale = 0.0;
  for (const Vec& p : points) scale = std::max(scale, p.norm());
  if (scale <= tol) return true;  // every point is (numerically) the origin

  Mat B(k, points.size());
  for (size_t i = 0; i < points.size(); ++i) B.col(i) = points[i];
  Eigen::JacobiSVD<Mat> svd(B, Eigen::ComputeFullU);
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > tol * scale) ++r;
  if (r == 0) return true;
  Mat W = svd.matrixU().leftCols(r);

  std::vector<Vec> q;
  q.reserve(points.size());
  for (const Vec& p : points) q.push_back(W.transpose() * p);

  bool degenerate = false;
  std::vector<Vec> normals = candidate_normals(q, r, &degenerate);
  for (const Vec& u : normals) {
    for (double s : {1.0, -1.0}) {
      double mx = -1e300;
      for (const Vec& v : q) mx = std::max(mx, s * u.dot(v));
      if (mx <= tol * scale) return false;
    }
  }
  return true;
}

GalePredicates gale_predicates(const GaleDiagram& diag) {
  GalePredicates out;
  const int n = diag.n, d = diag.d, k = diag.diagram_dim();
  if (k < 0 || n < d + 1) throw std::invalid_argument("malformed diagram");

  if (k == 0) {
    // All Gale points coincide with o: P is a d-simplex.
    out.is_polytope_diagram = true;
    out.is_simplicial = true;
    out.is_pyramid = true;
    for_each_subset(n, d, [&](const std::vector<int>& sub) {
      out.facet_cofaces.push_back(sub);
    });
    return out;
  }

  std::vector<Vec> pts;
  for (int i = 0; i < n; ++i) pts.push_back(diag.point(i));
  double scale = 0.0;
  for (const Vec& p : pts) scale = std::max(scale, p.norm());
  if (scale == 0.0) scale = 1.0;

  std::vector<Vec> normals = candidate_normals(pts, k, &out.degenerate_position);

  // (i): every open half-space bounded by a hyperplane through o must contain
  // at least two points; the minimum over half-spaces is attained at a
  // spanned hyperplane.
  out.is_polytope_diagram = true;
  for (const Vec& nu : normals) {
    int pos = 0, neg = 0;
    for (const Vec& p : pts) {
      double s = nu.dot(p);
      if (s > kSideTol * scale) ++pos;
      if (s < -kSideTol * scale) ++neg;
    }
    if (pos < 2 || neg < 2) {
      out.is_polytope_diagram = false;
      break;
    }
  }

  // (iii): simplicial iff no spanned hyperplane captures o in the relative
  // interior of its on-hyperplane points.
  out.is_simplicial = true;
  for (const Vec& nu : normals) {
    std::vector<Vec> on_plane;
    for (const Vec& p : pts)
      if (std::abs(nu.dot(p)) <= kSideTol * scale) on_plane.push_back(p);
    if (!on_plane.empty() && origin_in_relint(on_plane)) {
      out.is_simplicial = false;
      break;
    }
  }

  // (iv)
  for (const Vec& p : pts)
    if (p.norm() <= kSideTol) out.is_pyramid = true;

  // (ii): a d-subset is a facet iff o lies in the relative interior of the
  // convex hull of its coface.
  for_each_subset(n, d, [&](const std::vector<int>& sub) {
    std::vector<bool> in_facet(n, false);
    for (int i : sub) in_facet[i] = true;
    std::vector<Vec> coface;
    for (int i = 0; i < n; ++i)
      if (!in_facet[i]) coface.push_back(pts[i]);
    if (origin_in_relint(coface)) out.facet_cofaces.push_back(sub);
  });
  return out;
}

}  // namespace insc::gale
