#include "inscribed/two_bodies.hpp"

#include <Eigen/Geometry>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "inscribed/optim.hpp"
#include "inscribed/rng.hpp"

namespace insc::twobody {

namespace {

constexpr double kPi = 3.14159265358979323846;

double body_volume(const VertexPolytope& k) { return hull_volume(k.vertices); }

Mat complement(const Vec& u) {
  const int d = static_cast<int>(u.size());
  Eigen::JacobiSVD<Mat> svd(Mat(u), Eigen::ComputeFullU);
  return svd.matrixU().rightCols(d - 1);
}

// 2D monotone-chain hull, counter-clockwise, strictly convex vertices only.
std::vector<Vec> chain_hull2(const std::vector<Vec>& pts) {
  std::vector<std::pair<double, double>> p;
  p.reserve(pts.size());
  for (const Vec& v : pts) p.emplace_back(v(0), v(1));
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  const int m = static_cast<int>(p.size());
  auto cross = [](const std::pair<double, double>& o,
                  const std::pair<double, double>& a,
                  const std::pair<double, double>& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<double, double>> h(2 * std::max(m, 1));
  int k = 0;
  for (int i = 0; i < m; ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0.0) --k;
    h[k++] = p[i];
  }
  for (int i = m - 2, lower = k + 1; i >= 0; --i) {
    while (k >= lower && cross(h[k - 2], h[k - 1], p[i]) <= 0.0) --k;
    h[k++] = p[i];
  }
  h.resize(std::max(k - 1, 0));
  std::vector<Vec> out;
  for (const auto& q : h) {
    Vec v(2);
    v << q.first, q.second;
    out.push_back(std::move(v));
  }
  return out;
}

// Difference body conv(A - B) reduced to what the radial function needs.
struct DifferenceBody {
  int d = 0;
  std::vector<Vec> poly;                       // d == 2, CCW
  std::vector<std::pair<Vec, double>> planes;  // d >= 3, outward (n, b)

  // Largest t with t*u inside; requires the origin in the interior.
  double radial(const Vec& u) const {
    double t = std::numeric_limits<double>::infinity();
    if (d == 2) {
      const int m = static_cast<int>(poly.size());
      for (int i = 0; i < m; ++i) {
        const Vec& p = poly[i];
        const Vec& q = poly[(i + 1) % m];
        Vec n(2);
        n << q(1) - p(1), p(0) - q(0);  // outward for CCW
        double du = n.dot(u);
        if (du > 1e-12) t = std::min(t, n.dot(p) / du);
      }
    } else {
      for (const auto& [n, b] : planes) {
        double du = n.dot(u);
        if (du > 1e-12) t = std::min(t, b / du);
      }
    }
    return std::isfinite(t) ? std::max(t, 0.0) : 0.0;
  }
};

DifferenceBody difference_body(const std::vector<Vec>& a,
                               const std::vector<Vec>& b) {
  DifferenceBody out;
  out.d = static_cast<int>(a[0].size());
  std::vector<Vec> diff;
  diff.reserve(a.size() * b.size());
  for (const Vec& x : a)
    for (const Vec& y : b) diff.push_back(x - y);
  if (out.d == 2) {
    out.poly = chain_hull2(diff);
    return out;
  }
  Vec c = centroid(diff);
  for (const auto& f : incremental_hull3(diff).facets) {
    Vec n = cross3(diff[f[1]] - diff[f[0]], diff[f[2]] - diff[f[0]]);
    double len = n.norm();
    if (len < 1e-12) continue;
    n /= len;
    if (n.dot(c - diff[f[0]]) > 0.0) n = -n;
    out.planes.emplace_back(n, n.dot(diff[f[0]]));
  }
  return out;
}

std::vector<Vec> placed_union(const VertexPolytope& k, const VertexPolytope& k2,
                              const PairPlacement& placement) {
  std::vector<Vec> pts = k.vertices;
  for (const Vec& v : k2.vertices) pts.push_back(placement.apply(v));
  return pts;
}

Vec softmax_point(const std::vector<Vec>& verts, const Vec& w) {
  Vec a = Vec::Zero(verts[0].size());
  double total = 0.0;
  for (size_t i = 0; i < verts.size(); ++i) {
    double e = std::exp(std::clamp(w(static_cast<int>(i)), -30.0, 30.0));
    a += e * verts[i];
    total += e;
  }
  return a / total;
}

Mat rotation_from_params(int d, const Vec& w) {
  if (d == 2) {
    Mat r(2, 2);
    double c = std::cos(w(0)), s = std::sin(w(0));
    r << c, -s, s, c;
    return r;
  }
  double angle = w.norm();
  if (angle < 1e-14) return Mat::Identity(3, 3);
  Eigen::Vector3d axis(w(0), w(1), w(2));
  return Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix();
}

// Multi-start Nelder-Mead maximization over unconstrained parameters.
struct BestParam {
  Vec x;
  double value = -std::numeric_limits<double>::infinity();
};

BestParam multistart_max(const std::function<double(const Vec&)>& f,
                         const std::vector<Vec>& starts, double step,
                         int max_eval) {
  BestParam best;
  for (const Vec& x0 : starts) {
    auto res = nelder_mead([&](const Vec& x) { return -f(x); }, x0, step,
                           max_eval);
    if (-res.value > best.value) {
      best.value = -res.value;
      best.x = res.x;
    }
  }
  return best;
}

double safe_ratio(const std::vector<Vec>& pts, double vol) {
  try {
    return hull_volume(pts) / vol;
  } catch (const std::invalid_argument&) {
    return 0.0;
  }
}

std::vector<Vec> reflect_hyperplane_pts(const std::vector<Vec>& verts,
                                        const Vec& n, double c) {
  std::vector<Vec> out;
  out.reserve(verts.size());
  for (const Vec& v : verts) out.push_back(v - 2.0 * (n.dot(v) - c) * n);
  return out;
}

// Simplex facet data: outward unit normal of the facet opposite each vertex.
std::vector<Vec> simplex_facet_normals(const VertexPolytope& s) {
  const int d = s.dim;
  std::vector<Vec> normals;
  for (int i = 0; i <= d; ++i) {
    std::vector<int> f;
    for (int j = 0; j <= d; ++j)
      if (j != i) f.push_back(j);
    Mat b(d, d - 1);
    for (int j = 1; j < d; ++j)
      b.col(j - 1) = s.vertices[f[j]] - s.vertices[f[0]];
    Vec n = hyperplane_normal(b);
    if (n.dot(s.vertices[i] - s.vertices[f[0]]) > 0.0) n = -n;
    normals.push_back(std::move(n));
  }
  return normals;
}

void enumerate_compositions(int total, int parts,
                            const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> c(parts, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == parts - 1) {
      c[pos] = left;
      fn(c);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      c[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, total);
}

}  // namespace

Vec PairPlacement::apply(const Vec& x) const {
  switch (kind) {
    case Kind::Translation:
      return x + translation;
    case Kind::PointReflection:
      return 2.0 * center - x;
    case Kind::FlatReflection: {
      Vec proj = flat_point;
      if (flat_basis.cols() > 0)
        proj += flat_basis * (flat_basis.transpose() * (x - flat_point));
      return 2.0 * proj - x;
    }
    case Kind::HyperplaneReflection:
      return x - 2.0 * (plane_normal.dot(x) - plane_offset) * plane_normal;
    case Kind::RigidMotion:
      return rotation * x + shift;
  }
  throw std::logic_error("unknown placement kind");
}

PairPlacement PairPlacement::identity(int d) {
  PairPlacement p;
  p.kind = Kind::Translation;
  p.translation = Vec::Zero(d);
  return p;
}

PairPlacement PairPlacement::translate(const Vec& t) {
  PairPlacement p;
  p.kind = Kind::Translation;
  p.translation = t;
  return p;
}

PairPlacement PairPlacement::reflect_point(const Vec& center) {
  PairPlacement p;
  p.kind = Kind::PointReflection;
  p.center = center;
  return p;
}

PairPlacement PairPlacement::reflect_flat(const Mat& basis, const Vec& point) {
  PairPlacement p;
  p.kind = Kind::FlatReflection;
  p.flat_basis = basis;
  p.flat_point = point;
  return p;
}

PairPlacement PairPlacement::reflect_hyperplane(const Vec& normal,
                                                double offset) {
  PairPlacement p;
  p.kind = Kind::HyperplaneReflection;
  p.plane_normal = normal.normalized();
  p.plane_offset = offset;
  return p;
}

PairPlacement PairPlacement::rigid(const Mat& rotation, const Vec& shift) {
  PairPlacement p;
  p.kind = Kind::RigidMotion;
  p.rotation = rotation;
  p.shift = shift;
  return p;
}

double pair_hull_volume(const VertexPolytope& k, const VertexPolytope& k2,
                        const PairPlacement& placement) {
  if (k.dim != k2.dim)
    throw std::invalid_argument("pair dimension mismatch");
  return hull_volume(placed_union(k, k2, placement));
}

VolumeProfile g_profile(const VertexPolytope& k, const VertexPolytope& k2,
                        const Vec& direction,
                        const std::vector<double>& x_values) {
  if (direction.norm() < 1e-12)
    throw std::invalid_argument("direction must be nonzero");
  Vec u = direction.normalized();
  VolumeProfile out;
  for (double x : x_values) {
    out.parameters.push_back(x);
    out.values.push_back(
        pair_hull_volume(k, k2, PairPlacement::translate(x * u)));
  }
  return out;
}

double convexity_defect(const VolumeProfile& profile) {
  const int m = static_cast<int>(profile.values.size());
  if (m < 3) throw std::invalid_argument("need at least 3 samples");
  double defect = -std::numeric_limits<double>::infinity();
  for (int i = 1; i + 1 < m; ++i)
    defect = std::max(defect,
                      profile.values[i] - 0.5 * (profile.values[i - 1] +
                                                 profile.values[i + 1]));
  return defect;
}

double support(const VertexPolytope& k, const Vec& u) {
  double h = -std::numeric_limits<double>::infinity();
  for (const Vec& v : k.vertices) h = std::max(h, u.dot(v));
  return h;
}

double contact_length(const VertexPolytope& k, const Vec& u) {
  return difference_body(k.vertices, k.vertices).radial(u.normalized());
}

CQuantityResult c_quantity(const VertexPolytope& k, IsometryFamily family,
                           const OptConfig& config) {
  validate(k);
  const int d = k.dim;
  const double vol = body_volume(k);
  CQuantityResult out;

  switch (family) {
    case IsometryFamily::Translations: {
      DifferenceBody db = difference_body(k.vertices, k.vertices);
      auto value_of = [&](const Vec& u) {
        double w = db.radial(u);
        return safe_ratio(
            placed_union(k, k, PairPlacement::translate(w * u)), vol);
      };
      Vec best_u;
      if (d == 2) {
        auto value_at = [&](double theta) {
          Vec u(2);
          u << std::cos(theta), std::sin(theta);
          return value_of(u);
        };
        double best_theta = 0.0, best_val = -1.0;
        for (int i = 0; i < config.grid; ++i) {
          double theta = 2.0 * kPi * i / config.grid;
          double v = value_at(theta);
          if (v > best_val) {
            best_val = v;
            best_theta = theta;
          }
        }
        double span = 2.0 * kPi / config.grid;
        best_theta = golden_max(value_at, best_theta - span, best_theta + span);
        best_u = Vec(2);
        best_u << std::cos(best_theta), std::sin(best_theta);
        out.restarts = config.grid;
      } else {
        Rng rng(mix_seed(config.seed, 101));
        std::vector<Vec> starts;
        for (int r = 0; r < config.restarts; ++r)
          starts.push_back(rng.sphere_point(d));
        auto best = multistart_max(
            [&](const Vec& x) {
              double n = x.norm();
              return n < 1e-9 ? 0.0 : value_of(Vec(x / n));
            },
            starts, 0.3, config.max_eval);
        best_u = best.x.normalized();
        out.restarts = config.restarts;
      }
      double w = db.radial(best_u);
      out.witness = PairPlacement::translate(w * best_u);
      out.value = value_of(best_u);
      return out;
    }

    case IsometryFamily::PointReflections: {
      // The hull volume is convex in the center, so the maximum over
      // centers in K sits at a vertex.
      double best = -1.0;
      Vec best_a;
      for (const Vec& a : k.vertices) {
        double v = safe_ratio(
            placed_union(k, k, PairPlacement::reflect_point(a)), vol);
        if (v > best) {
          best = v;
          best_a = a;
        }
      }
      out.value = best;
      out.witness = PairPlacement::reflect_point(best_a);
      out.restarts = k.n();
      return out;
    }

    case IsometryFamily::HyperplaneReflections: {
      auto value_params = [&](const Vec& raw_n, double s) {
        double nn = raw_n.norm();
        if (nn < 1e-9) return std::pair<double, PairPlacement>{0.0, {}};
        Vec n = raw_n / nn;
        double lo = -support(k, Vec(-n));
        double hi = support(k, n);
        double c = lo + (hi - lo) * std::clamp(s, 0.0, 1.0);
        PairPlacement p = PairPlacement::reflect_hyperplane(n, c);
        std::vector<Vec> pts = k.vertices;
        for (const Vec& v : reflect_hyperplane_pts(k.vertices, n, c))
          pts.push_back(v);
        return std::pair<double, PairPlacement>{safe_ratio(pts, vol), p};
      };
      std::vector<Vec> starts;
      if (d == 2) {
        double best = -1.0;
        Vec best_x(3);
        for (int i = 0; i < config.grid; ++i)
          for (int j = 0; j <= 16; ++j) {
            double theta = kPi * i / config.grid;
            double s = j / 16.0;
            Vec n(2);
            n << std::cos(theta), std::sin(theta);
            double v = value_params(n, s).first;
            if (v > best) {
              best = v;
              best_x << theta, s, 0.0;
            }
          }
        Vec x0(2);
        x0 << best_x(0), best_x(1);
        starts.push_back(x0);
        out.restarts = config.grid;
      } else {
        Rng rng(mix_seed(config.seed, 202));
        for (int r = 0; r < config.restarts; ++r) {
          Vec x0(d + 1);
          x0.head(d) = rng.sphere_point(d);
          x0(d) = rng.uniform();
          starts.push_back(x0);
        }
        out.restarts = config.restarts;
      }
      auto eval = [&](const Vec& x) {
        if (d == 2) {
          Vec n(2);
          n << std::cos(x(0)), std::sin(x(0));
          return value_params(n, x(1)).first;
        }
        return value_params(x.head(d), x(d)).first;
      };
      auto best = multistart_max(eval, starts, 0.08, config.max_eval);
      if (d == 2) {
        Vec n(2);
        n << std::cos(best.x(0)), std::sin(best.x(0));
        auto [v, p] = value_params(n, best.x(1));
        out.value = v;
        out.witness = p;
      } else {
        auto [v, p] = value_params(best.x.head(d), best.x(d));
        out.value = v;
        out.witness = p;
      }
      return out;
    }

    case IsometryFamily::FlatReflections: {
      const int i = config.flat_dim;
      if (i < 0 || i >= d)
        throw std::invalid_argument("flat dimension out of range");
      if (i == 0) {
        OptConfig sub = config;
        auto res = c_quantity(k, IsometryFamily::PointReflections, sub);
        return res;
      }
      if (i == d - 1)
        return c_quantity(k, IsometryFamily::HyperplaneReflections, config);
      if (d != 3)
        throw std::invalid_argument("intermediate flats handled for d = 3 only");
      // Line reflections in R^3: point on the line via softmax weights over
      // the vertices (keeps the line meeting K), direction via a free vector.
      const int n = k.n();
      auto value_params = [&](const Vec& x) {
        Vec a = softmax_point(k.vertices, x.head(n));
        Vec dir = x.tail(3);
        double nn = dir.norm();
        if (nn < 1e-9) return std::pair<double, PairPlacement>{0.0, {}};
        Mat basis = dir / nn;
        PairPlacement p = PairPlacement::reflect_flat(basis, a);
        std::vector<Vec> pts = placed_union(k, k, p);
        return std::pair<double, PairPlacement>{safe_ratio(pts, vol), p};
      };
      Rng rng(mix_seed(config.seed, 303));
      std::vector<Vec> starts;
      for (int r = 0; r < config.restarts; ++r) {
        Vec x0 = Vec::Zero(n + 3);
        if (r > 0)
          for (int j = 0; j < n + 3; ++j) x0(j) = rng.uniform(-1.0, 1.0);
        else
          x0.tail(3) = Vec::Ones(3);
        starts.push_back(x0);
      }
      auto best = multistart_max(
          [&](const Vec& x) { return value_params(x).first; }, starts, 0.5,
          config.max_eval);
      auto [v, p] = value_params(best.x);
      out.value = v;
      out.witness = p;
      out.restarts = config.restarts;
      return out;
    }

    case IsometryFamily::Congruences: {
      const int rot_dims = d == 2 ? 1 : 3;
      if (d > 3)
        throw std::invalid_argument("congruences handled for d <= 3 only");
      Vec ctr = centroid(k.vertices);
      auto value_params = [&](const Vec& x) {
        Mat rot = rotation_from_params(d, x.head(rot_dims));
        std::vector<Vec> rotated;
        for (const Vec& v : k.vertices) rotated.push_back(ctr + rot * (v - ctr));
        Vec u = x.tail(d);
        double nn = u.norm();
        if (nn < 1e-9) return std::pair<double, PairPlacement>{0.0, {}};
        u /= nn;
        double w = difference_body(k.vertices, rotated).radial(u);
        Vec shift = ctr - rot * ctr + w * u;
        PairPlacement p = PairPlacement::rigid(rot, shift);
        std::vector<Vec> pts = k.vertices;
        for (const Vec& v : rotated) pts.push_back(v + w * u);
        return std::pair<double, PairPlacement>{safe_ratio(pts, vol), p};
      };
      Rng rng(mix_seed(config.seed, 404));
      std::vector<Vec> starts;
      for (int r = 0; r < config.restarts; ++r) {
        Vec x0(rot_dims + d);
        for (int j = 0; j < rot_dims; ++j)
          x0(j) = r == 0 ? 0.0 : rng.uniform(-kPi, kPi);
        x0.tail(d) = rng.sphere_point(d);
        starts.push_back(x0);
      }
      auto best = multistart_max(
          [&](const Vec& x) { return value_params(x).first; }, starts, 0.4,
          config.max_eval);
      auto [v, p] = value_params(best.x);
      out.value = v;
      out.witness = p;
      out.restarts = config.restarts;
      return out;
    }
  }
  throw std::logic_error("unknown isometry family");
}

bool constant_volume_predicate(const VertexPolytope& k, int samples,
                               double tol) {
  if (k.dim != 2) throw std::invalid_argument("d must be 2");
  if (samples < 3) throw std::invalid_argument("too few samples");
  DifferenceBody db = difference_body(k.vertices, k.vertices);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < samples; ++i) {
    double theta = 2.0 * kPi * i / samples;
    Vec u(2);
    u << std::cos(theta), std::sin(theta);
    double w = db.radial(u);
    double v = hull_volume(placed_union(k, k, PairPlacement::translate(w * u)));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo < tol;
}

double reflection_body_ratio(const VertexPolytope& k, ReflectionBody kind,
                             const OptConfig& config) {
  IsometryFamily family = kind == ReflectionBody::RStar
                              ? IsometryFamily::PointReflections
                              : IsometryFamily::Translations;
  return c_quantity(k, family, config).value;
}

double cylinder_ratio(const VertexPolytope& k, const Vec& u) {
  Vec dir = u.normalized();
  double width = support(k, dir) + support(k, Vec(-dir));
  Mat q = complement(dir);
  std::vector<Vec> projected;
  projected.reserve(k.n());
  for (const Vec& v : k.vertices) projected.push_back(q.transpose() * v);
  double base;
  if (k.dim == 2) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const Vec& p : projected) {
      lo = std::min(lo, p(0));
      hi = std::max(hi, p(0));
    }
    base = hi - lo;
  } else {
    base = hull_volume(projected);
  }
  return width * base / body_volume(k);
}

double max_cylinder_ratio(const VertexPolytope& k, const OptConfig& config) {
  if (k.dim == 2) {
    auto value_at = [&](double theta) {
      Vec u(2);
      u << std::cos(theta), std::sin(theta);
      return cylinder_ratio(k, u);
    };
    double best = -1.0, best_theta = 0.0;
    for (int i = 0; i < config.grid; ++i) {
      double theta = kPi * i / config.grid;
      double v = value_at(theta);
      if (v > best) {
        best = v;
        best_theta = theta;
      }
    }
    double span = kPi / config.grid;
    double theta = golden_max(value_at, best_theta - span, best_theta + span);
    return std::max(best, value_at(theta));
  }
  Rng rng(mix_seed(config.seed, 505));
  std::vector<Vec> starts;
  for (int r = 0; r < config.restarts; ++r)
    starts.push_back(rng.sphere_point(k.dim));
  auto best = multistart_max(
      [&](const Vec& x) {
        double n = x.norm();
        return n < 1e-9 ? 0.0 : cylinder_ratio(k, Vec(x / n));
      },
      starts, 0.3, config.max_eval);
  return best.value;
}

SimplexReflection simplex_reflection(const VertexPolytope& s,
                                     const Vec& h_normal) {
  validate(s);
  const int d = s.dim;
  if (s.n() != d + 1) throw std::invalid_argument("S must be a d-simplex");
  Vec u = h_normal.normalized();

  int i0 = 0;
  for (int i = 1; i <= d; ++i)
    if (u.dot(s.vertices[i]) < u.dot(s.vertices[i0])) i0 = i;
  for (int i = 0; i <= d; ++i)
    if (i != i0 && u.dot(s.vertices[i] - s.vertices[i0]) <= 1e-9)
      throw std::invalid_argument("contact regime violated");

  // Translate the contact vertex to the origin.
  std::vector<Vec> t;
  VertexPolytope local;
  local.dim = d;
  for (int i = 0; i <= d; ++i) {
    t.push_back(s.vertices[i] - s.vertices[i0]);
    local.vertices.push_back(t.back());
  }
  std::swap(t[0], t[i0]);
  std::swap(local.vertices[0], local.vertices[i0]);

  Vec sum = Vec::Zero(d);
  for (int i = 1; i <= d; ++i) sum += t[i];

  std::vector<Vec> normals = simplex_facet_normals(local);

  SimplexReflection out;
  double acc = 0.0;
  for (int i = 0; i <= d; ++i) {
    double nu = normals[i].dot(u);
    if (nu <= 1e-12) continue;
    ++out.upper_facets;
    acc += nu * u.dot(sum - t[i]) /
           std::abs(normals[i].dot((d + 1.0) * t[i] - sum));
  }
  out.ratio = 2.0 * d * acc;

  double vol = simplex_volume(local.vertices);
  std::vector<Vec> pts = local.vertices;
  for (const Vec& v : reflect_hyperplane_pts(local.vertices, u, 0.0))
    pts.push_back(v);
  out.ratio_direct = hull_volume(pts) / vol;

  out.bound = std::numeric_limits<double>::quiet_NaN();
  if (out.upper_facets == 1 && normals[0].dot(u) > 1e-12) {
    Mat m(d, d);
    for (int i = 1; i <= d; ++i) m.col(i - 1) = t[i];
    Mat gram = m.transpose() * m;
    Vec y = gram.fullPivLu().solve(Vec::Ones(d));
    out.bound = d + std::sqrt(y.lpNorm<1>()) * (m * Vec::Ones(d)).norm();
  }
  return out;
}

CommonCenterResult common_center_search(CommonCenterKind kind,
                                        const OptConfig& config) {
  std::vector<Vec> base;
  if (kind == CommonCenterKind::TwoTriangles) {
    for (int i = 0; i < 3; ++i) {
      Vec v(3);
      v << std::cos(2.0 * kPi * i / 3.0), std::sin(2.0 * kPi * i / 3.0), 0.0;
      base.push_back(std::move(v));
    }
  } else {
    double s = 1.0 / std::sqrt(3.0);
    for (auto [x, y, z] : {std::tuple{1, 1, 1},
                           {1, -1, -1},
                           {-1, 1, -1},
                           {-1, -1, 1}}) {
      Vec v(3);
      v << s * x, s * y, s * z;
      base.push_back(std::move(v));
    }
  }

  auto objective = [&](const Vec& w) {
    Mat rot = rotation_from_params(3, w);
    std::vector<Vec> pts = base;
    for (const Vec& v : base) pts.push_back(rot * v);
    try {
      return hull_volume(pts);
    } catch (const std::invalid_argument&) {
      return 0.0;
    }
  };

  Rng rng(mix_seed(config.seed, 606));
  CommonCenterResult out;
  Vec best_w = Vec::Zero(3);
  for (int r = 0; r < config.restarts; ++r) {
    Vec w0 = Vec::Zero(3);
    if (r > 0)
      for (int j = 0; j < 3; ++j) w0(j) = rng.uniform(-kPi, kPi);
    auto res = nelder_mead([&](const Vec& w) { return -objective(w); }, w0,
                           0.7, config.max_eval);
    if (-res.value > out.max_volume) {
      out.max_volume = -res.value;
      best_w = res.x;
    }
  }
  out.witness_rotation = rotation_from_params(3, best_w);
  for (const Vec& v : base)
    out.witness_vertices.push_back(out.witness_rotation * v);
  return out;
}

double simplex_self_intersection_volume(const VertexPolytope& s,
                                        const Vec& a) {
  const int d = s.dim;
  std::vector<Vec> normals = simplex_facet_normals(s);
  std::vector<std::pair<Vec, double>> half;
  for (int i = 0; i <= d; ++i) {
    int other = i == 0 ? 1 : 0;
    double b = normals[i].dot(s.vertices[other]);
    half.emplace_back(normals[i], b);
    half.emplace_back(-normals[i], b - 2.0 * normals[i].dot(a));
  }

  const int m = static_cast<int>(half.size());
  std::vector<Vec> feasible;
  std::vector<int> idx(d);
  std::function<void(int, int)> rec = [&](int start, int pos) {
    if (pos == d) {
      Mat aa(d, d);
      Vec bb(d);
      for (int j = 0; j < d; ++j) {
        aa.row(j) = half[idx[j]].first.transpose();
        bb(j) = half[idx[j]].second;
      }
      Eigen::FullPivLU<Mat> lu(aa);
      if (lu.rank() < d) return;
      Vec x = lu.solve(bb);
      // Near-parallel triples (the two copies share facet normals up to sign)
      // can yield wildly inaccurate or non-finite solutions; keep only
      // genuine constraint intersections.
      if (!x.allFinite() || (aa * x - bb).cwiseAbs().maxCoeff() > 1e-7) return;
      for (const auto& [n, b] : half)
        if (n.dot(x) > b + 1e-9) return;
      // Merge clusters of near-coincident intersections aggressively: the
      // d-dimensional hull routine is not robust to vertex clusters a few
      // ulps apart, which arise here whenever the center is tiny and the
      // two copies' facet planes nearly coincide.
      for (const Vec& y : feasible)
        if ((x - y).norm() < 1e-7) return;
      feasible.push_back(x);
      return;
    }
    for (int i = start; i <= m - (d - pos); ++i) {
      idx[pos] = i;
      rec(i + 1, pos + 1);
    }
  };
  rec(0, 0);

  if (static_cast<int>(feasible.size()) < d + 1) return 0.0;
  try {
    return hull_volume(feasible);
  } catch (const std::invalid_argument&) {
    return 0.0;
  }
}

double symmetricity_oracle(const VertexPolytope& s, Symmetricity kind,
                           int resolution) {
  validate(s);
  const int d = s.dim;
  if (d > 3) throw std::invalid_argument("oracle is desk-scale only (d <= 3)");
  if (s.n() != d + 1) throw std::invalid_argument("S must be a simplex");
  const double vol = body_volume(s);

  double diameter = 0.0;
  for (int i = 0; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      diameter = std::max(diameter, (s.vertices[i] - s.vertices[j]).norm());

  auto inner_value = [&](const Vec& a) {
    return simplex_self_intersection_volume(s, a) / vol;
  };
  auto outer_value = [&](const Vec& a) {
    return safe_ratio(placed_union(s, s, PairPlacement::reflect_point(a)),
                      vol);
  };

  bool inner = kind == Symmetricity::Inner;
  double best = inner ? -1.0 : std::numeric_limits<double>::infinity();
  Vec best_a;
  enumerate_compositions(resolution, d + 1, [&](const std::vector<int>& c) {
    Vec a = Vec::Zero(d);
    for (int i = 0; i <= d; ++i)
      a += (static_cast<double>(c[i]) / resolution) * s.vertices[i];
    double v = inner ? inner_value(a) : outer_value(a);
    if (inner ? v > best : v < best) {
      best = v;
      best_a = a;
    }
  });

  auto res = nelder_mead(
      [&](const Vec& a) {
        double v = inner ? inner_value(a) : outer_value(a);
        return inner ? -v : v;
      },
      best_a, diameter / resolution, 800);
  double refined = inner ? -res.value : res.value;
  if (inner ? refined > best : (refined < best && refined > 0.0))
    best = refined;

  return inner ? best : 1.0 / best;
}

VertexPolytope disc_polygon(int m) {
  VertexPolytope p;
  p.dim = 2;
  for (int i = 0; i < m; ++i) {
    Vec v(2);
    v << std::cos(2.0 * kPi * i / m), std::sin(2.0 * kPi * i / m);
    p.vertices.push_back(std::move(v));
  }
  return p;
}

VertexPolytope ball_polytope(int m, uint64_t seed) {
  Rng rng(seed);
  VertexPolytope p;
  p.dim = 3;
  while (p.n() < m) {
    Vec v = rng.sphere_point(3);
    bool dup = false;
    for (const Vec& q : p.vertices)
      if ((v - q).norm() < 1e-6) {
        dup = true;
        break;
      }
    if (!dup) p.vertices.push_back(std::move(v));
  }
  return p;
}

VertexPolytope reuleaux_polygon(int m) {
  // Three unit arcs centered at the corners of a unit-side triangle.
  std::vector<Vec> corners;
  for (auto [x, y] : {std::pair{0.0, 0.0},
                      {1.0, 0.0},
                      {0.5, std::sqrt(3.0) / 2.0}}) {
    Vec v(2);
    v << x, y;
    corners.push_back(std::move(v));
  }
  const double start[3] = {0.0, 2.0 * kPi / 3.0, 4.0 * kPi / 3.0};
  const int per_arc = std::max(m / 3, 2);
  VertexPolytope p;
  p.dim = 2;
  for (int arc = 0; arc < 3; ++arc)
    for (int i = 0; i < per_arc; ++i) {
      double ang = start[arc] + (kPi / 3.0) * i / per_arc;
      Vec v(2);
      v << corners[arc](0) + std::cos(ang), corners[arc](1) + std::sin(ang);
      p.vertices.push_back(std::move(v));
    }
  return p;
}

}  // namespace insc::twobody
