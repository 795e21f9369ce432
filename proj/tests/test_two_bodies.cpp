#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "inscribed/closed_forms.hpp"
#include "inscribed/constructions.hpp"
#include "inscribed/geometry.hpp"
#include "inscribed/rng.hpp"
#include "inscribed/two_bodies.hpp"

using namespace insc;
using namespace insc::twobody;

namespace {
constexpr double kPi = 3.14159265358979323846;

Vec v2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

VertexPolytope unit_square() {
  VertexPolytope p;
  p.dim = 2;
  p.vertices = {v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1)};
  return p;
}

VertexPolytope regular_polygon(int m, double radius = 1.0) {
  VertexPolytope p;
  p.dim = 2;
  for (int i = 0; i < m; ++i)
    p.vertices.push_back(
        radius * v2(std::cos(2.0 * kPi * i / m), std::sin(2.0 * kPi * i / m)));
  return p;
}

VertexPolytope random_circle_polygon(int m, Rng& rng, double radius = 1.0) {
  std::vector<double> angles;
  for (int i = 0; i < m; ++i) angles.push_back(rng.uniform(0.0, 2.0 * kPi));
  std::sort(angles.begin(), angles.end());
  VertexPolytope p;
  p.dim = 2;
  for (double a : angles)
    p.vertices.push_back(radius * v2(std::cos(a), std::sin(a)));
  return p;
}

VertexPolytope random_sphere_polytope(int m, Rng& rng) {
  VertexPolytope p;
  p.dim = 3;
  for (int i = 0; i < m; ++i) p.vertices.push_back(rng.sphere_point(3));
  return p;
}

}  // namespace

TEST_CASE("pair_hull_volume basics") {
  auto t = constructions::regular_simplex(2);
  CHECK(pair_hull_volume(t, t, PairPlacement::identity(2)) ==
        doctest::Approx(polytope_volume(t)).epsilon(1e-12));

  // Unit square slid along an edge: rectangle of area 1 + x.
  auto sq = unit_square();
  for (double x : {0.25, 0.5, 1.5})
    CHECK(pair_hull_volume(sq, sq, PairPlacement::translate(v2(x, 0))) ==
          doctest::Approx(1.0 + x).epsilon(1e-12));

  // Two regular tetrahedra in the cube configuration.
  auto tet = constructions::regular_simplex(3);
  CHECK(pair_hull_volume(tet, tet,
                         PairPlacement::reflect_point(Vec::Zero(3))) ==
        doctest::Approx(8.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-12));
}

TEST_CASE("g profile of the sliding square is piecewise linear convex") {
  auto sq = unit_square();
  std::vector<double> xs;
  for (int i = 0; i <= 100; ++i) xs.push_back(-2.0 + 4.0 * i / 100.0);
  auto prof = g_profile(sq, sq, v2(1, 0), xs);
  REQUIRE(prof.values.size() == xs.size());
  for (size_t i = 0; i < xs.size(); ++i)
    CHECK(prof.values[i] ==
          doctest::Approx(1.0 + std::abs(xs[i])).epsilon(1e-12));
  CHECK(convexity_defect(prof) <= 1e-12);
}

TEST_CASE("g is convex for random polygon and polytope pairs") {
  Rng rng(31);
  std::vector<double> xs;
  for (int i = 0; i <= 100; ++i) xs.push_back(-3.0 + 6.0 * i / 100.0);

  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_circle_polygon(7, rng);
    auto b = random_circle_polygon(5, rng, 0.8);
    double ang = rng.uniform(0.0, 2.0 * kPi);
    auto prof = g_profile(a, b, v2(std::cos(ang), std::sin(ang)), xs);
    CHECK(convexity_defect(prof) <= 1e-9);
  }
  for (int trial = 0; trial < 5; ++trial) {
    auto a = random_sphere_polytope(7, rng);
    auto b = random_sphere_polytope(6, rng);
    auto prof = g_profile(a, b, rng.sphere_point(3), xs);
    CHECK(convexity_defect(prof) <= 1e-9);
  }
}

TEST_CASE("translative constants of the discrete minimizers") {
  OptConfig cfg;
  cfg.seed = 1;
  CHECK(c_quantity(constructions::regular_simplex(2),
                   IsometryFamily::Translations, cfg)
            .value == doctest::Approx(3.0).epsilon(1e-6));
  CHECK(c_quantity(constructions::cross_polytope(2),
                   IsometryFamily::Translations, cfg)
            .value == doctest::Approx(3.0).epsilon(1e-6));
  // conv(K u (K+t)) = K + [0,t]; for the regular pentagon the product
  // chord(u) * width(u^perp) is direction-independent (the difference body
  // is a Radon decagon), giving exactly 2 + sqrt(5)/5.
  CHECK(c_quantity(regular_polygon(5), IsometryFamily::Translations, cfg)
            .value ==
        doctest::Approx(2.0 + std::sqrt(5.0) / 5.0).epsilon(1e-5));
}

TEST_CASE("point reflection constants") {
  OptConfig cfg;
  cfg.seed = 1;
  CHECK(c_quantity(constructions::regular_simplex(2),
                   IsometryFamily::PointReflections, cfg)
            .value == doctest::Approx(4.0).epsilon(1e-5));
  CHECK(c_quantity(constructions::cross_polytope(2),
                   IsometryFamily::PointReflections, cfg)
            .value == doctest::Approx(3.0).epsilon(1e-5));
}

TEST_CASE("line reflection constants in the plane") {
  OptConfig cfg;
  cfg.seed = 1;
  CHECK(c_quantity(constructions::regular_simplex(2),
                   IsometryFamily::HyperplaneReflections, cfg)
            .value == doctest::Approx(4.0).epsilon(1e-5));
  CHECK(c_quantity(constructions::cross_polytope(2),
                   IsometryFamily::HyperplaneReflections, cfg)
            .value == doctest::Approx(3.0).epsilon(1e-5));
}

TEST_CASE("flat reflection dispatch endpoints agree with the named families") {
  OptConfig cfg;
  cfg.seed = 1;
  cfg.flat_dim = 0;
  auto tri = constructions::regular_simplex(2);
  CHECK(c_quantity(tri, IsometryFamily::FlatReflections, cfg).value ==
        doctest::Approx(4.0).epsilon(1e-4));
  cfg.flat_dim = 1;
  CHECK(c_quantity(tri, IsometryFamily::FlatReflections, cfg).value ==
        doctest::Approx(4.0).epsilon(1e-4));
}

TEST_CASE("family lower bounds on smooth bodies") {
  OptConfig cfg;
  cfg.seed = 1;
  cfg.restarts = 8;
  auto disc = disc_polygon(128);
  double tr = c_quantity(disc, IsometryFamily::Translations, cfg).value;
  CHECK(tr >= forms::rs_lower(2) - 1e-6);
  CHECK(tr == doctest::Approx(forms::rs_lower(2)).epsilon(2e-3));
  CHECK(c_quantity(disc, IsometryFamily::PointReflections, cfg).value >=
        forms::rs_lower(2) - 1e-6);
  CHECK(c_quantity(disc, IsometryFamily::HyperplaneReflections, cfg).value >=
        forms::rs_lower(2) - 1e-6);
}

TEST_CASE("translations in dimension 3") {
  OptConfig cfg;
  cfg.seed = 1;
  cfg.restarts = 12;
  auto tet = constructions::regular_simplex(3);
  double v = c_quantity(tet, IsometryFamily::Translations, cfg).value;
  CHECK(v >= forms::rs_lower(3) - 1e-6);
  CHECK(v == doctest::Approx(4.0).epsilon(1e-4));  // 1 + d for a simplex
}

TEST_CASE("congruence family dominates translations") {
  OptConfig cfg;
  cfg.seed = 1;
  cfg.restarts = 16;
  auto tri = constructions::regular_simplex(2);
  double co = c_quantity(tri, IsometryFamily::Congruences, cfg).value;
  CHECK(co >= 3.0 - 1e-3);
}

TEST_CASE("constant volume predicate") {
  CHECK(constant_volume_predicate(disc_polygon(256), 64, 1e-3));
  CHECK_FALSE(constant_volume_predicate(unit_square(), 64, 1e-3));
  CHECK(constant_volume_predicate(reuleaux_polygon(120), 64, 1e-2));
  CHECK_THROWS_AS(
      constant_volume_predicate(constructions::regular_simplex(3), 16, 1e-3),
      std::invalid_argument);
}

TEST_CASE("reflection bodies") {
  OptConfig cfg;
  cfg.seed = 1;
  auto tri = constructions::regular_simplex(2);
  CHECK(reflection_body_ratio(tri, ReflectionBody::RStar, cfg) ==
        doctest::Approx(4.0).epsilon(1e-4));
  CHECK(reflection_body_ratio(tri, ReflectionBody::TStar, cfg) ==
        doctest::Approx(3.0).epsilon(1e-5));
  CHECK(reflection_body_ratio(disc_polygon(128), ReflectionBody::RStar, cfg) ==
        doctest::Approx(1.0 + 4.0 / kPi).epsilon(1e-2));
}

TEST_CASE("reflection body ratio bounds on the test battery") {
  OptConfig cfg;
  cfg.seed = 1;
  cfg.restarts = 8;
  for (const VertexPolytope& k :
       {constructions::regular_simplex(2), constructions::cross_polytope(2),
        disc_polygon(64), unit_square()}) {
    double r = reflection_body_ratio(k, ReflectionBody::RStar, cfg);
    CHECK(r <= std::pow(2.0, k.dim) + 1e-9);
    CHECK(r >= forms::rs_lower(k.dim) - 1e-2);
  }
  // Centrally symmetric bodies stay below 1 + d.
  for (const VertexPolytope& k :
       {constructions::cross_polytope(2), disc_polygon(64)}) {
    CHECK(reflection_body_ratio(k, ReflectionBody::RStar, cfg) <=
          1.0 + k.dim + 1e-9);
  }
}

TEST_CASE("cylinder ratios") {
  auto diamond = constructions::cross_polytope(2);
  CHECK(cylinder_ratio(diamond, v2(1, 0)) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(cylinder_ratio(diamond, v2(1, 1).normalized()) ==
        doctest::Approx(1.0).epsilon(1e-12));
  OptConfig cfg;
  cfg.seed = 1;
  cfg.restarts = 8;
  CHECK(max_cylinder_ratio(diamond, cfg) >= 4.0 / kPi - 1e-9);
  CHECK(max_cylinder_ratio(constructions::regular_simplex(2), cfg) >=
        4.0 / kPi - 1e-9);
  // Ball: the ratio is direction independent and equals 2 v_2 / v_3 = 3/2.
  CHECK(max_cylinder_ratio(ball_polytope(500), cfg) ==
        doctest::Approx(1.5).epsilon(2e-2));
}

TEST_CASE("simplex reflection: regular simplices") {
  for (int d = 2; d <= 6; ++d) {
    auto s = constructions::regular_simplex(d);
    Vec u = -s.vertices[0];
    auto r = simplex_reflection(s, u);
    CHECK(r.upper_facets == 1);
    CHECK(r.ratio == doctest::Approx(2.0 * d).epsilon(1e-9));
    CHECK(r.ratio_direct == doctest::Approx(r.ratio).epsilon(1e-9));
    CHECK(r.bound == doctest::Approx(2.0 * d).epsilon(1e-9));
  }
}

TEST_CASE("simplex reflection never beats 2d on the regular simplex") {
  Rng rng(13);
  auto s = constructions::regular_simplex(3);
  int tested = 0;
  while (tested < 20) {
    Vec u = rng.sphere_point(3);
    try {
      auto r = simplex_reflection(s, u);
      CHECK(r.ratio <= 6.0 + 1e-9);
      CHECK(r.ratio_direct == doctest::Approx(r.ratio).epsilon(1e-9));
      ++tested;
    } catch (const std::invalid_argument&) {
      // non-generic contact; resample
    }
  }
}

TEST_CASE("prism formula matches the direct volume on random simplices") {
  Rng rng(37);
  int tested = 0;
  while (tested < 100) {
    int d = 2 + static_cast<int>(rng.next() % 3);
    VertexPolytope s;
    s.dim = d;
    for (int i = 0; i <= d; ++i) s.vertices.push_back(rng.sphere_point(d));
    Vec u = rng.sphere_point(d);
    try {
      auto r = simplex_reflection(s, u);
      CHECK(std::abs(r.ratio - r.ratio_direct) <=
            1e-9 * std::max(1.0, r.ratio));
      ++tested;
    } catch (const std::invalid_argument&) {
      // degenerate simplex or contact regime violated; resample
    }
  }
}

TEST_CASE("two tetrahedra with a common center maximize at the cube") {
  OptConfig cfg;
  cfg.seed = 1;
  cfg.restarts = 48;
  auto res = common_center_search(CommonCenterKind::TwoTetrahedra, cfg);
  CHECK(res.max_volume == doctest::Approx(8.0 / (3.0 * std::sqrt(3.0)))
                              .epsilon(1e-5));
  // Witness tetrahedron is the point reflection of the base: together they
  // span a cube.
  double s = 1.0 / std::sqrt(3.0);
  std::vector<Vec> base;
  for (auto [x, y, z] : {std::tuple{1, 1, 1}, std::tuple{1, -1, -1},
                         std::tuple{-1, 1, -1}, std::tuple{-1, -1, 1}}) {
    Vec v(3);
    v << s * x, s * y, s * z;
    base.push_back(v);
  }
  for (const Vec& w : res.witness_vertices) {
    double best = 1e300;
    for (const Vec& b : base) best = std::min(best, (w + b).norm());
    CHECK(best < 1e-3);
  }
}

TEST_CASE("aligned tetrahedra escape to a larger volume") {
  OptConfig cfg;
  cfg.seed = 2;
  cfg.restarts = 1;  // identity start only
  auto stuck = common_center_search(CommonCenterKind::TwoTetrahedra, cfg);
  CHECK(stuck.max_volume >= 0.51320010 - 1e-6);
  cfg.restarts = 32;
  auto escaped = common_center_search(CommonCenterKind::TwoTetrahedra, cfg);
  CHECK(escaped.max_volume > 1.5);
}

TEST_CASE("two triangles with a common center: orthogonal planes") {
  OptConfig cfg;
  cfg.seed = 1;
  cfg.restarts = 48;
  auto res = common_center_search(CommonCenterKind::TwoTriangles, cfg);
  // Base triangle lies in the xy-plane; the witness plane normal is R*e3.
  Vec n2 = res.witness_rotation.col(2);
  CHECK(std::abs(n2(2)) < 1e-3);
  // One vertex pair is antipodal.
  double best = 1e300;
  for (int i = 0; i < 3; ++i) {
    Vec b(3);
    b << std::cos(2.0 * kPi * i / 3.0), std::sin(2.0 * kPi * i / 3.0), 0.0;
    for (const Vec& w : res.witness_vertices)
      best = std::min(best, (w + b).norm());
  }
  CHECK(best < 1e-3);
}

TEST_CASE("symmetricity oracle matches the closed forms") {
  auto tri = constructions::regular_simplex(2);
  CHECK(symmetricity_oracle(tri, Symmetricity::Inner) ==
        doctest::Approx(forms::inner_symmetricity(2)).epsilon(1e-3));
  CHECK(symmetricity_oracle(tri, Symmetricity::Outer) ==
        doctest::Approx(forms::outer_symmetricity(2)).epsilon(1e-3));
  auto tet = constructions::regular_simplex(3);
  CHECK(symmetricity_oracle(tet, Symmetricity::Inner, 12) ==
        doctest::Approx(forms::inner_symmetricity(3)).epsilon(1e-2));
  CHECK_THROWS_AS(
      symmetricity_oracle(constructions::regular_simplex(4), Symmetricity::Inner),
      std::invalid_argument);
}

TEST_CASE("support and contact length") {
  auto diamond = constructions::cross_polytope(2);
  CHECK(support(diamond, v2(1, 0)) == doctest::Approx(1.0));
  CHECK(support(diamond, v2(1, 1).normalized()) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(contact_length(diamond, v2(1, 0)) == doctest::Approx(2.0).epsilon(1e-9));
  auto sq = unit_square();
  CHECK(contact_length(sq, v2(1, 0)) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("simplex self intersection volume") {
  auto tri = constructions::regular_simplex(2);
  // Reflection at the centroid (origin) realizes the inner symmetricity.
  CHECK(simplex_self_intersection_volume(tri, Vec::Zero(2)) /
            polytope_volume(tri) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  // Reflection at a vertex touches in one point only.
  CHECK(simplex_self_intersection_volume(tri, tri.vertices[0]) ==
        doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("smooth body approximations") {
  auto disc = disc_polygon(256);
  CHECK(polytope_volume(disc) == doctest::Approx(kPi).epsilon(1e-3));

  auto ball = ball_polytope(1000);
  CHECK(polytope_volume(ball) == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-2));
  CHECK(on_unit_sphere(ball, 1e-12));

  auto reuleaux = reuleaux_polygon(120);
  Rng rng(3);
  for (int i = 0; i < 32; ++i) {
    Vec u = rng.sphere_point(2);
    double width = support(reuleaux, u) + support(reuleaux, -u);
    CHECK(width == doctest::Approx(1.0).epsilon(5e-3));
  }
}

TEST_CASE("pair hull of polygons dominates the equal-area disc pair") {
  // Symmetrization decreases the maximal hull volume of a touching pair.
  Rng rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    auto a = random_circle_polygon(8, rng);
    auto b = random_circle_polygon(6, rng, 0.7);
    double aa = polytope_volume(a), ab = polytope_volume(b);

    // Radial function of the difference body A - B gives the touching
    // translation length in each direction.
    std::vector<Vec> diff;
    for (const Vec& va : a.vertices)
      for (const Vec& vb : b.vertices) diff.push_back(va - vb);
    auto dc = convex_hull(diff);
    auto radial = [&](const Vec& u) {
      double best_t = 1e300;
      for (const auto& f : dc.facets) {
        Vec e = diff[f[1]] - diff[f[0]];
        Vec n = v2(-e(1), e(0));
        if (n.dot(diff[f[0]]) < 0) n = -n;
        double nu = n.dot(u);
        if (nu > 1e-12) best_t = std::min(best_t, n.dot(diff[f[0]]) / nu);
      }
      return best_t;
    };

    double best = 0.0;
    for (int i = 0; i < 90; ++i) {
      double ang = 2.0 * kPi * i / 90.0;
      Vec u = v2(std::cos(ang), std::sin(ang));
      best = std::max(best, pair_hull_volume(
                                a, b, PairPlacement::translate(radial(u) * u)));
    }
    double ra = std::sqrt(aa / kPi), rb = std::sqrt(ab / kPi);
    auto da = disc_polygon(128), db = disc_polygon(128);
    for (auto& v : da.vertices) v *= ra;
    for (auto& v : db.vertices) v *= rb;
    double disc_pair = pair_hull_volume(
        da, db, PairPlacement::translate(v2(ra + rb, 0)));
    CHECK(best >= disc_pair - 1e-3 * std::max(1.0, disc_pair));
  }
}
