#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "inscribed/closed_forms.hpp"
#include "inscribed/constructions.hpp"
#include "inscribed/geometry.hpp"
#include "inscribed/rng.hpp"

using namespace insc;
using namespace insc::forms;

namespace {
constexpr double kPi = 3.14159265358979323846;

// Spherical excess of the triangle with unit-vector vertices a, b, c.
double spherical_area(const Vec& a, const Vec& b, const Vec& c) {
  auto angle_at = [](const Vec& p, const Vec& q, const Vec& r) {
    Vec tq = q - q.dot(p) * p;
    Vec tr = r - r.dot(p) * p;
    return std::acos(std::clamp(tq.normalized().dot(tr.normalized()), -1.0, 1.0));
  };
  return angle_at(a, b, c) + angle_at(b, c, a) + angle_at(c, a, b) - kPi;
}

double arc(const Vec& a, const Vec& b) {
  return std::acos(std::clamp(a.dot(b), -1.0, 1.0));
}

// Facial tetrahedron with apex at the origin.
double tetra_volume(const Vec& a, const Vec& b, const Vec& c) {
  Mat m(3, 3);
  m.col(0) = a;
  m.col(1) = b;
  m.col(2) = c;
  return std::abs(m.determinant()) / 6.0;
}

// Isosceles triangle with apex at the pole: base edge AB of arc c, legs
// equal; by symmetry |AC| = |CB|.
void isosceles(double leg, double half_base_lon, Vec& a, Vec& b, Vec& c) {
  c = Vec(3);
  c << 0, 0, 1;
  a = Vec(3);
  a << std::sin(leg) * std::cos(half_base_lon),
      std::sin(leg) * std::sin(half_base_lon), std::cos(leg);
  b = Vec(3);
  b << std::sin(leg) * std::cos(half_base_lon),
      -std::sin(leg) * std::sin(half_base_lon), std::cos(leg);
}
}  // namespace

TEST_CASE("omega") {
  CHECK(omega(3) == doctest::Approx(kPi / 2.0).epsilon(1e-14));
  CHECK(omega(6) == doctest::Approx(kPi / 4.0).epsilon(1e-14));
}

TEST_CASE("fejes toth bounds at the regular equality cases") {
  CHECK(fejes_toth_bounds(6, 4, 4, 1.0, 1.0).upper ==
        doctest::Approx(polytope_volume(constructions::regular_simplex(3)))
            .epsilon(1e-9));
  CHECK(fejes_toth_bounds(12, 8, 6, 1.0, 1.0).upper ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-9));
  CHECK(fejes_toth_bounds(30, 20, 12, 1.0, 1.0).upper ==
        doctest::Approx(
            polytope_volume(constructions::named_polytope("icosahedron")))
            .epsilon(1e-9));
  CHECK_THROWS_AS(fejes_toth_bounds(11, 8, 6, 1.0, 1.0),
                  std::invalid_argument);
}

TEST_CASE("fejes toth lower meets upper at the regular inradius") {
  // For a regular body with circumradius 1 and its true inradius, both sides
  // of the inequality collapse onto the volume.
  double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  struct Row {
    int e, f, v;
    double r;
  };
  for (Row row : {Row{6, 4, 4, 1.0 / 3.0}, Row{12, 8, 6, 1.0 / std::sqrt(3.0)},
                  Row{30, 20, 12,
                      phi * phi / (std::sqrt(3.0) *
                                   std::sqrt(phi * std::sqrt(5.0)))}}) {
    auto b = fejes_toth_bounds(row.e, row.f, row.v, row.r, 1.0);
    CHECK(b.lower == doctest::Approx(b.upper).epsilon(1e-9));
  }
}

TEST_CASE("vertex bound") {
  CHECK(vertex_bound(12, 1.0) ==
        doctest::Approx(
            polytope_volume(constructions::named_polytope("icosahedron")))
            .epsilon(1e-12));
  CHECK(vertex_bound(6, 1.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(vertex_bound(4, 1.0) ==
        doctest::Approx(polytope_volume(constructions::regular_simplex(3)))
            .epsilon(1e-12));
  // Strict at the non-equality vertex counts (Table values).
  CHECK(vertex_bound(5, 1.0) > 0.86602375 + 1e-4);
  CHECK(vertex_bound(7, 1.0) > 1.58508910 + 1e-4);
  CHECK(vertex_bound(8, 1.0) > 1.81571182 + 1e-4);
  CHECK_THROWS_AS(vertex_bound(3, 1.0), std::invalid_argument);
}

TEST_CASE("face bound") {
  // The face-count form is tight exactly for the trihedral solids: the
  // tetrahedron (f = 4), the cube (f = 6), and the dodecahedron (f = 12).
  CHECK(face_bound(4, 1.0, 1.0).upper ==
        doctest::Approx(polytope_volume(constructions::regular_simplex(3)))
            .epsilon(1e-9));
  CHECK(face_bound(6, 1.0, 1.0).upper ==
        doctest::Approx(8.0 / (3.0 * std::sqrt(3.0))).epsilon(1e-9));
  double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  double dodeca_edge = 2.0 / (std::sqrt(3.0) * phi);
  double dodeca_vol = (15.0 + 7.0 * std::sqrt(5.0)) / 4.0 *
                      std::pow(dodeca_edge, 3);
  CHECK(face_bound(12, 1.0, 1.0).upper ==
        doctest::Approx(dodeca_vol).epsilon(1e-9));
  // Strict elsewhere: no inscribed polytope with 8 or 20 faces attains it.
  CHECK(face_bound(8, 1.0, 1.0).upper > 4.0 / 3.0 + 1e-3);
  CHECK(face_bound(20, 1.0, 1.0).upper >
        polytope_volume(constructions::named_polytope("icosahedron")) + 1e-3);
  CHECK_THROWS_AS(face_bound(3, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("facial tetra bound at the icosahedron face") {
  double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  double c = 2.0 * std::asin(1.0 / std::sqrt(phi * std::sqrt(5.0)));
  double tau = kPi / 5.0;
  double v = facial_tetra_bound(tau, c);
  CHECK(20.0 * v ==
        doctest::Approx(
            polytope_volume(constructions::named_polytope("icosahedron")))
            .epsilon(1e-9));
  // tau = c boundary is finite and positive.
  CHECK(facial_tetra_bound(0.3, 0.3) > 0.0);
  CHECK(std::isfinite(facial_tetra_bound(0.3, 0.3)));
  CHECK_THROWS_AS(facial_tetra_bound(-0.1, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(facial_tetra_bound(0.5, 0.4), std::invalid_argument);
}

TEST_CASE("facial tetra bound dominates random triangles") {
  Rng rng(11);
  int isosceles_hits = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    bool iso = trial % 2 == 0;
    Vec a, b, c;
    double leg = 0.2 + 1.0 * rng.uniform();
    double lon = 0.2 + 1.0 * rng.uniform();
    isosceles(leg, lon, a, b, c);
    if (!iso) {
      // Perturb one leg to break the symmetry, keeping AB the longest edge.
      double leg2 = leg * (0.85 + 0.1 * rng.uniform());
      a(0) = std::sin(leg2) * std::cos(lon);
      a(1) = std::sin(leg2) * std::sin(lon);
      a(2) = std::cos(leg2);
    }
    double tau = spherical_area(a, b, c);
    double edge = arc(a, b);
    if (!(tau > 0.0 && tau < kPi / 2.0 && tau <= edge && edge < kPi / 2.0))
      continue;
    if (edge < arc(a, c) || edge < arc(b, c)) continue;
    double v = tetra_volume(a, b, c);
    double bound = facial_tetra_bound(tau, edge);
    CHECK(v <= bound + 1e-12);
    bool iso_sample = std::abs(arc(a, c) - arc(b, c)) < 1e-9;
    if (iso_sample) {
      CHECK(bound - v <= 1e-9);
      ++isosceles_hits;
    } else {
      CHECK(bound - v > 1e-9);
    }
  }
  CHECK(isosceles_hits > 100);
}

TEST_CASE("star shaped bound") {
  double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  double c = 2.0 * std::asin(1.0 / std::sqrt(phi * std::sqrt(5.0)));
  std::vector<double> taus(20, kPi / 5.0), cs(20, c);
  CHECK(star_shaped_bound(taus, cs, 20) ==
        doctest::Approx(2.53614).epsilon(1e-3));
  // The bound dominates the icosahedron volume itself.
  CHECK(star_shaped_bound(taus, cs, 20) + 1e-3 >=
        polytope_volume(constructions::named_polytope("icosahedron")));
  // Single-face degenerate call evaluates and stays finite.
  CHECK(std::isfinite(star_shaped_bound({kPi / 5.0}, {c}, 1)));
  CHECK_THROWS_AS(star_shaped_bound({0.3}, {0.3, 0.4}, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(star_shaped_bound(taus, cs, 25), std::invalid_argument);
}

TEST_CASE("hessian zero split") {
  double w = hessian_split_omega();
  double target = 2.0 * std::asin(std::sqrt(2.0 / 3.0));
  CHECK(hessian_zero_split(w) == doctest::Approx(target).epsilon(1e-6));
  // The split curve stays inside [tau, target].
  for (double tau : {0.1, 0.3, 0.5}) {
    double f = hessian_zero_split(tau);
    if (!std::isnan(f)) {
      CHECK(f >= tau - 1e-9);
      CHECK(f <= target + 1e-9);
    }
  }
}

TEST_CASE("v_d_plus2 and v_d_plus3") {
  CHECK(v_d_plus2(3) == doctest::Approx(0.86602375).epsilon(1e-6));
  CHECK(v_d_plus2(3) == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-13));
  CHECK(v_d_plus2(4) == doctest::Approx(27.0 / 96.0).epsilon(1e-13));
  CHECK(v_d_plus3(3) == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
  CHECK_THROWS_AS(v_d_plus2(2), std::invalid_argument);
  CHECK_THROWS_AS(v_d_plus3(2), std::invalid_argument);
}

TEST_CASE("symmetricities") {
  CHECK(inner_symmetricity(2) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(inner_symmetricity(3) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(outer_symmetricity(2) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(outer_symmetricity(3) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(inner_symmetricity(0), std::invalid_argument);
}

TEST_CASE("unit ball volumes and rs_lower") {
  CHECK(unit_ball_volume(1) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(unit_ball_volume(2) == doctest::Approx(kPi).epsilon(1e-14));
  CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-14));
  CHECK(rs_lower(2) == doctest::Approx(1.0 + 4.0 / kPi).epsilon(1e-14));
  CHECK(rs_lower(3) == doctest::Approx(2.5).epsilon(1e-14));
  for (int d = 2; d < 10; ++d) CHECK(rs_lower(d + 1) > rs_lower(d));
  CHECK_THROWS_AS(rs_lower(1), std::invalid_argument);
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == doctest::Approx(10.0));
  CHECK(binomial(10, 0) == doctest::Approx(1.0));
  CHECK(binomial(10, 10) == doctest::Approx(1.0));
}
