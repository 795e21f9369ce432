#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <string>

#include "inscribed/closed_forms.hpp"
#include "inscribed/constructions.hpp"
#include "inscribed/geometry.hpp"
#include "inscribed/property_z.hpp"
#include "inscribed/search.hpp"

using namespace insc;
using namespace insc::search;

TEST_CASE("small searches reach the known optima") {
  auto r4 = global_search(3, 4, 5, 1);
  CHECK(r4.best_volume == doctest::Approx(0.51320010).epsilon(1e-6));

  auto r6 = global_search(3, 6, 10, 1);
  CHECK(r6.best_volume == doctest::Approx(4.0 / 3.0).epsilon(1e-7));
  CHECK(on_unit_sphere(r6.best_polytope, 1e-9));
  CHECK(propz::z_residual(r6.best_polytope).max_residual < 1e-9);
}

TEST_CASE("double pyramid valences for n = 5, 6, 7") {
  auto r5 = global_search(3, 5, 20, 1);
  CHECK(r5.valences == std::map<int, int>{{3, 2}, {4, 3}});
  auto r6 = global_search(3, 6, 10, 1);
  CHECK(r6.valences == std::map<int, int>{{4, 6}});
  auto r7 = global_search(3, 7, 30, 1);
  CHECK(r7.valences == std::map<int, int>{{4, 5}, {5, 2}});
  CHECK(r7.best_volume == doctest::Approx(1.58508910).epsilon(1e-5));
}

TEST_CASE("determinism for fixed seed") {
  auto a = global_search(3, 6, 8, 42);
  auto b = global_search(3, 6, 8, 42);
  CHECK(a.best_volume == b.best_volume);
  CHECK(a.best_restart == b.best_restart);
  CHECK(a.restart_volumes == b.restart_volumes);
  REQUIRE(a.best_polytope.n() == b.best_polytope.n());
  for (int i = 0; i < a.best_polytope.n(); ++i)
    CHECK((a.best_polytope.vertices[i] - b.best_polytope.vertices[i]).norm() ==
          0.0);
}

TEST_CASE("result independent of worker count") {
  setenv("INSCRIBED_THREADS", "1", 1);
  auto serial = global_search(3, 6, 8, 7);
  setenv("INSCRIBED_THREADS", "3", 1);
  auto parallel = global_search(3, 6, 8, 7);
  unsetenv("INSCRIBED_THREADS");
  CHECK(serial.best_volume == parallel.best_volume);
  CHECK(serial.restart_volumes == parallel.restart_volumes);
  for (int i = 0; i < serial.best_polytope.n(); ++i)
    CHECK((serial.best_polytope.vertices[i] -
           parallel.best_polytope.vertices[i])
              .norm() == 0.0);
}

TEST_CASE("report invariants") {
  auto r = global_search(3, 7, 10, 3);
  double mx = 0.0;
  for (double v : r.restart_volumes) mx = std::max(mx, v);
  CHECK(r.best_volume == doctest::Approx(mx));
  CHECK(static_cast<int>(r.restart_volumes.size()) == r.restarts);
  CHECK(r.best_volume <= forms::vertex_bound(7, 1.0) + 1e-12);
}

TEST_CASE("d+2 vertices in dimension 4 matches the closed form") {
  auto r = global_search(4, 6, 40, 1);
  CHECK(r.best_volume == doctest::Approx(forms::v_d_plus2(4)).epsilon(1e-4));
}

TEST_CASE("table1 report rows") {
  auto rows = table1_report(4, 6, 10, 1);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    CHECK(row.abs_dev < 1e-3);
    CHECK(row.facets == 2 * row.n - 4);
    CHECK(row.restarts == 10);
  }
  CHECK(rows[1].volume == doctest::Approx(0.86602375).epsilon(1e-4));

  std::string csv = table1_csv(rows);
  CHECK(csv.find("n,volume,ref_volume,abs_dev,facets,valences,restarts,seed") !=
        std::string::npos);
  CHECK(csv.find("\n4,") != std::string::npos);
}

TEST_CASE("reference volumes cover the table") {
  const auto& refs = reference_volumes();
  // n = 4..12 plus the single large-n entry at n = 30.
  REQUIRE(refs.size() == 10);
  for (int n = 4; n <= 12; ++n) REQUIRE(refs.count(n) == 1);
  CHECK(refs.at(4) == doctest::Approx(0.51320010));
  CHECK(refs.at(12) == doctest::Approx(2.53614471));
  CHECK(refs.at(30) == doctest::Approx(3.45322727));
}

TEST_CASE("distance_pattern negative case") {
  auto p = constructions::cross_polytope(3);
  Vec v(3);
  v << std::sin(0.3), 0.0, std::cos(0.3);
  p.vertices[0] = v;
  CHECK_FALSE(distance_pattern(p, 1e-6).is_k_invariant);
}

TEST_CASE("worker_count") {
  setenv("INSCRIBED_THREADS", "2", 1);
  CHECK(worker_count() == 2);
  unsetenv("INSCRIBED_THREADS");
  CHECK(worker_count() >= 1);
}
