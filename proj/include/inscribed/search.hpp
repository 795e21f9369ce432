#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "inscribed/geometry.hpp"

namespace insc::search {

struct SearchReport {
  int d = 0;
  int n = 0;
  int restarts = 0;
  uint64_t seed = 0;
  double best_volume = 0.0;
  VertexPolytope best_polytope;
  std::map<int, int> valences;  // valence -> vertex count (d = 3 only)
  std::vector<double> restart_volumes;
  int failures = 0;
  int best_restart = -1;
};

// Seeded multi-restart search for v_d(n): each restart draws n points
// uniformly on S^{d-1} from a counter-based stream and runs local_optimize.
// Deterministic given (d, n, restarts, seed), independent of thread count.
SearchReport global_search(int d, int n, int restarts, uint64_t seed,
                           int max_iter = 2000, double tol = 1e-9);

struct Table1Row {
  int n = 0;
  double volume = 0.0;
  double ref_volume = 0.0;
  double abs_dev = 0.0;
  int facets = 0;
  std::map<int, int> valences;
  int restarts = 0;
  uint64_t seed = 0;
};

std::vector<Table1Row> table1_report(int n_min, int n_max, int restarts,
                                     uint64_t seed);

std::string table1_csv(const std::vector<Table1Row>& rows);

// Reference volumes of the 3D computer-search table, keyed by vertex count.
const std::map<int, double>& reference_volumes();

struct DistancePattern {
  bool is_k_invariant = false;
  std::vector<double> profile;  // max deviation of |p_{i+k} - p_i| per k
};

// Checks |p_{i+k} - p_i| is independent of i in the given cyclic order.
DistancePattern distance_pattern(const VertexPolytope& p, double tol);

// Worker cap from INSCRIBED_THREADS (0 or unset = hardware concurrency).
int worker_count();

}  // namespace insc::search
