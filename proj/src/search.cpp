#include "inscribed/search.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <thread>

#include "inscribed/property_z.hpp"
#include "inscribed/rng.hpp"

namespace insc::search {

namespace {

// Sorted coordinate list for reproducible tie-breaking between restarts.
std::vector<double> lex_key(const VertexPolytope& p) {
  std::vector<std::vector<double>> rows;
  for (const Vec& v : p.vertices)
    rows.emplace_back(v.data(), v.data() + v.size());
  std::sort(rows.begin(), rows.end());
  std::vector<double> flat;
  for (const auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return flat;
}

struct RestartOutcome {
  bool ok = false;
  double volume = 0.0;
  VertexPolytope polytope;
};

RestartOutcome run_restart(int d, int n, uint64_t seed, int restart,
                           int max_iter, double tol) {
  Rng rng(mix_seed(seed, static_cast<uint64_t>(restart)));
  VertexPolytope start;
  start.dim = d;
  for (int i = 0; i < n; ++i) start.vertices.push_back(rng.sphere_point(d));
  RestartOutcome out;
  try {
    auto res = propz::local_optimize(start, max_iter, tol);
    out.ok = true;
    out.volume = res.volume;
    out.polytope = std::move(res.polytope);
  } catch (const std::invalid_argument&) {
    out.ok = false;
  }
  return out;
}

}  // namespace

int worker_count() {
  if (const char* env = std::getenv("INSCRIBED_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

SearchReport global_search(int d, int n, int restarts, uint64_t seed,
                           int max_iter, double tol) {
  if (n < d + 1) throw std::invalid_argument("need n >= d+1");
  if (restarts < 1) throw std::invalid_argument("need at least one restart");

  std::vector<RestartOutcome> outcomes(restarts);
  const int workers = std::min(worker_count(), restarts);
  std::atomic<int> next{0};
  auto work = [&]() {
    while (true) {
      int r = next.fetch_add(1);
      if (r >= restarts) break;
      outcomes[r] = run_restart(d, n, seed, r, max_iter, tol);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  SearchReport rep;
  rep.d = d;
  rep.n = n;
  rep.restarts = restarts;
  rep.seed = seed;
  // Order-independent reduction: max volume, lexicographic key on ties.
  std::optional<std::vector<double>> best_key;
  for (int r = 0; r < restarts; ++r) {
    const auto& o = outcomes[r];
    if (!o.ok) {
      ++rep.failures;
      rep.restart_volumes.push_back(std::nan(""));
      continue;
    }
    rep.restart_volumes.push_back(o.volume);
    bool take = false;
    if (rep.best_restart < 0 || o.volume > rep.best_volume) {
      take = true;
    } else if (o.volume == rep.best_volume) {
      auto key = lex_key(o.polytope);
      if (!best_key || key < *best_key) take = true;
    }
    if (take) {
      rep.best_volume = o.volume;
      rep.best_polytope = o.polytope;
      rep.best_restart = r;
      best_key = lex_key(o.polytope);
    }
  }
  if (rep.best_restart < 0)
    throw std::runtime_error("every restart failed");

  if (d == 3) {
    auto complex = convex_hull(rep.best_polytope);
    for (int v : vertex_valences(complex, rep.best_polytope.n()))
      ++rep.valences[v];
  }
  return rep;
}

const std::map<int, double>& reference_volumes() {
  static const std::map<int, double> table = {
      {4, 0.51320010},  {5, 0.86602375},  {6, 1.33333036},
      {7, 1.58508910},  {8, 1.81571182},  {9, 2.04374046},
      {10, 2.21872888}, {11, 2.35462915}, {12, 2.53614471},
      {30, 3.45322727},
  };
  return table;
}

std::vector<Table1Row> table1_report(int n_min, int n_max, int restarts,
                                     uint64_t seed) {
  if (n_min < 4 || n_max < n_min)
    throw std::invalid_argument("need 4 <= n_min <= n_max");
  std::vector<Table1Row> rows;
  for (int n = n_min; n <= n_max; ++n) {
    SearchReport rep = global_search(3, n, restarts, seed);
    Table1Row row;
    row.n = n;
    row.volume = rep.best_volume;
    auto it = reference_volumes().find(n);
    row.ref_volume = it == reference_volumes().end() ? std::nan("") : it->second;
    row.abs_dev = std::abs(row.volume - row.ref_volume);
    row.facets = static_cast<int>(convex_hull(rep.best_polytope).facets.size());
    row.valences = rep.valences;
    row.restarts = restarts;
    row.seed = seed;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string table1_csv(const std::vector<Table1Row>& rows) {
  std::ostringstream os;
  os << "n,volume,ref_volume,abs_dev,facets,valences,restarts,seed\n";
  os.precision(10);
  os << std::fixed;
  for (const auto& r : rows) {
    os << r.n << "," << r.volume << "," << r.ref_volume << "," << r.abs_dev
       << "," << r.facets << ",";
    bool first = true;
    for (const auto& [valence, count] : r.valences) {
      if (!first) os << ";";
      os << valence << "x" << count;
      first = false;
    }
    os << "," << r.restarts << "," << r.seed << "\n";
  }
  return os.str();
}

DistancePattern distance_pattern(const VertexPolytope& p, double tol) {
  DistancePattern out;
  const int n = p.n();
  out.is_k_invariant = true;
  for (int k = 1; k < n; ++k) {
    double mean = 0.0;
    std::vector<double> dists;
    for (int i = 0; i < n; ++i) {
      double dist = (p.vertices[(i + k) % n] - p.vertices[i]).norm();
      dists.push_back(dist);
      mean += dist;
    }
    mean /= n;
    double dev = 0.0;
    for (double dist : dists) dev = std::max(dev, std::abs(dist - mean));
    out.profile.push_back(dev);
    if (dev >= tol) out.is_k_invariant = false;
  }
  return out;
}

}  // namespace insc::search
