#pragma once

// Random instance generators shared by the property tests and the
// acceptance run. Everything is driven by a caller-owned std::mt19937.

#include <algorithm>
#include <memory>
#include <random>
#include <vector>

#include "kirszbraun/extension.hpp"
#include "kirszbraun/graph.hpp"
#include "kirszbraun/holefill.hpp"
#include "kirszbraun/lattice.hpp"
#include "kirszbraun/oracle.hpp"

namespace kb::testing {

inline int uniform(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Random tree on n vertices (uniform parent choice) plus `extra` random chords.
inline Graph random_connected_graph(int n, int extra, std::mt19937& rng) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int v = 1; v < n; ++v) {
    int u = uniform(rng, 0, v - 1);
    adj[u][v] = adj[v][u] = true;
  }
  for (int tries = 0, added = 0; added < extra && tries < 50 * (extra + 1); ++tries) {
    int u = uniform(rng, 0, n - 1), v = uniform(rng, 0, n - 1);
    if (u == v || adj[u][v]) continue;
    adj[u][v] = adj[v][u] = true;
    ++added;
  }
  return validate_graph(adj);
}

inline std::vector<Graph> trees_up_to(int k) {
  std::vector<Graph> out;
  for (int n = 1; n <= k; ++n) {
    for (auto& g : enumerate_connected_graphs(n)) {
      if (int(g.edge_count()) == n - 1) out.push_back(std::move(g));
    }
  }
  return out;
}

/// Greedy random 1-Lipschitz assignment on `points` (visited in the given
/// order); a point with no consistent image is left out.
template <class Domain>
PartialMap<Domain> random_lipschitz_map(Domain domain, std::shared_ptr<const Graph> target,
                                        const std::vector<typename Domain::Point>& points, std::mt19937& rng,
                                        int t = 1) {
  PartialMap<Domain> f{std::move(domain), std::move(target), {}, t};
  for (const auto& p : points) {
    std::vector<Vertex> ok;
    for (Vertex v = 0; v < f.target->order(); ++v) {
      bool fits = std::all_of(f.entries.begin(), f.entries.end(), [&](const auto& e) {
        return f.target->distance(v, e.second) <= t * f.domain.distance(p, e.first);
      });
      if (fits) ok.push_back(v);
    }
    if (!ok.empty()) f.entries.emplace(p, ok[uniform(rng, 0, int(ok.size()) - 1)]);
  }
  return f;
}

/// Boundary points of a 2-dimensional box in cyclic order from the origin.
inline std::vector<LatticePoint> boundary_cycle(int n) {
  std::vector<LatticePoint> out;
  for (int i = 0; i < n; ++i) out.push_back({i, 0});
  for (int j = 0; j < n; ++j) out.push_back({n, j});
  for (int i = n; i > 0; --i) out.push_back({i, n});
  for (int j = n; j > 0; --j) out.push_back({0, j});
  return out;
}

/// Uniformly random closed walk of length 4n in the target, laid along the
/// boundary cycle of the box {0..n}^2. Always a valid boundary condition.
inline BoundaryCondition random_boundary(int n, std::shared_ptr<const Graph> target, std::mt19937& rng) {
  const int len = 4 * n;
  const int k = target->order();
  // walks[s][u][v]: number of walks of length s from u to v.
  std::vector<std::vector<std::vector<double>>> walks(len + 1, std::vector<std::vector<double>>(k, std::vector<double>(k, 0)));
  for (int u = 0; u < k; ++u) walks[0][u][u] = 1;
  for (int s = 1; s <= len; ++s) {
    for (int u = 0; u < k; ++u) {
      for (Vertex w : target->neighbors(u)) {
        for (int v = 0; v < k; ++v) walks[s][u][v] += walks[s - 1][w][v];
      }
    }
  }
  auto pick = [&](const std::vector<double>& weight) {
    return std::discrete_distribution<int>(weight.begin(), weight.end())(rng);
  };
  std::vector<double> start_weight(k);
  for (int u = 0; u < k; ++u) start_weight[u] = walks[len][u][u];
  const int start = pick(start_weight);

  const auto cycle = boundary_cycle(n);
  BoundaryCondition bc{make_box(2, n), target, {}};
  int at = start;
  for (int s = 0; s < len; ++s) {
    bc.assignment.emplace(cycle[s], at);
    std::vector<double> weight(k, 0);
    for (Vertex w : target->neighbors(at)) weight[w] = walks[len - s - 1][w][start];
    at = pick(weight);
  }
  return bc;
}

/// Brute-force box filling respecting the partite classes forced by parity.
inline bool brute_force_fill(const BoundaryCondition& bc) {
  const Bipartition parts = bipartition(*bc.target);
  const int even_class = even_point_class(bc, parts);
  LatticeMap f{LatticeDomain{bc.box.dim}, bc.target, bc.assignment, 1};
  BruteForceOptions<LatticeDomain> opts;
  opts.parts = &parts;
  opts.required_class = [&](const LatticePoint& p) { return parity(p) == 1 ? even_class : 3 - even_class; };
  return brute_force_extend(f, box_vertices(bc.box), 1, opts);
}

}  // namespace kb::testing
