#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kirszbraun/extension.hpp"
#include "kirszbraun/graph.hpp"
#include "kirszbraun/helly.hpp"

namespace kb {

/// Search-space ceiling shared by the brute-force routines.
inline constexpr double kBruteForceBudget = 1e8;

template <class Domain>
struct BruteForceOptions {
  using Point = typename Domain::Point;
  /// With `parts` set, point p may only take vertices of class `required_class(p)`.
  const Bipartition* parts = nullptr;
  std::function<int(const Point&)> required_class;
};

/// Some t-Lipschitz map on f's domain plus `superset` that extends f, if one
/// exists. Plain backtracking over the new points in ascending order, trying
/// target vertices in ascending order and pruning only against already
/// assigned points. Throws TooLarge when |H|^(new points) exceeds the budget.
template <class Domain>
std::optional<PartialMap<Domain>> brute_force_extension(const PartialMap<Domain>& f,
                                                        const std::vector<typename Domain::Point>& superset,
                                                        int t, const BruteForceOptions<Domain>& opts = {}) {
  using Point = typename Domain::Point;
  check_map(f);
  std::vector<Point> fresh;
  for (const auto& p : superset) {
    if (!f.defined_at(p)) fresh.push_back(p);
  }
  std::sort(fresh.begin(), fresh.end());
  fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
  const Graph& h = *f.target;
  if (double(fresh.size()) * std::log10(double(h.order())) > std::log10(kBruteForceBudget) + 1e-9) {
    throw Error(ErrorCode::TooLarge, std::to_string(h.order()) + "^" + std::to_string(fresh.size()) +
                                         " assignments exceed the brute-force budget");
  }
  for (auto i = f.entries.begin(); i != f.entries.end(); ++i) {
    for (auto j = std::next(i); j != f.entries.end(); ++j) {
      if (h.distance(i->second, j->second) > t * f.domain.distance(i->first, j->first)) return std::nullopt;
    }
  }

  // Precomputed bounds: fixed[k] lists (image, radius) from f, mutual[k][j]
  // the radius towards fresh point j < k.
  const std::size_t k_total = fresh.size();
  std::vector<std::vector<std::pair<Vertex, int>>> fixed(k_total);
  std::vector<std::vector<int>> mutual(k_total);
  for (std::size_t k = 0; k < k_total; ++k) {
    for (const auto& [a, v] : f.entries) fixed[k].emplace_back(v, t * f.domain.distance(fresh[k], a));
    for (std::size_t j = 0; j < k; ++j) mutual[k].push_back(t * f.domain.distance(fresh[k], fresh[j]));
  }
  std::vector<Vertex> assigned(k_total, -1);
  const auto& d = h.distances();
  std::function<bool(std::size_t)> place = [&](std::size_t k) -> bool {
    if (k == k_total) return true;
    for (Vertex v = 0; v < h.order(); ++v) {
      if (opts.parts && opts.parts->class_of(v) != opts.required_class(fresh[k])) continue;
      bool ok = true;
      for (const auto& [img, r] : fixed[k]) {
        if (d(img, v) > r) {
          ok = false;
          break;
        }
      }
      for (std::size_t j = 0; ok && j < k; ++j) ok = d(assigned[j], v) <= mutual[k][j];
      if (!ok) continue;
      assigned[k] = v;
      if (place(k + 1)) return true;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  PartialMap<Domain> out = f;
  out.lipschitz = t;
  for (std::size_t k = 0; k < k_total; ++k) out.entries.emplace(fresh[k], assigned[k]);
  return out;
}

template <class Domain>
bool brute_force_extend(const PartialMap<Domain>& f, const std::vector<typename Domain::Point>& superset,
                        int t, const BruteForceOptions<Domain>& opts = {}) {
  return brute_force_extension(f, superset, t, opts).has_value();
}

/// (n, m)-Helly by raw enumeration: every multiset of n balls with centers
/// anywhere and radii 1..diameter+1, no merging of equal balls. The first
/// violation found is returned with its repeats.
HellyResult brute_force_helly(const Graph& g, int n, int m);

/// All connected simple graphs on k vertices up to isomorphism (k <= 7),
/// canonically labelled, sorted by edge count then canonical code.
std::vector<Graph> enumerate_connected_graphs(int k);

/// Star-tree test family at dimension d: for every radius vector in
/// {1..max(1, diameter)}^(2d) and every 1-Lipschitz assignment of the axis
/// leaves, the origin can be filled (checked with brute_force_extend).
/// With `bipartite`, leaves and origin must respect partite classes, both
/// orientations of the classes being tried.
bool star_family_kirszbraun(const Graph& h, int d, bool bipartite = false);

/// Is every 1-Lipschitz map from any subset of G into H extendable to G?
/// Checked as one-point extendability over all (A, f, b).
bool graph_kirszbraun(const Graph& g, const Graph& h);

struct HarnessRecord {
  std::string graph_id;
  bool helly = false;
  bool kirszbraun = false;
  /// Sampled greedy box fillings all succeeded (vacuously true for non-Helly graphs).
  bool greedy_ok = true;
  bool agree = false;
};

struct HarnessReport {
  std::vector<HarnessRecord> records;

  int total() const { return int(records.size()); }
  int agreeing() const;
  bool all_agree() const { return agreeing() == total(); }
};

struct HarnessOptions {
  /// Required for d = 2 with 6-vertex graphs.
  bool slow = false;
  int greedy_samples = 8;
  std::uint64_t seed = 0;
  int jobs = 1;
};

/// For every connected graph up to `max_vertices`: helly_check(H, 2d, 2)
/// against the star-family oracle, plus greedy box fillings for Helly graphs.
/// `agree` holds when the two statuses match and greedy never got stuck.
HarnessReport kirszbraun_equivalence_harness(int d, int max_vertices, const HarnessOptions& opts = {});

/// Tab-separated `graph_id helly kirszbraun agree` lines and `total N agree N`.
void write_report(std::ostream& out, const HarnessReport& report);

struct ProductReport {
  bool h1_pass = false;
  bool h2_pass = false;
  bool strong_pass = false;
  /// h1_pass && h2_pass implies strong_pass.
  bool strong_ok = false;

  bool bipartite_applicable = false;
  bool h1_bipartite_pass = false;
  bool h2_bipartite_pass = false;
  std::vector<bool> tensor_component_pass;
  /// Both factors pass the bipartite family implies every tensor component does.
  bool tensor_ok = true;

  bool holds() const { return strong_ok && tensor_ok; }
};

ProductReport product_preservation_check(const Graph& h1, const Graph& h2, int d);

struct SmallDiameterReport {
  int radius = 0;  // diameter of G
  std::vector<bool> ball_pass;
  /// The ball's own path metric differs from the ambient one somewhere.
  std::vector<bool> metric_differs;
  bool hypothesis = false;
  bool conclusion = false;

  bool holds() const { return !hypothesis || conclusion; }
};

SmallDiameterReport small_diameter_check(const Graph& g, const Graph& h);

}  // namespace kb
