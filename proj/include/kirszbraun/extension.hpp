#pragma once

#include <algorithm>
#include <functional>
#include <iosfwd>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "kirszbraun/geodesic.hpp"
#include "kirszbraun/graph.hpp"
#include "kirszbraun/helly.hpp"
#include "kirszbraun/lattice.hpp"

namespace kb {

/// Z^d with the l1 path metric.
struct LatticeDomain {
  using Point = LatticePoint;
  int dim = 1;

  int distance(const LatticePoint& p, const LatticePoint& q) const { return l1_distance(p, q); }
  bool contains(const LatticePoint& p) const { return p.dim() == dim; }
};

/// Vertices of a finite graph with its path metric.
struct GraphDomain {
  using Point = Vertex;
  std::shared_ptr<const Graph> graph;

  int distance(Vertex u, Vertex v) const { return graph->distance(u, v); }
  bool contains(Vertex v) const { return v >= 0 && v < graph->order(); }
};

inline std::string point_string(const LatticePoint& p) { return to_string(p); }
inline std::string point_string(Vertex v) { return "v" + std::to_string(v); }

/// Finite map from domain points to target vertices.
template <class Domain>
struct PartialMap {
  using Point = typename Domain::Point;

  Domain domain;
  std::shared_ptr<const Graph> target;
  std::map<Point, Vertex> entries;
  int lipschitz = 1;

  std::vector<Point> points() const {
    std::vector<Point> out;
    out.reserve(entries.size());
    for (const auto& [p, v] : entries) out.push_back(p);
    return out;
  }
  bool defined_at(const Point& p) const { return entries.count(p) != 0; }
  Vertex at(const Point& p) const { return entries.at(p); }

  bool operator==(const PartialMap& o) const {
    return entries == o.entries && lipschitz == o.lipschitz && target == o.target;
  }
};

using LatticeMap = PartialMap<LatticeDomain>;
using GraphMap = PartialMap<GraphDomain>;

/// Throws ParameterError when a key lies outside the domain or a value is
/// not a target vertex.
template <class Domain>
void check_map(const PartialMap<Domain>& f) {
  if (!f.target) throw Error(ErrorCode::ParameterError, "map has no target graph");
  if (f.lipschitz < 1) throw Error(ErrorCode::ParameterError, "Lipschitz constant must be >= 1");
  for (const auto& [p, v] : f.entries) {
    if (!f.domain.contains(p)) {
      throw Error(ErrorCode::ParameterError, point_string(p) + " is not a domain point");
    }
    if (v < 0 || v >= f.target->order()) {
      throw Error(ErrorCode::ParameterError, "image " + std::to_string(v) + " is not a target vertex");
    }
  }
}

template <class Point>
struct LipschitzViolation {
  Point p;
  Point q;
  int domain_distance = 0;
  int target_distance = 0;
};

/// First pair (in key order) with dist_H(f(p), f(q)) > t * dist(p, q).
template <class Domain>
std::optional<LipschitzViolation<typename Domain::Point>> find_lipschitz_violation(
    const PartialMap<Domain>& f, int t) {
  for (auto i = f.entries.begin(); i != f.entries.end(); ++i) {
    for (auto j = std::next(i); j != f.entries.end(); ++j) {
      const int dd = f.domain.distance(i->first, j->first);
      const int dt = f.target->distance(i->second, j->second);
      if (dt > t * dd) return LipschitzViolation<typename Domain::Point>{i->first, j->first, dd, dt};
    }
  }
  return std::nullopt;
}

template <class Domain>
bool is_lipschitz(const PartialMap<Domain>& f, int t) {
  return !find_lipschitz_violation(f, t).has_value();
}

/// Ext(A, b) for vertices of a graph. Throws PointInSet.
std::vector<Vertex> ext_set(const DistanceMatrix& dist, std::span<const Vertex> a, Vertex b);

/// A ball requirement on the image of the point being placed.
struct Constraint {
  Vertex center = 0;
  int radius = 0;

  bool operator==(const Constraint&) const = default;
};

struct ClassRestriction {
  const Bipartition* parts = nullptr;
  int part = 1;
};

/// Smallest vertex lying in every constraint ball (and in the given partite
/// class, if any); nullopt when the intersection is empty.
std::optional<Vertex> extend_one_point(const Graph& h, std::span<const Constraint> constraints,
                                       std::optional<ClassRestriction> restrict = std::nullopt);

/// Greedy got stuck: nothing lies in the intersection of `constraints`.
/// On a non-Helly target this does not prove the map is non-extendable.
template <class Point>
struct ExtensionFailure {
  Point blocking_point;
  std::vector<Constraint> constraints;
};

template <class Domain>
struct ExtensionOutcome {
  using Point = typename Domain::Point;
  std::variant<PartialMap<Domain>, ExtensionFailure<Point>> value;

  bool ok() const { return value.index() == 0; }
  const PartialMap<Domain>& map() const { return std::get<0>(value); }
  const ExtensionFailure<Point>& failure() const { return std::get<1>(value); }
};

template <class Domain>
struct GreedyOptions {
  using Point = typename Domain::Point;
  /// Processing order for the new points; default is nearest-to-current-domain
  /// first, ties broken by point order.
  std::optional<std::vector<Point>> order;
  /// With `parts` set, point p must land in class `required_class(p)`.
  const Bipartition* parts = nullptr;
  std::function<int(const Point&)> required_class;
};

namespace detail {

template <class Domain>
std::vector<Constraint> culled_constraints(const PartialMap<Domain>& f,
                                           const typename Domain::Point& b) {
  using Point = typename Domain::Point;
  auto keys = f.points();
  auto dist = [&](const Point& p, const Point& q) { return f.domain.distance(p, q); };
  std::vector<Constraint> out;
  for (const Point& a : geodesic_extension<Point>(keys, b, dist)) {
    out.push_back({f.entries.at(a), f.lipschitz * dist(a, b)});
  }
  return out;
}

}  // namespace detail

/// Extends f to every point of `superset`, one point at a time. Each new
/// point receives the smallest vertex in the intersection of the balls
/// B(f(a), t * dist(a, b)) over a in Ext(current domain, b).
///
/// Throws NotLipschitzInput when f is not t-Lipschitz and ParameterError
/// when `superset` misses a point of the domain.
template <class Domain>
ExtensionOutcome<Domain> greedy_extend(const PartialMap<Domain>& f,
                                       const std::vector<typename Domain::Point>& superset,
                                       const GreedyOptions<Domain>& opts = {}) {
  using Point = typename Domain::Point;
  check_map(f);
  if (auto bad = find_lipschitz_violation(f, f.lipschitz)) {
    throw Error(ErrorCode::NotLipschitzInput,
                point_string(bad->p) + " and " + point_string(bad->q) + " are " +
                    std::to_string(bad->domain_distance) + " apart but their images are " +
                    std::to_string(bad->target_distance) + " apart");
  }
  std::vector<Point> fresh;
  {
    std::vector<Point> all = superset;
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (const auto& [p, v] : f.entries) {
      if (!std::binary_search(all.begin(), all.end(), p)) {
        throw Error(ErrorCode::ParameterError, point_string(p) + " is in the domain but not the superset");
      }
    }
    for (auto& p : all) {
      if (!f.domain.contains(p)) throw Error(ErrorCode::ParameterError, point_string(p) + " is not a domain point");
      if (!f.defined_at(p)) fresh.push_back(std::move(p));
    }
  }
  if (opts.order) {
    auto given = *opts.order;
    std::sort(given.begin(), given.end());
    if (given != fresh) {
      throw Error(ErrorCode::ParameterError, "order must list exactly the points to be filled");
    }
  }

  PartialMap<Domain> g = f;
  auto place = [&](const Point& b) -> std::optional<ExtensionFailure<Point>> {
    auto cons = detail::culled_constraints(g, b);
    std::optional<ClassRestriction> restrict;
    if (opts.parts) restrict = ClassRestriction{opts.parts, opts.required_class(b)};
    if (cons.empty()) {
      // Empty domain: any vertex of the right class will do.
      cons.push_back({0, g.target->diameter()});
    }
    auto v = extend_one_point(*g.target, cons, restrict);
    if (!v) return ExtensionFailure<Point>{b, std::move(cons)};
    g.entries.emplace(b, *v);
    return std::nullopt;
  };

  if (opts.order) {
    for (const Point& b : *opts.order) {
      if (auto fail = place(b)) return {std::move(*fail)};
    }
  } else {
    // Nearest-to-domain first; `fresh` is sorted so the first minimum is the
    // lexicographically smallest.
    constexpr int kFar = std::numeric_limits<int>::max();
    std::vector<int> gap(fresh.size(), kFar);
    for (std::size_t i = 0; i < fresh.size(); ++i) {
      for (const auto& [a, v] : g.entries) gap[i] = std::min(gap[i], g.domain.distance(fresh[i], a));
    }
    std::vector<bool> done(fresh.size(), false);
    for (std::size_t step = 0; step < fresh.size(); ++step) {
      std::size_t pick = fresh.size();
      for (std::size_t i = 0; i < fresh.size(); ++i) {
        if (!done[i] && (pick == fresh.size() || gap[i] < gap[pick])) pick = i;
      }
      done[pick] = true;
      if (auto fail = place(fresh[pick])) return {std::move(*fail)};
      for (std::size_t i = 0; i < fresh.size(); ++i) {
        if (!done[i]) gap[i] = std::min(gap[i], g.domain.distance(fresh[i], fresh[pick]));
      }
    }
  }

  if (!is_lipschitz(g, g.lipschitz)) {
    throw std::logic_error("greedy extension produced a non-Lipschitz map");
  }
  return {std::move(g)};
}

/// Turns a (k <= 2d)-ball plain violation into a 1-Lipschitz map on the axis
/// star { leaf_i } that cannot be extended to the origin: leaf i sits at
/// distance r_i on its ray and maps to the center of ball i.
/// Throws NotAViolation, TooManyRays.
LatticeMap violation_to_witness_map(std::shared_ptr<const Graph> target, const HellyViolation& v, int d);

/// Map files:
///   map d=<d> t=<t> target=<graphfile>       then `(<coords>) -> <vertex>` lines
///   map domain=<graphfile> t=<t> target=<graphfile>   then `v<idx> -> <vertex>` lines
/// Graph paths are resolved relative to the map file's directory.
using AnyMap = std::variant<LatticeMap, GraphMap>;

struct MapFile {
  AnyMap map;
  std::string target_path;
  std::string domain_path;  // graph domains only
};

MapFile read_map(std::istream& in, const std::string& base_dir = ".");
MapFile read_map_file(const std::string& path);
void write_map(std::ostream& out, const LatticeMap& f, const std::string& target_path);
void write_map(std::ostream& out, const GraphMap& f, const std::string& target_path,
               const std::string& domain_path);

/// One point per line, `(<coords>)` or `v<idx>`; `#` comments.
std::vector<LatticePoint> read_lattice_points(std::istream& in);
std::vector<Vertex> read_vertex_points(std::istream& in);

}  // namespace kb
