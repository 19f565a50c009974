#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kirszbraun/graph.hpp"

namespace kb {

/// Point of Z^d. Ordered lexicographically.
struct LatticePoint {
  std::vector<int> coords;

  LatticePoint() = default;
  explicit LatticePoint(std::vector<int> c) : coords(std::move(c)) {}
  LatticePoint(std::initializer_list<int> c) : coords(c) {}

  static LatticePoint origin(int dim) { return LatticePoint(std::vector<int>(dim, 0)); }

  int dim() const noexcept { return int(coords.size()); }
  int operator[](int k) const { return coords[k]; }

  auto operator<=>(const LatticePoint&) const = default;
};

/// Sorted, duplicate-free, single-dimension set of lattice points.
using LatticeSet = std::vector<LatticePoint>;

LatticeSet make_lattice_set(std::vector<LatticePoint> points);

/// Path metric of Z^d (the l1 norm). Throws DimensionMismatch.
int l1_distance(const LatticePoint& p, const LatticePoint& q);

/// 1 when the coordinate sum is even, else 2.
int parity(const LatticePoint& p);

/// The box {0, ..., n}^dim.
struct Box {
  int dim = 1;
  int n = 1;

  int side() const noexcept { return n + 1; }
  int point_count() const;
  bool contains(const LatticePoint& p) const;
  bool on_boundary(const LatticePoint& p) const;
};

Box make_box(int dim, int n);

/// All box points in raster (lexicographic) order.
LatticeSet box_vertices(const Box& box);
/// Points with some coordinate equal to 0 or n.
LatticeSet box_boundary(const Box& box);
LatticeSet box_interior(const Box& box);

/// Raster index of a box point; inverse of `box_point`.
int box_index(const Box& box, const LatticePoint& p);
LatticePoint box_point(const Box& box, int index);
/// The box as a graph, vertices numbered by `box_index`.
Graph box_graph(const Box& box);

struct StarEmbedding {
  LatticePoint center;
  /// Leaf i sits on ray i, in the order +e1, -e1, +e2, -e2, ...
  std::vector<LatticePoint> leaves;
};

/// Isometric image of the star tree with the given ray lengths in Z^dim.
/// Throws TooManyRays when there are more than 2 * dim rays.
StarEmbedding axis_embed_star(std::span<const int> radii, int dim);

/// Members of `a` with no other member on an l1 geodesic towards `b`.
/// Throws PointInSet when b is in a.
LatticeSet ext_set_lattice(const LatticeSet& a, const LatticePoint& b);

/// `(c1,c2,...)` with no interior spaces.
std::string to_string(const LatticePoint& p);
LatticePoint parse_point(std::string_view text);

}  // namespace kb
