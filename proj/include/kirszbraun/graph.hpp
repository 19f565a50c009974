#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "kirszbraun/error.hpp"

namespace kb {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

std::vector<Vertex> to_vector(const VertexSet& set);

/// Dense all-pairs hop distances of a connected graph.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(int order) : order_(order), dist_(std::size_t(order) * order, 0) {}

  int order() const noexcept { return order_; }
  int diameter() const noexcept { return diameter_; }

  int operator()(Vertex u, Vertex v) const { return dist_[std::size_t(u) * order_ + v]; }

  friend DistanceMatrix all_pairs_distances(int order, const std::vector<std::vector<Vertex>>& adj);

 private:
  int order_ = 0;
  int diameter_ = 0;
  std::vector<int> dist_;
};

/// Finite, simple, connected, undirected graph with 0-indexed vertices.
///
/// Instances are immutable and always valid: the only way to obtain one is
/// through `validate_graph` (or a constructor that calls it), so the
/// distance matrix is computed once at construction.
class Graph {
 public:
  int order() const noexcept { return order_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  const VertexSet& neighbor_set(Vertex v) const { return adj_bits_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return adj_bits_[u][v]; }

  const DistanceMatrix& distances() const noexcept { return dist_; }
  int distance(Vertex u, Vertex v) const { return dist_(u, v); }
  int diameter() const noexcept { return dist_.diameter(); }

  /// Edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Distinguished vertices b_1..b_n (star trees); empty for other graphs.
  const std::vector<Vertex>& leaf_marks() const noexcept { return leaves_; }
  /// Center b_0 of a star tree, or -1.
  Vertex center() const noexcept { return center_; }

  Graph with_marks(std::vector<Vertex> leaves, Vertex center = -1) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.adj_ == b.adj_ && a.leaves_ == b.leaves_;
  }

  friend Graph validate_graph(int order, std::span<const Edge> edges);

 private:
  Graph() = default;

  int order_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexSet> adj_bits_;
  DistanceMatrix dist_;
  std::vector<Vertex> leaves_;
  Vertex center_ = -1;
};

/// Builds a graph from an edge list. Throws Error{Empty, NotSimple, NotConnected}.
Graph validate_graph(int order, std::span<const Edge> edges);
/// Builds a graph from a square boolean adjacency matrix (asymmetry or a
/// nonzero diagonal is NotSimple).
Graph validate_graph(const std::vector<std::vector<bool>>& adjacency);

DistanceMatrix all_pairs_distances(int order, const std::vector<std::vector<Vertex>>& adj);
inline DistanceMatrix all_pairs_distances(const Graph& g) { return g.distances(); }

/// { w : dist(v, w) <= radius }.
VertexSet ball(const Graph& g, Vertex v, int radius);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// K_{2d} minus the perfect matching {2i, 2i+1}.
Graph hyperoctahedron(int d);
/// Center 0, then each ray laid out consecutively; leaf_marks are the ray ends.
Graph star_tree(std::span<const int> radii);
/// Rows x columns grid; vertex r * columns + c.
Graph grid_graph(int rows, int columns);

/// Product vertex (v1, v2) is numbered v1 * |H2| + v2.
Graph strong_product(const Graph& h1, const Graph& h2);

struct Component {
  Graph graph;
  /// Vertex of the component -> vertex of the (disconnected) product.
  std::vector<Vertex> product_vertex;
};
std::vector<Component> tensor_product(const Graph& h1, const Graph& h2);

/// Subgraph induced on `keep`, relabelled in ascending order. Throws
/// NotConnected when the induced subgraph is disconnected.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

class Bipartition {
 public:
  explicit Bipartition(std::vector<int> class_of) : class_of_(std::move(class_of)) {}
  /// 1 or 2.
  int class_of(Vertex v) const { return class_of_[v]; }
  int order() const { return int(class_of_.size()); }
  VertexSet members(int part) const;

 private:
  std::vector<int> class_of_;
};

/// Raised by `bipartition`; carries an odd closed walk as certificate
/// (first vertex repeated at the end).
class NotBipartiteError : public Error {
 public:
  explicit NotBipartiteError(std::vector<Vertex> odd_walk);
  const std::vector<Vertex>& odd_closed_walk() const noexcept { return walk_; }

 private:
  std::vector<Vertex> walk_;
};

/// Two-coloring with vertex 0 in class 1.
Bipartition bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

/// Canonical code by brute-force relabelling search (order <= 10).
std::vector<std::uint8_t> canonical_form(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// Text format: `graph <n>`, `e <u> <v>`, optional `leaf <v>`, `#` comments.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace kb
