#include "kirszbraun/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <queue>
#include <sstream>

namespace kb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::TooManyRays: return "TooManyRays";
    case ErrorCode::PointInSet: return "PointInSet";
    case ErrorCode::ParameterError: return "ParameterError";
    case ErrorCode::NotLipschitzInput: return "NotLipschitzInput";
    case ErrorCode::NotAViolation: return "NotAViolation";
    case ErrorCode::IncompleteAssignment: return "IncompleteAssignment";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

std::vector<Vertex> to_vector(const VertexSet& set) {
  std::vector<Vertex> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != VertexSet::npos; i = set.find_next(i)) {
    out.push_back(Vertex(i));
  }
  return out;
}

namespace {

constexpr int kUnreached = -1;

std::vector<int> bfs_layers(Vertex source, const std::vector<std::vector<Vertex>>& adj) {
  std::vector<int> dist(adj.size(), kUnreached);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : adj[u]) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

}  // namespace

DistanceMatrix all_pairs_distances(int order, const std::vector<std::vector<Vertex>>& adj) {
  DistanceMatrix m(order);
  for (Vertex s = 0; s < order; ++s) {
    auto row = bfs_layers(s, adj);
    for (Vertex v = 0; v < order; ++v) {
      m.dist_[std::size_t(s) * order + v] = row[v];
      m.diameter_ = std::max(m.diameter_, row[v]);
    }
  }
  return m;
}

Graph validate_graph(int order, std::span<const Edge> edges) {
  if (order < 1) throw Error(ErrorCode::Empty, "graph has no vertices");
  Graph g;
  g.order_ = order;
  g.adj_.assign(order, {});
  g.adj_bits_.assign(order, VertexSet(order));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order) {
      throw Error(ErrorCode::NotSimple,
                  "edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
    }
    if (u == v) throw Error(ErrorCode::NotSimple, "self-loop at vertex " + std::to_string(u));
    if (g.adj_bits_[u][v]) {
      throw Error(ErrorCode::NotSimple,
                  "repeated edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    g.adj_bits_[u].set(v);
    g.adj_bits_[v].set(u);
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
    ++g.edge_count_;
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());

  auto reach = bfs_layers(0, g.adj_);
  if (std::find(reach.begin(), reach.end(), kUnreached) != reach.end()) {
    throw Error(ErrorCode::NotConnected, "not every vertex is reachable from vertex 0");
  }
  g.dist_ = all_pairs_distances(order, g.adj_);
  return g;
}

Graph validate_graph(const std::vector<std::vector<bool>>& adjacency) {
  const int n = int(adjacency.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    if (int(adjacency[u].size()) != n) throw Error(ErrorCode::NotSimple, "adjacency is not square");
    if (adjacency[u][u]) throw Error(ErrorCode::NotSimple, "self-loop at vertex " + std::to_string(u));
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (adjacency[u][v] != adjacency[v][u]) {
        throw Error(ErrorCode::NotSimple,
                    "asymmetric entry " + std::to_string(u) + "," + std::to_string(v));
      }
      if (adjacency[u][v]) edges.emplace_back(u, v);
    }
  }
  return validate_graph(n, edges);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_marks(std::vector<Vertex> leaves, Vertex center) const {
  for (Vertex v : leaves) {
    if (v < 0 || v >= order_) throw Error(ErrorCode::ParameterError, "leaf mark out of range");
  }
  Graph copy = *this;
  copy.leaves_ = std::move(leaves);
  copy.center_ = center;
  return copy;
}

VertexSet ball(const Graph& g, Vertex v, int radius) {
  VertexSet out(g.order());
  const auto& d = g.distances();
  for (Vertex w = 0; w < g.order(); ++w) {
    if (d(v, w) <= radius) out.set(w);
  }
  return out;
}

Graph path_graph(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidSize, "path needs n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return validate_graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::InvalidSize, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return validate_graph(n, edges);
}

Graph complete_graph(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidSize, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return validate_graph(n, edges);
}

Graph hyperoctahedron(int d) {
  if (d < 2) throw Error(ErrorCode::InvalidSize, "hyperoctahedron needs d >= 2");
  const int n = 2 * d;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (u / 2 != v / 2) edges.emplace_back(u, v);
    }
  }
  return validate_graph(n, edges);
}

Graph star_tree(std::span<const int> radii) {
  if (radii.empty()) throw Error(ErrorCode::InvalidSize, "star tree needs at least one ray");
  std::vector<Edge> edges;
  std::vector<Vertex> leaves;
  int next = 1;
  for (int r : radii) {
    if (r < 1) throw Error(ErrorCode::InvalidSize, "ray lengths must be >= 1");
    Vertex prev = 0;
    for (int step = 0; step < r; ++step) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    leaves.push_back(prev);
  }
  return validate_graph(next, edges).with_marks(std::move(leaves), 0);
}

Graph grid_graph(int rows, int columns) {
  if (rows < 1 || columns < 1) throw Error(ErrorCode::InvalidSize, "grid needs positive sides");
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < columns; ++c) {
      Vertex v = r * columns + c;
      if (c + 1 < columns) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + columns);
    }
  }
  return validate_graph(rows * columns, edges);
}

Graph strong_product(const Graph& h1, const Graph& h2) {
  const int n2 = h2.order();
  std::vector<Edge> edges;
  for (Vertex a = 0; a < h1.order(); ++a) {
    for (Vertex b = 0; b < n2; ++b) {
      for (Vertex c = a; c < h1.order(); ++c) {
        for (Vertex e = 0; e < n2; ++e) {
          Vertex x = a * n2 + b;
          Vertex y = c * n2 + e;
          if (y <= x) continue;
          bool first_eq_or_adj = a == c || h1.adjacent(a, c);
          bool second_eq_or_adj = b == e || h2.adjacent(b, e);
          if (first_eq_or_adj && second_eq_or_adj) edges.emplace_back(x, y);
        }
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return validate_graph(h1.order() * n2, edges);
}

std::vector<Component> tensor_product(const Graph& h1, const Graph& h2) {
  const int n2 = h2.order();
  const int n = h1.order() * n2;
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [a, c] : h1.edges()) {
    for (auto [b, e] : h2.edges()) {
      // (a,b)~(c,e) and (a,e)~(c,b)
      adj[a * n2 + b].push_back(c * n2 + e);
      adj[c * n2 + e].push_back(a * n2 + b);
      adj[a * n2 + e].push_back(c * n2 + b);
      adj[c * n2 + b].push_back(a * n2 + e);
    }
  }
  std::vector<int> comp(n, -1);
  std::vector<Component> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = int(out.size());
    std::vector<Vertex> members;
    std::queue<Vertex> q;
    q.push(s);
    comp[s] = id;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      members.push_back(u);
      for (Vertex w : adj[u]) {
        if (comp[w] < 0) {
          comp[w] = id;
          q.push(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    std::vector<int> local(n, -1);
    for (int i = 0; i < int(members.size()); ++i) local[members[i]] = i;
    std::vector<Edge> edges;
    for (Vertex u : members) {
      for (Vertex w : adj[u]) {
        if (u < w) edges.emplace_back(local[u], local[w]);
      }
    }
    std::sort(edges.begin(), edges.end());
    out.push_back({validate_graph(int(members.size()), edges), std::move(members)});
  }
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  auto members = to_vector(keep);
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < int(members.size()); ++i) local[members[i]] = i;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (local[u] >= 0 && local[v] >= 0) edges.emplace_back(local[u], local[v]);
  }
  return validate_graph(int(members.size()), edges);
}

VertexSet Bipartition::members(int part) const {
  VertexSet out(class_of_.size());
  for (std::size_t v = 0; v < class_of_.size(); ++v) {
    if (class_of_[v] == part) out.set(v);
  }
  return out;
}

NotBipartiteError::NotBipartiteError(std::vector<Vertex> odd_walk)
    : Error(ErrorCode::NotBipartite, "odd closed walk of length " + std::to_string(odd_walk.size() - 1)),
      walk_(std::move(odd_walk)) {}

Bipartition bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> cls(n, 0);
  std::vector<Vertex> parent(n, -1);
  std::queue<Vertex> q;
  cls[0] = 1;
  q.push(0);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      if (cls[w] == 0) {
        cls[w] = 3 - cls[u];
        parent[w] = u;
        q.push(w);
      } else if (cls[w] == cls[u]) {
        // Tree paths from u and w to the root plus the edge uw close an odd walk.
        std::vector<Vertex> up;
        for (Vertex x = u; x != -1; x = parent[x]) up.push_back(x);
        std::vector<Vertex> down;
        for (Vertex x = w; x != -1; x = parent[x]) down.push_back(x);
        std::vector<Vertex> walk = up;
        std::reverse(down.begin(), down.end());
        walk.insert(walk.end(), down.begin() + 1, down.end());
        walk.push_back(u);
        throw NotBipartiteError(std::move(walk));
      }
    }
  }
  return Bipartition(std::move(cls));
}

bool is_bipartite(const Graph& g) {
  try {
    bipartition(g);
    return true;
  } catch (const NotBipartiteError&) {
    return false;
  }
}

std::vector<std::uint8_t> canonical_form(const Graph& g) {
  const int n = g.order();
  if (n > 10) throw Error(ErrorCode::TooLarge, "canonical form is brute force; order must be <= 10");

  // Only labellings that list vertices by ascending (degree, neighbour degrees)
  // are searched; the invariant makes this set closed under isomorphism.
  std::vector<std::vector<int>> signature(n);
  for (Vertex v = 0; v < n; ++v) {
    signature[v].push_back(int(g.neighbors(v).size()));
    std::vector<int> nd;
    for (Vertex w : g.neighbors(v)) nd.push_back(int(g.neighbors(w).size()));
    std::sort(nd.begin(), nd.end());
    signature[v].insert(signature[v].end(), nd.begin(), nd.end());
  }
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return signature[a] < signature[b]; });
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && signature[order[j]] == signature[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }

  auto encode = [&](const std::vector<Vertex>& lab) {
    std::vector<std::uint8_t> code;
    code.reserve(std::size_t(n) * (n - 1) / 2 + 1);
    code.push_back(std::uint8_t(n));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) code.push_back(g.adjacent(lab[i], lab[j]) ? 1 : 0);
    }
    return code;
  };

  std::vector<std::uint8_t> best = encode(order);
  for (auto& [b, e] : cells) std::sort(order.begin() + b, order.begin() + e);
  // Odometer over the per-cell permutations.
  while (true) {
    auto code = encode(order);
    if (code > best) best = std::move(code);
    std::size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto [b, e] = cells[c];
      if (std::next_permutation(order.begin() + b, order.begin() + e)) break;
    }
    if (c == cells.size()) break;
  }
  return best;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

Graph read_graph(std::istream& in) {
  std::string line;
  int order = -1;
  std::vector<Edge> edges;
  std::vector<Vertex> leaves;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    auto fail = [&] {
      throw Error(ErrorCode::Parse, "graph line " + std::to_string(lineno) + ": '" + line + "'");
    };
    if (tag == "graph") {
      if (order >= 0 || !(ls >> order)) fail();
    } else if (tag == "e") {
      Edge e;
      if (order < 0 || !(ls >> e.first >> e.second)) fail();
      edges.push_back(e);
    } else if (tag == "leaf") {
      Vertex v;
      if (order < 0 || !(ls >> v)) fail();
      leaves.push_back(v);
    } else {
      fail();
    }
    std::string rest;
    if (ls >> rest && rest[0] != '#') fail();
  }
  if (order < 0) throw Error(ErrorCode::Parse, "missing 'graph <n>' header");
  Graph g = validate_graph(order, edges);
  return leaves.empty() ? g : g.with_marks(std::move(leaves));
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "graph " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
  for (Vertex v : g.leaf_marks()) out << "leaf " << v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Parse, "cannot write " + path);
  write_graph(out, g);
}

}  // namespace kb
