#include "kirszbraun/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "kirszbraun/geodesic.hpp"

namespace kb {

LatticeSet make_lattice_set(std::vector<LatticePoint> points) {
  if (!points.empty()) {
    const int dim = points.front().dim();
    for (const auto& p : points) {
      if (p.dim() != dim) throw Error(ErrorCode::DimensionMismatch, "mixed dimensions in lattice set");
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

int l1_distance(const LatticePoint& p, const LatticePoint& q) {
  if (p.dim() != q.dim()) {
    throw Error(ErrorCode::DimensionMismatch, to_string(p) + " vs " + to_string(q));
  }
  int sum = 0;
  for (int k = 0; k < p.dim(); ++k) sum += std::abs(p[k] - q[k]);
  return sum;
}

int parity(const LatticePoint& p) {
  long sum = 0;
  for (int c : p.coords) sum += c;
  return (sum % 2 == 0) ? 1 : 2;
}

int Box::point_count() const {
  int count = 1;
  for (int k = 0; k < dim; ++k) count *= side();
  return count;
}

bool Box::contains(const LatticePoint& p) const {
  if (p.dim() != dim) return false;
  return std::all_of(p.coords.begin(), p.coords.end(), [&](int c) { return c >= 0 && c <= n; });
}

bool Box::on_boundary(const LatticePoint& p) const {
  return contains(p) &&
         std::any_of(p.coords.begin(), p.coords.end(), [&](int c) { return c == 0 || c == n; });
}

Box make_box(int dim, int n) {
  if (dim < 1) throw Error(ErrorCode::ParameterError, "box dimension must be >= 1");
  if (n < 1) throw Error(ErrorCode::ParameterError, "box side parameter must be >= 1");
  return Box{dim, n};
}

LatticePoint box_point(const Box& box, int index) {
  std::vector<int> c(box.dim);
  for (int k = box.dim - 1; k >= 0; --k) {
    c[k] = index % box.side();
    index /= box.side();
  }
  return LatticePoint(std::move(c));
}

int box_index(const Box& box, const LatticePoint& p) {
  if (!box.contains(p)) throw Error(ErrorCode::ParameterError, to_string(p) + " is outside the box");
  int index = 0;
  for (int k = 0; k < box.dim; ++k) index = index * box.side() + p[k];
  return index;
}

LatticeSet box_vertices(const Box& box) {
  LatticeSet out;
  out.reserve(box.point_count());
  for (int i = 0; i < box.point_count(); ++i) out.push_back(box_point(box, i));
  return out;
}

LatticeSet box_boundary(const Box& box) {
  LatticeSet out;
  for (auto& p : box_vertices(box)) {
    if (box.on_boundary(p)) out.push_back(std::move(p));
  }
  return out;
}

LatticeSet box_interior(const Box& box) {
  LatticeSet out;
  for (auto& p : box_vertices(box)) {
    if (!box.on_boundary(p)) out.push_back(std::move(p));
  }
  return out;
}

Graph box_graph(const Box& box) {
  std::vector<Edge> edges;
  const int count = box.point_count();
  for (int i = 0; i < count; ++i) {
    auto p = box_point(box, i);
    int stride = 1;
    for (int k = box.dim - 1; k >= 0; --k) {
      if (p[k] < box.n) edges.emplace_back(i, i + stride);
      stride *= box.side();
    }
  }
  std::sort(edges.begin(), edges.end());
  return validate_graph(count, edges);
}

StarEmbedding axis_embed_star(std::span<const int> radii, int dim) {
  if (dim < 1) throw Error(ErrorCode::ParameterError, "dimension must be >= 1");
  if (int(radii.size()) > 2 * dim) {
    throw Error(ErrorCode::TooManyRays,
                std::to_string(radii.size()) + " rays do not fit on the axes of Z^" + std::to_string(dim));
  }
  StarEmbedding out{LatticePoint::origin(dim), {}};
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i] < 1) throw Error(ErrorCode::ParameterError, "ray lengths must be >= 1");
    auto p = LatticePoint::origin(dim);
    p.coords[i / 2] = (i % 2 == 0) ? radii[i] : -radii[i];
    out.leaves.push_back(std::move(p));
  }
  return out;
}

LatticeSet ext_set_lattice(const LatticeSet& a, const LatticePoint& b) {
  if (std::find(a.begin(), a.end(), b) != a.end()) {
    throw Error(ErrorCode::PointInSet, to_string(b) + " already belongs to the set");
  }
  return geodesic_extension<LatticePoint>(a, b, l1_distance);
}

std::string to_string(const LatticePoint& p) {
  std::string s = "(";
  for (int k = 0; k < p.dim(); ++k) {
    if (k) s += ',';
    s += std::to_string(p[k]);
  }
  return s + ")";
}

LatticePoint parse_point(std::string_view text) {
  auto fail = [&] { throw Error(ErrorCode::Parse, "bad lattice point '" + std::string(text) + "'"); };
  if (text.size() < 3 || text.front() != '(' || text.back() != ')') fail();
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<int> coords;
  while (true) {
    auto comma = body.find(',');
    auto token = body.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) fail();
    coords.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return LatticePoint(std::move(coords));
}

}  // namespace kb
