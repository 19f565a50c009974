#include "kirszbraun/extension.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace kb {

std::vector<Vertex> ext_set(const DistanceMatrix& dist, std::span<const Vertex> a, Vertex b) {
  if (std::find(a.begin(), a.end(), b) != a.end()) {
    throw Error(ErrorCode::PointInSet, "vertex " + std::to_string(b) + " already belongs to the set");
  }
  return geodesic_extension<Vertex>(a, b, [&](Vertex u, Vertex v) { return dist(u, v); });
}

std::optional<Vertex> extend_one_point(const Graph& h, std::span<const Constraint> constraints,
                                       std::optional<ClassRestriction> restrict) {
  const auto& d = h.distances();
  for (Vertex v = 0; v < h.order(); ++v) {
    if (restrict && restrict->parts->class_of(v) != restrict->part) continue;
    bool inside = true;
    for (const auto& c : constraints) {
      if (d(c.center, v) > c.radius) {
        inside = false;
        break;
      }
    }
    if (inside) return v;
  }
  return std::nullopt;
}

LatticeMap violation_to_witness_map(std::shared_ptr<const Graph> target, const HellyViolation& v, int d) {
  if (v.mode != HellyMode::Plain || v.m != 2 || !validate_violation(*target, v)) {
    throw Error(ErrorCode::NotAViolation, "certificate does not re-validate as a plain (k,2) violation");
  }
  std::vector<int> radii;
  for (const Ball& b : v.balls) radii.push_back(b.radius);
  auto star = axis_embed_star(radii, d);
  LatticeMap f{LatticeDomain{d}, std::move(target), {}, 1};
  for (std::size_t i = 0; i < star.leaves.size(); ++i) f.entries.emplace(star.leaves[i], v.balls[i].center);
  return f;
}

namespace {

struct Header {
  std::map<std::string, std::string> fields;
};

Header parse_header(const std::string& line, const std::string& tag) {
  std::istringstream ls(line);
  std::string word;
  ls >> word;
  if (word != tag) throw Error(ErrorCode::Parse, "expected '" + tag + "' header, got '" + line + "'");
  Header h;
  while (ls >> word) {
    auto eq = word.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::Parse, "bad header field '" + word + "'");
    h.fields[word.substr(0, eq)] = word.substr(eq + 1);
  }
  return h;
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) throw Error(ErrorCode::Parse, "bad " + what + " '" + s + "'");
  return value;
}

std::string resolve(const std::string& base_dir, const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_absolute()) return path;
  return (std::filesystem::path(base_dir) / p).lexically_normal().string();
}

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    line = line.substr(first);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t')) line.pop_back();
    return true;
  }
  return false;
}

/// "<key> -> <vertex>"
std::pair<std::string, Vertex> split_entry(const std::string& line) {
  std::istringstream ls(line);
  std::string key, arrow, value, rest;
  if (!(ls >> key >> arrow >> value) || arrow != "->" || (ls >> rest)) {
    throw Error(ErrorCode::Parse, "bad map entry '" + line + "'");
  }
  return {key, parse_int(value, "vertex")};
}

Vertex parse_vertex_token(const std::string& token) {
  if (token.size() < 2 || token[0] != 'v') throw Error(ErrorCode::Parse, "bad vertex point '" + token + "'");
  return parse_int(token.substr(1), "vertex index");
}

}  // namespace

MapFile read_map(std::istream& in, const std::string& base_dir) {
  std::string line;
  if (!next_content_line(in, line)) throw Error(ErrorCode::Parse, "empty map file");
  auto header = parse_header(line, "map");
  auto field = [&](const std::string& key) -> const std::string& {
    auto it = header.fields.find(key);
    if (it == header.fields.end()) throw Error(ErrorCode::Parse, "map header lacks " + key + "=");
    return it->second;
  };
  MapFile out;
  out.target_path = field("target");
  auto target = std::make_shared<const Graph>(read_graph_file(resolve(base_dir, out.target_path)));
  int t = header.fields.count("t") ? parse_int(field("t"), "t") : 1;

  if (header.fields.count("domain")) {
    out.domain_path = field("domain");
    auto domain = std::make_shared<const Graph>(read_graph_file(resolve(base_dir, out.domain_path)));
    GraphMap f{GraphDomain{domain}, target, {}, t};
    while (next_content_line(in, line)) {
      auto [key, v] = split_entry(line);
      if (!f.entries.emplace(parse_vertex_token(key), v).second) {
        throw Error(ErrorCode::Parse, "repeated key " + key);
      }
    }
    check_map(f);
    out.map = std::move(f);
  } else {
    int d = parse_int(field("d"), "dimension");
    LatticeMap f{LatticeDomain{d}, target, {}, t};
    while (next_content_line(in, line)) {
      auto [key, v] = split_entry(line);
      if (!f.entries.emplace(parse_point(key), v).second) throw Error(ErrorCode::Parse, "repeated key " + key);
    }
    check_map(f);
    out.map = std::move(f);
  }
  return out;
}

MapFile read_map_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  auto dir = std::filesystem::path(path).parent_path().string();
  return read_map(in, dir.empty() ? "." : dir);
}

void write_map(std::ostream& out, const LatticeMap& f, const std::string& target_path) {
  out << "map d=" << f.domain.dim << " t=" << f.lipschitz << " target=" << target_path << '\n';
  for (const auto& [p, v] : f.entries) out << to_string(p) << " -> " << v << '\n';
}

void write_map(std::ostream& out, const GraphMap& f, const std::string& target_path,
               const std::string& domain_path) {
  out << "map domain=" << domain_path << " t=" << f.lipschitz << " target=" << target_path << '\n';
  for (const auto& [p, v] : f.entries) out << 'v' << p << " -> " << v << '\n';
}

std::vector<LatticePoint> read_lattice_points(std::istream& in) {
  std::vector<LatticePoint> out;
  std::string line;
  while (next_content_line(in, line)) out.push_back(parse_point(line));
  return out;
}

std::vector<Vertex> read_vertex_points(std::istream& in) {
  std::vector<Vertex> out;
  std::string line;
  while (next_content_line(in, line)) out.push_back(parse_vertex_token(line));
  return out;
}

}  // namespace kb
