#include "kirszbraun/holefill.hpp"

#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace kb {

void validate_boundary(const BoundaryCondition& bc) {
  if (!bc.target) throw Error(ErrorCode::ParameterError, "boundary condition has no target");
  const Bipartition parts = bipartition(*bc.target);
  const Box& box = bc.box;

  for (const auto& [p, v] : bc.assignment) {
    if (!box.on_boundary(p)) throw Error(ErrorCode::ParameterError, to_string(p) + " is not a boundary point");
    if (v < 0 || v >= bc.target->order()) {
      throw Error(ErrorCode::ParameterError, "image " + std::to_string(v) + " is not a target vertex");
    }
  }
  const auto boundary = box_boundary(box);
  for (const auto& p : boundary) {
    if (!bc.assignment.count(p)) throw Error(ErrorCode::IncompleteAssignment, to_string(p) + " has no image");
  }

  for (const auto& p : boundary) {
    for (int k = 0; k < box.dim; ++k) {
      if (p[k] == box.n) continue;
      LatticePoint q = p;
      ++q.coords[k];
      if (!box.on_boundary(q)) continue;
      Vertex fp = bc.assignment.at(p), fq = bc.assignment.at(q);
      if (!bc.target->adjacent(fp, fq)) {
        throw Error(ErrorCode::NotHomomorphism, "edge " + to_string(p) + "-" + to_string(q) + " maps to " +
                                                    std::to_string(fp) + "," + std::to_string(fq));
      }
    }
  }

  // The boundary of a 1-dimensional box is disconnected, so parity can fail
  // even for a homomorphism.
  const int even_class = parts.class_of(bc.assignment.at(LatticePoint::origin(box.dim)));
  for (const auto& [p, v] : bc.assignment) {
    const int want = parity(p) == 1 ? even_class : 3 - even_class;
    if (parts.class_of(v) != want) {
      throw Error(ErrorCode::ParityMismatch, to_string(p) + " maps into the wrong partite class");
    }
  }
}

int even_point_class(const BoundaryCondition& bc, const Bipartition& parts) {
  return parts.class_of(bc.assignment.at(LatticePoint::origin(bc.box.dim)));
}

HoleFillDecision hole_fill_decide(const BoundaryCondition& bc, const HoleFillOptions& opts) {
  validate_boundary(bc);
  HoleFillDecision out;
  if (bc.target->order() <= opts.helly_check_threshold) {
    out.precondition = bipartite_helly_check(*bc.target, 2 * bc.box.dim, 2)
                           ? HellyPrecondition::Failed
                           : HellyPrecondition::Verified;
  }
  const auto& d = bc.target->distances();
  for (auto i = bc.assignment.begin(); i != bc.assignment.end(); ++i) {
    for (auto j = std::next(i); j != bc.assignment.end(); ++j) {
      const int lattice = l1_distance(i->first, j->first);
      const int target = d(i->second, j->second);
      if (target > lattice) {
        out.violation = BoundaryPairViolation{i->first, j->first, target, lattice};
        return out;
      }
    }
  }
  out.extendable = true;
  return out;
}

bool is_box_homomorphism(const BoundaryCondition& bc, const LatticeMap& f) {
  const Box& box = bc.box;
  if (int(f.entries.size()) != box.point_count()) return false;
  for (const auto& [p, v] : bc.assignment) {
    auto it = f.entries.find(p);
    if (it == f.entries.end() || it->second != v) return false;
  }
  for (const auto& [p, v] : f.entries) {
    if (!box.contains(p)) return false;
    for (int k = 0; k < box.dim; ++k) {
      if (p[k] == box.n) continue;
      LatticePoint q = p;
      ++q.coords[k];
      auto it = f.entries.find(q);
      if (it == f.entries.end() || !bc.target->adjacent(v, it->second)) return false;
    }
  }
  return true;
}

HoleFillResult hole_fill_construct(const BoundaryCondition& bc) {
  validate_boundary(bc);
  const Bipartition parts = bipartition(*bc.target);
  const int even_class = even_point_class(bc, parts);
  LatticeMap f{LatticeDomain{bc.box.dim}, bc.target, bc.assignment, 1};

  // Raster order; a point's already-filled box neighbours are never culled
  // (nothing lies strictly between adjacent points), so a completed filling
  // is a homomorphism edge by edge.
  for (const auto& p : box_interior(bc.box)) {
    auto cons = detail::culled_constraints(f, p);
    const int part = parity(p) == 1 ? even_class : 3 - even_class;
    auto v = extend_one_point(*bc.target, cons, ClassRestriction{&parts, part});
    if (!v) return {ExtensionFailure<LatticePoint>{p, std::move(cons)}};
    f.entries.emplace(p, *v);
  }
  if (!is_box_homomorphism(bc, f)) throw std::logic_error("hole filling produced a non-homomorphism");
  return {std::move(f)};
}

BoundaryFile read_boundary(std::istream& in, const std::string& base_dir) {
  std::string line;
  std::map<std::string, std::string> fields;
  bool have_header = false;
  BoundaryFile out;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string tag, word;
      ls >> tag;
      if (tag != "boundary") throw Error(ErrorCode::Parse, "expected 'boundary' header");
      while (ls >> word) {
        auto eq = word.find('=');
        if (eq == std::string::npos) throw Error(ErrorCode::Parse, "bad header field '" + word + "'");
        fields[word.substr(0, eq)] = word.substr(eq + 1);
      }
      for (const char* key : {"d", "n", "target"}) {
        if (!fields.count(key)) throw Error(ErrorCode::Parse, std::string("boundary header lacks ") + key + "=");
      }
      try {
        out.bc.box = make_box(std::stoi(fields["d"]), std::stoi(fields["n"]));
      } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::Parse, "bad boundary header '" + line + "'");
      }
      out.target_path = fields["target"];
      std::filesystem::path tp(out.target_path);
      auto resolved = tp.is_absolute() ? tp : std::filesystem::path(base_dir) / tp;
      out.bc.target = std::make_shared<const Graph>(read_graph_file(resolved.lexically_normal().string()));
      have_header = true;
      continue;
    }
    std::string key, arrow, rest;
    Vertex v = 0;
    if (!(ls >> key >> arrow >> v) || arrow != "->" || (ls >> rest)) {
      throw Error(ErrorCode::Parse, "boundary line " + std::to_string(lineno) + ": '" + line + "'");
    }
    auto p = parse_point(key);
    if (p.dim() != out.bc.box.dim) throw Error(ErrorCode::DimensionMismatch, key);
    if (!out.bc.assignment.emplace(std::move(p), v).second) throw Error(ErrorCode::Parse, "repeated point " + key);
  }
  if (!have_header) throw Error(ErrorCode::Parse, "empty boundary file");
  return out;
}

BoundaryFile read_boundary_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + path);
  auto dir = std::filesystem::path(path).parent_path().string();
  return read_boundary(in, dir.empty() ? "." : dir);
}

void write_boundary(std::ostream& out, const BoundaryCondition& bc, const std::string& target_path) {
  out << "boundary d=" << bc.box.dim << " n=" << bc.box.n << " target=" << target_path << '\n';
  for (const auto& [p, v] : bc.assignment) out << to_string(p) << " -> " << v << '\n';
}

}  // namespace kb
