#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "kirszbraun/extension.hpp"
#include "kirszbraun/lattice.hpp"

namespace kb {

/// A map on the boundary of a box into a bipartite target.
struct BoundaryCondition {
  Box box;
  std::shared_ptr<const Graph> target;
  std::map<LatticePoint, Vertex> assignment;
};

/// Throws IncompleteAssignment, NotHomomorphism, ParityMismatch (checked in
/// that order) or NotBipartite when the target is not bipartite.
void validate_boundary(const BoundaryCondition& bc);

/// Partite class that points of lattice parity 1 must land in.
int even_point_class(const BoundaryCondition& bc, const Bipartition& parts);

enum class HellyPrecondition { Verified, Failed, Unchecked };

struct HoleFillOptions {
  /// Targets up to this order have the bipartite (2d, 2)-Helly precondition
  /// checked; larger ones are trusted.
  int helly_check_threshold = 12;
};

struct BoundaryPairViolation {
  LatticePoint p;
  LatticePoint q;
  int target_distance = 0;
  int lattice_distance = 0;
};

struct HoleFillDecision {
  bool extendable = false;
  std::optional<BoundaryPairViolation> violation;
  HellyPrecondition precondition = HellyPrecondition::Unchecked;
};

/// Yes iff the boundary map is 1-Lipschitz for the l1 metric. The answer is
/// exact when the target is bipartite (2d, 2)-Helly; `precondition` records
/// whether that was confirmed.
HoleFillDecision hole_fill_decide(const BoundaryCondition& bc, const HoleFillOptions& opts = {});

/// Either a homomorphism on the whole box restricting to the boundary
/// condition, or the point where raster-order filling got stuck.
struct HoleFillResult {
  std::variant<LatticeMap, ExtensionFailure<LatticePoint>> value;

  bool ok() const { return value.index() == 0; }
  const LatticeMap& filling() const { return std::get<0>(value); }
  const ExtensionFailure<LatticePoint>& failure() const { return std::get<1>(value); }
};

HoleFillResult hole_fill_construct(const BoundaryCondition& bc);

/// True when f is defined on the whole box, extends the boundary condition
/// and maps box edges to target edges.
bool is_box_homomorphism(const BoundaryCondition& bc, const LatticeMap& f);

/// `boundary d=<d> n=<n> target=<graphfile>` then `(<coords>) -> <vertex>`.
struct BoundaryFile {
  BoundaryCondition bc;
  std::string target_path;
};

BoundaryFile read_boundary(std::istream& in, const std::string& base_dir = ".");
BoundaryFile read_boundary_file(const std::string& path);
void write_boundary(std::ostream& out, const BoundaryCondition& bc, const std::string& target_path);

}  // namespace kb
