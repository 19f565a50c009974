#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kirszbraun/graph.hpp"

namespace kb {

struct Ball {
  Vertex center = 0;
  int radius = 1;

  auto operator<=>(const Ball&) const = default;
};

enum class HellyMode { Plain, Bipartite, Scaled };

/// A family of balls whose m-wise intersections are nonempty while the whole
/// family has an empty intersection. For bipartite mode every intersection
/// is taken inside partite class `part`.
struct HellyViolation {
  std::vector<Ball> balls;
  HellyMode mode = HellyMode::Plain;
  int m = 2;
  int part = 0;  // bipartite mode only
  int t = 1;     // scaled mode only

  bool operator==(const HellyViolation&) const = default;
};

/// nullopt means the property holds.
using HellyResult = std::optional<HellyViolation>;

struct HellyOptions {
  /// Worker threads for the outer enumeration; the result does not depend on it.
  int jobs = 1;
};

/// Decides the (n, m)-Helly property.
///
/// Radii run over 1..max(1, diameter) (a larger ball is the whole vertex set)
/// and balls with equal vertex sets are merged, keeping the first in
/// (center, radius) order. Candidate families are searched depth-first over
/// strictly increasing ball indices, where each added ball must keep every
/// m-subfamily nonempty and must strictly shrink the running intersection.
/// The first family whose intersection becomes empty is returned; it has at
/// most n balls, and repeating any of them pads it to an n-family, so the
/// search is exact. Families with repeated balls never need to be visited:
/// a repeat never shrinks the intersection.
///
/// Throws ParameterError unless 1 <= m <= n; m = n holds vacuously.
HellyResult helly_check(const Graph& g, int n, int m, const HellyOptions& opts = {});

/// Same search with every ball restricted to one partite class; both classes
/// are tried (class 1 first). Throws NotBipartiteError, ParameterError.
HellyResult bipartite_helly_check(const Graph& g, int n, int m, const HellyOptions& opts = {});

/// (2d, 2) condition with radii restricted to positive multiples of t. With
/// t = 1 this is exactly helly_check(g, 2d, 2).
HellyResult t_helly_check(const Graph& g, int d, int t, const HellyOptions& opts = {});

/// Re-checks a certificate from scratch using only `ball` and set
/// intersection.
bool validate_violation(const Graph& g, const HellyViolation& v);

/// `ball <center> <radius>` lines followed by the mode line.
void write_violation(std::ostream& out, const HellyViolation& v);
std::string mode_string(const HellyViolation& v);

}  // namespace kb
