#pragma once

#include <algorithm>
#include <span>
#include <vector>

namespace kb {

/// Ext(A, b): members a of A such that no other a' in A lies on a geodesic
/// from a to b, i.e. dist(a, a') + dist(a', b) != dist(a, b) for all a' != a.
/// `b` must not belong to A.
template <class Point, class Metric>
std::vector<Point> geodesic_extension(std::span<const Point> a, const Point& b, Metric&& dist) {
  std::vector<int> to_b;
  to_b.reserve(a.size());
  for (const auto& p : a) to_b.push_back(dist(p, b));
  std::vector<Point> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    bool shadowed = false;
    for (std::size_t j = 0; j < a.size() && !shadowed; ++j) {
      shadowed = j != i && dist(a[i], a[j]) + to_b[j] == to_b[i];
    }
    if (!shadowed) out.push_back(a[i]);
  }
  return out;
}

}  // namespace kb
