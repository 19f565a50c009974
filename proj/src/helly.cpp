#include "kirszbraun/helly.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

namespace kb {

namespace {

struct BallFamily {
  std::vector<Ball> balls;
  std::vector<VertexSet> sets;
};

BallFamily collect_balls(const Graph& g, const std::vector<int>& radii, const VertexSet* restrict_to) {
  BallFamily fam;
  std::map<VertexSet, int> seen;
  for (Vertex c = 0; c < g.order(); ++c) {
    for (int r : radii) {
      VertexSet s = ball(g, c, r);
      if (restrict_to) s &= *restrict_to;
      if (s.none()) continue;
      if (seen.emplace(s, int(fam.sets.size())).second) {
        fam.balls.push_back({c, r});
        fam.sets.push_back(std::move(s));
      }
    }
  }
  return fam;
}

/// Depth-first search for the first irredundant violating family; see the
/// header for the exact order.
class ViolationSearch {
 public:
  ViolationSearch(const BallFamily& fam, int n, int m) : fam_(fam), n_(n), m_(m) {
    const std::size_t k = fam.sets.size();
    if (m_ == 2) {
      meets_.assign(k, VertexSet(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
          if (fam.sets[i].intersects(fam.sets[j])) {
            meets_[i].set(j);
            meets_[j].set(i);
          }
        }
      }
    }
  }

  std::size_t size() const { return fam_.sets.size(); }

  /// First violation whose smallest ball index is `first`.
  std::optional<std::vector<int>> search_from(int first) const {
    State st;
    st.chosen.push_back(first);
    st.inter.assign(n_ + 1, VertexSet());
    st.inter[1] = fam_.sets[first];
    if (m_ == 2) {
      st.cand.assign(n_ + 1, VertexSet());
      st.cand[1] = meets_[first];
    }
    if (dfs(st, 1)) return st.chosen;
    return std::nullopt;
  }

 private:
  struct State {
    std::vector<int> chosen;
    std::vector<VertexSet> inter;
    std::vector<VertexSet> cand;
  };

  bool mwise_ok(const std::vector<int>& chosen, int next) const {
    // Every subfamily of size min(m, k) containing `next` must meet.
    const int k = int(chosen.size()) + 1;
    const int pick = std::min(m_, k) - 1;
    std::vector<int> idx(pick);
    for (int i = 0; i < pick; ++i) idx[i] = i;
    const int pool = int(chosen.size());
    while (true) {
      VertexSet acc = fam_.sets[next];
      for (int i : idx) acc &= fam_.sets[chosen[i]];
      if (acc.none()) return false;
      int pos = pick - 1;
      while (pos >= 0 && idx[pos] == pool - pick + pos) --pos;
      if (pos < 0) return true;
      ++idx[pos];
      for (int i = pos + 1; i < pick; ++i) idx[i] = idx[i - 1] + 1;
    }
  }

  bool dfs(State& st, int depth) const {
    if (depth == n_) return false;
    const int last = st.chosen.back();
    const VertexSet& inter = st.inter[depth];
    const std::size_t total = fam_.sets.size();
    auto next_candidate = [&](std::size_t from) -> std::size_t {
      if (m_ == 2) return st.cand[depth].find_next(from - 1);  // from >= 1
      return from < total ? from : VertexSet::npos;
    };
    for (std::size_t j = next_candidate(std::size_t(last) + 1); j != VertexSet::npos;
         j = next_candidate(j + 1)) {
      const VertexSet& s = fam_.sets[j];
      if (inter.is_subset_of(s)) continue;  // would not shrink
      if (m_ != 2 && !mwise_ok(st.chosen, int(j))) continue;
      VertexSet& next = st.inter[depth + 1];
      next = inter;
      next &= s;
      st.chosen.push_back(int(j));
      if (next.none()) return true;
      if (m_ == 2) {
        st.cand[depth + 1] = st.cand[depth];
        st.cand[depth + 1] &= meets_[j];
      }
      if (dfs(st, depth + 1)) return true;
      st.chosen.pop_back();
    }
    return false;
  }

  const BallFamily& fam_;
  int n_;
  int m_;
  std::vector<VertexSet> meets_;
};

std::optional<std::vector<int>> first_violation(const BallFamily& fam, int n, int m, int jobs) {
  ViolationSearch search(fam, n, m);
  const int total = int(search.size());
  if (jobs <= 1 || total < 2) {
    for (int i = 0; i < total; ++i) {
      if (auto hit = search.search_from(i)) return hit;
    }
    return std::nullopt;
  }
  // Workers take first-ball indices in increasing order; the smallest index
  // with a hit wins, which is the sequential answer.
  std::atomic<int> next{0};
  std::atomic<int> best{total};
  std::mutex mu;
  std::optional<std::vector<int>> answer;
  auto worker = [&] {
    while (true) {
      int i = next.fetch_add(1);
      if (i >= total || i > best.load()) return;
      if (auto hit = search.search_from(i)) {
        std::lock_guard lock(mu);
        if (i < best.load()) {
          best.store(i);
          answer = std::move(hit);
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return answer;
}

void check_params(int n, int m) {
  if (n < 1 || m < 1 || m > n) {
    throw Error(ErrorCode::ParameterError,
                "need 1 <= m <= n, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  }
}

std::vector<int> plain_radii(const Graph& g) {
  std::vector<int> radii;
  for (int r = 1; r <= std::max(1, g.diameter()); ++r) radii.push_back(r);
  return radii;
}

HellyResult to_result(const BallFamily& fam, const std::optional<std::vector<int>>& hit,
                      HellyViolation proto) {
  if (!hit) return std::nullopt;
  for (int i : *hit) proto.balls.push_back(fam.balls[i]);
  return proto;
}

}  // namespace

HellyResult helly_check(const Graph& g, int n, int m, const HellyOptions& opts) {
  check_params(n, m);
  auto fam = collect_balls(g, plain_radii(g), nullptr);
  HellyViolation proto;
  proto.m = m;
  return to_result(fam, first_violation(fam, n, m, opts.jobs), proto);
}

HellyResult bipartite_helly_check(const Graph& g, int n, int m, const HellyOptions& opts) {
  check_params(n, m);
  const Bipartition parts = bipartition(g);
  for (int part : {1, 2}) {
    VertexSet cls = parts.members(part);
    auto fam = collect_balls(g, plain_radii(g), &cls);
    HellyViolation proto;
    proto.mode = HellyMode::Bipartite;
    proto.m = m;
    proto.part = part;
    if (auto v = to_result(fam, first_violation(fam, n, m, opts.jobs), proto)) return v;
  }
  return std::nullopt;
}

HellyResult t_helly_check(const Graph& g, int d, int t, const HellyOptions& opts) {
  if (d < 1 || t < 1) throw Error(ErrorCode::ParameterError, "need d >= 1 and t >= 1");
  std::vector<int> radii;
  for (int r = t;; r += t) {
    radii.push_back(r);
    if (r >= g.diameter()) break;
  }
  auto fam = collect_balls(g, radii, nullptr);
  HellyViolation proto;
  proto.m = 2;
  if (t > 1) {
    proto.mode = HellyMode::Scaled;
    proto.t = t;
  }
  return to_result(fam, first_violation(fam, 2 * d, 2, opts.jobs), proto);
}

bool validate_violation(const Graph& g, const HellyViolation& v) {
  const int k = int(v.balls.size());
  if (k == 0 || v.m < 1) return false;
  std::optional<VertexSet> cls;
  if (v.mode == HellyMode::Bipartite) {
    if (v.part != 1 && v.part != 2) return false;
    try {
      cls = bipartition(g).members(v.part);
    } catch (const NotBipartiteError&) {
      return false;
    }
  }
  std::vector<VertexSet> sets;
  for (const Ball& b : v.balls) {
    if (b.center < 0 || b.center >= g.order() || b.radius < 1) return false;
    if (v.mode == HellyMode::Scaled && b.radius % v.t != 0) return false;
    VertexSet s = ball(g, b.center, b.radius);
    if (cls) s &= *cls;
    sets.push_back(std::move(s));
  }
  const int pick = std::min(v.m, k);
  std::vector<int> idx(pick);
  for (int i = 0; i < pick; ++i) idx[i] = i;
  while (true) {
    VertexSet acc = sets[idx[0]];
    for (int i = 1; i < pick; ++i) acc &= sets[idx[i]];
    if (acc.none()) return false;
    int pos = pick - 1;
    while (pos >= 0 && idx[pos] == k - pick + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < pick; ++i) idx[i] = idx[i - 1] + 1;
  }
  VertexSet all = sets[0];
  for (const auto& s : sets) all &= s;
  return all.none();
}

std::string mode_string(const HellyViolation& v) {
  switch (v.mode) {
    case HellyMode::Plain: return "plain";
    case HellyMode::Bipartite: return "bipartite class=" + std::to_string(v.part);
    case HellyMode::Scaled: return "scaled t=" + std::to_string(v.t);
  }
  return "plain";
}

void write_violation(std::ostream& out, const HellyViolation& v) {
  for (const Ball& b : v.balls) out << "ball " << b.center << ' ' << b.radius << '\n';
  out << "mode " << mode_string(v) << '\n';
}

}  // namespace kb
