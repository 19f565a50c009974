#include "kirszbraun/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <thread>

namespace kb {

HellyResult brute_force_helly(const Graph& g, int n, int m) {
  if (n < 1 || m < 1 || m > n) throw Error(ErrorCode::ParameterError, "need 1 <= m <= n");
  if (g.order() > 64) throw Error(ErrorCode::TooLarge, "brute-force Helly needs at most 64 vertices");

  std::vector<Ball> raw;
  std::vector<std::uint64_t> mask;
  for (Vertex c = 0; c < g.order(); ++c) {
    for (int r = 1; r <= g.diameter() + 1; ++r) {
      std::uint64_t bits = 0;
      for (Vertex w = 0; w < g.order(); ++w) {
        if (g.distance(c, w) <= r) bits |= std::uint64_t(1) << w;
      }
      raw.push_back({c, r});
      mask.push_back(bits);
    }
  }
  const int total = int(raw.size());
  // Multisets of size n from `total` balls: C(total + n - 1, n).
  double count = 1;
  for (int i = 1; i <= n; ++i) count = count * double(total + n - i) / double(i);
  if (count > kBruteForceBudget) throw Error(ErrorCode::TooLarge, "too many ball collections");

  std::vector<int> pick(n);
  std::vector<std::uint64_t> running(n + 1);
  running[0] = ~std::uint64_t(0);

  // Every m-subset of positions 0..pos that contains pos must meet.
  auto mwise_ok = [&](int pos) {
    if (pos + 1 < m) return true;
    std::vector<int> idx(m - 1);
    for (int i = 0; i < m - 1; ++i) idx[i] = i;
    while (true) {
      std::uint64_t acc = mask[pick[pos]];
      for (int i : idx) acc &= mask[pick[i]];
      if (!acc) return false;
      int k = m - 2;
      while (k >= 0 && idx[k] == pos - (m - 1) + k) --k;
      if (k < 0) return true;
      ++idx[k];
      for (int i = k + 1; i < m - 1; ++i) idx[i] = idx[i - 1] + 1;
    }
  };

  std::function<bool(int, int)> search = [&](int pos, int start) -> bool {
    for (int i = start; i < total; ++i) {
      pick[pos] = i;
      if (!mwise_ok(pos)) continue;
      running[pos + 1] = running[pos] & mask[i];
      if (pos + 1 == n) {
        if (running[n] == 0) return true;
      } else if (search(pos + 1, i)) {
        return true;
      }
    }
    return false;
  };
  if (!search(0, 0)) return std::nullopt;
  HellyViolation v;
  v.m = m;
  for (int i : pick) v.balls.push_back(raw[i]);
  return v;
}

namespace {

Graph decode_canonical(const std::vector<std::uint8_t>& code) {
  const int n = code[0];
  std::vector<Edge> edges;
  std::size_t at = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (code[at++]) edges.emplace_back(i, j);
    }
  }
  return validate_graph(n, edges);
}

}  // namespace

std::vector<Graph> enumerate_connected_graphs(int k) {
  if (k < 1) throw Error(ErrorCode::ParameterError, "k must be >= 1");
  if (k > 7) throw Error(ErrorCode::TooLarge, "graph enumeration is limited to k <= 7");

  // Every connected graph has a vertex whose removal leaves it connected, so
  // adding one vertex joined to a nonempty subset reaches them all.
  std::set<std::vector<std::uint8_t>> level{canonical_form(complete_graph(1))};
  for (int size = 2; size <= k; ++size) {
    std::set<std::vector<std::uint8_t>> next;
    for (const auto& code : level) {
      Graph base = decode_canonical(code);
      auto base_edges = base.edges();
      for (unsigned subset = 1; subset < (1u << (size - 1)); ++subset) {
        auto edges = base_edges;
        for (int j = 0; j < size - 1; ++j) {
          if (subset & (1u << j)) edges.emplace_back(j, size - 1);
        }
        next.insert(canonical_form(validate_graph(size, edges)));
      }
    }
    level = std::move(next);
  }
  std::vector<std::pair<std::size_t, std::vector<std::uint8_t>>> keyed;
  for (const auto& code : level) {
    keyed.emplace_back(std::count(code.begin() + 1, code.end(), 1), code);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<Graph> out;
  for (const auto& [edges, code] : keyed) out.push_back(decode_canonical(code));
  return out;
}

bool star_family_kirszbraun(const Graph& h, int d, bool bipartite) {
  const int rays = 2 * d;
  const int rmax = std::max(1, h.diameter());
  const int hn = h.order();
  std::optional<Bipartition> parts;
  if (bipartite) parts = bipartition(h);
  auto target = std::make_shared<const Graph>(h);

  std::vector<int> radii(rays, 1);
  while (true) {
    const auto star = axis_embed_star(radii, d);
    std::vector<LatticePoint> superset = star.leaves;
    superset.push_back(star.center);

    std::vector<Vertex> image(rays, 0);
    while (true) {
      bool lipschitz = true;
      for (int i = 0; i < rays && lipschitz; ++i) {
        for (int j = i + 1; j < rays && lipschitz; ++j) {
          lipschitz = h.distance(image[i], image[j]) <= radii[i] + radii[j];
        }
      }
      if (lipschitz) {
        LatticeMap f{LatticeDomain{d}, target, {}, 1};
        for (int i = 0; i < rays; ++i) f.entries.emplace(star.leaves[i], image[i]);
        if (!parts) {
          if (!brute_force_extend(f, superset, 1)) return false;
        } else {
          for (int center_class : {1, 2}) {
            bool respects = true;
            for (int i = 0; i < rays && respects; ++i) {
              const int want = radii[i] % 2 == 0 ? center_class : 3 - center_class;
              respects = parts->class_of(image[i]) == want;
            }
            if (!respects) continue;
            BruteForceOptions<LatticeDomain> opts;
            opts.parts = &*parts;
            opts.required_class = [&](const LatticePoint& p) {
              return parity(p) == 1 ? center_class : 3 - center_class;
            };
            if (!brute_force_extend(f, superset, 1, opts)) return false;
          }
        }
      }
      int pos = 0;
      while (pos < rays && ++image[pos] == hn) image[pos++] = 0;
      if (pos == rays) break;
    }

    int pos = 0;
    while (pos < rays && ++radii[pos] > rmax) radii[pos++] = 1;
    if (pos == rays) break;
  }
  return true;
}

bool graph_kirszbraun(const Graph& g, const Graph& h) {
  const int gn = g.order();
  const int hn = h.order();
  if (double(gn) * std::log10(double(hn + 1)) > std::log10(kBruteForceBudget) + 1e-9) {
    throw Error(ErrorCode::TooLarge, "too many partial maps to enumerate");
  }
  std::vector<Vertex> image(gn, -1);

  auto leaf_ok = [&]() {
    bool any = std::any_of(image.begin(), image.end(), [](Vertex v) { return v >= 0; });
    if (!any) return true;
    for (Vertex b = 0; b < gn; ++b) {
      if (image[b] >= 0) continue;
      bool found = false;
      for (Vertex w = 0; w < hn && !found; ++w) {
        bool ok = true;
        for (Vertex a = 0; a < gn && ok; ++a) {
          if (image[a] >= 0) ok = h.distance(w, image[a]) <= g.distance(a, b);
        }
        found = ok;
      }
      if (!found) return false;
    }
    return true;
  };

  std::function<bool(Vertex)> walk = [&](Vertex v) -> bool {
    if (v == gn) return leaf_ok();
    image[v] = -1;
    if (!walk(v + 1)) return false;
    for (Vertex w = 0; w < hn; ++w) {
      bool ok = true;
      for (Vertex a = 0; a < v && ok; ++a) {
        if (image[a] >= 0) ok = h.distance(w, image[a]) <= g.distance(a, v);
      }
      if (!ok) continue;
      image[v] = w;
      if (!walk(v + 1)) return false;
    }
    image[v] = -1;
    return true;
  };
  return walk(0);
}

int HarnessReport::agreeing() const {
  return int(std::count_if(records.begin(), records.end(), [](const HarnessRecord& r) { return r.agree; }));
}

namespace {

/// Random 1-Lipschitz map on a random subset of the box, extended greedily.
bool greedy_box_sample(const std::shared_ptr<const Graph>& h, int d, std::mt19937_64& rng) {
  const Box box = make_box(d, 3);
  const auto points = box_vertices(box);
  std::vector<LatticePoint> chosen;
  std::bernoulli_distribution take(0.4);
  for (const auto& p : points) {
    if (take(rng)) chosen.push_back(p);
  }
  if (chosen.empty()) chosen.push_back(points[rng() % points.size()]);
  std::shuffle(chosen.begin(), chosen.end(), rng);

  LatticeMap f{LatticeDomain{d}, h, {}, 1};
  for (const auto& p : chosen) {
    std::vector<Vertex> ok;
    for (Vertex v = 0; v < h->order(); ++v) {
      bool fits = true;
      for (const auto& [a, w] : f.entries) {
        if (h->distance(v, w) > l1_distance(p, a)) {
          fits = false;
          break;
        }
      }
      if (fits) ok.push_back(v);
    }
    if (!ok.empty()) f.entries.emplace(p, ok[rng() % ok.size()]);
  }
  return greedy_extend(f, points).ok();
}

}  // namespace

HarnessReport kirszbraun_equivalence_harness(int d, int max_vertices, const HarnessOptions& opts) {
  if (d != 1 && d != 2) throw Error(ErrorCode::ParameterError, "harness supports d = 1 or 2");
  if (max_vertices < 1) throw Error(ErrorCode::ParameterError, "max_vertices must be >= 1");
  if (max_vertices > 6) throw Error(ErrorCode::TooLarge, "harness universe is limited to 6 vertices");
  if (d == 2 && max_vertices == 6 && !opts.slow) {
    throw Error(ErrorCode::TooLarge, "d = 2 with 6-vertex graphs needs the slow flag");
  }

  std::vector<std::pair<std::string, Graph>> universe;
  for (int k = 1; k <= max_vertices; ++k) {
    auto graphs = enumerate_connected_graphs(k);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      universe.emplace_back("k" + std::to_string(k) + "-" + std::to_string(i), std::move(graphs[i]));
    }
  }

  HarnessReport report;
  report.records.resize(universe.size());
  auto run_one = [&](std::size_t idx) {
    const auto& [id, g] = universe[idx];
    HarnessRecord rec;
    rec.graph_id = id;
    rec.helly = !helly_check(g, 2 * d, 2).has_value();
    rec.kirszbraun = star_family_kirszbraun(g, d);
    if (rec.helly) {
      auto shared = std::make_shared<const Graph>(g);
      std::mt19937_64 rng(opts.seed * 1000003u + idx);
      for (int s = 0; s < opts.greedy_samples && rec.greedy_ok; ++s) {
        rec.greedy_ok = greedy_box_sample(shared, d, rng);
      }
    }
    rec.agree = rec.helly == rec.kirszbraun && rec.greedy_ok;
    report.records[idx] = std::move(rec);
  };

  if (opts.jobs <= 1) {
    for (std::size_t i = 0; i < universe.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < opts.jobs; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < universe.size(); i = next++) run_one(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  return report;
}

void write_report(std::ostream& out, const HarnessReport& report) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  for (const auto& r : report.records) {
    out << r.graph_id << '\t' << yn(r.helly) << '\t' << yn(r.kirszbraun) << '\t' << yn(r.agree) << '\n';
  }
  out << "total " << report.total() << " agree " << report.agreeing() << '\n';
}

ProductReport product_preservation_check(const Graph& h1, const Graph& h2, int d) {
  ProductReport rep;
  rep.h1_pass = star_family_kirszbraun(h1, d);
  rep.h2_pass = star_family_kirszbraun(h2, d);
  rep.strong_pass = star_family_kirszbraun(strong_product(h1, h2), d);
  rep.strong_ok = !(rep.h1_pass && rep.h2_pass) || rep.strong_pass;

  rep.bipartite_applicable = is_bipartite(h1) && is_bipartite(h2);
  if (rep.bipartite_applicable) {
    rep.h1_bipartite_pass = star_family_kirszbraun(h1, d, true);
    rep.h2_bipartite_pass = star_family_kirszbraun(h2, d, true);
    bool all = true;
    for (const auto& comp : tensor_product(h1, h2)) {
      bool pass = star_family_kirszbraun(comp.graph, d, true);
      rep.tensor_component_pass.push_back(pass);
      all = all && pass;
    }
    rep.tensor_ok = !(rep.h1_bipartite_pass && rep.h2_bipartite_pass) || all;
  }
  return rep;
}

SmallDiameterReport small_diameter_check(const Graph& g, const Graph& h) {
  SmallDiameterReport rep;
  rep.radius = g.diameter();
  rep.hypothesis = true;
  for (Vertex v = 0; v < h.order(); ++v) {
    VertexSet members = ball(h, v, rep.radius);
    Graph sub = induced_subgraph(h, members);
    auto ids = to_vector(members);
    bool differs = false;
    for (std::size_t i = 0; i < ids.size() && !differs; ++i) {
      for (std::size_t j = i + 1; j < ids.size() && !differs; ++j) {
        differs = sub.distance(Vertex(i), Vertex(j)) != h.distance(ids[i], ids[j]);
      }
    }
    rep.metric_differs.push_back(differs);
    bool pass = graph_kirszbraun(g, sub);
    rep.ball_pass.push_back(pass);
    rep.hypothesis = rep.hypothesis && pass;
  }
  rep.conclusion = graph_kirszbraun(g, h);
  return rep;
}

}  // namespace kb
