// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "kirszbraun/extension.hpp"
#include "kirszbraun/graph.hpp"
#include "kirszbraun/helly.hpp"
#include "kirszbraun/holefill.hpp"
#include "kirszbraun/lattice.hpp"
#include "kirszbraun/oracle.hpp"
#include "support.hpp"

using namespace kb;
using kb::testing::uniform;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Outcome hyperoctahedron_law() {
  std::ostringstream msg;
  bool pass = true;
  for (int d : {2, 3}) {
    Graph o = hyperoctahedron(d);
    bool below = !helly_check(o, 2 * d - 1, 2).has_value();
    auto at = helly_check(o, 2 * d, 2);
    bool sound = at && validate_violation(o, *at);
    pass = pass && below && sound;
    msg << "O_" << d << ": (" << 2 * d - 1 << ",2) " << (below ? "holds" : "fails") << ", (" << 2 * d << ",2) "
        << (at ? "fails" : "holds") << "; ";
  }
  return {pass, msg.str()};
}

Outcome universal_two_two() {
  int total = 0, holding = 0;
  for (int k = 1; k <= 6; ++k) {
    for (const auto& g : enumerate_connected_graphs(k)) {
      ++total;
      holding += !helly_check(g, 2, 2).has_value();
    }
  }
  return {total == 143 && holding == total,
          std::to_string(holding) + "/" + std::to_string(total) + " graphs are (2,2)-Helly"};
}

Outcome harness_d2() {
  auto report = kirszbraun_equivalence_harness(2, 5, {});
  return {report.total() == 31 && report.all_agree(),
          std::to_string(report.agreeing()) + "/" + std::to_string(report.total()) + " graphs agree"};
}

Outcome harness_d1() {
  auto report = kirszbraun_equivalence_harness(1, 6, {});
  int kirszbraun = 0;
  for (const auto& r : report.records) kirszbraun += r.kirszbraun && r.helly;
  return {report.total() == 143 && report.all_agree() && kirszbraun == report.total(),
          std::to_string(kirszbraun) + "/" + std::to_string(report.total()) + " graphs are Z-Kirszbraun"};
}

Outcome square_witness() {
  // Corners of a unit square in the middle of a 5x5 grid box.
  auto grid = std::make_shared<const Graph>(box_graph(make_box(2, 4)));
  const Box box = make_box(2, 4);
  LatticeMap f{LatticeDomain{2}, grid, {}, 1};
  f.entries[{1, 0}] = box_index(box, {2, 2});
  f.entries[{-1, 0}] = box_index(box, {3, 3});
  f.entries[{0, 1}] = box_index(box, {3, 2});
  f.entries[{0, -1}] = box_index(box, {2, 3});
  std::vector<LatticePoint> s = f.points();
  s.push_back(LatticePoint::origin(2));
  bool lipschitz = is_lipschitz(f, 1);
  bool greedy_fails = lipschitz && !greedy_extend(f, s).ok();
  bool brute_fails = !brute_force_extend(f, s, 1);
  return {lipschitz && greedy_fails && brute_fails,
          std::string("1-Lipschitz ") + (lipschitz ? "yes" : "no") + ", greedy " + (greedy_fails ? "stuck" : "extends") +
              ", brute force " + (brute_fails ? "no extension" : "extends")};
}

Outcome t2_counterexample() {
  const std::vector<int> ones(6, 1);
  auto star = std::make_shared<const Graph>(star_tree(ones));
  auto c6 = std::make_shared<const Graph>(cycle_graph(6));
  GraphMap f{GraphDomain{star}, c6, {}, 2};
  for (Vertex leaf = 1; leaf <= 6; ++leaf) f.entries[leaf] = leaf - 1;
  std::vector<Vertex> s(star->order());
  for (Vertex v = 0; v < star->order(); ++v) s[v] = v;
  bool lipschitz = is_lipschitz(f, 2);
  bool fails = !brute_force_extend(f, s, 2);
  auto report = small_diameter_check(*star, *c6);
  bool t1 = report.hypothesis && report.conclusion && report.holds();
  // Independent look at the t = 1 claim: three alternate leaves onto 0, 2, 4.
  GraphMap g{GraphDomain{star}, c6, {{1, 0}, {3, 2}, {5, 4}}, 1};
  bool g_lipschitz = is_lipschitz(g, 1);
  bool g_extends = brute_force_extend(g, s, 1);
  std::ostringstream msg;
  msg << "2-Lipschitz " << (lipschitz ? "yes" : "no") << ", t=2 extension " << (fails ? "none" : "exists")
      << ", balls G-Kirszbraun " << (report.hypothesis ? "yes" : "no") << ", C_6 G-Kirszbraun "
      << (report.conclusion ? "yes" : "no") << " (leaves 1,3,5 -> 0,2,4 is " << (g_lipschitz ? "" : "not ")
      << "1-Lipschitz and " << (g_extends ? "extends" : "does not extend") << ")";
  return {lipschitz && fails && t1, msg.str()};
}

Outcome hole_filling() {
  std::vector<std::pair<std::string, Graph>> targets;
  for (auto& t : kb::testing::trees_up_to(6)) {
    if (t.order() < 2) continue;  // K_1 admits no boundary homomorphism
    targets.emplace_back("tree" + std::to_string(targets.size()), std::move(t));
  }
  targets.emplace_back("C_4", cycle_graph(4));
  targets.emplace_back("C_6", cycle_graph(6));

  constexpr int kSamples = 200;
  int instances = 0, yes = 0, constructed = 0;
  int helly_disagree = 0, non_helly_disagree = 0;
  std::string non_helly;
  for (const auto& [name, g] : targets) {
    auto target = std::make_shared<const Graph>(g);
    const bool helly = !bipartite_helly_check(g, 4, 2).has_value();
    if (!helly) non_helly += (non_helly.empty() ? "" : ",") + name;
    for (int n : {2, 3, 4}) {
      std::mt19937 rng(1000u * unsigned(n) + unsigned(instances));
      for (int s = 0; s < kSamples; ++s) {
        auto bc = kb::testing::random_boundary(n, target, rng);
        ++instances;
        auto decision = hole_fill_decide(bc);
        if (decision.extendable != kb::testing::brute_force_fill(bc)) ++(helly ? helly_disagree : non_helly_disagree);
        if (decision.extendable) {
          ++yes;
          auto built = hole_fill_construct(bc);
          constructed += built.ok() && is_box_homomorphism(bc, built.filling());
        }
      }
    }
  }
  return {helly_disagree + non_helly_disagree == 0 && constructed == yes,
          std::to_string(instances) + " boundaries over " + std::to_string(targets.size()) + " targets; " +
              std::to_string(helly_disagree) + " disagreements on bipartite (4,2)-Helly targets, " +
              std::to_string(non_helly_disagree) + " on the others (" + non_helly + "); " +
              std::to_string(constructed) + "/" + std::to_string(yes) + " yes-instances filled"};
}

template <class Domain>
bool one_point(const PartialMap<Domain>& f, const std::vector<typename Domain::Point>& from,
               const typename Domain::Point& b) {
  std::vector<Constraint> cons;
  for (const auto& a : from) cons.push_back({f.at(a), f.domain.distance(a, b)});
  return extend_one_point(*f.target, cons).has_value();
}

Outcome culling_equivalence() {
  std::mt19937 rng(8);
  int instances = 0, mismatches = 0;
  std::vector<Graph> small;
  for (int k = 2; k <= 6; ++k) {
    for (auto& g : enumerate_connected_graphs(k)) small.push_back(std::move(g));
  }
  // Graph domains.
  for (int i = 0; i < 600; ++i) {
    auto domain = std::make_shared<const Graph>(kb::testing::random_connected_graph(uniform(rng, 3, 9), uniform(rng, 0, 4), rng));
    auto target = std::make_shared<const Graph>(small[uniform(rng, 0, int(small.size()) - 1)]);
    std::vector<Vertex> order(domain->order());
    for (Vertex v = 0; v < domain->order(); ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    const Vertex b = order.back();
    order.pop_back();
    order.resize(uniform(rng, 1, int(order.size())));
    auto f = kb::testing::random_lipschitz_map(GraphDomain{domain}, target, order, rng);
    auto a = f.points();
    auto culled = ext_set(domain->distances(), a, b);
    ++instances;
    mismatches += one_point(f, a, b) != one_point(f, culled, b);
  }
  // Lattice domains.
  for (int i = 0; i < 600; ++i) {
    const int d = uniform(rng, 1, 3);
    auto target = std::make_shared<const Graph>(small[uniform(rng, 0, int(small.size()) - 1)]);
    std::vector<LatticePoint> pts;
    const int count = uniform(rng, 1, 8);
    for (int k = 0; k < count; ++k) {
      LatticePoint p = LatticePoint::origin(d);
      for (int c = 0; c < d; ++c) p.coords[c] = uniform(rng, -3, 3);
      if (p != LatticePoint::origin(d)) pts.push_back(p);
    }
    if (pts.empty()) pts.push_back(LatticePoint::origin(d)), pts.back().coords[0] = 1;
    auto f = kb::testing::random_lipschitz_map(LatticeDomain{d}, target, pts, rng);
    auto a = make_lattice_set(f.points());
    const auto b = LatticePoint::origin(d);
    auto culled = ext_set_lattice(a, b);
    ++instances;
    mismatches += one_point(f, a, b) != one_point(f, culled, b);
  }
  // Axis-supported sets: every subset of the axis points within distance 3.
  int axis_sets = 0, too_big = 0;
  for (int d : {2, 3}) {
    std::vector<LatticePoint> axis;
    for (int c = 0; c < d; ++c) {
      for (int r = -3; r <= 3; ++r) {
        if (r == 0) continue;
        LatticePoint p = LatticePoint::origin(d);
        p.coords[c] = r;
        axis.push_back(p);
      }
    }
    for (std::uint32_t mask = 1; mask < (1u << axis.size()); ++mask) {
      std::vector<LatticePoint> a;
      for (std::size_t k = 0; k < axis.size(); ++k) {
        if (mask & (1u << k)) a.push_back(axis[k]);
      }
      ++axis_sets;
      too_big += int(ext_set_lattice(make_lattice_set(a), LatticePoint::origin(d)).size()) > 2 * d;
    }
  }
  return {instances >= 1000 && mismatches == 0 && too_big == 0,
          std::to_string(instances) + " instances, " + std::to_string(mismatches) + " mismatches; " +
              std::to_string(axis_sets) + " axis-supported sets, " + std::to_string(too_big) + " over 2d"};
}

Outcome product_preservation() {
  std::vector<std::pair<std::string, Graph>> factors = {
      {"P_2", path_graph(2)}, {"P_3", path_graph(3)}, {"P_4", path_graph(4)}, {"K_1,3", star_tree(std::vector<int>{1, 1, 1})}};
  int pairs = 0, ok = 0, tensor_checked = 0;
  std::string bad;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    for (std::size_t j = i; j < factors.size(); ++j) {
      auto rep = product_preservation_check(factors[i].second, factors[j].second, 2);
      ++pairs;
      tensor_checked += rep.bipartite_applicable;
      bool good = rep.holds() && rep.h1_pass && rep.h2_pass && rep.strong_pass;
      ok += good;
      if (!good && bad.empty()) bad = "; first failure " + factors[i].first + " x " + factors[j].first;
    }
  }
  return {ok == pairs && tensor_checked == pairs,
          std::to_string(ok) + "/" + std::to_string(pairs) + " pairs preserved, " + std::to_string(tensor_checked) +
              " with tensor components" + bad};
}

Outcome recognition_scaling() {
  // Alternate random trees (Helly, so the search runs to completion) with
  // sparse random graphs.
  auto time_order = [](int n) {
    double total = 0;
    for (unsigned seed = 0; seed < 10; ++seed) {
      std::mt19937 rng(seed * 31 + unsigned(n));
      Graph g = kb::testing::random_connected_graph(n, seed % 2 ? n / 5 : 0, rng);
      auto start = Clock::now();
      (void)helly_check(g, 4, 2);
      total += seconds_since(start);
    }
    return total;
  };
  double t30 = time_order(30);
  double t40 = time_order(40);
  double ratio = t40 / std::max(t30, 1e-6);
  double bound = std::pow(40.0 / 30.0, 12);
  std::ostringstream msg;
  msg << "|H|=30: " << t30 << "s, |H|=40: " << t40 << "s, ratio " << ratio << " < " << bound;
  return {ratio < bound, msg.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "hyperoctahedron law", 10, hyperoctahedron_law},
      {2, "universal (2,2)-Helly", 60, universal_two_two},
      {3, "main-theorem harness d=2", 600, harness_d2},
      {4, "d=1 universality", 300, harness_d1},
      {5, "square witness", 1, square_witness},
      {6, "t=2 counterexample", 10, t2_counterexample},
      {7, "hole filling", 900, hole_filling},
      {8, "culling equivalence", 120, culling_equivalence},
      {9, "product preservation", 600, product_preservation},
      {10, "recognition scaling", 600, recognition_scaling},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = seconds_since(start);
    const bool in_time = elapsed <= c.budget_s;
    const bool pass = o.pass && in_time;
    failed += !pass;
    std::cout << "criterion " << c.id << " " << (pass ? "PASS" : "FAIL") << "  " << c.name << ": " << o.detail
              << " [" << elapsed << "s, budget " << c.budget_s << "s" << (in_time ? "" : ", over budget") << "]"
              << std::endl;
  }
  return failed ? 1 : 0;
}
