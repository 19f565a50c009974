#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "kirszbraun/holefill.hpp"
#include "support.hpp"

using namespace kb;

namespace {

std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

BoundaryCondition parity_boundary(int d, int n) {
  BoundaryCondition bc{make_box(d, n), share(complete_graph(2)), {}};
  for (const auto& p : box_boundary(bc.box)) bc.assignment[p] = parity(p) - 1;
  return bc;
}

/// Climbs 0..4 in P_5 from (1,0) to (1,2) on one side and comes back on the other.
BoundaryCondition steep_p5() {
  BoundaryCondition bc{make_box(2, 2), share(path_graph(5)), {}};
  const std::vector<int> heights = {1, 0, 1, 2, 3, 4, 3, 2};
  auto cycle = testing::boundary_cycle(2);
  for (std::size_t i = 0; i < cycle.size(); ++i) bc.assignment[cycle[i]] = heights[i];
  return bc;
}

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("boundary validation") {
  CHECK_NOTHROW(validate_boundary(parity_boundary(2, 3)));

  auto same = parity_boundary(2, 2);
  same.assignment[{1, 0}] = 0;
  CHECK(code_of([&] { validate_boundary(same); }) == ErrorCode::NotHomomorphism);

  BoundaryCondition line{make_box(1, 3), share(path_graph(4)), {{{0}, 0}, {{3}, 2}}};
  CHECK(code_of([&] { validate_boundary(line); }) == ErrorCode::ParityMismatch);
  line.assignment[{3}] = 1;
  CHECK_NOTHROW(validate_boundary(line));

  auto missing = parity_boundary(2, 2);
  missing.assignment.erase({2, 2});
  CHECK(code_of([&] { validate_boundary(missing); }) == ErrorCode::IncompleteAssignment);

  auto interior = parity_boundary(2, 2);
  interior.assignment[{1, 1}] = 0;
  CHECK(code_of([&] { validate_boundary(interior); }) == ErrorCode::ParameterError);

  BoundaryCondition odd{make_box(2, 2), share(cycle_graph(5)), {}};
  CHECK(code_of([&] { validate_boundary(odd); }) == ErrorCode::NotBipartite);
}

TEST_CASE("parity maps into an edge fill uniquely") {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {2, 4}, {3, 2}}) {
    auto bc = parity_boundary(d, n);
    auto decision = hole_fill_decide(bc);
    CHECK(decision.extendable);
    CHECK(decision.precondition == HellyPrecondition::Verified);
    auto built = hole_fill_construct(bc);
    REQUIRE(built.ok());
    CHECK(is_box_homomorphism(bc, built.filling()));
    for (const auto& [p, v] : built.filling().entries) CHECK(v == parity(p) - 1);
  }
}

TEST_CASE("a steep boundary in P_5 does not fill") {
  auto bc = steep_p5();
  CHECK_NOTHROW(validate_boundary(bc));
  auto decision = hole_fill_decide(bc);
  CHECK_FALSE(decision.extendable);
  REQUIRE(decision.violation.has_value());
  CHECK(decision.violation->target_distance > decision.violation->lattice_distance);
  CHECK(bc.target->distance(bc.assignment.at(decision.violation->p), bc.assignment.at(decision.violation->q)) ==
        decision.violation->target_distance);
  CHECK_FALSE(testing::brute_force_fill(bc));

  auto built = hole_fill_construct(bc);
  REQUIRE_FALSE(built.ok());
  CHECK(built.failure().blocking_point == LatticePoint{1, 1});
  CHECK_FALSE(extend_one_point(*bc.target, built.failure().constraints).has_value());
}

TEST_CASE("one-point boxes have nothing to fill") {
  std::mt19937 rng(41);
  for (const auto& t : testing::trees_up_to(6)) {
    if (t.order() < 2) continue;
    auto target = share(t);
    for (int trial = 0; trial < 5; ++trial) {
      auto bc = testing::random_boundary(1, target, rng);
      CHECK(hole_fill_decide(bc).extendable);
      auto built = hole_fill_construct(bc);
      REQUIRE(built.ok());
      CHECK(built.filling().entries == bc.assignment);
    }
  }
}

TEST_CASE("Helly precondition reporting") {
  std::mt19937 rng(42);
  auto c6 = share(cycle_graph(6));
  CHECK(hole_fill_decide(testing::random_boundary(2, c6, rng)).precondition == HellyPrecondition::Failed);
  auto tree = share(path_graph(4));
  auto bc = testing::random_boundary(2, tree, rng);
  CHECK(hole_fill_decide(bc).precondition == HellyPrecondition::Verified);
  CHECK(hole_fill_decide(bc, HoleFillOptions{0}).precondition == HellyPrecondition::Unchecked);
}

TEST_CASE("decide, construct and the oracle agree on tree targets") {
  std::mt19937 rng(43);
  for (const auto& t : testing::trees_up_to(7)) {
    if (t.order() < 2) continue;
    auto target = share(t);
    for (int n = 2; n <= 4; ++n) {
      for (int trial = 0; trial < 6; ++trial) {
        auto bc = testing::random_boundary(n, target, rng);
        auto decision = hole_fill_decide(bc);
        auto built = hole_fill_construct(bc);
        CHECK(decision.extendable == built.ok());
        if (built.ok()) CHECK(is_box_homomorphism(bc, built.filling()));
        if (n <= 3) CHECK(decision.extendable == testing::brute_force_fill(bc));
      }
    }
  }
}

TEST_CASE("random order-8 trees fill whenever decide says yes") {
  std::mt19937 rng(44);
  for (int trial = 0; trial < 40; ++trial) {
    auto target = share(testing::random_connected_graph(8, 0, rng));
    auto bc = testing::random_boundary(testing::uniform(rng, 2, 4), target, rng);
    auto built = hole_fill_construct(bc);
    CHECK(hole_fill_decide(bc).extendable == built.ok());
  }
}

TEST_CASE("boundary files round-trip") {
  auto dir = std::filesystem::temp_directory_path() / "kb_boundary_test";
  std::filesystem::create_directories(dir);
  write_graph_file((dir / "p5.graph").string(), path_graph(5));
  auto bc = steep_p5();
  {
    std::ofstream out(dir / "steep.bdry");
    write_boundary(out, bc, "p5.graph");
  }
  auto file = read_boundary_file((dir / "steep.bdry").string());
  CHECK(file.target_path == "p5.graph");
  CHECK(file.bc.box.dim == 2);
  CHECK(file.bc.box.n == 2);
  CHECK(*file.bc.target == *bc.target);
  CHECK(file.bc.assignment == bc.assignment);

  std::istringstream no_header("(0,0) -> 1\n");
  CHECK(code_of([&] { read_boundary(no_header); }) == ErrorCode::Parse);
  std::istringstream wrong_dim("boundary d=2 n=2 target=" + (dir / "p5.graph").string() + "\n(0,0,0) -> 1\n");
  CHECK(code_of([&] { read_boundary(wrong_dim); }) == ErrorCode::DimensionMismatch);
  std::filesystem::remove_all(dir);
}
