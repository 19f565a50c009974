#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "kirszbraun/extension.hpp"
#include "kirszbraun/graph.hpp"
#include "kirszbraun/helly.hpp"
#include "kirszbraun/holefill.hpp"
#include "kirszbraun/oracle.hpp"

namespace kb::cli {
namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

int to_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw Error(ErrorCode::ParameterError, "bad " + what + " '" + text + "'");
  return value;
}

void expect_params(const std::string& family, const std::vector<std::string>& params, std::size_t count) {
  if (params.size() != count) {
    throw Error(ErrorCode::ParameterError,
                family + " takes " + std::to_string(count) + " parameter(s), got " + std::to_string(params.size()));
  }
}

struct GenArgs {
  std::string family;
  std::vector<std::string> params;
  std::string output = "-";
  int component = 0;
};

int run_gen(const GenArgs& a, std::ostream& out) {
  Graph g = path_graph(1);
  std::optional<std::size_t> components;
  const auto& p = a.params;
  if (a.family == "path") {
    expect_params(a.family, p, 1);
    g = path_graph(to_int(p[0], "order"));
  } else if (a.family == "cycle") {
    expect_params(a.family, p, 1);
    g = cycle_graph(to_int(p[0], "order"));
  } else if (a.family == "complete") {
    expect_params(a.family, p, 1);
    g = complete_graph(to_int(p[0], "order"));
  } else if (a.family == "hyperoctahedron") {
    expect_params(a.family, p, 1);
    g = hyperoctahedron(to_int(p[0], "dimension"));
  } else if (a.family == "grid") {
    expect_params(a.family, p, 2);
    g = grid_graph(to_int(p[0], "rows"), to_int(p[1], "columns"));
  } else if (a.family == "star") {
    std::vector<int> radii;
    for (const auto& r : p) radii.push_back(to_int(r, "radius"));
    g = star_tree(radii);
  } else if (a.family == "strong" || a.family == "tensor") {
    expect_params(a.family, p, 2);
    Graph h1 = read_graph_file(p[0]);
    Graph h2 = read_graph_file(p[1]);
    if (a.family == "strong") {
      g = strong_product(h1, h2);
    } else {
      auto parts = tensor_product(h1, h2);
      if (a.component < 0 || a.component >= int(parts.size())) {
        throw Error(ErrorCode::ParameterError, "tensor product has " + std::to_string(parts.size()) +
                                                   " components, no component " + std::to_string(a.component));
      }
      components = parts.size();
      g = parts[a.component].graph;
    }
  } else {
    throw Error(ErrorCode::ParameterError, "unknown family '" + a.family + "'");
  }

  if (a.output == "-") {
    if (components) out << "# components " << *components << '\n';
    write_graph(out, g);
  } else {
    write_graph_file(a.output, g);
    if (components) out << "components " << *components << '\n';
  }
  return kHolds;
}

int run_dist(const std::string& path, std::ostream& out) {
  Graph g = read_graph_file(path);
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) out << (v ? " " : "") << g.distance(u, v);
    out << '\n';
  }
  out << "diameter " << g.diameter() << '\n';
  return kHolds;
}

struct HellyArgs {
  std::string graph;
  int n = 0;
  int m = 0;
  bool bipartite = false;
  std::optional<int> t;
  std::optional<int> d;
  int jobs = 1;
};

int report_helly(const HellyResult& r, std::ostream& out) {
  if (!r) {
    out << "holds\n";
    return kHolds;
  }
  write_violation(out, *r);
  return kFails;
}

int run_helly(const HellyArgs& a, std::ostream& out) {
  Graph g = read_graph_file(a.graph);
  HellyOptions opts{a.jobs};
  if (a.t || a.d) {
    if (!a.t || !a.d) throw Error(ErrorCode::ParameterError, "--t and --d go together");
    if (a.bipartite) throw Error(ErrorCode::ParameterError, "--bipartite cannot be combined with --t");
    return report_helly(t_helly_check(g, *a.d, *a.t, opts), out);
  }
  if (a.n == 0 || a.m == 0) throw Error(ErrorCode::ParameterError, "--n and --m are required");
  if (a.bipartite) return report_helly(bipartite_helly_check(g, a.n, a.m, opts), out);
  return report_helly(helly_check(g, a.n, a.m, opts), out);
}

int run_oracle_helly(const HellyArgs& a, std::ostream& out) {
  if (a.n == 0 || a.m == 0) throw Error(ErrorCode::ParameterError, "--n and --m are required");
  return report_helly(brute_force_helly(read_graph_file(a.graph), a.n, a.m), out);
}

struct ExtendArgs {
  std::string map;
  std::string targets;
  std::optional<int> box;
  std::optional<int> t;
};

std::vector<LatticePoint> superset_for(const LatticeMap& f, const ExtendArgs& a) {
  std::vector<LatticePoint> points;
  if (a.box) {
    points = box_vertices(make_box(f.domain.dim, *a.box));
  } else {
    std::ifstream in(a.targets);
    if (!in) throw Error(ErrorCode::Parse, "cannot open " + a.targets);
    points = read_lattice_points(in);
    for (const auto& p : points) {
      if (p.dim() != f.domain.dim) throw Error(ErrorCode::DimensionMismatch, to_string(p) + " in " + a.targets);
    }
  }
  for (const auto& p : f.points()) points.push_back(p);
  return points;
}

std::vector<Vertex> superset_for(const GraphMap& f, const ExtendArgs& a) {
  if (a.box) throw Error(ErrorCode::ParameterError, "--box needs a lattice map");
  std::ifstream in(a.targets);
  if (!in) throw Error(ErrorCode::Parse, "cannot open " + a.targets);
  auto points = read_vertex_points(in);
  for (const auto& p : f.points()) points.push_back(p);
  return points;
}

void print_map(std::ostream& out, const LatticeMap& f, const MapFile& file) { write_map(out, f, file.target_path); }

void print_map(std::ostream& out, const GraphMap& f, const MapFile& file) {
  write_map(out, f, file.target_path, file.domain_path);
}

template <class Point>
void print_failure(std::ostream& out, const ExtensionFailure<Point>& fail) {
  out << "stuck " << point_string(fail.blocking_point) << '\n';
  for (const auto& c : fail.constraints) out << "constraint " << c.center << ' ' << c.radius << '\n';
}

int run_extend(const ExtendArgs& a, bool oracle, std::ostream& out) {
  if (a.box.has_value() == !a.targets.empty()) {
    throw Error(ErrorCode::ParameterError, "give exactly one of --targets and --box");
  }
  MapFile file = read_map_file(a.map);
  return std::visit(
      [&](auto& f) -> int {
        if (a.t) f.lipschitz = *a.t;
        auto superset = superset_for(f, a);
        if (oracle) {
          auto found = brute_force_extension(f, superset, f.lipschitz);
          if (!found) {
            out << "no extension\n";
            return kFails;
          }
          print_map(out, *found, file);
          return kHolds;
        }
        auto outcome = greedy_extend(f, superset);
        if (!outcome.ok()) {
          print_failure(out, outcome.failure());
          return kFails;
        }
        print_map(out, outcome.map(), file);
        return kHolds;
      },
      file.map);
}

std::string_view precondition_name(HellyPrecondition p) {
  switch (p) {
    case HellyPrecondition::Verified: return "verified";
    case HellyPrecondition::Failed: return "failed";
    case HellyPrecondition::Unchecked: return "unchecked";
  }
  return "unchecked";
}

int run_holefill(const std::string& path, bool construct, std::ostream& out) {
  BoundaryFile file = read_boundary_file(path);
  auto decision = hole_fill_decide(file.bc);
  out << "extendable " << (decision.extendable ? "yes" : "no") << '\n';
  out << "helly-precondition " << precondition_name(decision.precondition) << '\n';
  if (decision.violation) {
    const auto& v = *decision.violation;
    out << "violation " << to_string(v.p) << ' ' << to_string(v.q) << " target=" << v.target_distance
        << " lattice=" << v.lattice_distance << '\n';
    return kFails;
  }
  if (!construct) return kHolds;
  auto result = hole_fill_construct(file.bc);
  if (!result.ok()) {
    print_failure(out, result.failure());
    return kFails;
  }
  write_map(out, result.filling(), file.target_path);
  return kHolds;
}

struct HarnessArgs {
  int d = 2;
  int max_vertices = 5;
  bool slow = false;
  int samples = 8;
};

int run_harness(const HarnessArgs& a, std::uint64_t seed, int jobs, std::ostream& out) {
  HarnessOptions opts;
  opts.slow = a.slow;
  opts.greedy_samples = a.samples;
  opts.seed = seed;
  opts.jobs = jobs;
  auto report = kirszbraun_equivalence_harness(a.d, a.max_vertices, opts);
  write_report(out, report);
  return report.all_agree() ? kHolds : kFails;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Helly-property recognition and Lipschitz extension into graphs", "kirszbraun"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 0;
  int jobs = 1;
  app.add_option("--seed", seed, "Seed for randomized steps")->capture_default_str();
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write a graph from a named family");
  gen_cmd->add_option("--family", gen.family, "path|cycle|complete|hyperoctahedron|grid|star|strong|tensor")
      ->required();
  gen_cmd->add_option("params", gen.params, "Family parameters (orders, radii or graph files)");
  gen_cmd->add_option("-o,--output", gen.output, "Output graph file ('-' for standard output)");
  gen_cmd->add_option("--component", gen.component, "Tensor product component to write");

  std::string dist_path;
  auto* dist_cmd = app.add_subcommand("dist", "Print the distance matrix and diameter");
  dist_cmd->add_option("graph", dist_path)->required();

  HellyArgs helly;
  auto* helly_cmd = app.add_subcommand("helly", "Decide the (n,m)-Helly property");
  helly_cmd->add_option("graph", helly.graph)->required();
  helly_cmd->add_option("--n", helly.n, "Collection size");
  helly_cmd->add_option("--m", helly.m, "Subcollection size");
  helly_cmd->add_flag("--bipartite", helly.bipartite, "Restrict intersections to a partite class");
  helly_cmd->add_option("--t", helly.t, "Radii are multiples of t (checks (2d,2))");
  helly_cmd->add_option("--d", helly.d, "Dimension for --t");

  ExtendArgs extend;
  auto add_extend_options = [](CLI::App* cmd, ExtendArgs& a) {
    cmd->add_option("--map", a.map, "Map file")->required();
    cmd->add_option("--targets", a.targets, "File of points to fill");
    cmd->add_option("--box", a.box, "Fill the box {0..n}^d");
    cmd->add_option("--t", a.t, "Lipschitz constant (overrides the map header)");
  };
  auto* extend_cmd = app.add_subcommand("extend", "Greedy Lipschitz extension");
  add_extend_options(extend_cmd, extend);

  std::string boundary;
  bool construct = false;
  auto* holefill_cmd = app.add_subcommand("holefill", "Decide whether a box boundary map fills in");
  holefill_cmd->add_option("--boundary", boundary, "Boundary file")->required();
  holefill_cmd->add_flag("--construct", construct, "Also construct a filling");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force counterparts");
  oracle_cmd->require_subcommand(1);
  oracle_cmd->fallthrough();
  ExtendArgs oracle_extend;
  auto* oracle_extend_cmd = oracle_cmd->add_subcommand("extend", "Backtracking extension");
  add_extend_options(oracle_extend_cmd, oracle_extend);
  HellyArgs oracle_helly;
  auto* oracle_helly_cmd = oracle_cmd->add_subcommand("helly", "Helly property by raw enumeration");
  oracle_helly_cmd->add_option("graph", oracle_helly.graph)->required();
  oracle_helly_cmd->add_option("--n", oracle_helly.n, "Collection size")->required();
  oracle_helly_cmd->add_option("--m", oracle_helly.m, "Subcollection size")->required();

  HarnessArgs harness;
  auto* harness_cmd = app.add_subcommand("harness", "Compare Helly status with the star-tree oracle");
  harness_cmd->add_option("--d", harness.d, "Dimension (1 or 2)")->required();
  harness_cmd->add_option("--max-vertices", harness.max_vertices, "Largest graph order")->required();
  harness_cmd->add_flag("--slow", harness.slow, "Allow d = 2 with 6-vertex graphs");
  harness_cmd->add_option("--samples", harness.samples, "Greedy box samples per Helly graph")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kError;
  }

  try {
    helly.jobs = jobs;
    if (*gen_cmd) return run_gen(gen, out);
    if (*dist_cmd) return run_dist(dist_path, out);
    if (*helly_cmd) return run_helly(helly, out);
    if (*extend_cmd) return run_extend(extend, false, out);
    if (*holefill_cmd) return run_holefill(boundary, construct, out);
    if (*oracle_extend_cmd) return run_extend(oracle_extend, true, out);
    if (*oracle_helly_cmd) return run_oracle_helly(oracle_helly, out);
    if (*harness_cmd) return run_harness(harness, seed, jobs, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace kb::cli
