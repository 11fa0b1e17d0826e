// lieindex command-line front end. Data goes to stdout, diagnostics to stderr.
//
// Exit codes: 0 ok, 1 verify-paper failure, 2 parse/invalid input,
// 3 resource guard, 4 Jacobi failure, 5 certify size gate, 70 internal error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lieindex/algebra_ops.hpp"
#include "lieindex/errors.hpp"
#include "lieindex/filiform.hpp"
#include "lieindex/free_nilpotent.hpp"
#include "lieindex/graph.hpp"
#include "lieindex/index.hpp"
#include "lieindex/json_io.hpp"
#include "lieindex/verify.hpp"

namespace {

using namespace lieindex;

enum Exit : int {
  kOk = 0,
  kVerifyFailed = 1,
  kInvalid = 2,
  kResource = 3,
  kJacobi = 4,
  kCertifyGate = 5,
  kInternal = 70,
};

bool pretty = false;

Json read_input(const std::string& path) {
  if (path != "-") return read_json_file(path);
  std::string text(std::istreambuf_iterator<char>(std::cin), {});
  return parse_json_text(text);
}

void emit(const Json& j, const std::string& path = "") {
  const std::string text = dump_json(j, pretty) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

LieAlgebra load_algebra(const std::string& path) {
  LieAlgebra g = algebra_from_json(read_input(path));
  require_jacobi(g);
  return g;
}

struct RankFlags {
  std::size_t trials = 3;
  std::uint64_t seed = 0;
  bool certify = false;
  std::size_t certify_gate = kDefaultCertifyGate;

  void attach(CLI::App* app) {
    app->add_option("--trials", trials, "Random specializations for the rank")->check(CLI::PositiveNumber);
    app->add_option("--seed", seed, "Seed for the random specializations");
    app->add_flag("--certify", certify, "Exact rank over Q(y) by fraction-free elimination");
    app->add_option("--certify-gate", certify_gate, "Largest matrix size allowed with --certify");
  }

  RankOptions options() const {
    RankOptions o;
    o.trials = trials;
    o.seed = seed;
    o.certify = certify;
    o.certify_gate = certify_gate;
    o.prime = PrimeModulus::from_environment();
    return o;
  }
};

struct ConstructArgs {
  std::string output;
  std::size_t generators = 0, nilpotency_class = 0, ceiling = kDefaultDimensionCeiling;
  bool triple_basis = false;
  std::string input;
  std::optional<std::size_t> complete, path, cycle, star, random;
  std::uint64_t seed = 0;
  std::string family;
  std::size_t dim = 0, k = 0;
};

void add_construct(CLI::App& app, ConstructArgs& a) {
  auto* construct = app.add_subcommand("construct", "Build an algebra and write it as JSON");
  construct->require_subcommand(1);
  construct->fallthrough();
  construct->add_option("-o,--output", a.output, "Output file (default stdout)");

  auto* free = construct->add_subcommand("free", "Free nilpotent algebra F_{g,c} on a Hall basis");
  free->add_option("--generators", a.generators, "Number of generators g")->required();
  free->add_option("--class", a.nilpotency_class, "Nilpotency class c")->required();
  free->add_option("--ceiling", a.ceiling, "Largest dimension allowed");
  free->add_flag("--triple-basis", a.triple_basis, "For c = 3: basis x_i, x_ij, x_ijk");
  free->callback([&a] {
    if (a.triple_basis) {
      if (a.nilpotency_class != 3) throw InvalidArgument("--triple-basis needs --class 3");
      emit(algebra_to_json(build_fg3_paper_basis(a.generators).algebra), a.output);
      return;
    }
    emit(algebra_to_json(build_free_nilpotent(a.generators, a.nilpotency_class, a.ceiling).algebra), a.output);
  });

  auto* meta = construct->add_subcommand("metabelian", "Metabelian quotient M_{g,c}");
  meta->add_option("--generators", a.generators, "Number of generators g")->required();
  meta->add_option("--class", a.nilpotency_class, "Nilpotency class c")->required();
  meta->add_option("--ceiling", a.ceiling, "Largest dimension of the free algebra built first");
  meta->callback([&a] {
    emit(algebra_to_json(build_metabelian(a.generators, a.nilpotency_class, a.ceiling).algebra), a.output);
  });

  auto* graph = construct->add_subcommand("graph", "Two-step algebra of a simple graph");
  auto* sources = graph->add_option_group("source");
  sources->add_option("--input", a.input, "Graph JSON file ('-' for stdin)");
  sources->add_option("--complete", a.complete, "Complete graph K_n");
  sources->add_option("--path", a.path, "Path on n vertices");
  sources->add_option("--cycle", a.cycle, "Cycle on n vertices");
  sources->add_option("--star", a.star, "Star with n leaves");
  sources->add_option("--random", a.random, "Random graph on n vertices (edge probability 1/2)");
  sources->require_option(1);
  graph->add_option("--seed", a.seed, "Seed for --random");
  graph->callback([&a] {
    std::optional<SimpleGraph> g;
    if (!a.input.empty()) g = graph_from_json(read_input(a.input));
    if (a.complete) g = SimpleGraph::complete(*a.complete);
    if (a.path) g = SimpleGraph::path(*a.path);
    if (a.cycle) g = SimpleGraph::cycle(*a.cycle);
    if (a.star) g = SimpleGraph::star(*a.star);
    if (a.random) g = SimpleGraph::random(*a.random, a.seed);
    emit(algebra_to_json(build_graph_algebra(*g)), a.output);
  });

  auto* fil = construct->add_subcommand("filiform", "Filiform algebra in an adapted basis");
  fil->add_option("--family", a.family, "L, Q, G, or random")
      ->required()
      ->check(CLI::IsMember({"L", "Q", "G", "random"}));
  fil->add_option("--dim", a.dim, "Dimension n")->required();
  fil->add_option("--k", a.k, "Odd parameter k of g_{n,k}");
  fil->add_option("--seed", a.seed, "Seed for the random family");
  fil->callback([&a] {
    FiliformAlgebra f;
    if (a.family == "L") f = build_L(a.dim);
    if (a.family == "Q") f = build_Q(a.dim);
    if (a.family == "G") {
      if (a.k == 0) throw InvalidArgument("--family G needs --k");
      f = build_G(a.dim, a.k);
    }
    if (a.family == "random") f = random_adapted_filiform(a.dim, a.seed);
    emit(algebra_to_json(f.algebra), a.output);
  });
}

int run(int argc, char** argv) {
  CLI::App app{"Index of nilpotent Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", pretty, "Indented JSON output");
  app.set_version_flag("--version", "lieindex 0.1.0");

  ConstructArgs construct_args;
  add_construct(app, construct_args);

  std::string algebra_path;
  RankFlags rank_flags;
  bool witness = false;
  auto* index_cmd = app.add_subcommand("index", "Index of an algebra given as JSON");
  index_cmd->add_option("algebra", algebra_path, "Algebra JSON file ('-' for stdin)")->required();
  rank_flags.attach(index_cmd);
  index_cmd->add_flag("--witness", witness, "Also return a functional attaining the index");
  index_cmd->callback([&] {
    const LieAlgebra g = load_algebra(algebra_path);
    IndexOptions o;
    o.rank = rank_flags.options();
    o.witness = witness;
    emit(index_report_to_json(index(g, o)));
  });

  auto* inv = app.add_subcommand("invariants", "Center, lower central series and derived series");
  inv->add_option("algebra", algebra_path, "Algebra JSON file ('-' for stdin)")->required();
  inv->callback([&] {
    const LieAlgebra g = load_algebra(algebra_path);
    Json lcs = Json::array();
    for (const auto& s : lower_central_series(g)) lcs.push_back(s.dim());
    const DerivedPair d = derived_subalgebra_pair(g);
    const auto c = nilpotency_class(g);
    emit({{"dim", g.dim()},
          {"center_dim", center(g).dim()},
          {"lower_central_series", std::move(lcs)},
          {"nilpotency_class", c ? Json(*c) : Json(nullptr)},
          {"derived_dim", d.derived.dim()},
          {"second_derived_dim", d.second_derived.dim()}});
  });

  std::string ell_path;
  auto* stab = app.add_subcommand("stabilizer", "Stabilizer g(ell) of a functional");
  stab->add_option("algebra", algebra_path, "Algebra JSON file ('-' for stdin)")->required();
  stab->add_option("--ell", ell_path, "Functional JSON {\"coords\": [...]}")->required();
  stab->callback([&] {
    const LieAlgebra g = load_algebra(algebra_path);
    const LinearFunctional ell = functional_from_json(read_json_file(ell_path), g.dim());
    const StabilizerResult r = stabilizer(g, ell);
    emit({{"dim", r.dim},
          {"codim", g.dim() - r.dim},
          {"functional", vector_to_json(ell.coords)},
          {"basis", subspace_to_json(r.stabilizer)["basis"]}});
  });

  std::string graph_path;
  RankFlags graph_rank;
  auto* gi = app.add_subcommand("graph-index", "Index of a graph algebra by matching and by rank");
  gi->add_option("graph", graph_path, "Graph JSON file ('-' for stdin)")->required();
  graph_rank.attach(gi);
  gi->callback([&] {
    const SimpleGraph g = graph_from_json(read_input(graph_path));
    const GraphIndex r = graph_index(g, graph_rank.options());
    emit({{"vertices", g.vertex_count()},
          {"edges", g.edges().size()},
          {"index", r.index},
          {"via_matching", r.via_matching},
          {"via_rank", r.via_rank},
          {"matching_number", r.matching.edges.size()},
          {"matching", matching_to_json(r.matching)}});
  });

  std::string section;
  bool table = false, progress = false;
  RankFlags verify_rank;
  int verify_status = kOk;
  auto* vp = app.add_subcommand("verify-paper", "Run the acceptance matrix; exit 1 if any case fails");
  vp->add_option("--section", section, "Only cases of section 2..6 or 'properties'");
  vp->add_flag("--table", table, "Aligned text table instead of JSON");
  vp->add_flag("--progress", progress, "Report each case on stderr");
  vp->add_option("--seed", verify_rank.seed, "Seed for the random specializations");
  vp->callback([&] {
    VerifyOptions o;
    if (!section.empty()) o.section = section;
    o.rank = verify_rank.options();
    if (progress)
      o.on_case = [](const VerificationCase& c) {
        std::cerr << (c.passed ? "pass " : "FAIL ") << c.id << "\n";
      };
    const auto cases = run_verification(o);
    if (table)
      std::cout << verification_table(cases);
    else
      emit(verification_to_json(cases));
    if (!all_passed(cases)) verify_status = kVerifyFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kResource;
  } catch (const JacobiError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kJacobi;
  } catch (const CertifyGateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCertifyGate;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return verify_status;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
