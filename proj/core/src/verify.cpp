#include "lieindex/verify.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "lieindex/algebra_ops.hpp"
#include "lieindex/errors.hpp"
#include "lieindex/free_nilpotent.hpp"
#include "lieindex/structure_matrix.hpp"

namespace lieindex {
namespace {

struct Outcome {
  std::string computed;
  std::string method;
};

std::string str(std::size_t v) { return std::to_string(v); }
std::string str(long v) { return std::to_string(v); }

std::string method_text(const RankMethod& m) {
  if (m.kind == RankMethod::Kind::Certified) return "certified rank (Bareiss over Q[y])";
  return "randomized rank mod " + std::to_string(m.prime) + ", trials=" + std::to_string(m.trials) +
         ", seed=" + std::to_string(m.seed);
}

std::size_t binomial2(std::size_t g) { return g * (g - 1) / 2; }

class Runner {
 public:
  explicit Runner(const VerifyOptions& options) : options_(options) {}

  bool wants(const std::string& section) const { return !options_.section || *options_.section == section; }

  template <class F>
  void run(std::string id, const std::string& section, int criterion, std::string expected, F compute) {
    if (!wants(section)) return;
    VerificationCase c;
    c.id = std::move(id);
    c.section = section;
    c.criterion = criterion;
    c.expected = std::move(expected);
    try {
      Outcome out = compute();
      c.computed = std::move(out.computed);
      c.method = std::move(out.method);
    } catch (const std::exception& e) {
      c.computed = std::string("error: ") + e.what();
      c.method = "exception";
    }
    c.passed = c.expected == c.computed;
    if (options_.on_case) options_.on_case(c);
    cases_.push_back(std::move(c));
  }

  IndexReport index_of(const LieAlgebra& g, bool witness = false) const {
    IndexOptions o;
    o.rank = options_.rank;
    o.witness = witness;
    return index(g, o);
  }

  const RankOptions& rank() const { return options_.rank; }
  std::vector<VerificationCase> take() { return std::move(cases_); }

 private:
  const VerifyOptions& options_;
  std::vector<VerificationCase> cases_;
};

const std::vector<std::pair<std::size_t, std::size_t>> kWittCases = {
    {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {3, 4}, {4, 2}, {4, 3}, {4, 4}, {3, 5}};

void witt_cases(Runner& r) {
  for (const auto& [g, c] : kWittCases) {
    std::ostringstream expected;
    expected << "dim=" << witt_dimension(g, c).total.get_str() << ";layers=";
    for (std::size_t w = 1; w <= c; ++w) expected << (w > 1 ? "," : "") << witt_layer(g, w).get_str();
    r.run("prop2.5/g=" + str(g) + ",c=" + str(c), "2", 1, expected.str(), [&] {
      const FreeNilpotentAlgebra f = build_free_nilpotent(g, c);
      std::ostringstream computed;
      computed << "dim=" << f.dim() << ";layers=";
      for (std::size_t w = 1; w <= c; ++w) computed << (w > 1 ? "," : "") << f.layer_size(w);
      return Outcome{computed.str(), "Hall basis enumeration vs Witt formula"};
    });
  }
}

void free_two_step_cases(Runner& r) {
  for (std::size_t g = 2; g <= 7; ++g) {
    const std::size_t expected = binomial2(g) + (g % 2);
    r.run("prop3.2/g=" + str(g), "3", 2, str(expected), [&] {
      const IndexReport rep = r.index_of(build_free_nilpotent(g, 2).algebra);
      return Outcome{str(rep.index), method_text(rep.method)};
    });
  }
  // alpha(F_{g,2}) = C(g,2) + 1: Z + <x1> is abelian of that size, and any
  // abelian subalgebra leaving Z sits in the centralizer of one of its
  // elements outside Z, all of which have that dimension.
  for (std::size_t g = 2; g <= 7; ++g) {
    r.run("prop3.1/g=" + str(g), "3", 2, str(binomial2(g) + 1), [&] {
      const LieAlgebra alg = build_free_nilpotent(g, 2).algebra;
      const std::size_t n = alg.dim();
      const Subspace z = center(alg);
      Subspace witness = z;
      witness.add(unit_vector(n, 0));
      if (!is_abelian_subalgebra(alg, witness)) return Outcome{"witness not abelian", "exact"};
      std::mt19937_64 rng(g);
      std::uniform_int_distribution<int> coeff(-5, 5);
      std::vector<Vector> probes;
      for (std::size_t i = 0; i < g; ++i) probes.push_back(unit_vector(n, i));
      for (int s = 0; s < 20; ++s) {
        Vector v = zero_vector(n);
        for (auto& x : v) x = coeff(rng);
        probes.push_back(v);
      }
      for (const auto& v : probes) {
        if (z.contains(v)) continue;
        const std::size_t d = centralizer(alg, Subspace::span(n, {v})).dim();
        if (d != witness.dim()) return Outcome{"centralizer of dim " + str(d), "exact"};
      }
      return Outcome{str(witness.dim()), "abelian witness Z+<x1>, centralizers of non-central probes"};
    });
  }
}

void example_cases(Runner& r) {
  r.run("ex3.3/brackets", "3", 3, "[1,2]=3;[1,3]=4;[2,3]=5", [&] {
    const LieAlgebra alg = build_free_nilpotent(2, 3).algebra;
    std::string out;
    for (const auto& b : alg.nonzero_brackets()) {
      if (!out.empty()) out += ";";
      out += "[" + str(b.i + 1) + "," + str(b.j + 1) + "]=";
      if (b.coeffs.size() == 1 && b.coeffs[0].second == 1)
        out += str(b.coeffs[0].first + 1);
      else
        out += "?";
    }
    return Outcome{out, "Hall basis structure constants"};
  });
  r.run("ex3.3/rank", "3", 3, "2", [&] {
    RankOptions o = r.rank();
    o.certify = true;
    const GenericRankResult res = generic_rank(structure_matrix(build_free_nilpotent(2, 3).algebra), o);
    return Outcome{str(res.rank), method_text(res.method)};
  });
  r.run("ex3.3/index", "3", 3, "3", [&] {
    IndexOptions o;
    o.rank = r.rank();
    o.rank.certify = true;
    const IndexReport rep = index(build_free_nilpotent(2, 3).algebra, o);
    return Outcome{str(rep.index), method_text(rep.method)};
  });
}

void three_step_cases(Runner& r) {
  for (std::size_t g = 3; g <= 5; ++g) {
    const std::size_t chi = (2 * g * g * g + 3 * g * g - 11 * g) / 6;
    r.run("thm3.4/g=" + str(g), "3", 4, str(chi), [&] {
      const IndexReport rep = r.index_of(build_free_nilpotent(g, 3).algebra);
      return Outcome{str(rep.index), method_text(rep.method)};
    });
    r.run("thm3.4/g=" + str(g) + "/witness", "3", 4, str(chi), [&] {
      const FreeNilpotentAlgebra f = build_fg3_paper_basis(g);
      LinearFunctional ell{zero_vector(f.dim())};
      for (std::size_t k = 1; k <= g; ++k)
        for (std::size_t j = 1; j < k; ++j)
          for (std::size_t i = 1; i <= k; ++i) ell.coords[fg3_triple_index(g, i, j, k)] = Rational(i + j + k);
      return Outcome{str(stabilizer(f.algebra, ell).dim), "exact stabilizer of sum (i+j+k) x*_ijk"};
    });
    const std::size_t alpha = (2 * g * g * g + 3 * g * g - 5 * g) / 6;
    r.run("cor3.5/g=" + str(g), "3", 5, str(alpha), [&] {
      const LieAlgebra alg = build_free_nilpotent(g, 3).algebra;
      const Subspace derived = lower_central_series(alg).at(1);
      const AlphaSandwich s = alpha_sandwich(alg, derived, r.rank());
      if (!s.certified) return Outcome{"bounded " + str(s.lower) + ".." + str(s.upper), "sandwich open"};
      return Outcome{str(s.lower), "alpha sandwich closed by [g,g]"};
    });
  }
}

void table_cases(Runner& r) {
  struct Row {
    std::size_t g, c, dim, center, rank, chi;
  };
  const std::vector<Row> rows = {{2, 4, 8, 3, 4, 4}, {3, 4, 32, 18, 8, 24}, {4, 4, 90, 60, 14, 76}, {3, 5, 80, 48, 12, 68}};
  for (const Row& row : rows) {
    const std::string expected =
        "(" + str(row.dim) + "," + str(row.center) + "," + str(row.rank) + "," + str(row.chi) + ")";
    r.run("remark-table/F_{" + str(row.g) + "," + str(row.c) + "}", "3", 6, expected, [&] {
      const IndexReport rep = r.index_of(build_free_nilpotent(row.g, row.c).algebra);
      return Outcome{"(" + str(rep.dim) + "," + str(rep.center_dim) + "," + str(rep.generic_rank) + "," +
                         str(rep.index) + ")",
                     method_text(rep.method)};
    });
  }
}

void graph_cases(Runner& r) {
  if (!r.wants("4")) return;
  for (const auto& [name, graph] : graph_corpus()) {
    const MatchingResult blossom = matching_number(graph);
    const std::size_t nu_exhaustive = matching_number_exhaustive(graph);
    const std::size_t v = graph.vertex_count(), e = graph.edges().size();
    r.run("prop4.4/" + name, "4", 7, "index=" + str(v + e - 2 * blossom.size) + ",nu=" + str(blossom.size), [&] {
      const IndexReport rep = r.index_of(build_graph_algebra(graph));
      return Outcome{"index=" + str(rep.index) + ",nu=" + str(nu_exhaustive),
                     "matching formula with blossom nu vs " + method_text(rep.method) + " and exhaustive nu"};
    });
    r.run("remark4.5/" + name, "4", 8, str(v + e - 2 * nu_exhaustive), [&] {
      if (!is_matching(graph, blossom.matching) || blossom.matching.edges.size() != blossom.size)
        return Outcome{"invalid matching", "blossom"};
      const LieAlgebra alg = build_graph_algebra(graph);
      const std::size_t d = stabilizer(alg, matching_functional(graph, blossom.matching)).dim;
      return Outcome{str(d), "exact stabilizer of the matching functional"};
    });
  }
}

void metabelian_cases(Runner& r) {
  const std::vector<std::pair<std::size_t, std::size_t>> thm52 = {{3, 3}, {3, 4}, {4, 3}, {3, 5}};
  auto ooms_case = [&](const std::string& id, int criterion, std::size_t g, std::size_t c) {
    r.run(id + "/ooms", "5", criterion, "holds", [&] {
      const LieAlgebra alg = build_metabelian(g, c).algebra;
      const Subspace h = lower_central_series(alg).at(1);
      const OomsResult o = ooms_criterion(alg, h, r.rank());
      const IndexReport rep = r.index_of(alg);
      if (!o.holds) return Outcome{"fails (rect rank " + str(o.rect_rank) + ")", "rank of ([x_i, h_j])"};
      if (o.predicted_index != rep.index) return Outcome{"holds but predicts " + str(*o.predicted_index), ""};
      return Outcome{"holds", "rect rank " + str(o.rect_rank) + " = dim g - dim h, 2 dim h - dim g = index"};
    });
  };
  for (const auto& [g, c] : thm52) {
    const std::string id = "thm5.2/g=" + str(g) + ",c=" + str(c);
    const LieAlgebra alg = build_metabelian(g, c).algebra;
    r.run(id, "5", 9, str(alg.dim() - 2 * g), [&] {
      const IndexReport rep = r.index_of(alg);
      return Outcome{str(rep.index), method_text(rep.method) + ", dim " + str(alg.dim())};
    });
    ooms_case(id, 9, g, c);
  }
  for (std::size_t c = 4; c <= 7; ++c) {
    const std::string id = "thm5.4/c=" + str(c);
    const std::size_t dim = (c * c - c + 4) / 2, chi = (c * c - c - 4) / 2;
    r.run(id, "5", 10, "dim=" + str(dim) + ",index=" + str(chi), [&] {
      const LieAlgebra alg = build_metabelian(2, c).algebra;
      const IndexReport rep = r.index_of(alg);
      return Outcome{"dim=" + str(alg.dim()) + ",index=" + str(rep.index), method_text(rep.method)};
    });
    ooms_case(id, 10, 2, c);
  }
}

std::string join_indices(const std::vector<std::size_t>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + str(v[i]);
  return out + "}";
}

void filiform_cases(Runner& r) {
  if (!r.wants("6")) return;
  auto index_case = [&](const std::string& id, const LieAlgebra& alg, std::size_t expected) {
    r.run(id, "6", 11, str(expected), [&] {
      const IndexReport rep = r.index_of(alg);
      return Outcome{str(rep.index), method_text(rep.method)};
    });
    r.run(id + "/witness", "6", 11, str(expected), [&] {
      return Outcome{str(stabilizer(alg, last_dual(alg.dim())).dim), "exact stabilizer of e_n*"};
    });
  };
  for (std::size_t n = 3; n <= 10; ++n) index_case("sec6/L_" + str(n), build_L(n).algebra, n - 2);
  for (std::size_t n = 4; n <= 10; n += 2) index_case("sec6/Q_" + str(n), build_Q(n).algebra, 2);
  for (std::size_t n = 3; n <= 11; ++n)
    for (std::size_t k = 3; k <= n; k += 2)
      index_case("prop6.7/n=" + str(n) + ",k=" + str(k), build_G(n, k).algebra, n - k + 1);
  for (std::size_t n = 4; n <= 10; n += 2) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const FiliformAlgebra f = random_adapted_basis_change(build_Q(n), seed);
      r.run("prop6.9/Q_" + str(n) + "/seed=" + std::to_string(seed), "6", 11, "2", [&] {
        const IndexReport rep = r.index_of(f.algebra);
        return Outcome{str(rep.index), method_text(rep.method) + ", Q_n in a random adapted basis"};
      });
    }
  }
  for (std::size_t n = 3; n <= 11; ++n) {
    std::vector<std::size_t> expected;
    for (std::size_t i = (n % 2 == 1 ? 1 : 2); i + 2 <= n; i += 2) expected.push_back(i);
    if (n == 3) expected = {1};
    r.run("cor6.8/n=" + str(n), "6", 11, join_indices(expected), [&] {
      return Outcome{join_indices(achievable_indices(n, r.rank())), "indices of g_{n,k} over odd k"};
    });
  }

  for (const auto& [name, f] : filiform_corpus()) {
    const std::size_t n = f.dim();
    const IndexReport rep = r.index_of(f.algebra);
    if (n % 2 == 1) {
      const std::string by_index = rep.index == 1 ? "index-one" : "not index-one";
      r.run("thm6.3/" + name, "6", 12, by_index, [&] {
        const IndexOneResult res = index_one_criterion(f);
        std::string method = "alpha_i = e_n-coefficient of [e_i, e_{n-i}]";
        if (res.witness) method += ", first vanishing at i=" + str(*res.witness);
        return Outcome{res.is_index_one ? "index-one" : "not index-one", method};
      });
    }
    r.run("thm6.4/" + name, "6", 13, "holds", [&] {
      std::size_t checked = 0;
      for (std::size_t k = 2; k <= n; ++k) {
        const auto bound = lower_bound(f, k);
        if (!bound) continue;
        ++checked;
        if (static_cast<long>(rep.index) < *bound)
          return Outcome{"violated at k=" + str(k) + ": index " + str(rep.index) + " < " + str(*bound), ""};
      }
      return Outcome{"holds", str(checked) + " abelian g_k checked against index " + str(rep.index)};
    });
  }
}

void property_cases(Runner& r) {
  if (!r.wants("properties")) return;
  for (const auto& [name, alg] : algebra_corpus()) {
    const std::size_t n = alg.dim();
    r.run("property/jacobi/" + name, "properties", 14, "ok", [&] {
      const auto v = check_jacobi(alg);
      if (v) return Outcome{"fails at (" + str(v->i) + "," + str(v->j) + "," + str(v->k) + ")", "all triples"};
      return Outcome{"ok", "all basis triples"};
    });
    const IndexReport rep = r.index_of(alg, true);
    r.run("property/rank-even/" + name, "properties", 14, "even", [&] {
      return Outcome{rep.generic_rank % 2 == 0 ? "even" : "odd rank " + str(rep.generic_rank), method_text(rep.method)};
    });
    r.run("property/center-bounds/" + name, "properties", 14, "dimZ<=index<=dim", [&] {
      const bool ok = rep.center_dim <= rep.index && rep.index <= n;
      return Outcome{ok ? "dimZ<=index<=dim"
                        : "dimZ=" + str(rep.center_dim) + ",index=" + str(rep.index) + ",dim=" + str(n),
                     "center by exact nullspace"};
    });
    r.run("property/stabilizers/" + name, "properties", 14, "ok", [&] {
      if (!rep.witness) return Outcome{"no witness", ""};
      const std::size_t w = stabilizer(alg, *rep.witness).dim;
      if (w != rep.index) return Outcome{"witness stabilizer " + str(w) + " != index " + str(rep.index), ""};
      std::mt19937_64 rng(n);
      std::uniform_int_distribution<int> coeff(-3, 3);
      for (int s = 0; s < 8; ++s) {
        LinearFunctional ell{zero_vector(n)};
        for (auto& x : ell.coords) x = coeff(rng);
        const std::size_t d = stabilizer(alg, ell).dim;
        if ((n - d) % 2 != 0 || d < rep.index) return Outcome{"stabilizer dim " + str(d), ""};
      }
      return Outcome{"ok", "witness attains the index; 8 sampled functionals have even codim and dim >= index"};
    });
    if (n > 20) continue;
    r.run("property/certified/" + name, "properties", 14, str(rep.generic_rank), [&] {
      RankOptions o = r.rank();
      o.certify = true;
      const GenericRankResult res = generic_rank(structure_matrix(alg), o);
      return Outcome{str(res.rank), "certified rank vs " + method_text(rep.method)};
    });
    r.run("property/sampling/" + name, "properties", 14, str(rep.index), [&] {
      return Outcome{str(index_by_sampling(alg, 50, r.rank().seed)), "min stabilizer over 50 sampled functionals"};
    });
  }
}

}  // namespace

std::vector<NamedGraph> graph_corpus() {
  std::vector<NamedGraph> out;
  for (std::size_t g = 2; g <= 6; ++g) out.push_back({"K_" + str(g), SimpleGraph::complete(g)});
  for (std::size_t n = 1; n <= 8; ++n) out.push_back({"P_" + str(n), SimpleGraph::path(n)});
  for (std::size_t n = 3; n <= 8; ++n) out.push_back({"C_" + str(n), SimpleGraph::cycle(n)});
  for (std::size_t s = 1; s <= 6; ++s) out.push_back({"K_{1," + str(s) + "}", SimpleGraph::star(s)});
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 2 + seed % 9;
    out.push_back({"random/n=" + str(n) + ",seed=" + std::to_string(seed), SimpleGraph::random(n, seed)});
  }
  return out;
}

std::vector<NamedFiliform> filiform_corpus() {
  std::vector<NamedFiliform> out;
  for (std::size_t n = 3; n <= 10; ++n) out.push_back({"L_" + str(n), build_L(n)});
  for (std::size_t n = 4; n <= 10; n += 2) out.push_back({"Q_" + str(n), build_Q(n)});
  for (std::size_t n = 3; n <= 11; ++n)
    for (std::size_t k = 5; k <= n; k += 2) out.push_back({"g_{" + str(n) + "," + str(k) + "}", build_G(n, k)});
  for (std::size_t n : {5, 7, 9})
    for (std::uint64_t seed = 0; seed < 25; ++seed)
      out.push_back({"random/n=" + str(n) + ",seed=" + std::to_string(seed), random_adapted_filiform(n, seed)});
  for (std::size_t n = 4; n <= 10; n += 2) {
    out.push_back({"Q_" + str(n) + "/rebased", random_adapted_basis_change(build_Q(n), n)});
    out.push_back({"random/n=" + str(n) + ",seed=" + str(n), random_adapted_filiform(n, n)});
  }
  return out;
}

std::vector<NamedAlgebra> algebra_corpus() {
  std::vector<NamedAlgebra> out;
  std::set<std::string> seen;
  auto add = [&](std::string name, LieAlgebra alg) {
    if (seen.insert(name).second) out.push_back({std::move(name), std::move(alg)});
  };
  for (const auto& [g, c] : kWittCases)
    add("F_{" + str(g) + "," + str(c) + "}", build_free_nilpotent(g, c).algebra);
  for (std::size_t g = 2; g <= 7; ++g) add("F_{" + str(g) + ",2}", build_free_nilpotent(g, 2).algebra);
  for (std::size_t g = 3; g <= 5; ++g) {
    add("F_{" + str(g) + ",3}", build_free_nilpotent(g, 3).algebra);
    add("F_{" + str(g) + ",3}/paper-basis", build_fg3_paper_basis(g).algebra);
  }
  for (const auto& [g, c] : std::vector<std::pair<std::size_t, std::size_t>>{{3, 3}, {3, 4}, {4, 3}, {3, 5}, {2, 4}, {2, 5}, {2, 6}, {2, 7}})
    add("M_{" + str(g) + "," + str(c) + "}", build_metabelian(g, c).algebra);
  for (const auto& [name, graph] : graph_corpus()) add("graph/" + name, build_graph_algebra(graph));
  for (auto& [name, f] : filiform_corpus()) add("filiform/" + name, f.algebra);
  return out;
}

std::vector<VerificationCase> run_verification(const VerifyOptions& options) {
  if (options.section) {
    static const std::set<std::string> known = {"2", "3", "4", "5", "6", "properties"};
    if (!known.count(*options.section))
      throw InvalidArgument("unknown section \"" + *options.section + "\" (expected 2..6 or properties)");
  }
  Runner r(options);
  witt_cases(r);
  free_two_step_cases(r);
  example_cases(r);
  three_step_cases(r);
  table_cases(r);
  graph_cases(r);
  metabelian_cases(r);
  filiform_cases(r);
  property_cases(r);
  return r.take();
}

bool all_passed(const std::vector<VerificationCase>& cases) {
  return std::all_of(cases.begin(), cases.end(), [](const VerificationCase& c) { return c.passed; });
}

Json verification_to_json(const std::vector<VerificationCase>& cases) {
  Json list = Json::array();
  std::size_t passed = 0;
  for (const auto& c : cases) {
    passed += c.passed;
    list.push_back({{"id", c.id},
                    {"section", c.section},
                    {"criterion", c.criterion},
                    {"expected", c.expected},
                    {"computed", c.computed},
                    {"status", c.passed ? "pass" : "fail"},
                    {"method", c.method}});
  }
  return {{"cases", std::move(list)}, {"passed", passed}, {"failed", cases.size() - passed}};
}

std::string verification_table(const std::vector<VerificationCase>& cases) {
  std::size_t id_w = 2, exp_w = 8, comp_w = 8;
  for (const auto& c : cases) {
    id_w = std::max(id_w, c.id.size());
    exp_w = std::max(exp_w, c.expected.size());
    comp_w = std::max(comp_w, c.computed.size());
  }
  std::ostringstream out;
  out << std::left << std::setw(id_w) << "id" << "  " << std::setw(exp_w) << "expected" << "  " << std::setw(comp_w)
      << "computed" << "  status\n";
  std::size_t passed = 0;
  for (const auto& c : cases) {
    passed += c.passed;
    out << std::setw(id_w) << c.id << "  " << std::setw(exp_w) << c.expected << "  " << std::setw(comp_w)
        << c.computed << "  " << (c.passed ? "pass" : "FAIL") << "\n";
  }
  out << passed << "/" << cases.size() << " cases passed\n";
  return out.str();
}

}  // namespace lieindex
