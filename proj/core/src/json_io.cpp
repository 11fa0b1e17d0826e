#include "lieindex/json_io.hpp"

#include <fstream>
#include <sstream>

#include "lieindex/errors.hpp"

namespace lieindex {
namespace {

const Json& require(const Json& j, const char* key, const char* context) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string(context) + ": missing \"" + key + "\"");
  return j.at(key);
}

std::size_t as_count(const Json& j, const std::string& what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(what + " must be a non-negative integer");
  return j.get<std::size_t>();
}

Rational as_rational(const Json& j, const std::string& what) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw ParseError(what + " must be a rational string \"p/q\"");
}

std::size_t parse_index_key(const std::string& key) {
  if (key.empty() || key.size() > 18 || key.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("coefficient key \"" + key + "\" is not a basis index");
  return std::stoull(key);
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

std::string dump_json(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

Json algebra_to_json(const LieAlgebra& g) {
  Json brackets = Json::array();
  for (const auto& b : g.nonzero_brackets()) {
    Json c = Json::object();
    for (const auto& [k, v] : b.coeffs) c[std::to_string(k)] = to_string(v);
    brackets.push_back({{"i", b.i}, {"j", b.j}, {"c", std::move(c)}});
  }
  return {{"dim", g.dim()}, {"labels", g.labels()}, {"brackets", std::move(brackets)}};
}

LieAlgebra algebra_from_json(const Json& j) {
  const std::size_t n = as_count(require(j, "dim", "algebra"), "dim");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& l = j.at("labels");
    if (!l.is_array() || l.size() != n) throw ParseError("labels must be an array of length dim");
    for (const auto& s : l) {
      if (!s.is_string()) throw ParseError("labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  } else {
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  }
  const Json& list = require(j, "brackets", "algebra");
  if (!list.is_array()) throw ParseError("brackets must be an array");
  std::vector<BracketEntry> entries;
  for (const auto& b : list) {
    BracketEntry e;
    e.i = as_count(require(b, "i", "bracket"), "i");
    e.j = as_count(require(b, "j", "bracket"), "j");
    if (e.i >= e.j) throw ParseError("bracket entries need i < j");
    if (e.j >= n) throw ParseError("bracket index out of range");
    const Json& c = require(b, "c", "bracket");
    if (!c.is_object()) throw ParseError("bracket coefficients must be an object");
    for (const auto& [key, value] : c.items()) {
      const std::size_t k = parse_index_key(key);
      if (k >= n) throw ParseError("coefficient index out of range");
      e.coeffs.emplace_back(k, as_rational(value, "coefficient"));
    }
    entries.push_back(std::move(e));
  }
  try {
    return LieAlgebra(std::move(labels), std::move(entries));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Json functional_to_json(const LinearFunctional& ell) { return {{"coords", vector_to_json(ell.coords)}}; }

LinearFunctional functional_from_json(const Json& j, std::optional<std::size_t> expected_dim) {
  const Json& coords = require(j, "coords", "functional");
  if (!coords.is_array()) throw ParseError("coords must be an array");
  LinearFunctional ell;
  for (const auto& c : coords) ell.coords.push_back(as_rational(c, "coordinate"));
  if (expected_dim && ell.coords.size() != *expected_dim)
    throw ParseError("functional has " + std::to_string(ell.coords.size()) + " coordinates, expected " +
                     std::to_string(*expected_dim));
  return ell;
}

Json graph_to_json(const SimpleGraph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  return {{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

SimpleGraph graph_from_json(const Json& j) {
  const std::size_t n = as_count(require(j, "vertices", "graph"), "vertices");
  const Json& list = require(j, "edges", "graph");
  if (!list.is_array()) throw ParseError("edges must be an array");
  std::vector<Edge> edges;
  for (const auto& e : list) {
    if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [i, j]");
    const std::size_t a = as_count(e[0], "edge end"), b = as_count(e[1], "edge end");
    if (a >= b) throw ParseError("edges need i < j");
    edges.emplace_back(a, b);
  }
  try {
    return SimpleGraph(n, std::move(edges));
  } catch (const InvalidArgument& e) {
    throw ParseError(e.what());
  }
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json subspace_to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.basis()) basis.push_back(vector_to_json(v));
  return {{"dim", s.dim()}, {"basis", std::move(basis)}};
}

Json matching_to_json(const Matching& m) {
  Json edges = Json::array();
  for (const auto& [a, b] : m.edges) edges.push_back({a, b});
  return edges;
}

Json method_to_json(const RankMethod& m) {
  if (m.kind == RankMethod::Kind::Certified) return {{"kind", "certified"}, {"algorithm", "bareiss"}};
  return {{"kind", "randomized"},
          {"trials", m.trials},
          {"seed", m.seed},
          {"prime", std::to_string(m.prime)},
          {"failure_bound", to_string(m.failure_bound)}};
}

Json index_report_to_json(const IndexReport& r) {
  Json out = {{"dim", r.dim},
              {"index", r.index},
              {"generic_rank", r.generic_rank},
              {"method", method_to_json(r.method)},
              {"witness", nullptr},
              {"center_dim", r.center_dim}};
  if (r.witness) out["witness"] = vector_to_json(r.witness->coords);
  return out;
}

}  // namespace lieindex
