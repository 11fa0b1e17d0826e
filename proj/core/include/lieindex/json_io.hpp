#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "lieindex/graph.hpp"
#include "lieindex/index.hpp"
#include "lieindex/lie_algebra.hpp"

namespace lieindex {

using Json = nlohmann::json;

/// Throws ParseError on malformed text.
Json parse_json_text(const std::string& text);
/// Reads and parses a file; throws ParseError if it cannot be read or parsed.
Json read_json_file(const std::string& path);
/// Compact by default; two-space indentation when pretty.
std::string dump_json(const Json& j, bool pretty = false);

/// {"dim": n, "labels": [...], "brackets": [{"i": i, "j": j, "c": {"k": "p/q"}}]}
/// with 0-based indices, i < j, zero coefficients omitted.
Json algebra_to_json(const LieAlgebra& g);
/// Throws ParseError on schema violations (including i >= j).
LieAlgebra algebra_from_json(const Json& j);

/// {"coords": ["p/q", ...]}
Json functional_to_json(const LinearFunctional& ell);
LinearFunctional functional_from_json(const Json& j, std::optional<std::size_t> expected_dim = std::nullopt);

/// {"vertices": n, "edges": [[i, j], ...]}, 0-based, i < j.
Json graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const Json& j);

Json vector_to_json(const Vector& v);
Json subspace_to_json(const Subspace& s);
Json matching_to_json(const Matching& m);
Json method_to_json(const RankMethod& m);
Json index_report_to_json(const IndexReport& r);

}  // namespace lieindex
