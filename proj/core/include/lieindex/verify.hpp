#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lieindex/filiform.hpp"
#include "lieindex/graph.hpp"
#include "lieindex/index.hpp"
#include "lieindex/json_io.hpp"

namespace lieindex {

struct VerificationCase {
  std::string id;         // e.g. "thm3.4/g=4"
  std::string section;    // "2".."6", or "properties"
  int criterion = 0;      // acceptance criterion 1..14
  std::string expected;
  std::string computed;
  bool passed = false;    // expected == computed
  std::string method;
};

struct NamedGraph {
  std::string name;
  SimpleGraph graph;
};

struct NamedFiliform {
  std::string name;
  FiliformAlgebra algebra;
};

struct NamedAlgebra {
  std::string name;
  LieAlgebra algebra;
};

/// K_2..K_6, paths P_1..P_8, cycles C_3..C_8, stars K_{1,1}..K_{1,6} and
/// 50 seeded random graphs on 2..10 vertices.
std::vector<NamedGraph> graph_corpus();

/// L_n (3 <= n <= 10), Q_n (even 4 <= n <= 10), g_{n,k} (odd k, 3 <= k <=
/// n <= 11), 25 random adapted perturbations for each n in {5, 7, 9}, and
/// adapted basis changes of Q_n and random graded algebras in even
/// dimensions.
std::vector<NamedFiliform> filiform_corpus();

/// Every algebra the verification touches: free nilpotent, metabelian,
/// graph and filiform algebras.
std::vector<NamedAlgebra> algebra_corpus();

struct VerifyOptions {
  /// Keep only cases of this section ("2".."6" or "properties").
  std::optional<std::string> section;
  RankOptions rank;
  /// Called once per finished case (progress reporting).
  std::function<void(const VerificationCase&)> on_case;
};

/// Runs the acceptance matrix (criteria 1..14).
std::vector<VerificationCase> run_verification(const VerifyOptions& options = {});

bool all_passed(const std::vector<VerificationCase>& cases);

Json verification_to_json(const std::vector<VerificationCase>& cases);
/// Aligned text table, one line per case plus a summary line.
std::string verification_table(const std::vector<VerificationCase>& cases);

}  // namespace lieindex
