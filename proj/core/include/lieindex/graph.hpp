#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "lieindex/index.hpp"
#include "lieindex/lie_algebra.hpp"

namespace lieindex {

using Edge = std::pair<std::size_t, std::size_t>;

/// Finite simple graph on vertices 0..n-1. Edges are normalized to (min, max)
/// and kept sorted, which also fixes the order of the wedge basis vectors.
class SimpleGraph {
 public:
  /// Throws InvalidArgument on loops, repeated edges, or out-of-range ends.
  SimpleGraph(std::size_t vertex_count, std::vector<Edge> edges);

  static SimpleGraph complete(std::size_t n);
  static SimpleGraph path(std::size_t n);
  static SimpleGraph cycle(std::size_t n);
  /// Hub 0 joined to leaves 1..leaves.
  static SimpleGraph star(std::size_t leaves);
  /// Erdős–Rényi style: each pair present with probability num/den.
  static SimpleGraph random(std::size_t n, std::uint64_t seed, unsigned num = 1, unsigned den = 2);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Position of an edge in edges(), i.e. its wedge basis offset.
  std::size_t edge_position(Edge e) const;
  bool has_edge(std::size_t a, std::size_t b) const;

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
};

/// Pairwise vertex-disjoint edges of a graph, normalized and sorted.
struct Matching {
  std::vector<Edge> edges;
};

bool is_matching(const SimpleGraph& g, const Matching& m);

/// 2-step nilpotent algebra on basis v_1..v_n, then one wedge v_i ^ v_j per
/// edge: [v_i, v_j] = v_i ^ v_j for edges, zero otherwise.
LieAlgebra build_graph_algebra(const SimpleGraph& g);

struct MatchingResult {
  std::size_t size = 0;
  Matching matching;
};

/// Maximum matching of a general graph by augmenting paths with blossom
/// contraction (Edmonds).
MatchingResult matching_number(const SimpleGraph& g);

/// Exhaustive search over sets of pairwise disjoint edges; an independent
/// oracle for small graphs. Throws InvalidArgument above `max_edges` edges.
std::size_t matching_number_exhaustive(const SimpleGraph& g, std::size_t max_edges = 64);

struct GraphIndex {
  std::size_t index = 0;
  std::size_t via_matching = 0;  // |V| + |E| - 2 nu
  std::size_t via_rank = 0;      // n - generic rank of M(g)
  Matching matching;
};

/// Both routes to the index; throws InternalInconsistency if they disagree.
GraphIndex graph_index(const SimpleGraph& g, const RankOptions& options = {});

/// Sum of the duals of the wedge vectors of the matching edges. Throws
/// InvalidArgument if m is not a matching of g.
LinearFunctional matching_functional(const SimpleGraph& g, const Matching& m);

}  // namespace lieindex
