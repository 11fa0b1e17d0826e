#include "lieindex/graph.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <string>

#include "lieindex/errors.hpp"

namespace lieindex {

SimpleGraph::SimpleGraph(std::size_t vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count) {
  for (auto [a, b] : edges) {
    if (a >= vertex_count || b >= vertex_count) throw InvalidArgument("edge endpoint out of range");
    if (a == b) throw InvalidArgument("graph must not contain loops");
    edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw InvalidArgument("graph must not contain repeated edges");
}

SimpleGraph SimpleGraph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph SimpleGraph::path(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph SimpleGraph::cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a) edges.emplace_back(a, (a + 1) % n);
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph SimpleGraph::star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t a = 1; a <= leaves; ++a) edges.emplace_back(0, a);
  return SimpleGraph(leaves + 1, std::move(edges));
}

SimpleGraph SimpleGraph::random(std::size_t n, std::uint64_t seed, unsigned num, unsigned den) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> draw(0, den - 1);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (draw(rng) < num) edges.emplace_back(a, b);
  return SimpleGraph(n, std::move(edges));
}

std::size_t SimpleGraph::edge_position(Edge e) const {
  const Edge key{std::min(e.first, e.second), std::max(e.first, e.second)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) throw InvalidArgument("edge is not part of the graph");
  return static_cast<std::size_t>(it - edges_.begin());
}

bool SimpleGraph::has_edge(std::size_t a, std::size_t b) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{std::min(a, b), std::max(a, b)});
}

bool is_matching(const SimpleGraph& g, const Matching& m) {
  std::vector<bool> used(g.vertex_count(), false);
  for (auto [a, b] : m.edges) {
    if (a >= g.vertex_count() || b >= g.vertex_count() || !g.has_edge(a, b)) return false;
    if (used[a] || used[b]) return false;
    used[a] = used[b] = true;
  }
  return true;
}

LieAlgebra build_graph_algebra(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < n; ++v) labels.push_back("v" + std::to_string(v + 1));
  std::vector<BracketEntry> brackets;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto [a, b] = g.edges()[e];
    labels.push_back("v" + std::to_string(a + 1) + "^v" + std::to_string(b + 1));
    brackets.push_back({a, b, {{n + e, Rational(1)}}});
  }
  return LieAlgebra(std::move(labels), std::move(brackets));
}

namespace {

/// Edmonds' blossom algorithm, BFS form with explicit base tracking.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const SimpleGraph& g)
      : n_(g.vertex_count()), adj_(n_), match_(n_, kNone), parent_(n_), base_(n_), used_(n_), blossom_(n_) {
    for (auto [a, b] : g.edges()) {
      adj_[a].push_back(b);
      adj_[b].push_back(a);
    }
  }

  std::vector<std::size_t> run() {
    for (std::size_t v = 0; v < n_; ++v) {
      if (match_[v] != kNone) continue;
      std::size_t end = find_augmenting_path(v);
      while (end != kNone) {
        const std::size_t pv = parent_[end];
        const std::size_t ppv = match_[pv];
        match_[end] = pv;
        match_[pv] = end;
        end = ppv;
      }
    }
    return match_;
  }

  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

 private:
  std::size_t lowest_common_base(std::size_t a, std::size_t b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == kNone) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(std::size_t v, std::size_t b, std::size_t child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  std::size_t find_augmenting_path(std::size_t root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != kNone && parent_[match_[to]] != kNone)) {
          const std::size_t b = lowest_common_base(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (!blossom_[base_[i]]) continue;
            base_[i] = b;
            if (!used_[i]) {
              used_[i] = true;
              queue.push_back(i);
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (match_[to] == kNone) return to;
          used_[match_[to]] = true;
          queue.push_back(match_[to]);
        }
      }
    }
    return kNone;
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> match_, parent_, base_;
  std::vector<bool> used_, blossom_;
};

}  // namespace

MatchingResult matching_number(const SimpleGraph& g) {
  const auto mate = BlossomMatcher(g).run();
  MatchingResult out;
  for (std::size_t v = 0; v < mate.size(); ++v)
    if (mate[v] != BlossomMatcher::kNone && v < mate[v]) out.matching.edges.emplace_back(v, mate[v]);
  std::sort(out.matching.edges.begin(), out.matching.edges.end());
  out.size = out.matching.edges.size();
  if (!is_matching(g, out.matching)) throw InternalInconsistency("blossom search produced an invalid matching");
  return out;
}

namespace {

// Walks every subset of pairwise disjoint edges, deciding edges in order.
void extend_matchings(const std::vector<Edge>& edges, std::size_t next, std::uint64_t covered, std::size_t size,
                      std::size_t& best) {
  best = std::max(best, size);
  if (size + (edges.size() - next) <= best) return;
  for (std::size_t e = next; e < edges.size(); ++e) {
    const std::uint64_t ends = (std::uint64_t{1} << edges[e].first) | (std::uint64_t{1} << edges[e].second);
    if (covered & ends) continue;
    extend_matchings(edges, e + 1, covered | ends, size + 1, best);
  }
}

}  // namespace

std::size_t matching_number_exhaustive(const SimpleGraph& g, std::size_t max_edges) {
  const auto& edges = g.edges();
  if (edges.size() > max_edges)
    throw InvalidArgument("exhaustive matching search limited to " + std::to_string(max_edges) + " edges");
  if (g.vertex_count() > 64) throw InvalidArgument("exhaustive matching search limited to 64 vertices");
  std::size_t best = 0;
  extend_matchings(edges, 0, 0, 0, best);
  return best;
}

GraphIndex graph_index(const SimpleGraph& g, const RankOptions& options) {
  GraphIndex out;
  MatchingResult nu = matching_number(g);
  out.via_matching = g.vertex_count() + g.edges().size() - 2 * nu.size;
  IndexOptions index_options;
  index_options.rank = options;
  out.via_rank = index(build_graph_algebra(g), index_options).index;
  if (out.via_matching != out.via_rank)
    throw InternalInconsistency("graph index routes disagree: matching gives " + std::to_string(out.via_matching) +
                                ", generic rank gives " + std::to_string(out.via_rank));
  out.index = out.via_matching;
  out.matching = std::move(nu.matching);
  return out;
}

LinearFunctional matching_functional(const SimpleGraph& g, const Matching& m) {
  if (!is_matching(g, m)) throw InvalidArgument("not a matching of the graph");
  const std::size_t n = g.vertex_count();
  LinearFunctional ell{zero_vector(n + g.edges().size())};
  for (const auto& e : m.edges) ell.coords[n + g.edge_position(e)] = 1;
  return ell;
}

}  // namespace lieindex
