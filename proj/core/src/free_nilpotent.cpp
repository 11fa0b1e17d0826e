#include "lieindex/free_nilpotent.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "lieindex/algebra_ops.hpp"
#include "lieindex/errors.hpp"

namespace lieindex {

int mobius(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("mobius(0) is undefined");
  int result = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

Integer witt_layer(std::uint64_t generators, std::uint64_t weight) {
  if (weight == 0) throw InvalidArgument("weight must be positive");
  Integer sum = 0;
  for (std::uint64_t d = 1; d <= weight; ++d) {
    if (weight % d != 0) continue;
    const int mu = mobius(d);
    if (mu == 0) continue;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), generators, weight / d);
    sum += mu * power;
  }
  return sum / weight;
}

WittDimension witt_dimension(std::uint64_t generators, std::uint64_t nilpotency_class) {
  if (generators < 2) throw InvalidArgument("free-nilpotent algebra needs at least 2 generators");
  if (nilpotency_class < 1) throw InvalidArgument("nilpotency class must be at least 1");
  WittDimension out{0, 0};
  for (std::uint64_t m = 1; m <= nilpotency_class; ++m) {
    out.top_layer = witt_layer(generators, m);
    out.total += out.top_layer;
  }
  return out;
}

namespace {

struct HallSet {
  std::vector<HallBasisElement> elements;
  std::vector<std::size_t> layer_offsets;
  /// pair_index[u * dim + v] = index of the Hall element [u, v], if any.
  std::vector<std::optional<std::size_t>> pair_index;
};

// Hall set in mirrored form: [u, v] is basic iff u < v and, when
// v = [a, b], a <= u. Elements are ordered by weight, then by (left, right).
HallSet generate_hall_set(std::size_t g, std::size_t c) {
  HallSet hall;
  hall.layer_offsets.push_back(0);
  for (std::size_t i = 0; i < g; ++i) {
    HallBasisElement e;
    e.index = i;
    e.weight = 1;
    e.generator = i;
    e.label = "x" + std::to_string(i + 1);
    hall.elements.push_back(std::move(e));
  }
  hall.layer_offsets.push_back(g);
  for (std::size_t w = 2; w <= c; ++w) {
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    const std::size_t existing = hall.elements.size();
    for (std::size_t u = 0; u < existing; ++u) {
      for (std::size_t v = u + 1; v < existing; ++v) {
        const auto& eu = hall.elements[u];
        const auto& ev = hall.elements[v];
        if (eu.weight + ev.weight != w) continue;
        if (!ev.is_generator() && *ev.left > u) continue;
        candidates.emplace_back(u, v);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    for (const auto& [u, v] : candidates) {
      HallBasisElement e;
      e.index = hall.elements.size();
      e.weight = w;
      e.left = u;
      e.right = v;
      e.label = "[" + hall.elements[u].label + "," + hall.elements[v].label + "]";
      hall.elements.push_back(std::move(e));
    }
    hall.layer_offsets.push_back(hall.elements.size());
  }
  const std::size_t n = hall.elements.size();
  hall.pair_index.assign(n * n, std::nullopt);
  for (const auto& e : hall.elements)
    if (!e.is_generator()) hall.pair_index[*e.left * n + *e.right] = e.index;
  return hall;
}

/// Rewrites [u, v] of two Hall elements into Hall normal form, dropping
/// everything of weight above the class during the recursion.
class HallRewriter {
 public:
  HallRewriter(const HallSet& hall, std::size_t c) : hall_(hall), class_(c), n_(hall.elements.size()) {}

  SparseVector bracket(std::size_t u, std::size_t v) {
    if (u == v) return {};
    if (u > v) return negated(bracket(v, u));
    const auto& eu = hall_.elements[u];
    const auto& ev = hall_.elements[v];
    if (eu.weight + ev.weight > class_) return {};
    const std::uint64_t key = static_cast<std::uint64_t>(u) * n_ + v;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (auto idx = hall_.pair_index[u * n_ + v]) return memo_.emplace(key, SparseVector{{*idx, Rational(1)}}).first->second;
    if (!in_progress_.insert(key).second) throw InternalInconsistency("Hall rewriting entered a cycle");

    // u < v = [a, b] with a > u:  [u,[a,b]] = [[u,a],b] + [a,[u,b]].
    const std::size_t a = *ev.left;
    const std::size_t b = *ev.right;
    std::unordered_map<std::size_t, Rational> acc;
    for (const auto& [t, coeff] : bracket(u, a))
      for (const auto& [k, c] : bracket(t, b)) acc[k] += coeff * c;
    for (const auto& [s, coeff] : bracket(u, b))
      for (const auto& [k, c] : bracket(a, s)) acc[k] += coeff * c;
    SparseVector result;
    for (auto& [k, c] : acc)
      if (!is_zero(c)) result.emplace_back(k, c);
    std::sort(result.begin(), result.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

    in_progress_.erase(key);
    return memo_.emplace(key, std::move(result)).first->second;
  }

 private:
  const HallSet& hall_;
  std::size_t class_;
  std::size_t n_;
  std::unordered_map<std::uint64_t, SparseVector> memo_;
  std::unordered_set<std::uint64_t> in_progress_;
};

void check_parameters(std::size_t g, std::size_t c, std::size_t ceiling) {
  const WittDimension witt = witt_dimension(g, c);
  if (witt.total > Integer(std::to_string(ceiling)))
    throw ResourceLimit("dim F_{" + std::to_string(g) + "," + std::to_string(c) + "} = " + witt.total.get_str() +
                        " exceeds the ceiling " + std::to_string(ceiling));
}

FreeNilpotentAlgebra assemble(std::size_t g, std::size_t c, HallSet hall,
                              const std::vector<std::pair<std::size_t, std::size_t>>& query_order) {
  HallRewriter rewriter(hall, c);
  const std::size_t n = hall.elements.size();
  std::vector<SparseVector> table(n * n);
  for (const auto& [u, v] : query_order) table[u * n + v] = rewriter.bracket(u, v);
  std::vector<BracketEntry> brackets;
  std::vector<std::string> labels;
  for (const auto& e : hall.elements) labels.push_back(e.label);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!table[u * n + v].empty()) brackets.push_back({u, v, std::move(table[u * n + v])});
  FreeNilpotentAlgebra out;
  out.generators = g;
  out.nilpotency_class = c;
  out.algebra = LieAlgebra(std::move(labels), std::move(brackets));
  out.hall_basis = std::move(hall.elements);
  out.layer_offsets = std::move(hall.layer_offsets);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> upper_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

}  // namespace

FreeNilpotentAlgebra build_free_nilpotent(std::size_t generators, std::size_t nilpotency_class,
                                          std::size_t ceiling) {
  check_parameters(generators, nilpotency_class, ceiling);
  HallSet hall = generate_hall_set(generators, nilpotency_class);
  const auto order = upper_pairs(hall.elements.size());
  return assemble(generators, nilpotency_class, std::move(hall), order);
}

FreeNilpotentAlgebra build_free_nilpotent_shuffled(std::size_t generators, std::size_t nilpotency_class,
                                                   std::uint64_t seed) {
  check_parameters(generators, nilpotency_class, kDefaultDimensionCeiling);
  HallSet hall = generate_hall_set(generators, nilpotency_class);
  auto order = upper_pairs(hall.elements.size());
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return assemble(generators, nilpotency_class, std::move(hall), order);
}

FreeNilpotentAlgebra build_metabelian(std::size_t generators, std::size_t nilpotency_class, std::size_t ceiling) {
  FreeNilpotentAlgebra free = build_free_nilpotent(generators, nilpotency_class, ceiling);
  const std::size_t n = free.dim();
  const Subspace commutators = Subspace::coordinate_tail(n, generators);
  const Subspace ideal = ideal_closure(free.algebra, bracket_span(free.algebra, commutators, commutators));
  QuotientResult q = quotient(free.algebra, ideal);

  std::vector<std::optional<std::size_t>> position(n);
  for (std::size_t k = 0; k < q.complement.size(); ++k) position[q.complement[k]] = k;
  FreeNilpotentAlgebra out;
  out.generators = generators;
  out.nilpotency_class = nilpotency_class;
  out.algebra = std::move(q.algebra);
  out.layer_offsets.push_back(0);
  for (std::size_t k = 0; k < q.complement.size(); ++k) {
    HallBasisElement e = free.hall_basis[q.complement[k]];
    e.index = k;
    if (e.left) e.left = position[*e.left];
    if (e.right) e.right = position[*e.right];
    while (out.layer_offsets.size() < e.weight) out.layer_offsets.push_back(k);
    out.hall_basis.push_back(std::move(e));
  }
  while (out.layer_offsets.size() <= nilpotency_class) out.layer_offsets.push_back(out.hall_basis.size());
  return out;
}

std::size_t fg3_pair_index(std::size_t g, std::size_t i, std::size_t j) {
  if (!(1 <= i && i < j && j <= g)) throw InvalidArgument("pair index needs 1 <= i < j <= g");
  // Pairs ordered (1,2), (1,3), (2,3), (1,4), ...: by j, then i.
  return g + (j - 1) * (j - 2) / 2 + (i - 1);
}

std::size_t fg3_triple_index(std::size_t g, std::size_t i, std::size_t j, std::size_t k) {
  if (!(1 <= j && j < k && k <= g && 1 <= i && i <= k)) throw InvalidArgument("triple index needs j < k, i <= k");
  // Triples grouped by the pair (j, k) in pair order; inside a group i = 1..k.
  std::size_t offset = g + g * (g - 1) / 2;
  for (std::size_t kk = 2; kk <= g; ++kk) {
    for (std::size_t jj = 1; jj < kk; ++jj) {
      if (jj == j && kk == k) return offset + (i - 1);
      offset += kk;
    }
  }
  throw InvalidArgument("triple index out of range");
}

FreeNilpotentAlgebra build_fg3_paper_basis(std::size_t g) {
  if (g < 2) throw InvalidArgument("F_{g,3} needs g >= 2");
  const bool short_labels = g <= 9;
  auto join = [short_labels](std::initializer_list<std::size_t> idx) {
    std::string s = "x_";
    bool first = true;
    for (std::size_t v : idx) {
      if (!first && !short_labels) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s;
  };

  const std::size_t pairs = g * (g - 1) / 2;
  const std::size_t n = g + pairs + (g * g * g - g) / 3;
  std::vector<std::string> labels(n);
  std::vector<HallBasisElement> basis(n);
  for (std::size_t i = 1; i <= g; ++i) {
    labels[i - 1] = "x" + std::to_string(i);
    basis[i - 1] = HallBasisElement{i - 1, 1, std::nullopt, std::nullopt, i - 1, labels[i - 1]};
  }
  for (std::size_t j = 2; j <= g; ++j) {
    for (std::size_t i = 1; i < j; ++i) {
      const std::size_t idx = fg3_pair_index(g, i, j);
      labels[idx] = join({i, j});
      basis[idx] = HallBasisElement{idx, 2, i - 1, j - 1, 0, labels[idx]};
    }
  }
  for (std::size_t k = 2; k <= g; ++k) {
    for (std::size_t j = 1; j < k; ++j) {
      for (std::size_t i = 1; i <= k; ++i) {
        const std::size_t idx = fg3_triple_index(g, i, j, k);
        labels[idx] = join({i, j, k});
        basis[idx] = HallBasisElement{idx, 3, i - 1, fg3_pair_index(g, j, k), 0, labels[idx]};
      }
    }
  }

  std::vector<BracketEntry> brackets;
  for (std::size_t j = 2; j <= g; ++j)
    for (std::size_t i = 1; i < j; ++i) brackets.push_back({i - 1, j - 1, {{fg3_pair_index(g, i, j), Rational(1)}}});
  for (std::size_t i = 1; i <= g; ++i) {
    for (std::size_t k = 2; k <= g; ++k) {
      for (std::size_t j = 1; j < k; ++j) {
        SparseVector value;
        if (i <= k) {
          value = {{fg3_triple_index(g, i, j, k), Rational(1)}};
        } else {
          // [x_i,[x_j,x_k]] = -[x_j,[x_k,x_i]] + [x_k,[x_j,x_i]] for j < k < i.
          value = {{fg3_triple_index(g, j, k, i), Rational(-1)}, {fg3_triple_index(g, k, j, i), Rational(1)}};
        }
        brackets.push_back({i - 1, fg3_pair_index(g, j, k), std::move(value)});
      }
    }
  }

  FreeNilpotentAlgebra out;
  out.generators = g;
  out.nilpotency_class = 3;
  out.algebra = LieAlgebra(std::move(labels), std::move(brackets));
  out.hall_basis = std::move(basis);
  out.layer_offsets = {0, g, g + pairs, n};
  return out;
}

}  // namespace lieindex
