// Independent reference computations for the tests. None of these call the
// library's linear algebra, rewriting or matching code.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "lieindex/free_nilpotent.hpp"
#include "lieindex/graph.hpp"
#include "lieindex/lie_algebra.hpp"

namespace oracle {

using lieindex::Rational;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Plain Gaussian elimination over Q.
inline std::size_t rank(RationalMatrix m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// B_ell read directly off the bracket table.
inline RationalMatrix skew_form(const lieindex::LieAlgebra& g, const std::vector<Rational>& ell) {
  const std::size_t n = g.dim();
  RationalMatrix b(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : g.basis_bracket(i, j)) b[i][j] += c * ell[k];
  return b;
}

inline std::size_t stabilizer_dim(const lieindex::LieAlgebra& g, const std::vector<Rational>& ell) {
  return g.dim() - rank(skew_form(g, ell));
}

// min dim g(ell) over random integer functionals.
inline std::size_t sampled_index(const lieindex::LieAlgebra& g, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(-1000, 1000);
  std::size_t best = g.dim();
  for (int s = 0; s < samples; ++s) {
    std::vector<Rational> ell(g.dim());
    for (auto& x : ell) x = coeff(rng);
    best = std::min(best, stabilizer_dim(g, ell));
  }
  return best;
}

// Center as the kernel of x -> ([x, e_j])_j, dimension only.
inline std::size_t center_dim(const lieindex::LieAlgebra& g) {
  const std::size_t n = g.dim();
  RationalMatrix m;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<Rational> row(n);
      for (std::size_t i = 0; i < n; ++i)
        for (const auto& [t, c] : g.basis_bracket(i, j))
          if (t == k) row[i] = c;
      m.push_back(std::move(row));
    }
  return n - rank(m);
}

// Lyndon words of length m over g letters, by brute force: a word is Lyndon
// iff it is strictly smaller than each of its proper rotations.
inline std::size_t lyndon_count(std::size_t g, std::size_t m) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < m; ++i) total *= g;
  std::size_t count = 0;
  std::vector<std::size_t> w(m);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t x = code;
    for (std::size_t i = 0; i < m; ++i) {
      w[m - 1 - i] = x % g;
      x /= g;
    }
    bool lyndon = true;
    for (std::size_t r = 1; r < m && lyndon; ++r) {
      std::vector<std::size_t> rot(w.begin() + r, w.end());
      rot.insert(rot.end(), w.begin(), w.begin() + r);
      lyndon = w < rot;
    }
    count += lyndon;
  }
  return count;
}

// Maximum matching by dynamic programming over vertex subsets.
inline std::size_t matching_number(const lieindex::SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> memo(std::size_t{1} << n, -1);
  std::function<int(std::uint32_t)> best = [&](std::uint32_t mask) -> int {
    if (mask == 0) return 0;
    if (memo[mask] >= 0) return memo[mask];
    const int v = __builtin_ctz(mask);
    const std::uint32_t rest = mask & ~(1u << v);
    int value = best(rest);
    for (std::size_t u = 0; u < n; ++u)
      if ((rest >> u & 1) && g.has_edge(v, u)) value = std::max(value, 1 + best(rest & ~(1u << u)));
    return memo[mask] = value;
  };
  return static_cast<std::size_t>(best((std::uint32_t{1} << n) - 1));
}

// Noncommutative polynomials over Q in letters 0..g-1, keyed by words.
using Word = std::vector<std::uint8_t>;
using NcPoly = std::map<Word, Rational>;

inline void add_to(NcPoly& p, const NcPoly& q, const Rational& f) {
  for (const auto& [w, c] : q) {
    Rational& slot = p[w];
    slot += f * c;
    if (slot == 0) p.erase(w);
  }
}

// uv - vu, dropping words longer than max_length.
inline NcPoly commutator(const NcPoly& u, const NcPoly& v, std::size_t max_length) {
  NcPoly out;
  for (const auto& [a, x] : u)
    for (const auto& [b, y] : v) {
      if (a.size() + b.size() > max_length) continue;
      Word ab = a, ba = b;
      ab.insert(ab.end(), b.begin(), b.end());
      ba.insert(ba.end(), a.begin(), a.end());
      add_to(out, NcPoly{{ab, x * y}}, 1);
      add_to(out, NcPoly{{ba, x * y}}, -1);
    }
  return out;
}

// Image of each Hall basis element in the free associative algebra
// (truncated above length c), built from its bracket tree.
inline std::vector<NcPoly> realize(const lieindex::FreeNilpotentAlgebra& f) {
  std::vector<NcPoly> out(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i) {
    const auto& h = f.hall_basis[i];
    if (h.is_generator())
      out[i] = NcPoly{{Word{static_cast<std::uint8_t>(h.generator)}, Rational(1)}};
    else
      out[i] = commutator(out[*h.left], out[*h.right], f.nilpotency_class);
  }
  return out;
}

}  // namespace oracle
