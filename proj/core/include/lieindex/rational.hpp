#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace lieindex {

// GMP keeps mpq_class canonical (reduced, positive denominator) after every
// arithmetic operation; values built from raw num/den go through canonicalize().
using Integer = mpz_class;
using Rational = mpq_class;

/// Dense coordinate vector.
using Vector = std::vector<Rational>;

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational inverse(const Rational& x) { return 1 / x; }

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& x);

/// Accepts "p", "-p", "p/q"; throws ParseError otherwise or on q == 0.
Rational parse_rational(std::string_view text);

inline Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

inline Vector unit_vector(std::size_t n, std::size_t k) {
  Vector v = zero_vector(n);
  v[k] = 1;
  return v;
}

bool is_zero(const Vector& v);

}  // namespace lieindex
