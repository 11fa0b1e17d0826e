#pragma once

#include <cstdint>
#include <optional>

#include "lieindex/rational.hpp"

namespace lieindex {

/// 2^61 - 1, a Mersenne prime.
inline constexpr std::uint64_t kDefaultPrime = 2305843009213693951ULL;

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

/// Modulus of a prime field with 2^60 <= p < 2^63.
class PrimeModulus {
 public:
  /// Throws InvalidArgument if p is not a prime of the supported size.
  explicit PrimeModulus(std::uint64_t p);

  /// kDefaultPrime, or the value of LIEINDEX_PRIME when that is set.
  static PrimeModulus from_environment();

  std::uint64_t value() const { return p_; }

 private:
  std::uint64_t p_;
};

/// Element of F_p. The modulus travels with the value; a default-constructed
/// element is the zero of an unspecified field and adopts the modulus of
/// whatever it is combined with.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t value, PrimeModulus modulus);
  /// Reduction of an integer-valued rational; throws if the denominator
  /// vanishes mod p.
  static Fp from_rational(const Rational& x, PrimeModulus modulus);

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return value_ == 0; }

  Fp inverse() const;

  friend Fp operator+(Fp a, Fp b);
  friend Fp operator-(Fp a, Fp b);
  friend Fp operator*(Fp a, Fp b);
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const;
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator-=(Fp b) { return *this = *this - b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  friend bool operator==(Fp a, Fp b) { return a.value_ == b.value_; }

 private:
  Fp(std::uint64_t value, std::uint64_t p) : value_(value), p_(p) {}
  std::uint64_t value_ = 0;
  std::uint64_t p_ = 0;
};

inline bool is_zero(const Fp& x) { return x.is_zero(); }
inline Fp inverse(const Fp& x) { return x.inverse(); }

}  // namespace lieindex
