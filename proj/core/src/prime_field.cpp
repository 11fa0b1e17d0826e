#include "lieindex/prime_field.hpp"

#include <cstdlib>
#include <string>

#include "lieindex/errors.hpp"

namespace lieindex {
namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

constexpr std::uint64_t kMinModulus = 1ULL << 60;
constexpr std::uint64_t kMaxModulus = 1ULL << 63;

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are sufficient for every n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p < kMinModulus || p >= kMaxModulus)
    throw InvalidArgument("prime modulus must satisfy 2^60 <= p < 2^63, got " + std::to_string(p));
  if (!is_prime_u64(p)) throw InvalidArgument("modulus " + std::to_string(p) + " is not prime");
}

PrimeModulus PrimeModulus::from_environment() {
  const char* env = std::getenv("LIEINDEX_PRIME");
  if (env == nullptr || *env == '\0') return PrimeModulus(kDefaultPrime);
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0')
    throw InvalidArgument(std::string("LIEINDEX_PRIME is not an integer: ") + env);
  return PrimeModulus(parsed);
}

Fp::Fp(std::uint64_t value, PrimeModulus modulus) : value_(value % modulus.value()), p_(modulus.value()) {}

Fp Fp::from_rational(const Rational& x, PrimeModulus modulus) {
  const std::uint64_t p = modulus.value();
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  auto reduce = [p](const Integer& z) -> std::uint64_t { return mpz_fdiv_ui(z.get_mpz_t(), p); };
  const std::uint64_t num = reduce(x.get_num());
  const std::uint64_t den = reduce(x.get_den());
  if (den == 0) throw InvalidArgument("denominator vanishes modulo the prime");
  return Fp(num, p) * Fp(den, p).inverse();
}

Fp Fp::inverse() const {
  if (value_ == 0) throw InvalidArgument("inverse of zero in F_p");
  return Fp(pow_mod(value_, p_ - 2, p_), p_);
}

Fp operator+(Fp a, Fp b) {
  const std::uint64_t p = a.p_ ? a.p_ : b.p_;
  std::uint64_t s = a.value_ + b.value_;
  if (s >= p) s -= p;
  return Fp(s, p);
}

Fp operator-(Fp a, Fp b) {
  const std::uint64_t p = a.p_ ? a.p_ : b.p_;
  return Fp(a.value_ >= b.value_ ? a.value_ - b.value_ : a.value_ + p - b.value_, p);
}

Fp operator*(Fp a, Fp b) {
  const std::uint64_t p = a.p_ ? a.p_ : b.p_;
  if (p == 0) return Fp();
  return Fp(mul_mod(a.value_, b.value_, p), p);
}

Fp Fp::operator-() const { return value_ == 0 ? *this : Fp(p_ - value_, p_); }

}  // namespace lieindex
