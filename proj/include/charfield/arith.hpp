// Integer helpers shared by every module: exact big numbers, residues mod n,
// prime factorisation by trial division and p-adic valuations.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace charfield {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  return std::lcm(a, b);
}

inline std::int64_t mod64(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

inline std::int64_t mulmod64(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>((static_cast<__int128>(mod64(a, n)) * mod64(b, n)) % n);
}

inline std::int64_t powmod64(std::int64_t base, std::int64_t exp, std::int64_t n) {
  if (n == 1) return 0;
  std::int64_t result = 1;
  base = mod64(base, n);
  while (exp > 0) {
    if (exp & 1) result = mulmod64(result, base, n);
    base = mulmod64(base, base, n);
    exp >>= 1;
  }
  return result;
}

/// Inverse of a modulo n; a must be a unit.
inline std::int64_t invmod64(std::int64_t a, std::int64_t n) {
  if (n == 1) return 0;
  std::int64_t t = 0, new_t = 1, r = n, new_r = mod64(a, n);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::domain_error("no inverse of " + std::to_string(a) + " mod " + std::to_string(n));
  return mod64(t, n);
}

/// Prime factorisation as (prime, exponent) pairs in increasing prime order.
inline std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<std::int64_t> prime_divisors(std::int64_t n) {
  std::vector<std::int64_t> ps;
  for (auto [p, e] : factorize(n)) ps.push_back(p);
  return ps;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Returns (r, k) with q = r^k and r prime, or nullopt-like (0, 0) if q is not a prime power.
inline std::pair<std::int64_t, int> prime_power(std::int64_t q) {
  if (q < 2) return {0, 0};
  auto f = factorize(q);
  if (f.size() != 1) return {0, 0};
  return f.front();
}

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (auto [p, e] : factorize(n)) result = result / p * (p - 1);
  return result;
}

/// p-adic valuation of a nonzero integer.
inline int nu_p(std::int64_t m, std::int64_t p) {
  if (m == 0) throw std::domain_error("nu_p(0) is undefined");
  if (p < 2) throw std::invalid_argument("nu_p: p must be a prime");
  m = m < 0 ? -m : m;
  int v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

inline int nu_p(const Integer& m, std::int64_t p) {
  if (m == 0) throw std::domain_error("nu_p(0) is undefined");
  Integer x = abs(m);
  Integer pp = static_cast<long>(p);
  int v = 0;
  while (mpz_divisible_p(x.get_mpz_t(), pp.get_mpz_t())) {
    x /= pp;
    ++v;
  }
  return v;
}

inline std::int64_t ipow64(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline bool divides(const Integer& d, const Integer& m) {
  if (d == 0) return m == 0;
  return mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Largest divisor of m that is coprime to p.
inline Integer prime_to_part(Integer m, std::int64_t p) {
  m = abs(m);
  Integer pp = static_cast<long>(p);
  while (m != 0 && divides(pp, m)) m /= pp;
  return m;
}

/// Squarefree kernel sign(m) * prod of primes with odd exponent in |m|.
inline std::int64_t squarefree_part(std::int64_t m) {
  if (m == 0) throw std::domain_error("squarefree_part(0)");
  std::int64_t sign = m < 0 ? -1 : 1;
  std::int64_t d = 1;
  for (auto [p, e] : factorize(m < 0 ? -m : m))
    if (e % 2 == 1) d *= p;
  return sign * d;
}

inline bool is_squarefree(std::int64_t m) {
  if (m == 0) return false;
  for (auto [p, e] : factorize(m < 0 ? -m : m))
    if (e > 1) return false;
  return true;
}

/// Q_{2m} = Q_m for odd m, so public moduli are kept off 2 mod 4.
inline std::int64_t normalize_modulus(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("modulus must be positive");
  return (n % 4 == 2) ? n / 2 : n;
}

/// Residues of (Z/n)^x in increasing order; for n = 1 this is {0}.
inline std::vector<std::int64_t> units(std::int64_t n) {
  std::vector<std::int64_t> u;
  if (n == 1) return {0};
  for (std::int64_t k = 1; k < n; ++k)
    if (std::gcd(k, n) == 1) u.push_back(k);
  return u;
}

/// Multiplicative order of k in (Z/n)^x.
inline std::int64_t unit_order(std::int64_t k, std::int64_t n) {
  if (n == 1) return 1;
  std::int64_t x = mod64(k, n), ord = 1;
  while (x != 1) {
    x = mulmod64(x, k, n);
    ++ord;
  }
  return ord;
}

}  // namespace charfield
