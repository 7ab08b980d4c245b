// Irreducible characters of GL_n(q) (epsilon = +1) and GU_n(q) (epsilon = -1)
// as multisets of pairs (s, lambda).  Each s is an exponent e in a cyclic group
// of order q^d - epsilon^d; Frobenius is multiplication by epsilon q, so no
// finite-field arithmetic is needed.  GU is GL with q replaced by -q.
#pragma once

#include "charfield/chartab.hpp"
#include "charfield/numfield.hpp"
#include "charfield/symchar.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace charfield {

inline constexpr int kGlMaxRank = 4;
inline constexpr std::int64_t kGlMaxQ = 7;

namespace detail {

inline void require_prime_power(std::int64_t q) {
  if (q < 2 || prime_power(q).first == 0) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
}

inline void require_epsilon(int epsilon) {
  if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("epsilon must be +1 or -1");
}

/// q^d - epsilon^d, the order of the cyclic group housing degree-d points.
inline std::int64_t torus_order(std::int64_t q, int d, int epsilon) {
  const std::int64_t qd = ipow64(q, d);
  return (epsilon == -1 && d % 2) ? qd + 1 : qd - 1;
}

inline Integer torus_order_exact(std::int64_t q, std::int64_t d, int epsilon) {
  const Integer qd = ipow(Integer(static_cast<long>(q)), static_cast<unsigned long>(d));
  return (epsilon == -1 && d % 2) ? Integer(qd + 1) : Integer(qd - 1);
}

/// (epsilon q)^i - 1 as a signed integer.
inline Integer signed_term(std::int64_t q, int epsilon, std::int64_t i) {
  return ipow(Integer(static_cast<long>(epsilon * q)), static_cast<unsigned long>(i)) - 1;
}

}  // namespace detail

/// prod_{i=1}^n (q^i - epsilon^i).
inline Integer gl_order_prime_to_r(int n, std::int64_t q, int epsilon) {
  detail::require_prime_power(q);
  detail::require_epsilon(epsilon);
  if (n < 0) throw std::invalid_argument("gl_order: n must be non-negative");
  Integer out = 1;
  for (int i = 1; i <= n; ++i) out *= detail::torus_order_exact(q, i, epsilon);
  return out;
}

inline Integer gl_order(int n, std::int64_t q, int epsilon) {
  return gl_order_prime_to_r(n, q, epsilon) * ipow(Integer(static_cast<long>(q)), static_cast<unsigned long>(n * (n - 1) / 2));
}

/// Class number from Wall's generating functions
/// prod_i (1 - t^i)/(1 - q t^i) for GL and prod_i (1 + t^i)/(1 - q t^i) for GU.
inline Integer class_number(int n, std::int64_t q, int epsilon) {
  detail::require_prime_power(q);
  detail::require_epsilon(epsilon);
  std::vector<Integer> series(static_cast<std::size_t>(n + 1), 0);
  series[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = n; j >= i; --j) series[j] -= epsilon * series[j - i];
    for (int j = i; j <= n; ++j) series[j] += Integer(static_cast<long>(q)) * series[j - i];
  }
  return series[static_cast<std::size_t>(n)];
}

struct FqPoint {
  int d = 1;
  std::int64_t e = 0;

  auto operator<=>(const FqPoint&) const = default;
};

struct DJChar {
  int n = 0;
  std::int64_t q = 2;
  int epsilon = 1;
  std::vector<std::pair<FqPoint, Partition>> pairs;  // sorted by (d, e, lambda)

  std::string to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (i) os << ",";
      os << "(d" << pairs[i].first.d << ":" << pairs[i].first.e << "," << partition_to_string(pairs[i].second) << ")";
    }
    os << "]";
    return os.str();
  }

  bool operator==(const DJChar&) const = default;
};

inline std::string gl_group_name(int n, std::int64_t q, int epsilon) {
  return (epsilon == 1 ? "GL" : "GU") + std::to_string(n) + "(" + std::to_string(q) + ")";
}

/// Minimal representative of the Frobenius orbit of e, and the orbit size.
inline std::pair<std::int64_t, int> frobenius_orbit(std::int64_t q, int d, int epsilon, std::int64_t e) {
  const std::int64_t m = detail::torus_order(q, d, epsilon);
  const std::int64_t phi = mod64(epsilon * q, m);
  std::int64_t x = mod64(e, m), best = x;
  int size = 0;
  do {
    best = std::min(best, x);
    x = mulmod64(x, phi, m);
    ++size;
  } while (x != mod64(e, m));
  return {best, size};
}

/// Multiplicative order of s = g_d^e.
inline std::int64_t point_order(std::int64_t q, int epsilon, const FqPoint& s) {
  const std::int64_t m = detail::torus_order(q, s.d, epsilon);
  return m / gcd64(s.e, m);
}

/// Representatives of the Frobenius orbits of size exactly d.
inline std::vector<FqPoint> points_of_degree(std::int64_t q, int d, int epsilon) {
  const std::int64_t m = detail::torus_order(q, d, epsilon);
  std::vector<FqPoint> out;
  for (std::int64_t e = 0; e < m; ++e) {
    const auto [rep, size] = frobenius_orbit(q, d, epsilon, e);
    if (rep == e && size == d) out.push_back({d, e});
  }
  return out;
}

inline void validate_dj(const DJChar& chi) {
  detail::require_prime_power(chi.q);
  detail::require_epsilon(chi.epsilon);
  int total = 0;
  for (std::size_t i = 0; i < chi.pairs.size(); ++i) {
    const auto& [s, lambda] = chi.pairs[i];
    const auto [rep, size] = frobenius_orbit(chi.q, s.d, chi.epsilon, s.e);
    if (rep != s.e || size != s.d) throw std::invalid_argument("DJChar: " + chi.to_string() + " has a non-canonical point");
    if (lambda.empty()) throw std::invalid_argument("DJChar: empty partition");
    if (i && !(chi.pairs[i - 1].first < s)) throw std::invalid_argument("DJChar: points not distinct and sorted");
    total += s.d * partition_size(lambda);
  }
  if (total != chi.n) throw std::invalid_argument("DJChar: sum of k_i d_i is not n");
}

namespace detail {

inline void enumerate_from(const std::vector<FqPoint>& atoms, std::size_t start, int remaining, DJChar& current,
                           std::vector<DJChar>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t a = start; a < atoms.size(); ++a) {
    const int d = atoms[a].d;
    for (int k = 1; k * d <= remaining; ++k)
      for (auto& lambda : partitions(k)) {
        current.pairs.emplace_back(atoms[a], lambda);
        enumerate_from(atoms, a + 1, remaining - k * d, current, out);
        current.pairs.pop_back();
      }
  }
}

}  // namespace detail

/// All characters, as canonical pair lists in lexicographic order of (d, e, lambda).
/// Guarded to n <= 4 and q <= 7.
inline std::vector<DJChar> enumerate_gl(int n, std::int64_t q, int epsilon) {
  detail::require_prime_power(q);
  detail::require_epsilon(epsilon);
  if (n < 1 || n > kGlMaxRank || q > kGlMaxQ)
    throw std::invalid_argument("enumerate_gl: outside the feasibility guard n <= " + std::to_string(kGlMaxRank) +
                                ", q <= " + std::to_string(kGlMaxQ));
  std::vector<FqPoint> atoms;
  for (int d = 1; d <= n; ++d)
    for (const auto& s : points_of_degree(q, d, epsilon)) atoms.push_back(s);
  std::vector<DJChar> out;
  DJChar current{n, q, epsilon, {}};
  detail::enumerate_from(atoms, 0, n, current, out);
  std::sort(out.begin(), out.end(), [](const DJChar& a, const DJChar& b) { return a.pairs < b.pairs; });
  return out;
}

/// |prod_{i=1}^n ((eq)^i - 1) / prod_j prod_{cells} (Q_j^{h(c)} - 1) * prod_j Q_j^{n(lambda_j)}|
/// with Q_j = (eq)^{d_j}.
inline Integer gl_degree(const DJChar& chi) {
  Integer num = 1, den = 1;
  for (int i = 1; i <= chi.n; ++i) num *= detail::signed_term(chi.q, chi.epsilon, i);
  for (const auto& [s, lambda] : chi.pairs) {
    int n_lambda = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      n_lambda += static_cast<int>(i) * lambda[i];
      for (int j = 0; j < lambda[i]; ++j) den *= detail::signed_term(chi.q, chi.epsilon, static_cast<std::int64_t>(s.d) * hook_length(lambda, static_cast<int>(i), j));
    }
    num *= ipow(Integer(static_cast<long>(chi.epsilon * chi.q)), static_cast<unsigned long>(s.d * n_lambda));
  }
  if (!divides(den, num)) throw std::logic_error("gl_degree: non-integral degree for " + chi.to_string());
  Integer out = num / den;
  return abs(out);
}

/// lcm of the orders of the s_i.
inline std::int64_t gl_orbit_lcm(const DJChar& chi) {
  std::int64_t out = 1;
  for (const auto& [s, lambda] : chi.pairs) out = lcm64(out, point_order(chi.q, chi.epsilon, s));
  return out;
}

/// sigma_k: s_i -> s_i^k, re-canonicalised.  k must be a unit modulo every o(s_i).
inline DJChar galois_act(const DJChar& chi, std::int64_t k) {
  DJChar out = chi;
  for (auto& [s, lambda] : out.pairs) {
    if (gcd64(k, point_order(chi.q, chi.epsilon, s)) != 1)
      throw std::invalid_argument("galois_act: k = " + std::to_string(k) + " is not coprime to the order of s");
    const std::int64_t m = detail::torus_order(chi.q, s.d, chi.epsilon);
    s.e = frobenius_orbit(chi.q, s.d, chi.epsilon, mulmod64(s.e, mod64(k, m), m)).first;
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

inline AbelianField gl_field_of_values(const DJChar& chi) {
  const std::int64_t n = gl_orbit_lcm(chi);
  std::vector<std::int64_t> stab;
  for (std::int64_t k : units(n))
    if (galois_act(chi, k) == chi) stab.push_back(k);
  return AbelianField::from_subgroup(n, stab);
}

inline std::int64_t gl_conductor(const DJChar& chi) { return gl_field_of_values(chi).conductor(); }

inline VerificationRecord check_conjecture_b(const DJChar& chi, int index, std::int64_t p) {
  auto r = check_conjecture_b(gl_group_name(chi.n, chi.q, chi.epsilon), index, gl_degree(chi), gl_field_of_values(chi), p);
  r.note = chi.to_string();
  return r;
}

struct N1Record {
  Rational n1;
  Rational n2;
  bool integral = false;
  bool divisible = false;        // p^b | N1
  bool strong_divisible = true;  // p^{b+1} | N1 when p = 2 <= b

  bool ok() const { return integral && divisible && strong_divisible; }
};

/// N1 = |GL_{kp^b}|_{r'} / |GL_k|_{r'}^{p^b} and
/// N2 = |GL_{kp^b-1}|_{r'} / (|GL_k|_{r'}^{p^b-1} |GL_{k-1}|_{r'}).
inline N1Record n1_quantity(int k, int b, std::int64_t q, std::int64_t p, int epsilon) {
  if (k < 1 || b < 0) throw std::invalid_argument("n1_quantity: need k >= 1, b >= 0");
  if (!is_prime(p)) throw std::invalid_argument("n1_quantity: p must be prime");
  if (detail::torus_order_exact(q, k, epsilon) % p != 0)
    throw std::invalid_argument("n1_quantity: p does not divide q^k - epsilon^k");
  const auto pb = ipow64(p, b);
  const int big = static_cast<int>(k * pb);
  const Integer gk = gl_order_prime_to_r(k, q, epsilon);
  N1Record r;
  r.n1 = Rational(gl_order_prime_to_r(big, q, epsilon)) / Rational(ipow(gk, static_cast<unsigned long>(pb)));
  r.n2 = Rational(gl_order_prime_to_r(big - 1, q, epsilon)) /
         Rational(ipow(gk, static_cast<unsigned long>(pb - 1)) * gl_order_prime_to_r(k - 1, q, epsilon));
  r.n1.canonicalize();
  r.n2.canonicalize();
  r.integral = r.n1.get_den() == 1 && r.n2.get_den() == 1;
  if (!r.integral) return r;
  const Integer n1 = r.n1.get_num();
  r.divisible = divides(ipow(Integer(static_cast<long>(p)), static_cast<unsigned long>(b)), n1);
  if (p == 2 && b >= 2) r.strong_divisible = divides(ipow(Integer(2), static_cast<unsigned long>(b + 1)), n1);
  return r;
}

/// p^{p^c - 1} divides prod_{i=1}^{d-1} (q^i - epsilon^i) for d = p^c d1,
/// given p | q^{d1} - epsilon^{d1}.
inline bool a2_divisibility(int d1, int c, std::int64_t q, std::int64_t p, int epsilon) {
  if (d1 < 1 || c < 0) throw std::invalid_argument("a2_divisibility: need d1 >= 1, c >= 0");
  if (detail::torus_order(q, d1, epsilon) % p != 0)
    throw std::invalid_argument("a2_divisibility: p does not divide q^d1 - epsilon^d1");
  const std::int64_t pc = ipow64(p, c);
  const int d = static_cast<int>(pc * d1);
  return divides(ipow(Integer(static_cast<long>(p)), static_cast<unsigned long>(pc - 1)), gl_order_prime_to_r(d - 1, q, epsilon));
}

struct GlScan {
  int n = 0;
  std::int64_t q = 0;
  int epsilon = 1;
  Integer class_count = 0;
  Integer expected_classes = 0;
  Integer sum_squares = 0;
  Integer order = 0;
  std::vector<VerificationRecord> records;

  bool sum_squares_ok() const { return sum_squares == order; }
  bool class_count_ok() const { return class_count == expected_classes; }
};

/// Degrees, class count and Conjecture B for every prime dividing c(chi),
/// plus any extra primes requested.
inline GlScan scan_gl(int n, std::int64_t q, int epsilon, const std::vector<std::int64_t>& extra_primes = {}) {
  GlScan s{n, q, epsilon, 0, class_number(n, q, epsilon), 0, gl_order(n, q, epsilon), {}};
  const auto chars = enumerate_gl(n, q, epsilon);
  s.class_count = static_cast<long>(chars.size());
  for (std::size_t i = 0; i < chars.size(); ++i) {
    const Integer deg = gl_degree(chars[i]);
    s.sum_squares += deg * deg;
    const AbelianField f = gl_field_of_values(chars[i]);
    std::set<std::int64_t> primes(extra_primes.begin(), extra_primes.end());
    for (std::int64_t p : prime_divisors(f.conductor())) primes.insert(p);
    for (std::int64_t p : primes) {
      auto r = check_conjecture_b(gl_group_name(n, q, epsilon), static_cast<int>(i), deg, f, p);
      r.note = chars[i].to_string();
      s.records.push_back(std::move(r));
    }
  }
  return s;
}

}  // namespace charfield
