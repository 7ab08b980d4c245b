// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// An element is stored as a residue of Q[x]/(Phi_n(x)) in the power basis
// 1, x, ..., x^{phi(n)-1} with x = zeta_n = exp(2*pi*i/n).  Every public value
// is canonical: its modulus n is the conductor of the element (the least n,
// off 2 mod 4, with the element in Q_n), so equality is plain coefficient
// equality and the conductor is read off directly.
#pragma once

#include "charfield/arith.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace charfield {

namespace detail {

using Poly = std::vector<Rational>;

inline std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
  // den is monic; num has integer coefficients, low degree first.
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {0};
  std::vector<std::int64_t> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    quot[i - dn] = c;
    if (c != 0)
      for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i)
    if (num[i] != 0) throw std::logic_error("cyclotomic polynomial division is not exact");
  return quot;
}

inline const std::vector<std::int64_t>& cyclotomic_poly_cached(std::int64_t n) {
  static std::mutex mutex;
  static std::map<std::int64_t, std::vector<std::int64_t>> memo;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<std::int64_t> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d)
    if (n % d == 0) poly = divide_exact(poly, cyclotomic_poly_cached(d));
  std::lock_guard<std::mutex> lock(mutex);
  return memo.emplace(n, std::move(poly)).first->second;
}

/// Reduces sum_k dense[k] x^k modulo Phi_n; returns phi(n) coefficients.
inline Poly reduce_mod_phi(std::int64_t n, Poly dense) {
  const auto& phi_poly = cyclotomic_poly_cached(n);
  const std::size_t deg = phi_poly.size() - 1;
  std::vector<std::pair<std::size_t, std::int64_t>> nonzero;
  for (std::size_t j = 0; j < deg; ++j)
    if (phi_poly[j] != 0) nonzero.emplace_back(j, phi_poly[j]);
  for (std::size_t i = dense.size(); i-- > deg;) {
    if (sgn(dense[i]) == 0) continue;
    Rational c = dense[i];
    dense[i] = 0;
    for (auto [j, a] : nonzero) dense[i - deg + j] -= c * a;
  }
  dense.resize(deg);
  return dense;
}

inline bool all_zero(const Poly& p) {
  return std::all_of(p.begin(), p.end(), [](const Rational& r) { return sgn(r) == 0; });
}

/// Attempts to rewrite an element of Q_n (power-basis coefficients) as an
/// element of the subfield Q_m, m the normalised n/p.  Returns nullopt when
/// the element does not lie in that subfield.
inline std::optional<std::pair<std::int64_t, Poly>> descend(std::int64_t n, const Poly& c, std::int64_t p) {
  if (p == 2 && n % 8 != 0) {
    // n = 4m with m odd: zeta_n = zeta_m^s * i^t.
    const std::int64_t m = n / 4;
    const std::int64_t s = invmod64(4, m), t = invmod64(m, 4);
    std::vector<Poly> parts(4, Poly(static_cast<std::size_t>(m)));
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (sgn(c[i]) == 0) continue;
      const auto ii = static_cast<std::int64_t>(i);
      parts[static_cast<std::size_t>(mulmod64(t, ii, 4))][static_cast<std::size_t>(mulmod64(s, ii, m))] += c[i];
    }
    Poly imag(static_cast<std::size_t>(m)), real(static_cast<std::size_t>(m));
    for (std::int64_t a = 0; a < m; ++a) {
      real[a] = parts[0][a] - parts[2][a];
      imag[a] = parts[1][a] - parts[3][a];
    }
    if (!all_zero(reduce_mod_phi(m, std::move(imag)))) return std::nullopt;
    return std::make_pair(m, reduce_mod_phi(m, std::move(real)));
  }
  if (n % (p * p) == 0) {
    // Phi_n(x) = Phi_{n/p}(x^p): Q_{n/p} is spanned by the powers x^{pj}.
    Poly out;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i % static_cast<std::size_t>(p) == 0)
        out.push_back(c[i]);
      else if (sgn(c[i]) != 0)
        return std::nullopt;
    }
    return std::make_pair(n / p, std::move(out));
  }
  // p odd with p || n: Q_n = Q_m(zeta_p) has basis zeta_p^b (1 <= b < p) over Q_m.
  const std::int64_t m = n / p;
  const std::int64_t s = invmod64(p, m), t = invmod64(m, p);
  std::vector<Poly> parts(static_cast<std::size_t>(p), Poly(static_cast<std::size_t>(m)));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) continue;
    const auto ii = static_cast<std::int64_t>(i);
    parts[static_cast<std::size_t>(mulmod64(t, ii, p))][static_cast<std::size_t>(mulmod64(s, ii, m))] += c[i];
  }
  std::optional<Poly> common;
  for (std::int64_t b = 1; b < p; ++b) {
    Poly diff(static_cast<std::size_t>(m));
    for (std::int64_t a = 0; a < m; ++a) diff[a] = parts[b][a] - parts[0][a];
    Poly reduced = reduce_mod_phi(m, std::move(diff));
    if (!common)
      common = std::move(reduced);
    else if (reduced != *common)
      return std::nullopt;
  }
  for (auto& x : *common) x = -x;
  return std::make_pair(m, std::move(*common));
}

/// Lowers (n, coeffs) to the conductor of the element.
inline std::pair<std::int64_t, Poly> canonicalize(std::int64_t n, Poly c) {
  if (all_zero(c)) return {1, Poly{Rational(0)}};
  bool moved = true;
  while (moved && n > 1) {
    moved = false;
    for (std::int64_t p : prime_divisors(n)) {
      if (auto r = descend(n, c, p)) {
        n = r->first;
        c = std::move(r->second);
        moved = true;
        break;
      }
    }
  }
  return {n, std::move(c)};
}

/// Re-expresses power-basis coefficients of Q_n inside Q_L (n | L).
inline Poly lift(std::int64_t n, const Poly& c, std::int64_t big) {
  if (n == big) return c;
  const std::int64_t step = big / n;
  Poly dense(static_cast<std::size_t>(big));
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) != 0) dense[static_cast<std::size_t>(static_cast<std::int64_t>(i) * step % big)] += c[i];
  return reduce_mod_phi(big, std::move(dense));
}

/// Applies sigma_k: x -> x^k on power-basis coefficients of Q_n.
inline Poly apply_galois(std::int64_t n, const Poly& c, std::int64_t k) {
  if (n == 1) return c;
  Poly dense(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < c.size(); ++i)
    if (sgn(c[i]) != 0) dense[static_cast<std::size_t>(mulmod64(static_cast<std::int64_t>(i), k, n))] += c[i];
  return reduce_mod_phi(n, std::move(dense));
}

inline Poly multiply_mod_phi(std::int64_t n, const Poly& a, const Poly& b) {
  Poly prod(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (sgn(b[j]) != 0) prod[i + j] += a[i] * b[j];
  }
  return reduce_mod_phi(n, std::move(prod));
}

}  // namespace detail

/// Phi_n with integer coefficients, constant term first.
inline std::vector<std::int64_t> cyclotomic_polynomial(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
  return detail::cyclotomic_poly_cached(n);
}

class Cyclotomic {
 public:
  Cyclotomic() : modulus_(1), coeffs_{Rational(0)} {}
  Cyclotomic(long value) : modulus_(1), coeffs_{Rational(value)} {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& value) : modulus_(1), coeffs_{value} { coeffs_[0].canonicalize(); }  // NOLINT(google-explicit-constructor)

  /// zeta_n^k.
  static Cyclotomic zeta(std::int64_t n, std::int64_t k = 1) { return make(n, {{k, Rational(1)}}); }

  /// sum c_k zeta_n^k; exponents are taken mod n.
  static Cyclotomic make(std::int64_t n, const std::vector<std::pair<std::int64_t, Rational>>& terms) {
    if (n < 1) throw std::invalid_argument("cyclotomic modulus must be >= 1");
    std::int64_t big = n, scale = 1;
    if (n % 4 == 2) {
      big = 2 * n;  // zeta_n = zeta_{2n}^2 keeps the working modulus off 2 mod 4
      scale = 2;
    }
    detail::Poly dense(static_cast<std::size_t>(big));
    for (const auto& [k, c] : terms) {
      Rational cc = c;
      cc.canonicalize();
      dense[static_cast<std::size_t>(mod64(k * scale, big))] += cc;
    }
    return from_raw(big, detail::reduce_mod_phi(big, std::move(dense)));
  }

  /// Power-basis coefficients of Q_n (n off 2 mod 4); canonicalised.
  static Cyclotomic from_coefficients(std::int64_t n, std::vector<Rational> coeffs) {
    if (n < 1 || n % 4 == 2) throw std::invalid_argument("modulus must be positive and not 2 mod 4");
    if (static_cast<std::int64_t>(coeffs.size()) != euler_phi(n))
      throw std::invalid_argument("expected phi(n) coefficients for modulus " + std::to_string(n));
    for (auto& c : coeffs) c.canonicalize();
    return from_raw(n, std::move(coeffs));
  }

  /// A square root of the integer m built from quadratic Gauss sums.
  static Cyclotomic sqrt_of_integer(const Integer& m) {
    if (m == 0) return Cyclotomic();
    if (!m.fits_slong_p()) throw std::out_of_range("sqrt_of_integer: argument too large");
    const long mv = m.get_si();
    std::int64_t square = 1;
    std::int64_t core = mv < 0 ? -1 : 1;
    for (auto [p, e] : factorize(mv < 0 ? -mv : mv)) {
      square *= ipow64(p, e / 2);
      if (e % 2 == 1) core *= p;
    }
    Cyclotomic root(static_cast<long>(square));
    int sign_of_star = 1;  // product of (-1)^{(p-1)/2} over odd primes of core
    for (auto [p, e] : factorize(core < 0 ? -core : core)) {
      if (p == 2) {
        root = root * (zeta(8, 1) + zeta(8, 7));
        continue;
      }
      std::vector<std::pair<std::int64_t, Rational>> gauss;
      for (std::int64_t a = 1; a < p; ++a)
        gauss.emplace_back(a, Rational(powmod64(a, (p - 1) / 2, p) == 1 ? 1 : -1));
      root = root * make(p, gauss);
      if (p % 4 == 3) sign_of_star = -sign_of_star;
    }
    if ((core < 0 ? -1 : 1) * sign_of_star < 0) root = root * zeta(4, 1);
    if (root * root != Cyclotomic(Rational(m))) throw std::logic_error("sqrt_of_integer: Gauss sum identity failed");
    return root;
  }

  std::int64_t modulus() const { return modulus_; }
  /// The conductor; equal to the modulus by canonical form.
  std::int64_t conductor() const { return modulus_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const { return modulus_ == 1 && sgn(coeffs_[0]) == 0; }
  bool is_rational() const { return modulus_ == 1; }
  bool is_integer() const { return modulus_ == 1 && coeffs_[0].get_den() == 1; }
  const Rational& rational_value() const {
    if (!is_rational()) throw std::domain_error("value is not rational");
    return coeffs_[0];
  }

  Cyclotomic galois(std::int64_t k) const {
    if (std::gcd(mod64(k, modulus_), modulus_) != 1 && modulus_ != 1)
      throw std::domain_error("galois: exponent " + std::to_string(k) + " is not coprime to modulus " +
                              std::to_string(modulus_));
    if (modulus_ == 1) return *this;
    Cyclotomic out;
    out.modulus_ = modulus_;
    out.coeffs_ = detail::apply_galois(modulus_, coeffs_, mod64(k, modulus_));
    return out;
  }

  Cyclotomic conjugate() const { return galois(-1); }

  /// {k in (Z/n)^x : sigma_k fixes this}, n the modulus.
  std::vector<std::int64_t> stabilizer() const {
    std::vector<std::int64_t> out;
    for (std::int64_t k : units(modulus_))
      if (modulus_ == 1 || galois(k) == *this) out.push_back(k);
    return out;
  }

  Cyclotomic inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (is_rational()) return Cyclotomic(Rational(1) / coeffs_[0]);
    Cyclotomic others(1);
    for (std::int64_t k : units(modulus_))
      if (k != 1) others = others * galois(k);
    const Cyclotomic norm = *this * others;
    return others * Cyclotomic(Rational(1) / norm.rational_value());
  }

  std::complex<double> to_complex() const {
    std::complex<double> z = 0;
    const double two_pi = 2.0 * std::acos(-1.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (sgn(coeffs_[i]) != 0)
        z += coeffs_[i].get_d() * std::polar(1.0, two_pi * static_cast<double>(i) / static_cast<double>(modulus_));
    return z;
  }

  /// Expression-language text that parses back to this value.
  std::string to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Rational& c = coeffs_[i];
      if (sgn(c) == 0) continue;
      Rational mag = abs(c);
      if (first) {
        if (sgn(c) < 0) mag = c;
      } else {
        out << (sgn(c) < 0 ? " - " : " + ");
      }
      if (i == 0) {
        out << mag.get_str();
      } else {
        if (mag != 1) out << mag.get_str() << "*";
        out << "z(" << modulus_ << ")";
        if (i > 1) out << "^" << i;
      }
      first = false;
    }
    return first ? "0" : out.str();
  }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.modulus_ == b.modulus_) {
      detail::Poly c(a.coeffs_.size());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
      return from_raw(a.modulus_, std::move(c));
    }
    const std::int64_t big = common_modulus(a.modulus_, b.modulus_);
    detail::Poly x = detail::lift(a.modulus_, a.coeffs_, big);
    const detail::Poly y = detail::lift(b.modulus_, b.coeffs_, big);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return from_raw(big, std::move(x));
  }

  friend Cyclotomic operator-(const Cyclotomic& a) {
    Cyclotomic out = a;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.is_rational()) return b.scaled(a.coeffs_[0]);
    if (b.is_rational()) return a.scaled(b.coeffs_[0]);
    const std::int64_t big = common_modulus(a.modulus_, b.modulus_);
    return from_raw(big, detail::multiply_mod_phi(big, detail::lift(a.modulus_, a.coeffs_, big),
                                                  detail::lift(b.modulus_, b.coeffs_, big)));
  }

  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  Cyclotomic pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic result(1), base = *this;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  /// Arbitrary total order for use in ordered containers.
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.modulus_ != b.modulus_) return a.modulus_ < b.modulus_;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      const int c = cmp(a.coeffs_[i], b.coeffs_[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  static std::int64_t common_modulus(std::int64_t a, std::int64_t b) { return normalize_modulus(lcm64(a, b)); }

 private:
  static Cyclotomic from_raw(std::int64_t n, detail::Poly coeffs) {
    auto [m, c] = detail::canonicalize(n, std::move(coeffs));
    Cyclotomic out;
    out.modulus_ = m;
    out.coeffs_ = std::move(c);
    return out;
  }

  Cyclotomic scaled(const Rational& r) const {
    if (sgn(r) == 0) return Cyclotomic();
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c *= r;
    return out;
  }

  std::int64_t modulus_;
  std::vector<Rational> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& z) { return os << z.to_string(); }

/// Conductor computed without canonical form: lift z into Q_ambient, take its
/// Galois stabiliser there, and descend through divisors m while the kernel of
/// (Z/ambient)^x -> (Z/m)^x stays inside the stabiliser.
inline std::int64_t conductor_by_stabilizer(const Cyclotomic& z, std::int64_t ambient) {
  ambient = normalize_modulus(ambient);
  if (ambient % z.modulus() != 0) throw std::invalid_argument("ambient modulus must be a multiple of the modulus");
  const detail::Poly raw = detail::lift(z.modulus(), z.coefficients(), ambient);
  std::vector<std::int64_t> stab;
  for (std::int64_t k : units(ambient))
    if (ambient == 1 || detail::apply_galois(ambient, raw, k) == raw) stab.push_back(k);
  auto kernel_inside = [&](std::int64_t m) {
    for (std::int64_t k : units(ambient))
      if (mod64(k, m) == 1 % m && !std::binary_search(stab.begin(), stab.end(), k)) return false;
    return true;
  };
  std::int64_t n = ambient;
  bool moved = true;
  while (moved && n > 1) {
    moved = false;
    for (std::int64_t p : prime_divisors(n)) {
      const std::int64_t m = (p == 2 && n % 8 != 0) ? n / 4 : n / p;
      if (kernel_inside(m)) {
        n = m;
        moved = true;
        break;
      }
    }
  }
  return n;
}

}  // namespace charfield
