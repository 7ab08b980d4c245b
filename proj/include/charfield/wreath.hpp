// Field-shrinking construction: from chi in Irr(G) with E = Q(chi) and a
// subfield F of E, the character psi of H = G^n x| Gal(E/F) induced from the
// Galois-twisted tensor product phi.  H is never built: psi vanishes off G^n,
// so it is evaluated on tuples of G-classes, weighted by class sizes.
#pragma once

#include "charfield/chartab.hpp"
#include "charfield/numfield.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace charfield {

class EnumerationLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gal(E/F) = C_{n_1} x ... x C_{n_k} with n_{i+1} | n_i, generators given as
/// residues mod the conductor of E.
struct GaloisFactorization {
  std::int64_t modulus = 1;
  std::vector<std::int64_t> gens;
  std::vector<std::int64_t> orders;
  std::int64_t n = 1;

  /// tau_1^{a_1} ... tau_k^{a_k} for the mixed-radix coordinate index.
  std::int64_t element(std::int64_t index) const {
    std::int64_t k = 1 % modulus;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      k = mulmod64(k, powmod64(gens[i], index % orders[i], modulus), modulus);
      index /= orders[i];
    }
    return k;
  }
};

namespace detail {

/// Cosets of `sub` inside `group` (both subgroups of (Z/m)^x), as their minima.
class QuotientGroup {
 public:
  QuotientGroup(std::int64_t m, const std::vector<std::int64_t>& group, const std::vector<std::int64_t>& sub)
      : m_(m), sub_(sub) {
    for (std::int64_t g : group) reps_.insert(rep(g));
  }

  std::int64_t rep(std::int64_t g) const {
    std::int64_t best = m_;
    for (std::int64_t h : sub_) best = std::min(best, mulmod64(g, h, m_));
    return best;
  }

  std::int64_t order_of(std::int64_t g) const {
    const std::int64_t one = rep(1 % m_);
    std::int64_t x = rep(g), o = 1;
    while (x != one) {
      x = rep(mulmod64(x, g, m_));
      ++o;
    }
    return o;
  }

  std::set<std::int64_t> generated(const std::vector<std::int64_t>& gens) const {
    std::set<std::int64_t> s{rep(1 % m_)};
    std::vector<std::int64_t> frontier(s.begin(), s.end());
    while (!frontier.empty()) {
      std::vector<std::int64_t> next;
      for (std::int64_t x : frontier)
        for (std::int64_t g : gens) {
          const std::int64_t y = rep(mulmod64(x, g, m_));
          if (s.insert(y).second) next.push_back(y);
        }
      frontier = std::move(next);
    }
    return s;
  }

  const std::set<std::int64_t>& elements() const { return reps_; }

 private:
  std::int64_t m_;
  std::vector<std::int64_t> sub_;
  std::set<std::int64_t> reps_;
};

}  // namespace detail

/// Invariant factors of Gal(E/F): repeatedly take an element of largest order
/// meeting the subgroup generated so far trivially.
inline GaloisFactorization galois_factorization(const AbelianField& e, const AbelianField& f) {
  if (!e.contains(f)) throw std::invalid_argument("galois_factorization: F is not a subfield of E");
  GaloisFactorization out;
  out.modulus = e.modulus();
  const detail::QuotientGroup q(out.modulus, f.pullback(out.modulus), e.stabilizer());
  const auto total = static_cast<std::int64_t>(q.elements().size());
  std::set<std::int64_t> span = q.generated({});
  while (static_cast<std::int64_t>(span.size()) < total) {
    std::int64_t best = 0, best_order = 0;
    for (std::int64_t g : q.elements()) {
      const std::int64_t o = q.order_of(g);
      if (o <= best_order) continue;
      const auto cyc = q.generated({g});
      bool trivial = true;
      for (std::int64_t x : cyc)
        if (x != q.rep(1 % out.modulus) && span.count(x)) {
          trivial = false;
          break;
        }
      if (trivial) {
        best = g;
        best_order = o;
      }
    }
    out.gens.push_back(best);
    out.orders.push_back(best_order);
    out.n *= best_order;
    span = q.generated(out.gens);
  }
  if (out.n != total || static_cast<std::int64_t>(span.size()) != total)
    throw std::logic_error("galois_factorization: generators do not form a direct product");
  for (std::size_t i = 1; i < out.orders.size(); ++i)
    if (out.orders[i - 1] % out.orders[i] != 0) throw std::logic_error("galois_factorization: invariant factors out of order");
  return out;
}

struct WreathCharacter {
  CharacterTable base;
  std::size_t char_index = 0;
  AbelianField field;
  GaloisFactorization factorization;
  Integer degree = 1;
  std::vector<std::vector<Cyclotomic>> twists;  // twists[a][c] = chi^{tau^a}(class c)

  std::int64_t n() const { return factorization.n; }
};

inline WreathCharacter make_wreath(const CharacterTable& base, std::size_t char_index, const AbelianField& f) {
  WreathCharacter w;
  const AbelianField e = character_field(base, char_index);
  w.base = base;
  w.char_index = char_index;
  w.field = f;
  w.factorization = galois_factorization(e, f);
  const std::int64_t n = w.factorization.n;
  w.degree = Integer(static_cast<long>(n)) * ipow(base.degree(char_index), static_cast<unsigned long>(n));
  for (std::int64_t a = 0; a < n; ++a) {
    const std::int64_t k = w.factorization.element(a);
    auto& row = w.twists.emplace_back();
    for (const auto& z : base.row(char_index)) row.push_back(z.galois(mod64(k, z.modulus())));
  }
  return w;
}

namespace detail {

/// Mixed-radix coordinate index of a + b.
inline std::int64_t shift_index(const GaloisFactorization& g, std::int64_t a, std::int64_t b) {
  std::int64_t out = 0, scale = 1;
  for (std::int64_t ni : g.orders) {
    out += ((a % ni + b % ni) % ni) * scale;
    scale *= ni;
    a /= ni;
    b /= ni;
  }
  return out;
}

}  // namespace detail

/// phi^{tau_b}(X) = prod_a chi^{tau^{a+b}}(x_a).
inline Cyclotomic phi_value(const WreathCharacter& w, const std::vector<std::size_t>& tuple, std::int64_t shift = 0) {
  if (static_cast<std::int64_t>(tuple.size()) != w.n()) throw std::invalid_argument("phi_value: tuple length must be n");
  Cyclotomic v(1);
  for (std::int64_t a = 0; a < w.n(); ++a) v *= w.twists[static_cast<std::size_t>(detail::shift_index(w.factorization, a, shift))][tuple[static_cast<std::size_t>(a)]];
  return v;
}

/// psi(X) = sum over tau in Gal(E/F) of phi^tau(X).
inline Cyclotomic psi_value(const WreathCharacter& w, const std::vector<std::size_t>& tuple) {
  Cyclotomic sum;
  for (std::int64_t b = 0; b < w.n(); ++b) sum += phi_value(w, tuple, b);
  return sum;
}

/// X^{tau_j}: coordinate a takes the entry at a - e_j.
inline std::vector<std::size_t> act_on_tuple(const WreathCharacter& w, const std::vector<std::size_t>& tuple, std::size_t j) {
  const auto& g = w.factorization;
  std::int64_t unit = 1;
  for (std::size_t i = 0; i < j; ++i) unit *= g.orders[i];
  std::vector<std::size_t> out(tuple.size());
  for (std::int64_t a = 0; a < w.n(); ++a) out[static_cast<std::size_t>(detail::shift_index(g, a, unit))] = tuple[static_cast<std::size_t>(a)];
  return out;
}

/// No nontrivial shift fixes the array of twisted characters.
inline bool is_orbit_free(const WreathCharacter& w) {
  for (std::int64_t b = 1; b < w.n(); ++b) {
    bool fixed = true;
    for (std::int64_t a = 0; a < w.n() && fixed; ++a)
      fixed = w.twists[static_cast<std::size_t>(detail::shift_index(w.factorization, a, b))] == w.twists[static_cast<std::size_t>(a)];
    if (fixed) return false;
  }
  return true;
}

struct WreathReport {
  std::int64_t n = 1;
  Integer degree = 1;
  std::int64_t tuples = 0;
  Rational norm = 0;
  AbelianField field;
  bool degree_ok = false;
  bool norm_ok = false;
  bool field_ok = false;
  std::set<Cyclotomic> values;

  bool ok() const { return degree_ok && norm_ok && field_ok; }
};

/// Enumerates all class tuples of G^n.  [psi, psi]_H uses |H| = n |G|^n.
inline WreathReport verify_wreath(const WreathCharacter& w, std::int64_t bound = 1000000) {
  const std::size_t k = w.base.num_classes();
  const std::int64_t n = w.n();
  WreathReport r;
  r.n = n;
  r.degree = w.degree;
  Integer tuples = ipow(Integer(static_cast<unsigned long>(k)), static_cast<unsigned long>(n));
  if (tuples > bound)
    throw EnumerationLimit("verify_wreath: " + tuples.get_str() + " class tuples exceed the bound " + std::to_string(bound));
  r.tuples = tuples.get_si();

  std::vector<std::size_t> tuple(static_cast<std::size_t>(n), 0);
  Cyclotomic weighted;
  for (std::int64_t t = 0; t < r.tuples; ++t) {
    std::int64_t rest = t;
    Integer weight = 1;
    for (std::int64_t a = 0; a < n; ++a) {
      tuple[static_cast<std::size_t>(a)] = static_cast<std::size_t>(rest % static_cast<std::int64_t>(k));
      rest /= static_cast<std::int64_t>(k);
      weight *= static_cast<long>(w.base.classes[tuple[static_cast<std::size_t>(a)]].size);
    }
    const Cyclotomic psi = psi_value(w, tuple);
    if (t == 0) r.degree_ok = psi == Cyclotomic(Rational(w.degree));
    if (psi.is_zero()) continue;
    r.values.insert(psi);
    weighted += Cyclotomic(Rational(weight)) * psi * psi.conjugate();
  }
  const Integer order_h = Integer(static_cast<long>(n)) * ipow(Integer(static_cast<long>(w.base.order)), static_cast<unsigned long>(n));
  if (weighted.is_rational()) {
    r.norm = weighted.rational_value() / Rational(order_h);
    r.norm_ok = r.norm == 1;
  }
  r.field = field_of_values({r.values.begin(), r.values.end()});
  r.field_ok = r.field == w.field;
  return r;
}

struct RegistryEntry {
  AbelianField field;
  std::string table;
  std::size_t char_index = 0;
};

struct Realization {
  std::string description;
  AbelianField field;  // predicted, equal to the requested F
  Integer degree = 1;
  int nu = 0;          // nu_p(degree), equal to b
  bool materialized = false;
  bool verified = false;
  AbelianField computed_field;  // set when materialized
  WreathReport wreath;
};

/// A character with field F and nu_p(degree) = b: the wreath construction
/// from a registry character with field Q_{c(F)} (degree [Q_{c(F)} : F])
/// tensored with the (b - v)-th power of a rational degree-p registry
/// character, v = nu_p([Q_{c(F)} : F]).
inline Realization realize_prescribed(const AbelianField& f, std::int64_t p, int b, const std::vector<RegistryEntry>& registry,
                                      const std::function<const CharacterTable&(const std::string&)>& lookup,
                                      std::int64_t bound = 1000000) {
  if (!is_prime(p)) throw std::invalid_argument("realize_prescribed: p must be prime");
  const std::int64_t c = f.conductor();
  const AbelianField qc = AbelianField::cyclotomic(c);
  const int v = nu_p(degree_over(qc, f), p);
  if (b < v)
    throw std::invalid_argument("realize_prescribed: b too small, b = " + std::to_string(b) + " < nu_" + std::to_string(p) +
                                "([Q_" + std::to_string(c) + " : F]) = " + std::to_string(v));
  const RegistryEntry* top = nullptr;
  for (const auto& e : registry)
    if (e.field == qc) {
      top = &e;
      break;
    }
  if (!top) throw std::invalid_argument("realize_prescribed: missing registry entry with field Q_" + std::to_string(c));
  const RegistryEntry* rational = nullptr;
  if (b > v) {
    for (const auto& e : registry)
      if (e.field.is_rationals() && lookup(e.table).degree(e.char_index) == p) {
        rational = &e;
        break;
      }
    if (!rational) throw std::invalid_argument("realize_prescribed: missing registry entry for a rational character of degree " + std::to_string(p));
  }

  const CharacterTable& base = lookup(top->table);
  const WreathCharacter w = make_wreath(base, top->char_index, f);
  Realization out;
  out.field = f;
  std::ostringstream desc;
  desc << "(" << base.name << " chi" << top->char_index << ")^" << w.n() << " x| Gal(Q_" << c << "/" << f.to_string() << ")";
  out.degree = w.degree;
  std::vector<Cyclotomic> rational_values{Cyclotomic(1)};
  if (rational) {
    const CharacterTable& rt = lookup(rational->table);
    const int m = b - v;
    desc << " (x) (" << rt.name << " chi" << rational->char_index << ")^(x)" << m;
    out.degree *= ipow(Integer(static_cast<long>(p)), static_cast<unsigned long>(m));
    std::set<Cyclotomic> acc{Cyclotomic(1)};
    const std::set<Cyclotomic> row(rt.row(rational->char_index).begin(), rt.row(rational->char_index).end());
    for (int i = 0; i < m; ++i) {
      std::set<Cyclotomic> next;
      for (const auto& x : acc)
        for (const auto& y : row) next.insert(x * y);
      acc = std::move(next);
    }
    rational_values.assign(acc.begin(), acc.end());
  }
  out.description = desc.str();
  out.nu = nu_p(out.degree, p);
  try {
    out.wreath = verify_wreath(w, bound);
  } catch (const EnumerationLimit&) {
    return out;
  }
  out.materialized = true;
  std::vector<Cyclotomic> products;
  for (const auto& x : out.wreath.values)
    for (const auto& y : rational_values) products.push_back(x * y);
  out.computed_field = field_of_values(products);
  out.verified = out.wreath.ok() && out.computed_field == f && out.nu == b;
  return out;
}

}  // namespace charfield
