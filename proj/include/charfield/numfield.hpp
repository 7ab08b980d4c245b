// Abelian number fields through the Galois correspondence inside Q_n.
//
// A field F is stored as (n, H) where H <= (Z/n)^x is the subgroup fixing F
// pointwise, so F = Q_n^H.  Values are always canonical: n is the conductor
// c(F), i.e. no proper divisor m of n has the kernel of (Z/n)^x -> (Z/m)^x
// inside H.  Q_1 = Q_2 = Q both canonicalise to modulus 1 with H = {0}.
#pragma once

#include "charfield/arith.hpp"
#include "charfield/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace charfield {

namespace detail {

/// Subgroup of (Z/n)^x generated by gens (residues already reduced).
inline std::vector<std::int64_t> subgroup_closure(std::int64_t n, const std::vector<std::int64_t>& gens) {
  const std::int64_t one = 1 % n;
  std::set<std::int64_t> seen{one};
  std::vector<std::int64_t> frontier{one};
  while (!frontier.empty()) {
    std::vector<std::int64_t> next;
    for (std::int64_t x : frontier)
      for (std::int64_t g : gens) {
        const std::int64_t y = mulmod64(x, g, n);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

inline bool in_sorted(const std::vector<std::int64_t>& v, std::int64_t x) { return std::binary_search(v.begin(), v.end(), x); }

}  // namespace detail

class AbelianField {
 public:
  /// Q.
  AbelianField() : modulus_(1), stabilizer_{0} {}

  static AbelianField rationals() { return {}; }

  /// The fixed field in Q_n of the subgroup generated by gens.
  static AbelianField from_stabilizer(std::int64_t n, const std::vector<std::int64_t>& gens) {
    if (n < 1) throw std::invalid_argument("field modulus must be positive");
    std::vector<std::int64_t> reduced;
    for (std::int64_t g : gens) {
      const std::int64_t r = mod64(g, n);
      if (std::gcd(r, n) != 1 && n != 1)
        throw std::invalid_argument("stabilizer generator " + std::to_string(g) + " is not coprime to " + std::to_string(n));
      reduced.push_back(r);
    }
    return from_subgroup(n, detail::subgroup_closure(n, reduced));
  }

  /// Q_m.
  static AbelianField cyclotomic(std::int64_t m) { return from_stabilizer(m, {}); }

  /// Takes H as a full, sorted subgroup of (Z/n)^x and canonicalises.
  static AbelianField from_subgroup(std::int64_t n, std::vector<std::int64_t> subgroup) {
    if (n % 4 == 2) {
      // (Z/2m)^x -> (Z/m)^x is an isomorphism for odd m.
      n /= 2;
      for (auto& h : subgroup) h = mod64(h, n);
      std::sort(subgroup.begin(), subgroup.end());
      subgroup.erase(std::unique(subgroup.begin(), subgroup.end()), subgroup.end());
    }
    bool moved = true;
    while (moved && n > 1) {
      moved = false;
      for (std::int64_t p : prime_divisors(n)) {
        const std::int64_t m = (p == 2 && n % 8 != 0) ? n / 4 : n / p;
        bool kernel_inside = true;
        for (std::int64_t k : units(n))
          if (mod64(k, m) == 1 % m && !detail::in_sorted(subgroup, k)) {
            kernel_inside = false;
            break;
          }
        if (!kernel_inside) continue;
        std::set<std::int64_t> image;
        for (std::int64_t h : subgroup) image.insert(mod64(h, m));
        subgroup.assign(image.begin(), image.end());
        n = m;
        moved = true;
        break;
      }
    }
    AbelianField f;
    f.modulus_ = n;
    f.stabilizer_ = std::move(subgroup);
    return f;
  }

  std::int64_t modulus() const { return modulus_; }
  std::int64_t conductor() const { return modulus_; }
  const std::vector<std::int64_t>& stabilizer() const { return stabilizer_; }

  /// [F : Q] = phi(n) / |H|.
  std::int64_t degree() const { return euler_phi(modulus_) / static_cast<std::int64_t>(stabilizer_.size()); }

  bool is_rationals() const { return modulus_ == 1; }

  /// Preimage of H in (Z/L)^x for a multiple L of the modulus.
  std::vector<std::int64_t> pullback(std::int64_t big) const {
    if (big % modulus_ != 0) throw std::invalid_argument("pullback target must be a multiple of the modulus");
    std::vector<std::int64_t> out;
    for (std::int64_t k : units(big))
      if (detail::in_sorted(stabilizer_, mod64(k, modulus_))) out.push_back(k);
    return out;
  }

  /// sub is a subfield of this field.
  bool contains(const AbelianField& sub) const {
    if (modulus_ % sub.modulus_ != 0) return false;
    return std::all_of(stabilizer_.begin(), stabilizer_.end(),
                       [&](std::int64_t h) { return detail::in_sorted(sub.stabilizer_, mod64(h, sub.modulus_)); });
  }

  bool contains(const Cyclotomic& z) const {
    if (modulus_ % z.modulus() != 0) return false;
    return std::all_of(stabilizer_.begin(), stabilizer_.end(),
                       [&](std::int64_t h) { return z.galois(mod64(h, z.modulus())) == z; });
  }

  std::string to_string() const;

  friend bool operator==(const AbelianField& a, const AbelianField& b) {
    return a.modulus_ == b.modulus_ && a.stabilizer_ == b.stabilizer_;
  }
  friend bool operator!=(const AbelianField& a, const AbelianField& b) { return !(a == b); }
  friend bool operator<(const AbelianField& a, const AbelianField& b) {
    return a.modulus_ != b.modulus_ ? a.modulus_ < b.modulus_ : a.stabilizer_ < b.stabilizer_;
  }

 private:
  std::int64_t modulus_;
  std::vector<std::int64_t> stabilizer_;
};

/// The smallest field containing all values.
inline AbelianField field_of_values(const std::vector<Cyclotomic>& values) {
  std::set<Cyclotomic> distinct(values.begin(), values.end());
  std::int64_t n = 1;
  std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> stabs;
  for (const auto& z : distinct) {
    if (z.is_rational()) continue;
    n = Cyclotomic::common_modulus(n, z.modulus());
    stabs.emplace_back(z.modulus(), z.stabilizer());
  }
  std::vector<std::int64_t> joint;
  for (std::int64_t k : units(n)) {
    bool fixed = std::all_of(stabs.begin(), stabs.end(),
                             [&](const auto& s) { return detail::in_sorted(s.second, mod64(k, s.first)); });
    if (fixed) joint.push_back(k);
  }
  return AbelianField::from_subgroup(n, std::move(joint));
}

inline std::int64_t conductor(const AbelianField& f) { return f.conductor(); }

/// Compositum E F.
inline AbelianField compositum(const AbelianField& e, const AbelianField& f) {
  const std::int64_t big = Cyclotomic::common_modulus(e.modulus(), f.modulus());
  const auto he = e.pullback(big), hf = f.pullback(big);
  std::vector<std::int64_t> meet;
  std::set_intersection(he.begin(), he.end(), hf.begin(), hf.end(), std::back_inserter(meet));
  return AbelianField::from_subgroup(big, std::move(meet));
}

/// E intersected with F.
inline AbelianField intersect(const AbelianField& e, const AbelianField& f) {
  const std::int64_t big = Cyclotomic::common_modulus(e.modulus(), f.modulus());
  std::vector<std::int64_t> gens = e.pullback(big);
  const auto hf = f.pullback(big);
  gens.insert(gens.end(), hf.begin(), hf.end());
  return AbelianField::from_subgroup(big, detail::subgroup_closure(big, gens));
}

/// F_m = F(exp(2 pi i / m)).
inline AbelianField adjoin(const AbelianField& f, std::int64_t m) { return compositum(f, AbelianField::cyclotomic(m)); }

/// [E : F]; requires F inside E.
inline std::int64_t degree_over(const AbelianField& e, const AbelianField& f) {
  if (!e.contains(f)) throw std::invalid_argument("degree_over: fields are not nested");
  return e.degree() / f.degree();
}

/// Q(sqrt d) for squarefree d not in {0, 1}.  The stabiliser comes from the
/// Gauss-sum expression of sqrt d; the conductor rule is checked afterwards.
inline AbelianField quadratic_field(std::int64_t d) {
  if (d == 0 || d == 1 || !is_squarefree(d)) throw std::invalid_argument("quadratic_field: d must be squarefree and not 0 or 1");
  AbelianField f = field_of_values({Cyclotomic::sqrt_of_integer(Integer(static_cast<long>(d)))});
  const std::int64_t ad = d < 0 ? -d : d;
  const std::int64_t expected = mod64(d, 4) == 1 ? ad : 4 * ad;
  if (f.conductor() != expected || f.degree() != 2)
    throw std::logic_error("quadratic_field: conductor rule violated for d = " + std::to_string(d));
  return f;
}

/// d with F = Q(sqrt d) when [F:Q] = 2.
inline std::optional<std::int64_t> quadratic_radicand(const AbelianField& f) {
  if (f.degree() != 2) return std::nullopt;
  const std::int64_t c = f.conductor();
  for (std::int64_t d = 1; d <= c; ++d) {
    if (c % d != 0 || !is_squarefree(d)) continue;
    for (std::int64_t sd : {d, -d}) {
      if (sd == 1) continue;
      if (quadratic_field(sd) == f) return sd;
    }
  }
  return std::nullopt;
}

struct DegreeIndex {
  int a = 0;               // nu_p(c(F))
  std::int64_t index = 1;  // [F_{p^a} : F_p], 1 when a = 0
};

inline DegreeIndex conjecture_degree_index(const AbelianField& f, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("conjecture_degree_index: p must be prime");
  DegreeIndex out;
  out.a = nu_p(f.conductor(), p);
  if (out.a == 0) return out;
  out.index = degree_over(adjoin(f, ipow64(p, out.a)), adjoin(f, p));
  return out;
}

inline std::string AbelianField::to_string() const {
  if (modulus_ == 1) return "Q";
  if (stabilizer_.size() == 1) return "Q_" + std::to_string(modulus_);
  if (auto d = quadratic_radicand(*this)) return "Q(sqrt(" + std::to_string(*d) + "))";
  std::string s = "Q_" + std::to_string(modulus_) + "^<";
  for (std::size_t i = 0; i < stabilizer_.size(); ++i) s += (i ? "," : "") + std::to_string(stabilizer_[i]);
  return s + ">";
}

}  // namespace charfield
