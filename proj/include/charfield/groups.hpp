// Generated character tables: cyclic, dihedral and dicyclic families, direct
// products, and a few small groups entered by hand (A4, A5, SL(2,3)).
#pragma once

#include "charfield/chartab.hpp"
#include "charfield/expression.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace charfield {

namespace detail {

inline std::vector<Cyclotomic> parse_row(const std::vector<std::string>& texts) {
  std::vector<Cyclotomic> out;
  for (const auto& s : texts) out.push_back(parse_expression(s));
  return out;
}

}  // namespace detail

/// C_n = <g>; character j sends g^k to zeta_n^{jk}.
inline CharacterTable cyclic_table(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclic_table: n must be positive");
  CharacterTable t;
  t.name = "C" + std::to_string(n);
  t.order = n;
  for (std::int64_t k = 0; k < n; ++k) t.classes.push_back({1, n / std::gcd(k, n), k == 0 ? "1" : "g^" + std::to_string(k)});
  for (std::int64_t j = 0; j < n; ++j) {
    std::vector<Cyclotomic> row;
    for (std::int64_t k = 0; k < n; ++k) row.push_back(Cyclotomic::zeta(n, j * k % n));
    t.irreducibles.push_back(std::move(row));
  }
  detail::finish_table_exponent(t);
  return t;
}

/// D_{2m} = <r, s | r^m, s^2, srs = r^-1> of the given order 2m >= 4.
inline CharacterTable dihedral_table(std::int64_t order) {
  if (order < 4 || order % 2 != 0) throw std::invalid_argument("dihedral_table: order must be even and at least 4");
  const std::int64_t m = order / 2;
  CharacterTable t;
  t.name = "D" + std::to_string(order);
  t.order = order;
  // Rotation classes {r^k, r^-k} for 0 <= k <= m/2.
  std::vector<std::int64_t> rot;
  for (std::int64_t k = 0; 2 * k <= m; ++k) {
    rot.push_back(k);
    t.classes.push_back({(k == 0 || 2 * k == m) ? 1 : 2, m / std::gcd(k, m), k == 0 ? "1" : "r^" + std::to_string(k)});
  }
  if (m % 2 == 0) {
    t.classes.push_back({m / 2, 2, "s"});
    t.classes.push_back({m / 2, 2, "sr"});
  } else {
    t.classes.push_back({m, 2, "s"});
  }
  auto linear = [&](int rv, int sv) {
    std::vector<Cyclotomic> row;
    for (std::int64_t k : rot) row.emplace_back(k % 2 == 0 ? 1 : rv);
    row.emplace_back(sv);
    if (m % 2 == 0) row.emplace_back(sv * rv);
    t.irreducibles.push_back(std::move(row));
  };
  linear(1, 1);
  linear(1, -1);
  if (m % 2 == 0) {
    linear(-1, 1);
    linear(-1, -1);
  }
  for (std::int64_t j = 1; 2 * j < m; ++j) {
    std::vector<Cyclotomic> row;
    for (std::int64_t k : rot) row.push_back(Cyclotomic::zeta(m, j * k % m) + Cyclotomic::zeta(m, mod64(-j * k, m)));
    row.emplace_back(0);
    if (m % 2 == 0) row.emplace_back(0);
    t.irreducibles.push_back(std::move(row));
  }
  detail::finish_table_exponent(t);
  return t;
}

/// Dic_m = <a, x | a^{2m}, x^2 = a^m, x^-1 a x = a^-1> of order 4m >= 8;
/// order 2^k gives the generalised quaternion group.
inline CharacterTable dicyclic_table(std::int64_t order) {
  if (order < 8 || order % 4 != 0) throw std::invalid_argument("dicyclic_table: order must be a multiple of 4, at least 8");
  const std::int64_t m = order / 4, n = 2 * m;
  CharacterTable t;
  t.name = "Dic" + std::to_string(order);
  t.order = order;
  for (std::int64_t k = 0; k <= m; ++k)
    t.classes.push_back({(k == 0 || k == m) ? 1 : 2, n / std::gcd(k, n), k == 0 ? "1" : "a^" + std::to_string(k)});
  t.classes.push_back({m, 4, "x"});
  t.classes.push_back({m, 4, "xa"});
  auto linear = [&](const Cyclotomic& av, const Cyclotomic& xv) {
    std::vector<Cyclotomic> row;
    for (std::int64_t k = 0; k <= m; ++k) row.push_back(av.pow(k));
    row.push_back(xv);
    row.push_back(xv * av);
    t.irreducibles.push_back(std::move(row));
  };
  if (m % 2 == 0) {
    for (int av : {1, -1})
      for (int xv : {1, -1}) linear(Cyclotomic(av), Cyclotomic(xv));
  } else {
    // The abelianisation is cyclic of order 4, generated by the image of x.
    for (std::int64_t s = 0; s < 4; ++s) linear(Cyclotomic(s % 2 == 0 ? 1 : -1), Cyclotomic::zeta(4, s));
  }
  for (std::int64_t j = 1; j < m; ++j) {
    std::vector<Cyclotomic> row;
    for (std::int64_t k = 0; k <= m; ++k) row.push_back(Cyclotomic::zeta(n, j * k % n) + Cyclotomic::zeta(n, mod64(-j * k, n)));
    row.emplace_back(0);
    row.emplace_back(0);
    t.irreducibles.push_back(std::move(row));
  }
  detail::finish_table_exponent(t);
  return t;
}

/// Classes are pairs (i, j) in row-major order; characters are outer products.
inline CharacterTable direct_product(const CharacterTable& a, const CharacterTable& b) {
  CharacterTable t;
  t.name = a.name + "x" + b.name;
  t.order = a.order * b.order;
  for (const auto& ca : a.classes)
    for (const auto& cb : b.classes) t.classes.push_back({ca.size * cb.size, lcm64(ca.order, cb.order), ca.label + "*" + cb.label});
  for (const auto& ra : a.irreducibles)
    for (const auto& rb : b.irreducibles) {
      std::vector<Cyclotomic> row;
      for (const auto& x : ra)
        for (const auto& y : rb) row.push_back(x * y);
      t.irreducibles.push_back(std::move(row));
    }
  detail::finish_table_exponent(t);
  return t;
}

inline CharacterTable a4_table() {
  CharacterTable t;
  t.name = "A4";
  t.order = 12;
  t.classes = {{1, 1, "1"}, {3, 2, "2a"}, {4, 3, "3a"}, {4, 3, "3b"}};
  t.irreducibles = {detail::parse_row({"1", "1", "1", "1"}), detail::parse_row({"1", "1", "z(3)", "z(3)^2"}),
                    detail::parse_row({"1", "1", "z(3)^2", "z(3)"}), detail::parse_row({"3", "-1", "0", "0"})};
  detail::finish_table_exponent(t);
  return t;
}

inline CharacterTable a5_table() {
  // (1 + sqrt 5)/2 = -z^2 - z^3 and (1 - sqrt 5)/2 = -z - z^4 with z = z(5).
  const std::string plus = "-1*z(5)^2 - z(5)^3", minus = "-1*z(5) - z(5)^4";
  CharacterTable t;
  t.name = "A5";
  t.order = 60;
  t.classes = {{1, 1, "1"}, {15, 2, "2a"}, {20, 3, "3a"}, {12, 5, "5a"}, {12, 5, "5b"}};
  t.irreducibles = {detail::parse_row({"1", "1", "1", "1", "1"}), detail::parse_row({"3", "-1", "0", plus, minus}),
                    detail::parse_row({"3", "-1", "0", minus, plus}), detail::parse_row({"4", "0", "1", "-1", "-1"}),
                    detail::parse_row({"5", "1", "-1", "0", "0"})};
  detail::finish_table_exponent(t);
  return t;
}

inline CharacterTable sl23_table() {
  const std::string w = "z(3)", w2 = "z(3)^2";
  CharacterTable t;
  t.name = "SL(2,3)";
  t.order = 24;
  t.classes = {{1, 1, "1"}, {1, 2, "2a"}, {6, 4, "4a"}, {4, 3, "3a"}, {4, 3, "3b"}, {4, 6, "6a"}, {4, 6, "6b"}};
  t.irreducibles = {
      detail::parse_row({"1", "1", "1", "1", "1", "1", "1"}),
      detail::parse_row({"1", "1", "1", w, w2, w, w2}),
      detail::parse_row({"1", "1", "1", w2, w, w2, w}),
      detail::parse_row({"3", "3", "-1", "0", "0", "0", "0"}),
      detail::parse_row({"2", "-2", "0", "-1", "-1", "1", "1"}),
      detail::parse_row({"2", "-2", "0", "-1*" + w, "-1*" + w2, w, w2}),
      detail::parse_row({"2", "-2", "0", "-1*" + w2, "-1*" + w, w2, w}),
  };
  detail::finish_table_exponent(t);
  return t;
}

}  // namespace charfield
