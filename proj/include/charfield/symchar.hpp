// Partitions, hook lengths and the characters of symmetric and alternating
// groups: Murnaghan-Nakayama values on beta-sets, and the diagonal-hook
// description of the fields of values of the split characters of A_n.
#pragma once

#include "charfield/chartab.hpp"
#include "charfield/numfield.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace charfield {

using Partition = std::vector<int>;

namespace detail {

inline void partitions_into(int remaining, int max_part, Partition& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

inline std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace detail

inline int partition_size(const Partition& p) {
  int n = 0;
  for (int x : p) n += x;
  return n;
}

/// All partitions of n in reverse lexicographic order, (n) first.
inline std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("partitions: n must be non-negative");
  std::vector<Partition> out;
  Partition prefix;
  detail::partitions_into(n, n, prefix, out);
  return out;
}

inline Partition conjugate(const Partition& p) {
  Partition out;
  for (int j = 0; !p.empty() && j < p.front(); ++j) {
    int len = 0;
    while (len < static_cast<int>(p.size()) && p[len] > j) ++len;
    out.push_back(len);
  }
  return out;
}

inline bool is_self_conjugate(const Partition& p) { return conjugate(p) == p; }

/// Hook length at the cell in row i, column j (both from 0).
inline int hook_length(const Partition& p, int i, int j) {
  if (i < 0 || i >= static_cast<int>(p.size()) || j < 0 || j >= p[i]) throw std::invalid_argument("hook_length: cell outside the diagram");
  const Partition c = conjugate(p);
  return p[i] - j + c[j] - i - 1;
}

inline std::string partition_to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

struct DiagonalHookData {
  int k = 0;
  std::vector<int> hooks;
  int epsilon = 1;            // (-1)^{(n-k)/2}
  std::int64_t product = 1;   // product of the diagonal hooks
  std::int64_t squarefree = 1;  // squarefree part of the product
};

inline DiagonalHookData diagonal_hooks(const Partition& p) {
  if (!is_self_conjugate(p)) throw std::invalid_argument("diagonal_hooks: " + partition_to_string(p) + " is not self-conjugate");
  DiagonalHookData d;
  for (int i = 0; i < static_cast<int>(p.size()) && p[i] > i; ++i) {
    d.hooks.push_back(hook_length(p, i, i));
    d.product *= d.hooks.back();
  }
  d.k = static_cast<int>(d.hooks.size());
  const int n = partition_size(p);
  d.epsilon = ((n - d.k) / 2) % 2 == 0 ? 1 : -1;
  d.squarefree = squarefree_part(d.product);
  return d;
}

/// Q(sqrt(eps * prod h_ii)), or Q when that radicand is a square.
inline AbelianField alt_field_of_values(const Partition& p) {
  const auto d = diagonal_hooks(p);
  const std::int64_t radicand = squarefree_part(d.epsilon * d.product);
  return radicand == 1 ? AbelianField::rationals() : quadratic_field(radicand);
}

inline std::int64_t alt_conductor(const Partition& p) { return diagonal_hooks(p).squarefree; }

/// One record per self-conjugate partition of n <= max_n: the conductor of the
/// formula field must have nu_p <= 1 for every p and equal the squarefree part
/// of the hook product.  The note lists nu_p for the given primes.
inline std::vector<VerificationRecord> scan_alternating(int max_n, const std::vector<std::int64_t>& primes) {
  if (max_n < 1) throw std::invalid_argument("scan_alternating: max_n must be at least 1");
  std::vector<VerificationRecord> out;
  for (int n = 1; n <= max_n; ++n) {
    const auto parts = partitions(n);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (!is_self_conjugate(parts[i])) continue;
      const auto hooks = diagonal_hooks(parts[i]);
      const AbelianField f = alt_field_of_values(parts[i]);
      VerificationRecord r;
      r.group = "A" + std::to_string(n);
      r.char_index = static_cast<int>(i);
      r.conductor = f.conductor();
      r.degree = 1;
      r.check = "alternating";
      for (const auto& [p, e] : factorize(r.conductor)) r.a = std::max(r.a, e);
      r.pass = r.a <= 1 && r.conductor == hooks.squarefree;
      std::ostringstream note;
      note << "lambda=" << partition_to_string(parts[i]);
      for (std::int64_t p : primes) note << " nu_" << p << "=" << nu_p(r.conductor, p);
      r.note = note.str();
      out.push_back(std::move(r));
    }
  }
  return out;
}

namespace detail {

/// Character value by removing rim hooks of lengths mu[idx], mu[idx+1], ...
/// from the beta-set `beads`.
inline std::int64_t mn_on_beads(std::uint64_t beads, const Partition& mu, std::size_t idx,
                                std::map<std::pair<std::uint64_t, std::size_t>, std::int64_t>& memo) {
  if (idx == mu.size()) return 1;
  if (auto it = memo.find({beads, idx}); it != memo.end()) return it->second;
  const int r = mu[idx];
  std::int64_t total = 0;
  for (int b = r; b < 64; ++b) {
    if (!(beads >> b & 1) || (beads >> (b - r) & 1)) continue;
    const std::uint64_t between = (beads >> (b - r + 1)) & ((std::uint64_t{1} << (r - 1)) - 1);
    const int sign = std::popcount(between) % 2 == 0 ? 1 : -1;
    total += sign * mn_on_beads(beads ^ (std::uint64_t{1} << b) ^ (std::uint64_t{1} << (b - r)), mu, idx + 1, memo);
  }
  memo.emplace(std::make_pair(beads, idx), total);
  return total;
}

}  // namespace detail

/// chi^lambda at the class of cycle type mu (Murnaghan-Nakayama).
inline std::int64_t mn_value(const Partition& lambda, const Partition& mu) {
  const int n = partition_size(lambda);
  if (partition_size(mu) != n) throw std::invalid_argument("mn_value: partitions of different sizes");
  if (2 * n > 63) throw std::invalid_argument("mn_value: n too large");
  std::uint64_t beads = 0;
  const int len = static_cast<int>(lambda.size());
  for (int i = 0; i < len; ++i) beads |= std::uint64_t{1} << (lambda[i] + len - 1 - i);
  std::map<std::pair<std::uint64_t, std::size_t>, std::int64_t> memo;
  return detail::mn_on_beads(beads, mu, 0, memo);
}

/// n! / z_mu.
inline std::int64_t class_size_of_cycle_type(const Partition& mu) {
  std::map<int, int> mult;
  for (int x : mu) ++mult[x];
  std::int64_t z = 1;
  for (const auto& [part, m] : mult) z *= detail::factorial(m) * ipow64(part, m);
  return detail::factorial(partition_size(mu)) / z;
}

inline std::int64_t order_of_cycle_type(const Partition& mu) {
  std::int64_t o = 1;
  for (int x : mu) o = lcm64(o, x);
  return o;
}

inline bool is_even_cycle_type(const Partition& mu) { return (partition_size(mu) - static_cast<int>(mu.size())) % 2 == 0; }

/// Cycle types whose S_n-class splits in A_n: distinct odd parts.
inline bool has_distinct_odd_parts(const Partition& mu) {
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (mu[i] % 2 == 0 || (i > 0 && mu[i] == mu[i - 1])) return false;
  return true;
}

/// Classes of S_n in lexicographic order (identity first); rows in reverse
/// lexicographic order of partitions (trivial first).
inline CharacterTable symmetric_table(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("symmetric_table: n must be in 1..16");
  auto types = partitions(n);
  std::reverse(types.begin(), types.end());
  CharacterTable t;
  t.name = "S" + std::to_string(n);
  t.order = detail::factorial(n);
  for (const auto& mu : types) t.classes.push_back({class_size_of_cycle_type(mu), order_of_cycle_type(mu), partition_to_string(mu)});
  for (const auto& lambda : partitions(n)) {
    std::vector<Cyclotomic> row;
    for (const auto& mu : types) row.emplace_back(mn_value(lambda, mu));
    t.irreducibles.push_back(std::move(row));
    t.character_labels.push_back(partition_to_string(lambda));
  }
  detail::finish_table_exponent(t);
  return t;
}

/// A_n-classes as (cycle type, sign) with sign 0 for unsplit classes and
/// +1/-1 for the two halves of a split class.
inline std::vector<std::pair<Partition, int>> alternating_classes(int n) {
  auto types = partitions(n);
  std::reverse(types.begin(), types.end());
  std::vector<std::pair<Partition, int>> out;
  for (const auto& mu : types) {
    if (!is_even_cycle_type(mu)) continue;
    if (n > 1 && has_distinct_odd_parts(mu)) {
      out.emplace_back(mu, 1);
      out.emplace_back(mu, -1);
    } else {
      out.emplace_back(mu, 0);
    }
  }
  return out;
}

/// Irreducibles of A_n.  For lambda != lambda' the first of the pair in
/// reverse lexicographic order is kept; a self-conjugate lambda gives two
/// characters taking (eps +- sqrt(eps prod h_ii))/2 on the halves of h(lambda)
/// and half the S_n value elsewhere.  Orthogonality is checked on return.
inline CharacterTable alternating_table(int n) {
  if (n < 3 || n > 16) throw std::invalid_argument("alternating_table: n must be in 3..16");
  const auto classes = alternating_classes(n);
  CharacterTable t;
  t.name = "A" + std::to_string(n);
  t.order = detail::factorial(n) / 2;
  for (const auto& [mu, s] : classes) {
    const std::int64_t size = class_size_of_cycle_type(mu) / (s == 0 ? 1 : 2);
    t.classes.push_back({size, order_of_cycle_type(mu), partition_to_string(mu) + (s > 0 ? "+" : s < 0 ? "-" : "")});
  }
  const auto parts = partitions(n);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Partition& lambda = parts[i];
    const Partition dual = conjugate(lambda);
    if (lambda != dual) {
      if (std::find(parts.begin(), parts.end(), dual) < parts.begin() + static_cast<std::ptrdiff_t>(i)) continue;
      std::vector<Cyclotomic> row;
      for (const auto& [mu, s] : classes) row.emplace_back(mn_value(lambda, mu));
      t.irreducibles.push_back(std::move(row));
      t.character_labels.push_back(partition_to_string(lambda));
      continue;
    }
    const auto hooks = diagonal_hooks(lambda);
    const Partition h(hooks.hooks.begin(), hooks.hooks.end());
    if (mn_value(lambda, h) != hooks.epsilon)
      throw std::logic_error("alternating_table: unexpected value at h(lambda) for " + partition_to_string(lambda));
    const Cyclotomic root = Cyclotomic::sqrt_of_integer(Integer(static_cast<long>(hooks.epsilon * hooks.product)));
    const Cyclotomic half(Rational(1, 2));
    for (int sign : {1, -1}) {
      std::vector<Cyclotomic> row;
      for (const auto& [mu, s] : classes) {
        if (s != 0 && mu == h)
          row.push_back(half * (Cyclotomic(hooks.epsilon) + Cyclotomic(sign * s) * root));
        else
          row.push_back(half * Cyclotomic(mn_value(lambda, mu)));
      }
      t.irreducibles.push_back(std::move(row));
      t.character_labels.push_back(partition_to_string(lambda) + (sign > 0 ? "+" : "-"));
    }
  }
  detail::finish_table_exponent(t);
  validate_table(t);
  return t;
}

/// Fusion of alternating_table(n) into symmetric_table(n).
inline FusionMap alternating_fusion(int n) {
  auto types = partitions(n);
  std::reverse(types.begin(), types.end());
  FusionMap f{"A" + std::to_string(n), "S" + std::to_string(n), {}};
  for (const auto& [mu, s] : alternating_classes(n))
    f.map.push_back(static_cast<std::size_t>(std::find(types.begin(), types.end(), mu) - types.begin()));
  return f;
}

}  // namespace charfield
