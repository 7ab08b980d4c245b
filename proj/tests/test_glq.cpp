#include "charfield/glq.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>

using namespace charfield;

namespace {

// Conjugacy classes of GL_n(p) by brute force over matrices with entries mod p.
using Matrix = std::vector<int>;

Matrix multiply(const Matrix& a, const Matrix& b, int n, int p) {
  Matrix c(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) c[i * n + j] = (c[i * n + j] + a[i * n + k] * b[k * n + j]) % p;
  return c;
}

bool invertible(const Matrix& m, int n, int p) {
  Matrix a = m;
  for (int col = 0, row = 0; col < n; ++col, ++row) {
    int pivot = -1;
    for (int r = row; r < n; ++r)
      if (a[r * n + col] % p) pivot = r;
    if (pivot < 0) return false;
    for (int j = 0; j < n; ++j) std::swap(a[row * n + j], a[pivot * n + j]);
    int inv = 1;
    while (a[row * n + col] * inv % p != 1) ++inv;
    for (int r = row + 1; r < n; ++r) {
      const int f = a[r * n + col] * inv % p;
      for (int j = 0; j < n; ++j) a[r * n + j] = ((a[r * n + j] - f * a[row * n + j]) % p + p) % p;
    }
  }
  return true;
}

std::size_t brute_force_class_count(int n, int p) {
  std::vector<Matrix> group;
  Matrix m(static_cast<std::size_t>(n * n), 0);
  const int total = static_cast<int>(std::pow(p, n * n));
  for (int code = 0; code < total; ++code) {
    int c = code;
    for (auto& x : m) {
      x = c % p;
      c /= p;
    }
    if (invertible(m, n, p)) group.push_back(m);
  }
  std::map<Matrix, std::size_t> index;
  for (std::size_t i = 0; i < group.size(); ++i) index[group[i]] = i;
  std::vector<Matrix> inverse(group.size());
  const Matrix id = [&] {
    Matrix e(static_cast<std::size_t>(n * n), 0);
    for (int i = 0; i < n; ++i) e[i * n + i] = 1;
    return e;
  }();
  for (const auto& g : group)
    for (const auto& h : group)
      if (multiply(g, h, n, p) == id) inverse[index[g]] = h;
  std::vector<bool> seen(group.size(), false);
  std::size_t classes = 0;
  for (std::size_t i = 0; i < group.size(); ++i) {
    if (seen[i]) continue;
    ++classes;
    for (std::size_t j = 0; j < group.size(); ++j) seen[index[multiply(multiply(group[j], group[i], n, p), inverse[j], n, p)]] = true;
  }
  return classes;
}

DJChar find_char(int n, std::int64_t q, int eps, int d, std::int64_t e, const Partition& lambda) {
  for (const auto& chi : enumerate_gl(n, q, eps))
    if (chi.pairs.size() == 1 && chi.pairs[0].first == FqPoint{d, e} && chi.pairs[0].second == lambda) return chi;
  throw std::runtime_error("character not found");
}

}  // namespace

TEST(GlOrder, Examples) {
  EXPECT_EQ(gl_order(2, 3, 1), 48);
  EXPECT_EQ(gl_order_prime_to_r(2, 3, 1), 16);
  EXPECT_EQ(gl_order(2, 2, -1), 18);
  for (std::int64_t q : {2, 3, 4, 5, 7}) {
    EXPECT_EQ(gl_order(1, q, 1), q - 1);
    EXPECT_EQ(gl_order(1, q, -1), q + 1);
  }
  EXPECT_EQ(gl_order(3, 2, 1), 168);
  EXPECT_THROW(gl_order(2, 6, 1), std::invalid_argument);
  EXPECT_THROW(gl_order(2, 3, 0), std::invalid_argument);
}

TEST(GlEnumerate, Examples) {
  const auto gl22 = enumerate_gl(2, 2, 1);
  ASSERT_EQ(gl22.size(), 3u);
  std::multiset<Integer> degrees;
  for (const auto& chi : gl22) degrees.insert(gl_degree(chi));
  EXPECT_EQ(degrees, (std::multiset<Integer>{1, 1, 2}));
  for (std::int64_t q : {2, 3, 4, 5, 7}) {
    const auto chars = enumerate_gl(1, q, 1);
    EXPECT_EQ(static_cast<std::int64_t>(chars.size()), q - 1);
    for (const auto& chi : chars) EXPECT_EQ(gl_degree(chi), 1);
  }
  EXPECT_EQ(enumerate_gl(2, 3, 1).size(), 8u);
  EXPECT_THROW(enumerate_gl(5, 2, 1), std::invalid_argument);
  EXPECT_THROW(enumerate_gl(2, 8, 1), std::invalid_argument);
}

TEST(GlEnumerate, ClassNumbersAgainstBruteForce) {
  EXPECT_EQ(class_number(2, 2, 1), brute_force_class_count(2, 2));
  EXPECT_EQ(class_number(2, 3, 1), brute_force_class_count(2, 3));
  EXPECT_EQ(class_number(2, 5, 1), brute_force_class_count(2, 5));
  EXPECT_EQ(class_number(3, 2, 1), brute_force_class_count(3, 2));
  EXPECT_EQ(enumerate_gl(3, 2, 1).size(), brute_force_class_count(3, 2));
  // GU_2(2) = S_3 x C_3.
  EXPECT_EQ(class_number(2, 2, -1), 9);
}

TEST(GlDegree, Examples) {
  for (std::int64_t q : {2, 3, 4, 5, 7}) {
    EXPECT_EQ(gl_degree(find_char(2, q, 1, 1, 0, {1, 1})), q);
    EXPECT_EQ(gl_degree(find_char(2, q, 1, 1, 0, {2})), 1);
    const auto cusp = points_of_degree(q, 2, 1).front();
    EXPECT_EQ(gl_degree(find_char(2, q, 1, 2, cusp.e, {1})), q - 1);
  }
  std::multiset<Integer> gu22;
  for (const auto& chi : enumerate_gl(2, 2, -1)) gu22.insert(gl_degree(chi));
  EXPECT_EQ(gu22, (std::multiset<Integer>{1, 1, 1, 1, 1, 1, 2, 2, 2}));
}

TEST(GlDegree, SumOfSquaresEqualsOrder) {
  for (auto [n, q] : std::vector<std::pair<int, std::int64_t>>{{1, 7}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 7}, {3, 2}, {3, 3}, {3, 4}, {4, 2}, {4, 3}})
    for (int eps : {1, -1}) {
      const auto chars = enumerate_gl(n, q, eps);
      Integer sum = 0;
      for (const auto& chi : chars) {
        validate_dj(chi);
        const Integer d = gl_degree(chi);
        EXPECT_GT(d, 0);
        sum += d * d;
      }
      EXPECT_EQ(sum, gl_order(n, q, eps)) << gl_group_name(n, q, eps);
      EXPECT_EQ(Integer(static_cast<long>(chars.size())), class_number(n, q, eps)) << gl_group_name(n, q, eps);
    }
}

TEST(GlGalois, Examples) {
  const auto gl22 = find_char(2, 2, 1, 2, 1, {1});
  EXPECT_EQ(galois_act(gl22, 2), gl22);
  EXPECT_EQ(galois_act(gl22, 1), gl22);
  const auto cusp = find_char(2, 3, 1, 2, 1, {1});
  EXPECT_EQ(point_order(3, 1, cusp.pairs[0].first), 8);
  EXPECT_EQ(galois_act(cusp, 3), cusp);
  EXPECT_NE(galois_act(cusp, 5), cusp);
  EXPECT_THROW(galois_act(cusp, 2), std::invalid_argument);
}

TEST(GlField, Examples) {
  const auto cusp = find_char(2, 3, 1, 2, 1, {1});
  EXPECT_EQ(gl_field_of_values(cusp), quadratic_field(-2));
  EXPECT_EQ(gl_conductor(cusp), 8);
  for (const auto& chi : enumerate_gl(3, 3, 1)) {
    bool unipotent = true;
    for (const auto& [s, lambda] : chi.pairs) unipotent = unipotent && s.e == 0;
    if (unipotent) EXPECT_TRUE(gl_field_of_values(chi).is_rationals());
  }
  EXPECT_TRUE(gl_field_of_values(find_char(2, 2, 1, 2, 1, {1})).is_rationals());
}

TEST(GlConjectureB, Examples) {
  const auto cusp = find_char(2, 3, 1, 2, 1, {1});
  const auto r = check_conjecture_b(cusp, 0, 2);
  EXPECT_EQ(r.a, 3);
  EXPECT_EQ(r.index, 2);
  EXPECT_EQ(r.degree, 2);
  EXPECT_EQ(r.verdict(), "pass");
  const auto u = check_conjecture_b(find_char(2, 3, 1, 1, 0, {1, 1}), 0, 2);
  EXPECT_EQ(u.verdict(), "pass-vacuous");
  const auto scan = scan_gl(3, 3, 1, {2});
  for (const auto& rec : scan.records) EXPECT_TRUE(rec.pass) << rec.note;
  EXPECT_TRUE(scan.sum_squares_ok());
  EXPECT_TRUE(scan.class_count_ok());
}

TEST(GlProperty, GaloisActionIsAGroupActionPreservingDegree) {
  for (auto [n, q, eps] : std::vector<std::tuple<int, std::int64_t, int>>{{2, 5, 1}, {3, 3, 1}, {3, 3, -1}, {2, 7, -1}, {3, 4, 1}}) {
    for (const auto& chi : enumerate_gl(n, q, eps)) {
      const std::int64_t big = gl_orbit_lcm(chi);
      const auto us = units(big);
      const auto f = gl_field_of_values(chi);
      EXPECT_EQ(big % f.conductor(), 0);
      const Integer deg = gl_degree(chi);
      for (std::size_t i = 0; i < us.size() && i < 6; ++i)
        for (std::size_t j = 0; j < us.size() && j < 6; ++j) {
          const auto k = us[i], l = us[j];
          const auto lhs = galois_act(galois_act(chi, l), k);
          EXPECT_EQ(lhs, galois_act(chi, mulmod64(k, l, big)));
          EXPECT_EQ(gl_degree(lhs), deg);
        }
    }
  }
}

TEST(GlProperty, ConjectureBScansHaveNoViolations) {
  for (auto [n, q] : std::vector<std::pair<int, std::int64_t>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {2, 7}, {4, 2}})
    for (int eps : {1, -1}) {
      const auto scan = scan_gl(n, q, eps);
      for (const auto& rec : scan.records) EXPECT_TRUE(rec.pass) << rec.group << " " << rec.note << " p=" << rec.prime;
    }
}

TEST(N1Quantity, Examples) {
  auto r = n1_quantity(1, 1, 3, 2, 1);
  EXPECT_EQ(r.n1, 4);
  EXPECT_TRUE(r.ok());
  r = n1_quantity(1, 0, 3, 2, 1);
  EXPECT_EQ(r.n1, 1);
  EXPECT_TRUE(r.ok());
  r = n1_quantity(1, 2, 3, 2, 1);
  EXPECT_EQ(r.n1, Rational(gl_order_prime_to_r(4, 3, 1)) / 16);
  EXPECT_TRUE(r.strong_divisible);
  EXPECT_TRUE(r.ok());
  EXPECT_THROW(n1_quantity(1, 1, 4, 2, 1), std::invalid_argument);
}

TEST(N1Quantity, Grid) {
  for (int k = 1; k <= 3; ++k)
    for (int b = 0; b <= 3; ++b)
      for (std::int64_t q : {3, 5, 7, 9})
        for (std::int64_t p : {2, 3})
          for (int eps : {1, -1}) {
            if (detail::torus_order(q, k, eps) % p != 0) continue;
            const auto r = n1_quantity(k, b, q, p, eps);
            EXPECT_TRUE(r.ok()) << k << " " << b << " " << q << " " << p << " " << eps;
            // N1 = N2 (q^{kp^b} - e^{kp^b}) / (q^k - e^k).
            const Rational ratio = Rational(detail::torus_order_exact(q, k * ipow64(p, b), eps)) / Rational(detail::torus_order_exact(q, k, eps));
            EXPECT_EQ(r.n1, r.n2 * ratio);
          }
}

TEST(A2Divisibility, SmallCases) {
  for (std::int64_t q : {2, 3, 4, 5, 7})
    for (std::int64_t p : {2, 3, 5})
      for (int eps : {1, -1})
        for (int d1 = 1; d1 <= 2; ++d1)
          for (int c = 0; c <= 2; ++c) {
            if (q % p == 0 || detail::torus_order(q, d1, eps) % p != 0) continue;
            if (ipow64(p, c) * d1 > 18) continue;
            EXPECT_TRUE(a2_divisibility(d1, c, q, p, eps)) << q << " " << p << " " << d1 << " " << c;
          }
}
