#include "charfield/json_io.hpp"
#include "charfield/numfield.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace charfield;

namespace {

std::int64_t element_order(std::int64_t k, std::int64_t n) {
  std::int64_t x = k % n, order = 1;
  while (x != 1 % n) {
    x = x * k % n;
    ++order;
  }
  return order;
}

std::set<std::int64_t> generated(std::int64_t n, std::initializer_list<std::int64_t> gens) {
  std::set<std::int64_t> s{1 % n};
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::int64_t x : std::vector<std::int64_t>(s.begin(), s.end()))
      for (std::int64_t g : gens) grew |= s.insert(x * g % n).second;
  }
  return s;
}

std::int64_t p_part(std::int64_t m, std::int64_t p) {
  std::int64_t out = 1;
  while (m % p == 0) {
    m /= p;
    out *= p;
  }
  return out;
}

}  // namespace

TEST(AbelianField, FromStabilizerExamples) {
  auto r2 = AbelianField::from_stabilizer(8, {7});
  EXPECT_EQ(r2.modulus(), 8);
  EXPECT_EQ(r2.stabilizer(), (std::vector<std::int64_t>{1, 7}));
  EXPECT_EQ(r2, quadratic_field(2));

  auto q = AbelianField::from_stabilizer(5, {2});
  EXPECT_TRUE(q.is_rationals());
  EXPECT_EQ(q.modulus(), 1);

  auto q12 = AbelianField::from_stabilizer(12, {});
  EXPECT_EQ(q12.modulus(), 12);
  EXPECT_EQ(q12.stabilizer(), (std::vector<std::int64_t>{1}));
  EXPECT_EQ(AbelianField::cyclotomic(2), AbelianField::rationals());
  EXPECT_EQ(AbelianField::cyclotomic(6), AbelianField::cyclotomic(3));

  EXPECT_THROW(AbelianField::from_stabilizer(8, {2}), std::invalid_argument);
}

TEST(AbelianField, FromValuesExamples) {
  auto sqrt5ish = Cyclotomic::zeta(5) + Cyclotomic::zeta(5, 4);
  auto f = field_of_values({sqrt5ish});
  EXPECT_EQ(f, quadratic_field(5));
  EXPECT_EQ(f.stabilizer(), (std::vector<std::int64_t>{1, 4}));
  EXPECT_TRUE(field_of_values({Cyclotomic(1), Cyclotomic(Rational(-3, 2))}).is_rationals());
  EXPECT_EQ(field_of_values({Cyclotomic::zeta(3), Cyclotomic::zeta(4)}), AbelianField::cyclotomic(12));
}

TEST(AbelianField, ConductorAndValuation) {
  const auto f = quadratic_field(6);
  EXPECT_EQ(conductor(f), 24);
  EXPECT_EQ(nu_p(24, 2), 3);
  EXPECT_EQ(conductor(AbelianField::rationals()), 1);
}

TEST(AbelianField, Adjoin) {
  const auto f = quadratic_field(6);
  const auto f8 = adjoin(f, 8);
  EXPECT_EQ(f8.degree(), 8);
  EXPECT_EQ(degree_over(f8, f), 4);
  EXPECT_EQ(adjoin(AbelianField::rationals(), 15), AbelianField::cyclotomic(15));
  EXPECT_EQ(adjoin(quadratic_field(5), 5), AbelianField::cyclotomic(5));
  EXPECT_EQ(degree_over(AbelianField::cyclotomic(5), quadratic_field(5)), 2);
}

TEST(AbelianField, LatticeOperations) {
  EXPECT_EQ(intersect(AbelianField::cyclotomic(8), AbelianField::cyclotomic(12)), quadratic_field(-1));
  EXPECT_EQ(degree_over(AbelianField::cyclotomic(9), AbelianField::cyclotomic(3)), 3);
  EXPECT_EQ(compositum(quadratic_field(2), quadratic_field(-1)), AbelianField::cyclotomic(8));
  EXPECT_TRUE(AbelianField::cyclotomic(8).contains(quadratic_field(-2)));
  EXPECT_FALSE(quadratic_field(2).contains(quadratic_field(-1)));
  EXPECT_THROW(degree_over(quadratic_field(2), quadratic_field(3)), std::invalid_argument);
}

TEST(AbelianField, QuadraticFieldExamples) {
  EXPECT_EQ(quadratic_field(6).conductor(), 24);
  EXPECT_EQ(quadratic_field(5).conductor(), 5);
  EXPECT_EQ(quadratic_field(-1).conductor(), 4);
  EXPECT_THROW(quadratic_field(12), std::invalid_argument);
  EXPECT_THROW(quadratic_field(1), std::invalid_argument);
  EXPECT_EQ(quadratic_field(-7).to_string(), "Q(sqrt(-7))");
  EXPECT_EQ(AbelianField::cyclotomic(5).to_string(), "Q_5");
}

TEST(AbelianField, ConjectureDegreeIndexExamples) {
  auto r = conjecture_degree_index(quadratic_field(6), 2);
  EXPECT_EQ(r.a, 3);
  EXPECT_EQ(r.index, 4);
  r = conjecture_degree_index(AbelianField::cyclotomic(5), 5);
  EXPECT_EQ(r.a, 1);
  EXPECT_EQ(r.index, 1);
  r = conjecture_degree_index(quadratic_field(-2), 2);
  EXPECT_EQ(r.a, 3);
  EXPECT_EQ(r.index, 2);
  r = conjecture_degree_index(quadratic_field(5), 2);
  EXPECT_EQ(r.a, 0);
  EXPECT_EQ(r.index, 1);
}

TEST(AbelianField, JsonRoundTrip) {
  for (auto f : {AbelianField::rationals(), quadratic_field(-7), AbelianField::cyclotomic(20),
                 AbelianField::from_stabilizer(13, {3})}) {
    EXPECT_EQ(field_from_json(field_to_json(f)), f);
  }
  EXPECT_THROW(field_from_json(Json{{"n", 8}, {"stabilizer", {2}}}), SchemaError);
}

TEST(AbelianFieldProperty, QuadraticRuleMatchesStabilizerDescent) {
  for (std::int64_t ad = 2; ad <= 50; ++ad) {
    if (!is_squarefree(ad)) continue;
    for (std::int64_t d : {ad, -ad}) {
      const std::int64_t rule = mod64(d, 4) == 1 ? ad : 4 * ad;
      const auto descended = field_of_values({Cyclotomic::sqrt_of_integer(Integer(static_cast<long>(d)))});
      EXPECT_EQ(descended.conductor(), rule) << d;
      EXPECT_EQ(quadratic_field(d).conductor(), rule) << d;
    }
  }
}

TEST(AbelianFieldProperty, GaloisCorrespondenceIsAntitone) {
  std::mt19937 rng(5);
  for (std::int64_t n : {7, 8, 12, 15, 16, 21, 24, 40, 63}) {
    const auto u = units(n);
    std::uniform_int_distribution<std::size_t> pick(0, u.size() - 1);
    for (int trial = 0; trial < 10; ++trial) {
      const std::int64_t g = u[pick(rng)], h = u[pick(rng)];
      const auto small = generated(n, {g}), big = generated(n, {g, h});
      const auto f_small = AbelianField::from_stabilizer(n, {g});
      const auto f_big = AbelianField::from_stabilizer(n, {g, h});
      ASSERT_TRUE(f_small.contains(f_big));
      EXPECT_EQ(degree_over(f_small, f_big), static_cast<std::int64_t>(big.size() / small.size()));
      EXPECT_EQ(AbelianField::from_stabilizer(f_small.modulus(), f_small.stabilizer()), f_small);
    }
  }
}

TEST(AbelianFieldProperty, CompositumConductorIsLcm) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::int64_t> mod(1, 40);
  for (int trial = 0; trial < 60; ++trial) {
    const std::int64_t n = mod(rng), m = mod(rng);
    const auto un = units(n), um = units(m);
    const auto e = AbelianField::from_stabilizer(n, {un[trial % un.size()]});
    const auto f = AbelianField::from_stabilizer(m, {um[(3 * trial) % um.size()]});
    const auto c = compositum(e, f);
    EXPECT_EQ(lcm64(e.conductor(), f.conductor()) % c.conductor(), 0);
    // Both fields lie in Q_{c(EF)}, so each conductor divides it.
    EXPECT_EQ(c.conductor(), lcm64(e.conductor(), f.conductor()));
    EXPECT_TRUE(c.contains(e));
    EXPECT_TRUE(c.contains(f));
    const auto i = intersect(e, f);
    EXPECT_TRUE(e.contains(i));
    EXPECT_TRUE(f.contains(i));
  }
}

// Gal(Q_{p^a}/Q_p) is the kernel of (Z/p^a)^x -> (Z/p)^x.
TEST(AbelianFieldProperty, RelativeGaloisGroupOfPrimePowerCyclotomic) {
  for (std::int64_t p : {2, 3, 5}) {
    for (int a = 1; a <= 5; ++a) {
      const std::int64_t n = ipow64(p, a);
      std::vector<std::int64_t> kernel;
      for (std::int64_t k : units(n))
        if (k % p == 1 % p) kernel.push_back(k);
      std::int64_t max_order = 1, involutions = 0;
      for (std::int64_t k : kernel) {
        const auto o = element_order(k, n);
        max_order = std::max(max_order, o);
        involutions += o == 2;
      }
      const auto size = static_cast<std::int64_t>(kernel.size());
      EXPECT_EQ(degree_over(AbelianField::cyclotomic(n), AbelianField::cyclotomic(p)), size);
      if (p > 2) {
        EXPECT_EQ(size, ipow64(p, a - 1));
        EXPECT_EQ(max_order, size);
      } else if (a >= 3) {
        EXPECT_EQ(size, ipow64(2, a - 1));
        EXPECT_EQ(max_order, ipow64(2, a - 2));
        EXPECT_EQ(involutions, 3);
      }
    }
  }
}

// Every subgroup of (Z/2^a)^x = C_{2^{a-2}} x C_2 is C_M or C_M x C_2.
TEST(AbelianFieldProperty, SubgroupsOfTwoPowerUnitGroup) {
  for (int a = 3; a <= 6; ++a) {
    const std::int64_t n = ipow64(2, a);
    const auto u = units(n);
    std::set<std::set<std::int64_t>> subgroups;
    for (std::int64_t g : u)
      for (std::int64_t h : u) subgroups.insert(generated(n, {g, h}));
    for (const auto& s : subgroups) {
      std::int64_t max_order = 1;
      for (std::int64_t k : s) max_order = std::max(max_order, element_order(k, n));
      const auto size = static_cast<std::int64_t>(s.size());
      EXPECT_TRUE(size == max_order || size == 2 * max_order);
      const auto f = AbelianField::from_subgroup(n, {s.begin(), s.end()});
      EXPECT_EQ(f.degree(), euler_phi(n) / size);
    }
  }
}

TEST(AbelianFieldProperty, DegreeIndexIsPPartOfExtensionDegree) {
  std::mt19937 rng(3);
  for (std::int64_t n : {8, 9, 16, 24, 25, 27, 32, 36, 40, 45, 48, 72}) {
    const auto u = units(n);
    for (int trial = 0; trial < 8; ++trial) {
      const auto f = AbelianField::from_stabilizer(n, {u[rng() % u.size()]});
      for (std::int64_t p : prime_divisors(n)) {
        const auto r = conjecture_degree_index(f, p);
        EXPECT_EQ(p_part(r.index, p), r.index);
        if (r.a == 0) continue;
        const auto full = degree_over(adjoin(f, ipow64(p, r.a)), f);
        EXPECT_EQ(r.index, p_part(full, p)) << f.to_string() << " p=" << p;
      }
    }
  }
}
