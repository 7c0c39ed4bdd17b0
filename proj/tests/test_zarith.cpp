#include <gtest/gtest.h>

#include <random>
#include <set>

#include "wedder/zarith.hpp"

using namespace wedder;

TEST(Zarith, MultOrder) {
  EXPECT_EQ(mult_order(2, 7), 3u);
  EXPECT_EQ(mult_order(7, 9), 3u);
  EXPECT_EQ(mult_order(3, 8), 2u);
  EXPECT_EQ(mult_order(-1, 5), 2u);
  EXPECT_EQ(mult_order(4, 5), 2u);
  EXPECT_THROW(mult_order(2, 4), DomainError);
}

TEST(Zarith, Valuation) {
  EXPECT_EQ(valuation(2, 48), 4u);
  EXPECT_EQ(valuation(3, 48), 1u);
  EXPECT_EQ(valuation(5, 48), 0u);
}

TEST(Zarith, Factorize) {
  const auto f = factorize(360);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f[0].prime, 2u);
  EXPECT_EQ(f[0].exponent, 3u);
  EXPECT_EQ(f[2].prime, 5u);
  EXPECT_EQ(divisors(12), (std::vector<u64>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(euler_phi(20), 8u);
  EXPECT_EQ(prime_divisors(1), std::vector<u64>{});
}

TEST(Zarith, CrtPair) {
  const u64 x = crt_pair(2, 3, 1, 8);
  EXPECT_EQ(x % 3, 2u);
  EXPECT_EQ(x % 8, 1u);
  EXPECT_LT(x, 24u);
  EXPECT_THROW(crt_pair(1, 4, 1, 6), DomainError);
}

TEST(Zarith, Subgroups) {
  const auto h = subgroup_closure(20, {9});
  EXPECT_EQ(h.elements, (std::vector<u64>{1, 9}));
  EXPECT_EQ(unit_group(20).size(), 8u);
  const auto l = lift_subgroup(ResidueSubgroup{5, {1, 4}}, 20);
  EXPECT_EQ(l.size(), 4u);
  EXPECT_TRUE(is_subgroup_of(h, l));
  EXPECT_FALSE(is_subgroup_of(l, h));
  EXPECT_EQ(reduce_subgroup(l, 5).elements, (std::vector<u64>{1, 4}));
  const auto a = subgroup_closure(21, {4});
  const auto b = subgroup_closure(21, {13});
  EXPECT_EQ(subgroup_product(a, b).size(), a.size() * b.size() / subgroup_intersection(a, b).size());
}

TEST(Zarith, CrtSplitRoundTrip) {
  const CrtSplit s = primary_split(360);
  for (u64 x = 1; x < 360; ++x) {
    if (gcd(x, 360) != 1) continue;
    EXPECT_EQ(s.join(s.split(x)), x);
  }
}

TEST(ZarithProperty, MultOrderAgainstBruteForce) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const u64 m = 2 + rng() % 500;
    const u64 r = 1 + rng() % (m - 1);
    if (gcd(r, m) != 1) continue;
    u64 t = 1;
    u64 x = r % m;
    while (x != 1 % m) {
      x = x * r % m;
      ++t;
    }
    ASSERT_EQ(mult_order(static_cast<i64>(r), m), t) << r << " mod " << m;
  }
}

TEST(ZarithProperty, ClosureIsSubgroup) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const u64 m = 3 + rng() % 300;
    std::vector<i64> gens;
    for (int j = 0; j < 2; ++j) {
      const u64 g = 1 + rng() % (m - 1);
      if (gcd(g, m) == 1) gens.push_back(static_cast<i64>(g));
    }
    const auto h = subgroup_closure(m, gens);
    ASSERT_EQ(euler_phi(m) % h.size(), 0u);
    std::set<u64> el(h.elements.begin(), h.elements.end());
    for (u64 a : h.elements) {
      for (u64 b : h.elements) ASSERT_TRUE(el.count(a * b % m));
    }
  }
}

TEST(Zarith, ValuationExamples) {
  EXPECT_EQ(valuation(2, 40), 3u);
  EXPECT_EQ(valuation(5, 40), 1u);
  EXPECT_EQ(valuation(3, 40), 0u);
  EXPECT_THROW(valuation(4, 40), DomainError);
}

TEST(Zarith, ClosureExamples) {
  EXPECT_EQ(subgroup_closure(20, {9}).elements, (std::vector<u64>{1, 9}));
  EXPECT_EQ(subgroup_closure(21, {4}).elements, (std::vector<u64>{1, 4, 16}));
  EXPECT_EQ(subgroup_closure(17, {}).elements, std::vector<u64>{1});
  EXPECT_EQ(mult_order(1, 17), 1u);
  EXPECT_THROW(subgroup_closure(20, {5}), DomainError);
}

TEST(Zarith, CrtSplitExamples) {
  const CrtSplit s21(21, {7, 3});
  EXPECT_EQ(s21.split(16), (std::vector<u64>{2, 1}));
  EXPECT_EQ(s21.join({2, 1}), 16u);
  const CrtSplit s20(20, {4, 5});
  EXPECT_EQ(s20.split(9), (std::vector<u64>{1, 4}));
  EXPECT_EQ(s20.join({1, 1}), 1u);
  EXPECT_THROW(CrtSplit(24, {4, 6}), DomainError);
}

TEST(ZarithProperty, OrderDividesPhi) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 2000; ++i) {
    const u64 m = 2 + rng() % 10000;
    const u64 r = rng() % m;
    if (gcd(r, m) != 1) continue;
    ASSERT_EQ(euler_phi(m) % mult_order(static_cast<i64>(r), m), 0u);
  }
}

TEST(ZarithProperty, ClosureIdempotentAndOrderFree) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 1000; ++i) {
    const u64 m = 3 + rng() % 400;
    std::vector<i64> gens;
    for (int j = 0; j < 3; ++j) {
      const u64 g = 1 + rng() % (m - 1);
      if (gcd(g, m) == 1) gens.push_back(static_cast<i64>(g));
    }
    const auto h = subgroup_closure(m, gens);
    std::vector<i64> rev(gens.rbegin(), gens.rend());
    ASSERT_EQ(subgroup_closure(m, rev), h);
    ASSERT_EQ(subgroup_closure(m, std::vector<i64>(h.elements.begin(), h.elements.end())), h);
  }
}

TEST(ZarithProperty, CrtSplitExhaustive) {
  for (u64 m = 2; m <= 3000; ++m) {
    const CrtSplit s = primary_split(m);
    for (u64 x = 1; x < m; ++x) {
      if (gcd(x, m) != 1) continue;
      ASSERT_EQ(s.join(s.split(x)), x) << m;
    }
  }
}
