#include <gtest/gtest.h>

#include "support.hpp"

using namespace wedder;

TEST(Critical, SL23AndQ8) {
  EXPECT_FALSE(critical_sl23(SL23{}, rationals()).verdict);
  EXPECT_TRUE(critical_sl23(SL23{}, cyclotomic(7)).verdict);
  EXPECT_FALSE(critical_sl23(SL23{}, cyclotomic(4)).verdict);  // 2 ramifies in Q(i)
  EXPECT_FALSE(critical_q8(cyclotomic(5)).verdict);            // f_2 = 4
  const auto r = critical_q8(cyclotomic(7));
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(format_component(*r.witness), "(-1,-1 / CF(7))");
}

TEST(Critical, WithCyclic) {
  EXPECT_TRUE(critical_with_cyclic(QuaternionGen{2}, 7, rationals()).verdict);
  EXPECT_TRUE(critical_with_cyclic(SL23{}, 7, rationals()).verdict);
  EXPECT_FALSE(critical_with_cyclic(QuaternionGen{2}, 5, rationals()).verdict);
  EXPECT_FALSE(critical_with_cyclic(QuaternionGen{2}, 7, cyclotomic(3)).verdict);
  EXPECT_THROW(critical_with_cyclic(SL23{}, 3, rationals()), DomainError);
}

TEST(Critical, Zb) {
  EXPECT_FALSE(critical_zb(7, rationals()).verdict);
  EXPECT_TRUE(critical_zb(7, cyclotomic(3)).verdict);
  EXPECT_FALSE(critical_zb(5, cyclotomic(3)).verdict);
  EXPECT_FALSE(critical_zb(7, cyclotomic(7)).verdict);
  EXPECT_FALSE(critical_zb(3, cyclotomic(4)).verdict);  // 3 is inert in Q(i)
  EXPECT_TRUE(critical_zb(3, make_field(8, {3})).verdict);
  EXPECT_THROW(critical_zb(9, rationals()), DomainError);
}

TEST(Critical, ZcProduct) {
  EXPECT_TRUE(critical_zc_product(11, 3, rationals()).verdict);
  EXPECT_TRUE(critical_zc_product(13, 3, rationals()).verdict);
  EXPECT_FALSE(critical_zc_product(3, 7, cyclotomic(4)).verdict);
  EXPECT_FALSE(critical_zc_product(5, 3, rationals()).verdict);  // o_5(3) = 4
  const auto r = critical_zc_product(3, 7, rationals());
  ASSERT_TRUE(r.verdict);
  EXPECT_EQ(format_field(center_of(*r.witness)), "NF(21,[ 1, 13 ])");
}

TEST(Critical, ZcIndexData) {
  const auto d40 = zc_index_data({5, 8, 4, 4}, 4, rationals());
  EXPECT_EQ(format_field(d40.k_field), "NF(20,[ 1, 9 ])");
  EXPECT_EQ(d40.m_p, 2u);
  EXPECT_EQ(zc_index_data({7, 9, 3, 2}, 3, rationals()).m_p, 3u);
  EXPECT_EQ(zc_index_data({5, 16, 4, 2}, 4, rationals()).m_p, 4u);
  EXPECT_THROW(zc_index_data({5, 8, 4, 4}, 3, rationals()), DomainError);
}

TEST(Critical, ZcGeneral) {
  EXPECT_TRUE(critical_zc_general({13, 8, 4, 12}, rationals()).verdict);
  EXPECT_TRUE(critical_zc_general({11, 16, 8, 10}, rationals()).verdict);
  EXPECT_TRUE(critical_zc_general({7, 9, 3, 2}, rationals()).verdict);
  const auto bad = critical_zc_general({5, 4, 1, 2}, rationals());
  EXPECT_FALSE(bad.verdict);
  ASSERT_TRUE(bad.failed_condition);
  EXPECT_EQ(bad.failed_condition->rfind("NotInFamily", 0), 0u);
}

TEST(Critical, NeverCritical) {
  for (const Field& f : {rationals(), cyclotomic(4), cyclotomic(7)}) {
    EXPECT_FALSE(never_critical(SL25{}, f).verdict);
    EXPECT_FALSE(never_critical(BinaryOctahedral{}, f).verdict);
  }
  EXPECT_THROW(never_critical(SL23{}, rationals()), DomainError);
}

TEST(Critical, Dispatcher) {
  EXPECT_FALSE(is_critical(Cyclic{12}, rationals()).verdict);
  EXPECT_FALSE(is_critical(QuaternionGen{4}, rationals()).verdict);
  const auto r = is_critical(MetacyclicSplit{7, 9, 3, 2}, rationals());
  ASSERT_TRUE(r.verdict);
  EXPECT_EQ(schur_index(r.witness->algebra), 3u);
  EXPECT_TRUE(is_critical(product_with_cyclic(QuaternionGen{2}, 23), rationals()).verdict);
  EXPECT_TRUE(is_critical(MetacyclicSplit{21, 4, 2, 13}, rationals()).verdict);  // C3 x (C7 : C4)
  EXPECT_TRUE(is_critical(QuaternionGen{3}, make_field(8, {3})).verdict);        // Q12 = C3 : C4
}

TEST(Critical, Enumerate) {
  EXPECT_TRUE(enumerate_critical(rationals(), 39).empty());
  const auto r7 = enumerate_critical(cyclotomic(7), 8);
  ASSERT_EQ(r7.size(), 1u);
  EXPECT_EQ(format_group(r7.front().group), "Q8");
  EXPECT_THROW(enumerate_critical(rationals(), 0), DomainError);
}

TEST(Critical, Cyclotomic) {
  EXPECT_TRUE(cyclotomic_specialization(QuaternionGen{2}, 7));
  EXPECT_FALSE(cyclotomic_specialization(QuaternionGen{2}, 4));
  EXPECT_TRUE(cyclotomic_specialization(MetacyclicSplit{7, 4, 2, 6}, 9));
  EXPECT_THROW(cyclotomic_specialization(QuaternionGen{2}, 2), DomainError);
}

TEST(Critical, SmallGroupIds) {
  EXPECT_EQ(known_smallgroup_id(MetacyclicSplit{5, 8, 4, 4}), std::optional<std::string>("[40, 1]"));
  EXPECT_FALSE(known_smallgroup_id(MetacyclicSplit{7, 3, 1, 2}));
}

TEST(CriticalProperty, ReportsAreWellFormed) {
  const std::vector<Field> fields = {rationals(), cyclotomic(3), cyclotomic(4), cyclotomic(7), cyclotomic_real(5),
                                     make_field(8, {7}), cyclotomic(15)};
  int accepted = 0;
  for (const auto& f : fields) {
    for (const auto& g : wedder::testing::metacyclic_up_to(250)) {
      const auto r = is_critical(g, f);
      ASSERT_EQ(r.verdict, r.witness.has_value()) << format_group(g);
      ASSERT_NE(r.verdict, r.failed_condition.has_value()) << format_group(g);
      if (r.verdict) {
        ++accepted;
        ASSERT_EQ(classify_exceptional(*r.witness).kind, ExceptionalKind::Type1) << format_group(g);
        ASSERT_TRUE(subfield_of(f, center_of(*r.witness))) << format_group(g);
      }
    }
  }
  EXPECT_GT(accepted, 20);
}

TEST(CriticalProperty, EnumerationIsMonotone) {
  for (const Field& f : {rationals(), cyclotomic(3), cyclotomic(7)}) {
    const auto big = enumerate_critical(f, 400);
    for (u64 n : {50u, 120u, 200u, 333u}) {
      const auto small = enumerate_critical(f, n);
      ASSERT_LE(small.size(), big.size());
      for (std::size_t i = 0; i < small.size(); ++i) {
        ASSERT_EQ(small[i].group, big[i].group) << n;
        ASSERT_LE(order(small[i].group), n);
      }
      if (small.size() < big.size()) ASSERT_GT(order(big[small.size()].group), n);
    }
  }
}

TEST(CriticalProperty, EnumerationAgreesWithDispatcher) {
  for (const Field& f : {rationals(), cyclotomic(4), cyclotomic_real(5)}) {
    std::vector<std::string> listed;
    for (const auto& r : enumerate_critical(f, 150)) listed.push_back(format_group(r.group));
    for (const auto& g : wedder::testing::metacyclic_up_to(150)) {
      if (!is_prime(g.m) || g.r != make_metacyclic(g.m, g.n, g.k).r) continue;
      if (!is_critical(g, f).verdict) continue;
      const auto s = split_central_factor(g);
      if (s.central > 1) continue;  // listed as a direct product
      EXPECT_NE(std::find(listed.begin(), listed.end(), format_group(GroupSpec(g))), listed.end())
          << format_group(GroupSpec(g)) << " over " << format_field(f);
    }
  }
}
