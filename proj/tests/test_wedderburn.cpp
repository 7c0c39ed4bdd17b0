#include <gtest/gtest.h>

#include <map>
#include <set>

#include "support.hpp"

using namespace wedder;
using wedder::testing::metacyclic_up_to;
using wedder::testing::random_field;

namespace {

/// Component multiset keyed by printed form, multiplicities summed.
std::map<std::string, u64> tally(const Decomposition& d) {
  std::map<std::string, u64> out;
  for (const auto& c : d) out[format_component(c)] += c.multiplicity;
  return out;
}

std::multiset<u64> rational_dims(const Decomposition& d) {
  std::multiset<u64> out;
  for (const auto& c : d) {
    for (u64 i = 0; i < c.multiplicity; ++i) out.insert(dimension_over(c, rationals()));
  }
  return out;
}

}  // namespace

TEST(Wedderburn, ShodaPairsOfC7C3) {
  const MetacyclicSplit g{7, 3, 1, 2};
  const auto d = decompose(g, rationals());
  EXPECT_EQ(rational_dims(d), (std::multiset<u64>{1, 2, 18}));
  int noncommutative = 0;
  for (const auto& c : d) noncommutative += component_degree(c) > 1;
  EXPECT_EQ(noncommutative, 1);
}

TEST(Wedderburn, FaithfulPairOf40) {
  const MetacyclicSplit g{5, 8, 4, 4};
  const auto pairs = enumerate_shoda_pairs(g);
  const ShodaPair faithful{2, 5, 4};
  EXPECT_NE(std::find(pairs.begin(), pairs.end(), faithful), pairs.end());
  const SimpleComponent c = component_of_pair(g, faithful, rationals());
  ASSERT_TRUE(std::holds_alternative<CyclicCyclotomicAlgebra>(c.algebra));
  const auto& a = std::get<CyclicCyclotomicAlgebra>(c.algebra);
  EXPECT_EQ(format_field(a.center), "NF(20,[ 1, 9 ])");
  EXPECT_EQ(a.top_conductor, 5u);
  EXPECT_EQ(a.twist_order, 4u);
  EXPECT_EQ(cyclic_degree(a), 2u);
  EXPECT_EQ(c.matrix_size, 1u);
}

TEST(Wedderburn, ZetaFormForCp2C4) {
  for (u64 p : {3u, 7u, 11u, 5u}) {
    const SimpleComponent c = component_of_pair({p, 4, 2, p - 1}, ShodaPair{2, p, 2}, rationals());
    ASSERT_TRUE(std::holds_alternative<QuaternionSymbol>(c.algebra)) << p;
    const auto& q = std::get<QuaternionSymbol>(c.algebra);
    EXPECT_EQ(q.form, QuaternionForm::ZetaForm);
    EXPECT_EQ(q.zeta, p);
    EXPECT_EQ(q.base, cyclotomic_real(p));
  }
}

TEST(Wedderburn, TrivialPair) {
  const SimpleComponent c = component_of_pair({5, 8, 4, 4}, ShodaPair{1, 1, 1}, rationals());
  EXPECT_EQ(c.matrix_size, 1u);
  EXPECT_EQ(c.algebra, Algebra(FieldAlgebra{rationals()}));
}

TEST(Wedderburn, WholeGroupE) {
  EXPECT_TRUE(e_F_is_whole_group({7, 4, 2, 6}, rationals()));
  EXPECT_FALSE(e_F_is_whole_group({7, 4, 2, 6}, cyclotomic(7)));
  EXPECT_TRUE(e_F_is_whole_group({7, 4, 2, 6}, cyclotomic_real(7)));
}

TEST(Wedderburn, SL23) {
  const auto d = decompose(SL23{}, rationals());
  EXPECT_EQ(tally(d), (std::map<std::string, u64>{{"Rationals", 1},
                                                  {"CF(3)", 1},
                                                  {"M_3(Rationals)", 1},
                                                  {"(-1,-1 / Rationals)", 1},
                                                  {"M_2(CF(3))", 1}}));
  EXPECT_EQ(total_dimension(d, rationals()), 24u);
}

TEST(Wedderburn, SL25) {
  const auto d = decompose(SL25{}, rationals());
  EXPECT_EQ(d.size(), 7u);
  EXPECT_EQ(total_dimension(d, rationals()), 120u);
  EXPECT_EQ(tally(d).count("(-1,-1 / NF(5,[ 1, 4 ]))"), 1u);
  EXPECT_EQ(tally(d).count("M_2((-1,-3 / Rationals))"), 1u);
  EXPECT_EQ(tally(d).count("M_3((-1,-1 / Rationals))"), 1u);
  EXPECT_EQ(tally(d).count("M_3(NF(5,[ 1, 4 ]))"), 1u);
}

TEST(Wedderburn, Q8) {
  const auto d = decompose(QuaternionGen{2}, rationals());
  EXPECT_EQ(tally(d), (std::map<std::string, u64>{{"Rationals", 4}, {"(-1,-1 / Rationals)", 1}}));
}

TEST(Wedderburn, SL25OverSqrt5Doubles) {
  // F ⊗ (-1,-1 / Q(sqrt5)) splits into [F ∩ Q(sqrt5) : Q] copies
  const auto d = decompose(SL25{}, cyclotomic_real(5));
  EXPECT_EQ(tally(d)["(-1,-1 / NF(5,[ 1, 4 ]))"], 2u);
  EXPECT_EQ(total_dimension(d, cyclotomic_real(5)), 120u);
}

TEST(Wedderburn, ProductWithCyclic) {
  const auto d = decompose(product_with_cyclic(QuaternionGen{2}, 7), rationals());
  EXPECT_EQ(tally(d)["(-1,-1 / CF(7))"], 1u);
  EXPECT_EQ(total_dimension(d, rationals()), 56u);
}

TEST(WedderburnProperty, RationalMultiplicityOne) {
  for (const auto& g : metacyclic_up_to(200)) {
    for (const auto& c : decompose(g, rationals())) ASSERT_EQ(c.multiplicity, 1u) << format_group(g);
  }
}

TEST(WedderburnProperty, DimensionAuditMetacyclic) {
  std::mt19937_64 rng(201);
  const auto groups = metacyclic_up_to(150);
  for (int i = 0; i < 1500; ++i) {
    const auto& g = groups[rng() % groups.size()];
    const Field f = random_field(rng, 60);
    ASSERT_EQ(total_dimension(decompose(g, f), f), order(g)) << format_group(g) << " over " << format_field(f);
  }
}

TEST(WedderburnProperty, DimensionAuditOtherFamilies) {
  std::mt19937_64 rng(203);
  const std::vector<GroupSpec> groups = {
      SL23{}, SL25{}, BinaryOctahedral{}, QuaternionGen{2}, QuaternionGen{3}, QuaternionGen{4}, QuaternionGen{6},
      product_with_cyclic(SL23{}, 7), product_with_cyclic(QuaternionGen{2}, 5),
      product_with_cyclic(MetacyclicSplit{7, 4, 2, 6}, 3), product_with_cyclic(SL25{}, 11)};
  for (int i = 0; i < 1000; ++i) {
    const auto& g = groups[rng() % groups.size()];
    const Field f = random_field(rng, 90);
    ASSERT_EQ(total_dimension(decompose(g, f), f), order(g)) << format_group(g) << " over " << format_field(f);
  }
}

TEST(WedderburnProperty, BaseChangeConsistency) {
  std::mt19937_64 rng(207);
  const auto groups = metacyclic_up_to(120);
  for (int i = 0; i < 1000; ++i) {
    const auto& g = groups[rng() % groups.size()];
    const Field f = random_field(rng, 60);
    ASSERT_EQ(tally(decompose_metacyclic(g, f)), tally(decompose_metacyclic_by_base_change(g, f)))
        << format_group(g) << " over " << format_field(f);
  }
}

TEST(WedderburnProperty, OrbitCountsIntegral) {
  std::mt19937_64 rng(209);
  const auto groups = metacyclic_up_to(200);
  for (int i = 0; i < 1000; ++i) {
    const auto& g = groups[rng() % groups.size()];
    const Field f = random_field(rng, 80);
    for (const auto& pair : enumerate_shoda_pairs(g)) {
      const u64 h = pair.quotient_order();
      const u64 deg = relative_degree(compositum(f, cyclotomic(h)), f);
      ASSERT_EQ(euler_phi(h) % deg, 0u);
      ASSERT_NO_THROW(component_of_pair(g, pair, f));
    }
  }
}
