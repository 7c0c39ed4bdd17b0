#include <gtest/gtest.h>

#include "criteria.hpp"

using namespace wedder;

namespace {

void expect_pass(const criteria::Outcome& out, long min_instances) {
  EXPECT_TRUE(out.pass) << out.detail;
  EXPECT_GE(out.instances, min_instances);
}

}  // namespace

TEST(Acceptance, GoldenTable) { expect_pass(criteria::golden_table(), 13); }
TEST(Acceptance, KnownDecompositions) { expect_pass(criteria::known_decompositions(), 2); }
TEST(Acceptance, NeverCritical) { expect_pass(criteria::never_critical_groups(), 50); }

TEST(Property, SplittingAndTowers) { expect_pass(criteria::property_splitting(), 1000); }
TEST(Property, DualForms) { expect_pass(criteria::property_dual_forms(), 1000); }
TEST(Property, LocalSupport) { expect_pass(criteria::property_support(), 1000); }
TEST(Property, DimensionAudit) { expect_pass(criteria::property_dimensions(), 1000); }
TEST(Property, CyclotomicAgreesWithGeneral) { expect_pass(criteria::property_cyclotomic(), 1000); }
TEST(Property, QuotientMinimality) { expect_pass(criteria::property_minimality(), 20); }
TEST(Property, GeneratorInvariance) { expect_pass(criteria::property_r_invariance(), 1000); }
