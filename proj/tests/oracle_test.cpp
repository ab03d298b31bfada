#include "kexit/oracle.hpp"

#include <gtest/gtest.h>

#include "kexit/error.hpp"
#include "test_support.hpp"

namespace kexit::oracle {
namespace {

using kexit::testing::context_of;
using kexit::testing::fixture_context;

TEST(OracleTest, Examples) {
  const KExitContext u3 = fixture_context("u3_31");
  const KExitContext u4 = fixture_context("u4_89");
  const KExitContext single = context_of({{7, 1}}, {0});
  const KExitContext strict = context_of({{5, 4}, {7, 1}}, {0, 0});

  EXPECT_EQ(theta_by_bigint(u3, 5), (PrimeSet{3, 7, 19, 31}));
  EXPECT_TRUE(theta_by_bigint(single, 7).empty());
  EXPECT_EQ(theta_by_bigint(u4, 3), (PrimeSet{17, 89, 233, 373}));

  EXPECT_EQ(theta_bar_by_bigint(u4, 3), (PrimeSet{5, 7, 11, 17, 89, 233, 373}));
  EXPECT_TRUE(theta_bar_by_bigint(single, 7).empty());
  EXPECT_EQ(theta_bar_by_bigint(u4, 89), (PrimeSet{17, 233}));

  EXPECT_EQ(l_by_bigint(u3, 7), (PrimeSet{5, 19, 31}));
  EXPECT_TRUE(l_by_bigint(single, 7).empty());
  EXPECT_TRUE(l_by_bigint(strict, 5).empty());

  EXPECT_EQ(page_by_bigint(strict, 5), (PrimeSet{7}));
}

TEST(OracleTest, FixturesHaveNoMismatches) {
  EXPECT_TRUE(verify(fixture_context("u3_31")).empty());
  EXPECT_TRUE(verify(fixture_context("u4_89")).empty());
}

TEST(OracleTest, AgreesWithFastPathOnRandomContexts) {
  for (const auto& ctx : kexit::testing::random_contexts(150, 4242)) {
    const auto mismatches = verify(ctx);
    ASSERT_TRUE(mismatches.empty()) << mismatches.front().cell << "(" << mismatches.front().prime
                                    << ")";
  }
}

TEST(OracleTest, RefusesOversizedPowers) {
  const KExitContext ctx = context_of({{2, 1'000'000'000}, {3, 1}}, {0, 0});
  try {
    theta_bar_by_bigint(ctx, 2);
    FAIL() << "expected LimitExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::limit_exceeded);
  }
  EXPECT_THROW(theta_by_bigint(ctx, 2), Error);
  EXPECT_THROW(l_by_bigint(ctx, 2), Error);
}

}  // namespace
}  // namespace kexit::oracle
