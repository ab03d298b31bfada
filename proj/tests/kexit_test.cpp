#include "kexit/kexit.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include <boost/integer/common_factor.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "kexit/error.hpp"
#include "test_support.hpp"

namespace kexit {
namespace {

using boost::multiprecision::cpp_int;
using kexit::testing::context_of;
using kexit::testing::fixture_context;

bool subset(const PrimeSet& a, const PrimeSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool contains(const PrimeSet& s, std::uint64_t p) {
  return std::find(s.begin(), s.end(), p) != s.end();
}

cpp_int pow_minus_one(std::uint64_t base, unsigned exp) {
  return cpp_int(boost::multiprecision::pow(cpp_int(base), exp)) - 1;
}

class KExitTest : public ::testing::Test {
 protected:
  KExitContext u3 = fixture_context("u3_31");
  KExitContext u4 = fixture_context("u4_89");
  KExitContext single = context_of({{7, 1}}, {0});
  // 5^4 * 7: 7 lands in H(5,G) but not in L(5,G).
  KExitContext strict = context_of({{5, 4}, {7, 1}}, {0, 0});
};

TEST_F(KExitTest, PowerOf) {
  EXPECT_EQ(power_of(u3, 2), 11u);
  EXPECT_EQ(power_of(u3, 3), 1u);
  EXPECT_EQ(power_of(single, 7), 1u);
  EXPECT_THROW(power_of(u3, 11), Error);
}

TEST_F(KExitTest, Theta) {
  EXPECT_EQ(theta(u3, 5), (PrimeSet{3, 7, 19, 31}));
  EXPECT_EQ(theta(u3, 3), (PrimeSet{5, 7, 19, 31}));
  EXPECT_TRUE(theta(single, 7).empty());

  // theta(2) for U3(31): drop every q dividing some 2^i - 1, i <= 11.
  PrimeSet expected;
  for (std::uint64_t q : {3, 5, 7, 19, 31}) {
    bool hit = false;
    for (unsigned i = 1; i <= 11; ++i) hit = hit || pow_minus_one(2, i) % q == 0;
    if (!hit) expected.push_back(q);
  }
  ASSERT_EQ(expected, (PrimeSet{19}));
  EXPECT_EQ(theta(u3, 2), expected);
}

TEST_F(KExitTest, ThetaBar) {
  EXPECT_EQ(theta_bar(u3, 19), (PrimeSet{5, 7, 31}));
  EXPECT_TRUE(theta_bar(single, 7).empty());

  // 89^6 - 1 = 88 * 90 * 8011 * 7833.
  const cpp_int value = pow_minus_one(89, 6);
  ASSERT_EQ(value, cpp_int(88) * 90 * 8011 * 7833);
  PrimeSet expected;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 17, 233, 373}) {
    if (value % q != 0) expected.push_back(q);
  }
  ASSERT_EQ(expected, (PrimeSet{17, 233}));
  EXPECT_EQ(theta_bar(u4, 89), expected);
}

TEST_F(KExitTest, PageSet) {
  EXPECT_EQ(page_set(u4, 17), (PrimeSet{3, 5, 7, 11, 89, 233, 373}));
  EXPECT_EQ(page_set(u3, 3), (PrimeSet{5}));
  // With theta_bar(89) = {17, 233}, 5 is not in it, so 89 drops out of H(5).
  EXPECT_EQ(page_set(u4, 5), (PrimeSet{7, 17, 233, 373}));
  EXPECT_EQ(page_set(strict, 5), (PrimeSet{7}));
}

TEST_F(KExitTest, LSet) {
  // m = 2, lcm(1..2) = 2. Check both conditions by exact arithmetic.
  PrimeSet expected;
  for (std::uint64_t q : {2, 3, 5, 19, 31}) {
    const unsigned n = static_cast<unsigned>(u3.order().exponent_of(q));
    const unsigned g = static_cast<unsigned>(std::gcd<std::uint64_t>(2, q - 1));
    if (pow_minus_one(q, n) % 7 != 0 && pow_minus_one(7, g) % q != 0) expected.push_back(q);
  }
  ASSERT_EQ(expected, (PrimeSet{5, 19, 31}));
  EXPECT_EQ(l_set(u3, 7), expected);
  EXPECT_TRUE(l_set(single, 7).empty());

  // lcm(1..4) = 12, gcd(12, 6) = 6, 5^6 - 1 = 15624 = 7 * 2232.
  ASSERT_EQ(pow_minus_one(5, 6) % 7, 0);
  EXPECT_TRUE(l_set(strict, 5).empty());
}

TEST_F(KExitTest, ExitVerdict) {
  EXPECT_EQ(exit_verdict(u3, 7, Method::H), (Verdict{true, 3, 1}));
  EXPECT_EQ(exit_verdict(u3, 3, Method::H), (Verdict{false, 1, 2}));
  EXPECT_EQ(exit_verdict(u4, 233, Method::H), (Verdict{true, 7, 3}));
  EXPECT_EQ(exit_verdict(u3, 31, Method::L), (Verdict{false, 0, 1}));
  EXPECT_EQ(exit_verdict(u3, 31, Method::both), (Verdict{true, 2, 1}));
  EXPECT_EQ(exit_verdict(single, 7, Method::both), (Verdict{false, 0, 0}));
}

TEST_F(KExitTest, UnknownPrimeIsRejected) {
  for (auto fn : {theta, theta_bar, page_set, l_set}) {
    try {
      fn(u3, 11);
      ADD_FAILURE() << "expected PrimeNotInGroup";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::prime_not_in_group);
      EXPECT_EQ(e.prime(), 11u);
    }
  }
  EXPECT_THROW(exit_verdict(u3, 4, Method::H), Error);
}

TEST_F(KExitTest, BuildTableFixtures) {
  EXPECT_EQ(build_table(u3).excluded, (PrimeSet{5, 7, 19, 31}));
  EXPECT_EQ(build_table(u4).excluded, (PrimeSet{7, 17, 233, 373}));
  EXPECT_EQ(build_table(u4, Method::H).excluded, (PrimeSet{7, 17, 233, 373}));
  const KExitTable one = build_table(single);
  ASSERT_EQ(one.rows.size(), 1u);
  EXPECT_TRUE(one.excluded.empty());
  EXPECT_EQ(one.rows[0].m, 1u);
}

TEST_F(KExitTest, ParallelMatchesSequential) {
  for (const auto& ctx : kexit::testing::random_contexts(50, 99)) {
    EXPECT_EQ(build_table(ctx, Method::both, true), build_table(ctx, Method::both, false));
  }
  EXPECT_EQ(build_table(u4, Method::H, true), build_table(u4, Method::H, false));
}

TEST(MethodTest, Parse) {
  EXPECT_EQ(parse_method("H"), Method::H);
  EXPECT_EQ(parse_method("l"), Method::L);
  EXPECT_EQ(parse_method("Both"), Method::both);
  EXPECT_THROW(parse_method("X"), Error);
}

TEST(KExitPropertyTest, SetRelations) {
  for (const auto& ctx : kexit::testing::random_contexts(300, 1234)) {
    const KExitTable table = build_table(ctx);
    const bool has_two = ctx.order().contains(2);
    for (const auto& row : table.rows) {
      const std::uint64_t p = row.prime;
      PrimeSet others;
      for (std::uint64_t q : ctx.order().primes()) {
        if (q != p) others.push_back(q);
      }
      for (const PrimeSet* s : {&row.theta, &row.theta_bar, &row.page, &row.l_set}) {
        ASSERT_TRUE(std::is_sorted(s->begin(), s->end()));
        ASSERT_TRUE(subset(*s, others));
      }
      ASSERT_TRUE(subset(row.theta, row.theta_bar));
      ASSERT_TRUE(subset(row.page, row.theta));
      ASSERT_TRUE(subset(row.l_set, row.page));
      ASSERT_EQ(row.exits_by_H, row.degree < row.page.size());
      ASSERT_EQ(row.exits_by_L, row.degree < row.l_set.size());
      ASSERT_EQ(row.degree, ctx.degree_of(p));
      ASSERT_FALSE(contains(row.page, 2));
      ASSERT_FALSE(contains(row.l_set, 2));
      if (p == 2) {
        ASSERT_TRUE(row.page.empty());
        ASSERT_TRUE(row.l_set.empty());
      } else if (has_two) {
        ASSERT_FALSE(contains(row.theta, 2));  // 2 | p - 1
      }
      ASSERT_EQ(contains(table.excluded, p), row.exits_by_H || row.exits_by_L);
    }
  }
}

TEST(KExitPropertyTest, ThetaIsMonotoneUnderNewPrimes) {
  // Adding a prime to pi(G) leaves membership among the old primes alone.
  const auto contexts = kexit::testing::random_contexts(100, 77);
  for (const auto& ctx : contexts) {
    std::vector<PrimePower> factors(ctx.order().factors().begin(), ctx.order().factors().end());
    std::uint64_t extra = 10'007;
    while (ctx.order().contains(extra)) extra += 2;
    factors.push_back({extra, 3});
    std::vector<std::uint64_t> degrees(factors.size(), 0);
    const KExitContext bigger = context_of(factors, degrees);
    for (std::uint64_t p : ctx.order().primes()) {
      PrimeSet restricted = theta(bigger, p);
      std::erase(restricted, extra);
      ASSERT_EQ(restricted, theta(ctx, p));
      PrimeSet restricted_bar = theta_bar(bigger, p);
      std::erase(restricted_bar, extra);
      ASSERT_EQ(restricted_bar, theta_bar(ctx, p));
    }
  }
}

TEST(KExitPropertyTest, HugeExponentsStayCheap) {
  // theta scans at most q - 1 powers, so a large w_G(p) is fine.
  const KExitContext ctx = context_of({{2, 1'000'000'000'000}, {3, 1}, {7, 1}}, {0, 0, 0});
  EXPECT_TRUE(theta(ctx, 2).empty());
  // ord_3(2) = 2 divides 10^12 but ord_7(2) = 3 does not.
  EXPECT_EQ(theta_bar(ctx, 2), (PrimeSet{7}));
  EXPECT_TRUE(l_set(ctx, 2).empty());
}

}  // namespace
}  // namespace kexit
