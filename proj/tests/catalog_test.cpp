#include "kexit/catalog.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include <boost/integer/common_factor.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "kexit/error.hpp"
#include "test_support.hpp"

namespace kexit::catalog {
namespace {

using boost::multiprecision::cpp_int;

cpp_int product(const GroupOrder& g) {
  cpp_int out = 1;
  for (const auto& [p, e] : g.factors()) {
    for (std::uint64_t i = 0; i < e; ++i) out *= p;
  }
  return out;
}

// Group orders evaluated directly from the formulas, in exact arithmetic.
cpp_int formula(Family family, std::uint64_t param) {
  const cpp_int q = param;
  switch (family) {
    case Family::Alternating: {
      cpp_int f = 1;
      for (std::uint64_t i = 2; i <= param; ++i) f *= i;
      return f / 2;
    }
    case Family::PSL2:
      return q * (q * q - 1) / std::gcd<std::uint64_t>(2, param - 1);
    case Family::PSU3:
      return q * q * q * (q * q - 1) * (q * q * q + 1) /
             std::gcd<std::uint64_t>(3, param + 1);
    case Family::PSU4:
      return pow(q, 6) * (q * q - 1) * (q * q * q + 1) * (pow(q, 4) - 1) /
             std::gcd<std::uint64_t>(4, param + 1);
  }
  return 0;
}

template <typename Fn>
Errc error_code(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected kexit::Error";
  return Errc::invalid_argument;
}

TEST(FamilyOrderTest, PaperGroups) {
  EXPECT_EQ(render_order(family_order({Family::PSU3, 31})), "2^11*3*5*7^2*19*31^3");
  EXPECT_EQ(render_order(family_order({Family::PSU4, 89})), "2^9*3^7*5^3*7*11^2*17*89^6*233*373");
  EXPECT_EQ(family_order({Family::PSU3, 31}), fixture("u3_31").order);
  EXPECT_EQ(family_order({Family::PSU4, 89}), fixture("u4_89").order);
}

TEST(FamilyOrderTest, SmallGroups) {
  EXPECT_EQ(render_order(family_order({Family::Alternating, 5})), "2^2*3*5");
  EXPECT_EQ(render_order(family_order({Family::PSL2, 7})), "2^3*3*7");     // 168
  EXPECT_EQ(render_order(family_order({Family::PSL2, 8})), "2^3*3^2*7");   // 504
  EXPECT_EQ(render_order(family_order({Family::PSU3, 3})), "2^5*3^3*7");   // 6048
  EXPECT_EQ(render_order(family_order({Family::PSU4, 2})), "2^6*3^4*5");   // 25920
}

TEST(FamilyOrderTest, MatchesExactFormulas) {
  const auto is_p = kexit::testing::sieve(400);
  for (std::uint64_t q = 2; q < 400; ++q) {
    if (!is_p[q]) continue;
    for (Family f : {Family::PSL2, Family::PSU3, Family::PSU4}) {
      ASSERT_EQ(product(family_order({f, q})), formula(f, q)) << family_name(f) << " " << q;
    }
  }
  for (std::uint64_t q : {4, 8, 9, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128, 243, 1024}) {
    for (Family f : {Family::PSL2, Family::PSU3, Family::PSU4}) {
      ASSERT_EQ(product(family_order({f, q})), formula(f, q)) << family_name(f) << " " << q;
    }
  }
  for (std::uint64_t n = 5; n <= 60; ++n) {
    ASSERT_EQ(product(family_order({Family::Alternating, n})), formula(Family::Alternating, n));
  }
}

TEST(FamilyOrderTest, LargeFieldUsesRho) {
  const std::uint64_t q = 2'147'483'647;  // 2^31 - 1
  EXPECT_EQ(product(family_order({Family::PSU4, q})), formula(Family::PSU4, q));
}

TEST(FamilyOrderTest, Errors) {
  EXPECT_EQ(error_code([] { family_order({Family::PSL2, 6}); }), Errc::not_prime_power);
  EXPECT_EQ(error_code([] { family_order({Family::PSU3, 1}); }), Errc::invalid_argument);
  EXPECT_EQ(error_code([] { family_order({Family::Alternating, 4}); }), Errc::invalid_argument);
  EXPECT_EQ(error_code([] { family_order({Family::PSU4, std::uint64_t{1} << 40}); }),
            Errc::value_too_large);
}

TEST(FamilyTest, Parse) {
  EXPECT_EQ(parse_family("PSU3"), Family::PSU3);
  EXPECT_EQ(parse_family("u4"), Family::PSU4);
  EXPECT_EQ(parse_family("L2"), Family::PSL2);
  EXPECT_EQ(parse_family("alternating"), Family::Alternating);
  EXPECT_EQ(error_code([] { parse_family("Sz"); }), Errc::parse_error);
}

TEST(FixtureTest, Lookup) {
  EXPECT_EQ(fixture("u3_31").degrees, DegreePattern({3, 2, 2, 1, 1, 1}));
  EXPECT_EQ(fixture("u4_89").degrees, DegreePattern({6, 6, 6, 3, 6, 3, 4, 3, 3}));
  EXPECT_EQ(error_code([] { fixture("u5_3"); }), Errc::unknown_fixture);
  EXPECT_EQ(error_code([] { published_table("u5_3"); }), Errc::unknown_fixture);
  EXPECT_EQ(fixture_names(), (std::vector<std::string>{"u3_31", "u4_89"}));
}

TEST(PublishedTableTest, DifferencesForFixtures) {
  const auto u3 = build_table(kexit::testing::fixture_context("u3_31"));
  EXPECT_TRUE(published_differences(u3, published_table("u3_31")).empty());

  const auto u4 = build_table(kexit::testing::fixture_context("u4_89"));
  const auto diffs = published_differences(u4, published_table("u4_89"));
  ASSERT_EQ(diffs.size(), 2u);
  EXPECT_EQ(diffs[0].prime, 5u);
  EXPECT_EQ(diffs[0].column, "H");
  EXPECT_EQ(diffs[0].computed, "{7,17,233,373}");
  EXPECT_EQ(diffs[0].printed, "{7,17,89,233,373}");
  EXPECT_EQ(diffs[1].prime, 89u);
  EXPECT_EQ(diffs[1].column, "theta_bar");
  EXPECT_EQ(diffs[1].computed, "{17,233}");
  EXPECT_EQ(diffs[1].printed, "{5,7,233}");
}

}  // namespace
}  // namespace kexit::catalog
