#include "kexit/oracle.hpp"

#include <algorithm>
#include <bit>

#include <boost/integer/common_factor.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "kexit/error.hpp"

namespace kexit::oracle {
namespace {

using boost::multiprecision::cpp_int;

void check_power_size(std::uint64_t base, std::uint64_t exp, const Limits& limits) {
  const auto bits = static_cast<std::uint64_t>(std::bit_width(base));
  if (exp != 0 && bits > limits.max_power_bits / exp) {
    throw Error(Errc::limit_exceeded, "oracle refuses to materialize " + std::to_string(base) +
                                          "^" + std::to_string(exp));
  }
}

cpp_int power_minus_one(std::uint64_t base, std::uint64_t exp, const Limits& limits) {
  check_power_size(base, exp, limits);
  return cpp_int(boost::multiprecision::pow(cpp_int(base), static_cast<unsigned>(exp))) - 1;
}

bool divides(std::uint64_t q, const cpp_int& value) { return value % q == 0; }

std::uint64_t exponent_checked(const KExitContext& ctx, std::uint64_t p) {
  return ctx.order().factors()[ctx.order().index_of(p)].exponent;
}

}  // namespace

PrimeSet theta_by_bigint(const KExitContext& ctx, std::uint64_t p, const Limits& limits) {
  const std::uint64_t m = exponent_checked(ctx, p);
  check_power_size(p, m, limits);

  std::vector<std::uint64_t> survivors;
  for (const auto& f : ctx.order().factors()) {
    if (f.prime != p) survivors.push_back(f.prime);
  }
  cpp_int power = 1;
  for (std::uint64_t i = 1; i <= m && !survivors.empty(); ++i) {
    power *= p;
    const cpp_int value = power - 1;
    std::erase_if(survivors, [&](std::uint64_t q) { return divides(q, value); });
  }
  return survivors;
}

PrimeSet theta_bar_by_bigint(const KExitContext& ctx, std::uint64_t p, const Limits& limits) {
  const std::uint64_t m = exponent_checked(ctx, p);
  const cpp_int value = power_minus_one(p, m, limits);
  PrimeSet out;
  for (const auto& f : ctx.order().factors()) {
    if (f.prime != p && !divides(f.prime, value)) out.push_back(f.prime);
  }
  return out;
}

PrimeSet l_by_bigint(const KExitContext& ctx, std::uint64_t p, const Limits& limits) {
  const std::uint64_t m = exponent_checked(ctx, p);
  if (m > limits.max_lcm_range) {
    throw Error(Errc::limit_exceeded, "oracle refuses to materialize lcm(1.." +
                                          std::to_string(m) + ")");
  }
  cpp_int lcm_range = 1;
  for (std::uint64_t k = 2; k <= m; ++k) {
    lcm_range = boost::integer::lcm(lcm_range, cpp_int(k));
  }

  PrimeSet out;
  for (const auto& f : ctx.order().factors()) {
    const std::uint64_t q = f.prime;
    if (q == p) continue;
    if (divides(p, power_minus_one(q, f.exponent, limits))) continue;
    const cpp_int g = boost::integer::gcd(lcm_range, cpp_int(q - 1));
    if (divides(q, power_minus_one(p, g.convert_to<std::uint64_t>(), limits))) continue;
    out.push_back(q);
  }
  return out;
}

PrimeSet page_by_bigint(const KExitContext& ctx, std::uint64_t p, const Limits& limits) {
  PrimeSet out;
  for (std::uint64_t q : theta_by_bigint(ctx, p, limits)) {
    const PrimeSet back = theta_bar_by_bigint(ctx, q, limits);
    if (std::find(back.begin(), back.end(), p) != back.end()) out.push_back(q);
  }
  return out;
}

std::vector<Mismatch> verify(const KExitContext& ctx, const Limits& limits) {
  std::vector<Mismatch> out;
  const KExitTable table = build_table(ctx);
  for (const auto& row : table.rows) {
    auto compare = [&](const char* cell, const PrimeSet& fast, PrimeSet exact) {
      if (fast != exact) out.push_back({row.prime, cell, fast, std::move(exact)});
    };
    compare("theta", row.theta, theta_by_bigint(ctx, row.prime, limits));
    compare("theta_bar", row.theta_bar, theta_bar_by_bigint(ctx, row.prime, limits));
    compare("page", row.page, page_by_bigint(ctx, row.prime, limits));
    compare("l_set", row.l_set, l_by_bigint(ctx, row.prime, limits));
  }
  return out;
}

}  // namespace kexit::oracle
