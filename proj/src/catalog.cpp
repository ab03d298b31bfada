#include "kexit/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "kexit/arith.hpp"
#include "kexit/error.hpp"

namespace kexit::catalog {
namespace {

constexpr std::uint64_t kMaxAlternatingDegree = 1'000'000;
// Keeps every cyclotomic cofactor (at most q^2 + 1) below 2^63.
constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 31;

using ExponentMap = std::map<std::uint64_t, std::uint64_t>;

void multiply_in(ExponentMap& acc, std::uint64_t n) {
  for (const auto& [p, e] : arith::factorize(n)) acc[p] += e;
}

void divide_out(ExponentMap& acc, std::uint64_t n) {
  for (const auto& [p, e] : arith::factorize(n)) {
    auto it = acc.find(p);
    if (it == acc.end() || it->second < e) {
      throw Error(Errc::invalid_argument, "order formula is not divisible by " + std::to_string(n));
    }
    if ((it->second -= e) == 0) acc.erase(it);
  }
}

GroupOrder to_order(const ExponentMap& acc) {
  std::vector<PrimePower> factors;
  for (const auto& [p, e] : acc) factors.push_back({p, e});
  return GroupOrder::from_factors(std::move(factors));
}

GroupOrder alternating_order(std::uint64_t n) {
  if (n < 5) throw Error(Errc::invalid_argument, "A_n needs n >= 5");
  if (n > kMaxAlternatingDegree) {
    throw Error(Errc::value_too_large, "A_n supported for n <= " +
                                           std::to_string(kMaxAlternatingDegree));
  }
  // Legendre: v_p(n!) = sum_k floor(n / p^k).
  std::vector<bool> composite(n + 1, false);
  ExponentMap acc;
  for (std::uint64_t p = 2; p <= n; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t j = p * p; j <= n; j += p) composite[j] = true;
    std::uint64_t v = 0;
    for (std::uint64_t pk = p; pk <= n; pk *= p) {
      v += n / pk;
      if (pk > n / p) break;
    }
    acc[p] = v;
  }
  divide_out(acc, 2);
  return to_order(acc);
}

GroupOrder lie_type_order(Family family, std::uint64_t q) {
  if (q < 2) throw Error(Errc::invalid_argument, "field size must be at least 2");
  if (q > kMaxFieldSize) {
    throw Error(Errc::value_too_large, "field size " + std::to_string(q) + " exceeds 2^31");
  }
  const auto base = arith::factorize(q);
  if (base.size() != 1) {
    throw Error(Errc::not_prime_power, std::to_string(q) + " is not a prime power");
  }
  const auto [p, k] = base.front();

  ExponentMap acc;
  auto q_power = [&](std::uint64_t times) { acc[p] += k * times; };
  // q^2 - 1 = (q - 1)(q + 1)
  auto q2_minus_1 = [&] {
    multiply_in(acc, q - 1);
    multiply_in(acc, q + 1);
  };

  switch (family) {
    case Family::PSL2:
      q_power(1);
      q2_minus_1();
      divide_out(acc, std::gcd<std::uint64_t>(2, q - 1));
      break;
    case Family::PSU3:
      q_power(3);
      q2_minus_1();
      multiply_in(acc, q + 1);  // q^3 + 1 = (q + 1)(q^2 - q + 1)
      multiply_in(acc, q * q - q + 1);
      divide_out(acc, std::gcd<std::uint64_t>(3, q + 1));
      break;
    case Family::PSU4:
      q_power(6);
      q2_minus_1();
      multiply_in(acc, q + 1);
      multiply_in(acc, q * q - q + 1);
      q2_minus_1();  // q^4 - 1 = (q^2 - 1)(q^2 + 1)
      multiply_in(acc, q * q + 1);
      divide_out(acc, std::gcd<std::uint64_t>(4, q + 1));
      break;
    case Family::Alternating:
      break;
  }
  return to_order(acc);
}

std::string format_set(const PrimeSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::string_view family_name(Family family) noexcept {
  switch (family) {
    case Family::Alternating: return "Alternating";
    case Family::PSL2: return "PSL2";
    case Family::PSU3: return "PSU3";
    case Family::PSU4: return "PSU4";
  }
  return "Alternating";
}

Family parse_family(std::string_view text) {
  const std::string key = lower(text);
  if (key == "alternating" || key == "a") return Family::Alternating;
  if (key == "psl2" || key == "l2") return Family::PSL2;
  if (key == "psu3" || key == "u3") return Family::PSU3;
  if (key == "psu4" || key == "u4") return Family::PSU4;
  throw Error(Errc::parse_error,
              "unknown family \"" + std::string(text) + "\" (Alternating, PSL2, PSU3, PSU4)");
}

GroupOrder family_order(const FamilySpec& spec) {
  if (spec.family == Family::Alternating) return alternating_order(spec.parameter);
  return lie_type_order(spec.family, spec.parameter);
}

std::vector<std::string> fixture_names() { return {"u3_31", "u4_89"}; }

Fixture fixture(std::string_view name) {
  if (name == "u3_31") {
    return {"u3_31", "U3(31)",
            GroupOrder::from_factors({{2, 11}, {3, 1}, {5, 1}, {7, 2}, {19, 1}, {31, 3}}),
            DegreePattern({3, 2, 2, 1, 1, 1})};
  }
  if (name == "u4_89") {
    return {"u4_89", "U4(89)",
            GroupOrder::from_factors({{2, 9},
                                      {3, 7},
                                      {5, 3},
                                      {7, 1},
                                      {11, 2},
                                      {17, 1},
                                      {89, 6},
                                      {233, 1},
                                      {373, 1}}),
            DegreePattern({6, 6, 6, 3, 6, 3, 4, 3, 3})};
  }
  throw Error(Errc::unknown_fixture, "no fixture named \"" + std::string(name) + "\"");
}

std::vector<PublishedRow> published_table(std::string_view name) {
  using std::nullopt;
  if (name == "u3_31") {
    return {
        {2, nullopt, nullopt, {}, 3, 0, false},
        {3, PrimeSet{5, 7, 19, 31}, PrimeSet{5, 7, 19, 31}, {5}, 2, 1, false},
        {5, PrimeSet{3, 7, 19, 31}, PrimeSet{3, 7, 19, 31}, {3, 7, 19}, 2, 3, true},
        {7, PrimeSet{5, 19, 31}, PrimeSet{5, 19, 31}, {5, 19, 31}, 1, 3, true},
        {19, PrimeSet{5, 7, 31}, PrimeSet{5, 7, 31}, {5, 7, 31}, 1, 3, true},
        {31, PrimeSet{7, 19}, PrimeSet{7, 19}, {7, 19}, 1, 2, true},
    };
  }
  if (name == "u4_89") {
    return {
        {2, nullopt, nullopt, {}, 6, 0, false},
        {3, PrimeSet{17, 89, 233, 373}, PrimeSet{5, 7, 11, 17, 89, 233, 373}, {17, 233}, 6, 2,
         false},
        {5, PrimeSet{7, 11, 17, 89, 233, 373}, PrimeSet{3, 7, 11, 17, 89, 233, 373},
         {7, 17, 89, 233, 373}, 6, 5, false},
        {7, PrimeSet{5, 11, 17, 89, 233, 373}, PrimeSet{5, 11, 17, 89, 233, 373},
         {5, 11, 17, 233, 373}, 3, 5, true},
        {11, PrimeSet{7, 17, 89, 233, 373}, PrimeSet{7, 17, 89, 233, 373}, {7, 17, 233, 373}, 6,
         4, false},
        {17, PrimeSet{3, 5, 7, 11, 89, 233, 373}, PrimeSet{3, 5, 7, 11, 89, 233, 373},
         {3, 5, 7, 11, 89, 233, 373}, 3, 7, true},
        {89, PrimeSet{}, PrimeSet{5, 7, 233}, {}, 4, 0, false},
        {233, PrimeSet{3, 5, 7, 11, 17, 89, 373}, PrimeSet{3, 5, 7, 11, 17, 89, 373},
         {3, 5, 7, 11, 17, 89, 373}, 3, 7, true},
        {373, PrimeSet{5, 7, 11, 17, 89, 233}, PrimeSet{5, 7, 11, 17, 89, 233},
         {5, 7, 11, 17, 233}, 3, 5, true},
    };
  }
  throw Error(Errc::unknown_fixture, "no published table for \"" + std::string(name) + "\"");
}

std::vector<CellDiff> published_differences(const KExitTable& table,
                                            const std::vector<PublishedRow>& published) {
  std::vector<CellDiff> out;
  for (const auto& ref : published) {
    const KExitRow& row = table.row(ref.prime);
    auto set_cell = [&](const char* column, const PrimeSet& computed, const PrimeSet& printed) {
      if (computed != printed) {
        out.push_back({ref.prime, column, format_set(computed), format_set(printed)});
      }
    };
    if (ref.theta) set_cell("theta", row.theta, *ref.theta);
    if (ref.theta_bar) set_cell("theta_bar", row.theta_bar, *ref.theta_bar);
    set_cell("H", row.page, ref.page);
    if (row.page == ref.page && row.page.size() != ref.page_size) {
      out.push_back({ref.prime, "|H|", std::to_string(row.page.size()),
                     std::to_string(ref.page_size)});
    }
    if (row.degree != ref.degree) {
      out.push_back({ref.prime, "d", std::to_string(row.degree), std::to_string(ref.degree)});
    }
    if (row.exits_by_H != ref.excluded) {
      out.push_back({ref.prime, "result", row.exits_by_H ? "excluded" : "-",
                     ref.excluded ? "excluded" : "-"});
    }
  }
  return out;
}

}  // namespace kexit::catalog
