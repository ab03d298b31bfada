#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kexit/group_model.hpp"
#include "kexit/kexit.hpp"

namespace kexit::catalog {

enum class Family { Alternating, PSL2, PSU3, PSU4 };

/// n for Alternating (n >= 5); a prime power q >= 2 otherwise.
struct FamilySpec {
  Family family = Family::Alternating;
  std::uint64_t parameter = 5;
};

std::string_view family_name(Family family) noexcept;
/// Accepts the enum names and the ATLAS-style short names (A, L2, U3, U4),
/// case-insensitively. Throws ParseError.
Family parse_family(std::string_view text);

/// Factorization of the group order:
///   |A_n|   = n!/2
///   |L2(q)| = q(q^2-1)/gcd(2,q-1)
///   |U3(q)| = q^3(q^2-1)(q^3+1)/gcd(3,q+1)
///   |U4(q)| = q^6(q^2-1)(q^3+1)(q^4-1)/gcd(4,q+1)
/// Throws InvalidArgument, NotPrimePower, ValueTooLarge, CompositeTooHard.
GroupOrder family_order(const FamilySpec& spec);

struct Fixture {
  std::string name;
  std::string group;  // display name, e.g. "U3(31)"
  GroupOrder order;
  DegreePattern degrees;
};

std::vector<std::string> fixture_names();
/// Throws UnknownFixture.
Fixture fixture(std::string_view name);

/// One row of a K-Exit table as printed in the literature for a fixture.
/// Cells printed blank are nullopt; a printed dash is an empty set / zero.
struct PublishedRow {
  std::uint64_t prime = 0;
  std::optional<PrimeSet> theta;
  std::optional<PrimeSet> theta_bar;
  PrimeSet page;
  std::uint64_t degree = 0;
  std::uint64_t page_size = 0;
  bool excluded = false;
};

/// Throws UnknownFixture.
std::vector<PublishedRow> published_table(std::string_view name);

struct CellDiff {
  std::uint64_t prime = 0;
  std::string column;  // "theta", "theta_bar", "H", "|H|", "d", "result"
  std::string computed;
  std::string printed;
};

/// Cells where `table` disagrees with the published one. Blank published
/// cells are skipped, and |H| is only reported when the H cell itself
/// agrees (otherwise it is implied by the H difference).
std::vector<CellDiff> published_differences(const KExitTable& table,
                                            const std::vector<PublishedRow>& published);

}  // namespace kexit::catalog
