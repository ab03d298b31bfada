#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kexit/arith.hpp"

namespace kexit {

using arith::PrimePower;

/// Factorization of |G|. Primes strictly increasing, each prime below 2^63,
/// each exponent >= 1. The primes are pi(G); the exponent of p is w_G(p).
class GroupOrder {
 public:
  GroupOrder() = default;

  /// Validates and sorts `factors`. Throws NotPrime, DuplicatePrime,
  /// ValueTooLarge, or ParseError (zero exponent).
  static GroupOrder from_factors(std::vector<PrimePower> factors);

  std::span<const PrimePower> factors() const noexcept { return factors_; }
  std::size_t size() const noexcept { return factors_.size(); }
  std::vector<std::uint64_t> primes() const;

  bool contains(std::uint64_t p) const noexcept;
  /// Exponent of p in |G|; 0 when p does not divide |G|.
  std::uint64_t exponent_of(std::uint64_t p) const noexcept;
  /// Position of p among the ascending primes. Throws PrimeNotInGroup.
  std::size_t index_of(std::uint64_t p) const;

  friend bool operator==(const GroupOrder&, const GroupOrder&) = default;

 private:
  explicit GroupOrder(std::vector<PrimePower> factors) : factors_(std::move(factors)) {}

  std::vector<PrimePower> factors_;
};

/// Prime-graph vertex degrees, positionally aligned to the ascending primes
/// of the companion GroupOrder: degrees()[i] is d_G(p_i) for the i-th
/// smallest prime p_i.
class DegreePattern {
 public:
  DegreePattern() = default;
  explicit DegreePattern(std::vector<std::uint64_t> degrees) : degrees_(std::move(degrees)) {}

  std::span<const std::uint64_t> degrees() const noexcept { return degrees_; }
  std::size_t size() const noexcept { return degrees_.size(); }
  std::uint64_t operator[](std::size_t i) const { return degrees_.at(i); }

  friend bool operator==(const DegreePattern&, const DegreePattern&) = default;

 private:
  std::vector<std::uint64_t> degrees_;
};

struct ValidateOptions {
  /// Accept degree patterns whose sum is odd (not realizable by any graph).
  bool allow_odd_degree_sum = false;
};

/// A group order paired with a degree pattern that has passed validate().
class KExitContext {
 public:
  const GroupOrder& order() const noexcept { return order_; }
  const DegreePattern& degrees() const noexcept { return degrees_; }

  std::size_t size() const noexcept { return order_.size(); }
  std::uint64_t degree_of(std::uint64_t p) const { return degrees_[order_.index_of(p)]; }

  friend KExitContext validate(GroupOrder order, DegreePattern degrees,
                               const ValidateOptions& options);

 private:
  KExitContext(GroupOrder order, DegreePattern degrees)
      : order_(std::move(order)), degrees_(std::move(degrees)) {}

  GroupOrder order_;
  DegreePattern degrees_;
};

/// Grammar: term ('*' term)*, term := prime ('^' exponent)?; whitespace is
/// ignored between tokens.
GroupOrder parse_order(std::string_view text);

/// Comma-separated non-negative decimal integers.
DegreePattern parse_degrees(std::string_view text);

/// Canonical text form, e.g. "2^11*3*5*7^2*19*31^3".
std::string render_order(const GroupOrder& order);

/// Throws LengthMismatch, DegreeOutOfRange(p), or OddDegreeSum.
KExitContext validate(GroupOrder order, DegreePattern degrees,
                      const ValidateOptions& options = {});

/// JSON forms: an order is [[2,11],[3,1],...], a degree pattern is [3,2,...],
/// and a context is {"order": ..., "degrees": ...}. Errors are ParseError
/// plus whatever GroupOrder::from_factors raises.
GroupOrder parse_order_json(std::string_view text);
DegreePattern parse_degrees_json(std::string_view text);
KExitContext parse_context_json(std::string_view text, const ValidateOptions& options = {});

/// Accept either the string grammar or the JSON form, chosen by the first
/// non-blank character ('[' selects JSON).
GroupOrder parse_order_any(std::string_view text);
DegreePattern parse_degrees_any(std::string_view text);

}  // namespace kexit
