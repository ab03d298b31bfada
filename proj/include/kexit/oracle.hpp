#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kexit/group_model.hpp"
#include "kexit/kexit.hpp"

// Brute-force cross-check of the K-Exit sets. Every power p^k - 1 is built
// as an exact arbitrary-precision integer and tested by exact division;
// nothing here goes through the modular shortcuts in kexit.cpp.
namespace kexit::oracle {

struct Limits {
  /// Largest bit length of any p^k the oracle is willing to materialize.
  std::uint64_t max_power_bits = std::uint64_t{1} << 20;
  /// Largest m for which lcm(1..m) is materialized.
  std::uint64_t max_lcm_range = 4096;
};

/// Each throws LimitExceeded when an intermediate would break `limits`.
PrimeSet theta_by_bigint(const KExitContext& ctx, std::uint64_t p, const Limits& limits = {});
PrimeSet theta_bar_by_bigint(const KExitContext& ctx, std::uint64_t p,
                             const Limits& limits = {});
PrimeSet l_by_bigint(const KExitContext& ctx, std::uint64_t p, const Limits& limits = {});
/// H(p,G) assembled from the oracle's own theta and theta-bar.
PrimeSet page_by_bigint(const KExitContext& ctx, std::uint64_t p, const Limits& limits = {});

struct Mismatch {
  std::uint64_t prime = 0;
  std::string cell;  // "theta", "theta_bar", "page", "l_set"
  PrimeSet fast;
  PrimeSet exact;
};

/// Compares every set cell of build_table(ctx) against the oracle.
std::vector<Mismatch> verify(const KExitContext& ctx, const Limits& limits = {});

}  // namespace kexit::oracle
