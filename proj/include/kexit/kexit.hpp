#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "kexit/group_model.hpp"

namespace kexit {

/// Ascending list of distinct primes.
using PrimeSet = std::vector<std::uint64_t>;

/// Which exit rule decides exclusion: the page rule (d_G(p) < |H(p,G)|),
/// the L rule (d_G(p) < |L(p,G)|), or either of them.
enum class Method { H, L, both };

std::string_view method_name(Method method) noexcept;
/// Accepts "H", "L", "both" (case-insensitive). Throws ParseError.
Method parse_method(std::string_view text);

/// w_G(p), the exponent of p in |G|. Throws PrimeNotInGroup.
std::uint64_t power_of(const KExitContext& ctx, std::uint64_t p);

/// theta(p): the q in pi(G) \ {p} with q not dividing p^i - 1 for every
/// 1 <= i <= w_G(p).
PrimeSet theta(const KExitContext& ctx, std::uint64_t p);

/// theta-bar(p): the q in pi(G) \ {p} with q not dividing p^m - 1, m = w_G(p).
PrimeSet theta_bar(const KExitContext& ctx, std::uint64_t p);

/// H(p,G), the page of p: the q in theta(p) with p in theta-bar(q).
PrimeSet page_set(const KExitContext& ctx, std::uint64_t p);

/// L(p,G): the q != p with p not dividing q^n - 1 and q not dividing
/// p^gcd(lcm(1..m), q-1) - 1, where m = w_G(p) and n = w_G(q).
PrimeSet l_set(const KExitContext& ctx, std::uint64_t p);

struct Verdict {
  bool exits = false;
  std::uint64_t witness_size = 0;
  std::uint64_t degree = 0;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// exits is true when the chosen rule proves p lies outside pi(K) for every
/// normal solvable subgroup K. For Method::both, witness_size is
/// max(|H|, |L|).
Verdict exit_verdict(const KExitContext& ctx, std::uint64_t p, Method method);

struct KExitRow {
  std::uint64_t prime = 0;
  std::uint64_t m = 0;  // w_G(prime)
  PrimeSet theta;
  PrimeSet theta_bar;
  PrimeSet page;
  PrimeSet l_set;
  std::uint64_t degree = 0;
  bool exits_by_H = false;
  bool exits_by_L = false;

  friend bool operator==(const KExitRow&, const KExitRow&) = default;
};

struct KExitTable {
  Method method = Method::both;
  std::vector<KExitRow> rows;  // ascending by prime
  PrimeSet excluded;           // primes whose row exits under `method`

  /// Row for p. Throws PrimeNotInGroup.
  const KExitRow& row(std::uint64_t p) const;

  friend bool operator==(const KExitTable&, const KExitTable&) = default;
};

/// True when `row` counts as excluded under `method`.
bool row_excluded(const KExitRow& row, Method method) noexcept;

/// Fills every cell of every row, including the p = 2 row. Rows are
/// independent; with `parallel` set they are computed on worker threads and
/// the result is identical to the sequential one.
KExitTable build_table(const KExitContext& ctx, Method method = Method::both,
                       bool parallel = false);

}  // namespace kexit
