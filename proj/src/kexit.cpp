#include "kexit/kexit.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <string>

#include "kexit/arith.hpp"
#include "kexit/error.hpp"

namespace kexit {
namespace {

// Membership tests never factor p^i - 1: every divisibility question
// "q | p^k - 1" is answered by residues in [0, q).
bool divides_power_minus_one(std::uint64_t q, std::uint64_t p, std::uint64_t k) {
  return arith::mod_pow(p, k, q) == 1;
}

// q | p^i - 1 for some 1 <= i <= m. The order of p mod q is at most q - 1,
// so the scan stops at min(m, q - 1).
bool divides_some_power_minus_one(std::uint64_t q, std::uint64_t p, std::uint64_t m) {
  const std::uint64_t base = p % q;
  if (base == 0) return false;
  const std::uint64_t limit = std::min(m, q - 1);
  std::uint64_t x = 1;
  for (std::uint64_t i = 1; i <= limit; ++i) {
    x = arith::mul_mod(x, base, q);
    if (x == 1) return true;
  }
  return false;
}

bool in_theta(const KExitContext& ctx, std::uint64_t p, std::uint64_t q) {
  return !divides_some_power_minus_one(q, p, ctx.order().exponent_of(p));
}

bool in_theta_bar(const KExitContext& ctx, std::uint64_t p, std::uint64_t q) {
  return !divides_power_minus_one(q, p, ctx.order().exponent_of(p));
}

template <typename Pred>
PrimeSet others_where(const KExitContext& ctx, std::uint64_t p, Pred pred) {
  ctx.order().index_of(p);  // PrimeNotInGroup
  PrimeSet out;
  for (const auto& f : ctx.order().factors()) {
    if (f.prime != p && pred(f.prime)) out.push_back(f.prime);
  }
  return out;
}

KExitRow make_row(const KExitContext& ctx, const PrimePower& f, std::uint64_t degree) {
  KExitRow row;
  row.prime = f.prime;
  row.m = f.exponent;
  row.theta = theta(ctx, f.prime);
  row.theta_bar = theta_bar(ctx, f.prime);
  row.page = page_set(ctx, f.prime);
  row.l_set = l_set(ctx, f.prime);
  row.degree = degree;
  row.exits_by_H = degree < row.page.size();
  row.exits_by_L = degree < row.l_set.size();
  return row;
}

}  // namespace

std::string_view method_name(Method method) noexcept {
  switch (method) {
    case Method::H: return "H";
    case Method::L: return "L";
    case Method::both: return "both";
  }
  return "both";
}

Method parse_method(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "h") return Method::H;
  if (lower == "l") return Method::L;
  if (lower == "both") return Method::both;
  throw Error(Errc::parse_error, "unknown method \"" + std::string(text) + "\" (H, L, both)");
}

std::uint64_t power_of(const KExitContext& ctx, std::uint64_t p) {
  return ctx.order().factors()[ctx.order().index_of(p)].exponent;
}

PrimeSet theta(const KExitContext& ctx, std::uint64_t p) {
  return others_where(ctx, p, [&](std::uint64_t q) { return in_theta(ctx, p, q); });
}

PrimeSet theta_bar(const KExitContext& ctx, std::uint64_t p) {
  return others_where(ctx, p, [&](std::uint64_t q) { return in_theta_bar(ctx, p, q); });
}

PrimeSet page_set(const KExitContext& ctx, std::uint64_t p) {
  return others_where(ctx, p, [&](std::uint64_t q) {
    return in_theta(ctx, p, q) && in_theta_bar(ctx, q, p);
  });
}

PrimeSet l_set(const KExitContext& ctx, std::uint64_t p) {
  const std::uint64_t m = ctx.order().exponent_of(p);
  return others_where(ctx, p, [&](std::uint64_t q) {
    const std::uint64_t n = ctx.order().exponent_of(q);
    if (divides_power_minus_one(p, q, n)) return false;
    const std::uint64_t g = arith::gcd_lcm_range(m, q - 1);
    return !divides_power_minus_one(q, p, g);
  });
}

Verdict exit_verdict(const KExitContext& ctx, std::uint64_t p, Method method) {
  Verdict v;
  v.degree = ctx.degree_of(p);
  switch (method) {
    case Method::H:
      v.witness_size = page_set(ctx, p).size();
      v.exits = v.degree < v.witness_size;
      break;
    case Method::L:
      v.witness_size = l_set(ctx, p).size();
      v.exits = v.degree < v.witness_size;
      break;
    case Method::both: {
      const std::uint64_t h = page_set(ctx, p).size();
      const std::uint64_t l = l_set(ctx, p).size();
      v.witness_size = std::max(h, l);
      v.exits = v.degree < h || v.degree < l;
      break;
    }
  }
  return v;
}

const KExitRow& KExitTable::row(std::uint64_t p) const {
  auto it = std::lower_bound(rows.begin(), rows.end(), p,
                             [](const KExitRow& r, std::uint64_t v) { return r.prime < v; });
  if (it == rows.end() || it->prime != p) {
    throw Error(Errc::prime_not_in_group, std::to_string(p) + " has no row", p);
  }
  return *it;
}

bool row_excluded(const KExitRow& row, Method method) noexcept {
  switch (method) {
    case Method::H: return row.exits_by_H;
    case Method::L: return row.exits_by_L;
    case Method::both: return row.exits_by_H || row.exits_by_L;
  }
  return false;
}

KExitTable build_table(const KExitContext& ctx, Method method, bool parallel) {
  const auto factors = ctx.order().factors();
  KExitTable table;
  table.method = method;
  table.rows.resize(factors.size());

  if (parallel) {
    std::vector<std::future<KExitRow>> pending;
    pending.reserve(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      pending.push_back(std::async(std::launch::async, [&ctx, &factors, i] {
        return make_row(ctx, factors[i], ctx.degrees()[i]);
      }));
    }
    for (std::size_t i = 0; i < factors.size(); ++i) table.rows[i] = pending[i].get();
  } else {
    for (std::size_t i = 0; i < factors.size(); ++i) {
      table.rows[i] = make_row(ctx, factors[i], ctx.degrees()[i]);
    }
  }

  for (const auto& row : table.rows) {
    if (row_excluded(row, method)) table.excluded.push_back(row.prime);
  }
  return table;
}

}  // namespace kexit
