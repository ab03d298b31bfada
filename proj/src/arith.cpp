#include "kexit/arith.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <string>

#include "kexit/error.hpp"

namespace kexit::arith {
namespace {

constexpr std::uint64_t kSieveLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kSieveLimit + 1, false);
    std::vector<std::uint32_t> out;
    out.reserve(80'000);
    for (std::uint64_t i = 2; i <= kSieveLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (std::uint64_t j = i * i; j <= kSieveLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

std::uint64_t pow_mod_unchecked(std::uint64_t base, std::uint64_t exp,
                                std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  // a, b < m
  return a >= m - b ? a - (m - b) : a + b;
}

// Miller-Rabin round; n odd, n > a.
bool strong_probable_prime(std::uint64_t n, std::uint64_t a) noexcept {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = pow_mod_unchecked(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) noexcept {
  return a > b ? a - b : b - a;
}

// Brent's cycle-finding variant of Pollard rho with batched gcds.
// Returns a nontrivial divisor of composite n, or nullopt if this
// polynomial failed within the iteration budget.
std::optional<std::uint64_t> brent_rho(std::uint64_t n, std::uint64_t c,
                                       std::uint64_t seed,
                                       std::uint64_t max_iterations) {
  constexpr std::uint64_t kBatch = 128;
  auto step = [&](std::uint64_t v) { return add_mod(mul_mod(v, v, n), c, n); };

  std::uint64_t y = seed % n;
  std::uint64_t x = y;
  std::uint64_t ys = y;
  std::uint64_t q = 1;
  std::uint64_t g = 1;
  std::uint64_t r = 1;
  std::uint64_t iterations = 0;

  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = step(y);
    iterations += r;
    for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      const std::uint64_t len = std::min(kBatch, r - k);
      for (std::uint64_t i = 0; i < len; ++i) {
        y = step(y);
        q = mul_mod(q, abs_diff(x, y), n);
      }
      iterations += len;
      g = std::gcd(q, n);
    }
    r <<= 1;
    if (g == 1 && iterations > max_iterations) return std::nullopt;
  }

  if (g == n) {
    // The batch overshot; replay it one step at a time.
    do {
      ys = step(ys);
      g = std::gcd(abs_diff(x, ys), n);
    } while (g == 1);
  }
  if (g == n) return std::nullopt;
  return g;
}

void split_composite(std::uint64_t n, const FactorOptions& options,
                     std::map<std::uint64_t, std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  for (unsigned attempt = 0; attempt < options.rho_attempts; ++attempt) {
    if (auto d = brent_rho(n, attempt + 1, attempt + 2, options.rho_iterations)) {
      split_composite(*d, options, out);
      split_composite(n / *d, options, out);
      return;
    }
  }
  throw Error(Errc::composite_too_hard,
              "could not split " + std::to_string(n) + " within the effort budget");
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kWitnesses = {
      2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  // The first twelve primes are a deterministic witness set below 3.3e24.
  for (std::uint64_t a : kWitnesses) {
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n, const FactorOptions& options) {
  if (n == 0) throw Error(Errc::invalid_argument, "cannot factorize 0");

  std::map<std::uint64_t, std::uint64_t> found;
  auto strip = [&](std::uint64_t p) {
    while (n % p == 0) {
      n /= p;
      ++found[p];
    }
  };

  bool exhausted = false;
  for (std::uint32_t p : small_primes()) {
    if (p > options.trial_bound || static_cast<std::uint64_t>(p) * p > n) {
      exhausted = static_cast<std::uint64_t>(p) * p > n;
      break;
    }
    strip(p);
  }
  if (!exhausted && options.trial_bound > kSieveLimit) {
    // Past the cached table: 6k +/- 1 wheel.
    for (std::uint64_t p = kSieveLimit + 1; p <= options.trial_bound; p += 2) {
      if (p % 3 == 0) continue;
      if (p > n / p) {
        exhausted = true;
        break;
      }
      strip(p);
    }
  }

  if (n > 1) {
    if (exhausted) {
      ++found[n];
    } else {
      split_composite(n, options, found);
    }
  }

  Factorization result;
  result.reserve(found.size());
  for (const auto& [p, e] : found) result.push_back({p, e});
  return result;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t modulus) {
  if (modulus < 2) throw Error(Errc::invalid_argument, "modulus must be at least 2");
  if (modulus > kMaxModulus) {
    throw Error(Errc::value_too_large,
                "modulus " + std::to_string(modulus) + " exceeds 2^63-1");
  }
  return pow_mod_unchecked(base, exp, modulus);
}

std::uint64_t mult_order(std::uint64_t p, std::uint64_t q) {
  if (!is_prime(q)) throw Error(Errc::not_prime, std::to_string(q) + " is not prime", q);
  if (q > kMaxModulus) {
    throw Error(Errc::value_too_large, "modulus " + std::to_string(q) + " exceeds 2^63-1");
  }
  if (p % q == 0) {
    throw Error(Errc::not_coprime,
                std::to_string(q) + " divides " + std::to_string(p), q);
  }
  std::uint64_t order = q - 1;
  for (const auto& [ell, e] : factorize(q - 1)) {
    for (std::uint64_t i = 0; i < e; ++i) {
      if (pow_mod_unchecked(p, order / ell, q) != 1) break;
      order /= ell;
    }
  }
  return order;
}

std::uint64_t gcd_lcm_range(std::uint64_t m, std::uint64_t x) {
  if (m == 0 || x == 0) {
    throw Error(Errc::invalid_argument, "gcd_lcm_range needs m >= 1 and x >= 1");
  }
  // Each prime ell <= m contributes ell^min(a, v_ell(x)), where ell^a is the
  // largest power of ell not above m.
  std::uint64_t result = 1;
  auto contribute = [&](std::uint64_t ell, std::uint64_t v) {
    std::uint64_t a = 1;
    for (std::uint64_t power = ell; power <= m / ell; power *= ell) ++a;
    for (std::uint64_t i = 0; i < std::min(a, v); ++i) result *= ell;
  };

  if (m <= kSieveLimit) {
    for (std::uint64_t ell : small_primes()) {
      if (ell > m || ell > x) break;
      std::uint64_t v = 0;
      for (; x % ell == 0; x /= ell) ++v;
      if (v) contribute(ell, v);
    }
    return result;
  }
  for (const auto& [ell, v] : factorize(x)) {
    if (ell <= m) contribute(ell, v);
  }
  return result;
}

std::uint64_t multiply_out(const Factorization& factors) {
  std::uint64_t product = 1;
  for (const auto& [p, e] : factors) {
    for (std::uint64_t i = 0; i < e; ++i) {
      if (__builtin_mul_overflow(product, p, &product)) {
        throw Error(Errc::value_too_large, "product exceeds 64 bits");
      }
    }
  }
  return product;
}

}  // namespace kexit::arith
