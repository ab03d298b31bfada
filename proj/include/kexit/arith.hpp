#pragma once

#include <cstdint>
#include <vector>

namespace kexit::arith {

/// Largest modulus accepted by the public modular routines (2^63 - 1).
inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 63) - 1;

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint64_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization: primes strictly increasing, exponents >= 1.
using Factorization = std::vector<PrimePower>;

/// Effort budget for factorize(). Trial division runs over primes up to
/// `trial_bound`; each Pollard-Brent attempt may take up to
/// `rho_iterations` steps, and at most `rho_attempts` polynomials are tried
/// per cofactor before giving up with CompositeTooHard.
struct FactorOptions {
  std::uint64_t trial_bound = 1'000'000;
  std::uint64_t rho_iterations = std::uint64_t{1} << 22;
  unsigned rho_attempts = 64;
};

/// (a * b) mod m using a 128-bit intermediate; m may be any value >= 1.
constexpr std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b,
                                std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

/// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

Factorization factorize(std::uint64_t n, const FactorOptions& options = {});

/// base^exp mod modulus, for 2 <= modulus <= kMaxModulus.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp,
                      std::uint64_t modulus);

/// Least d >= 1 with p^d = 1 (mod q). q must be prime and not divide p.
std::uint64_t mult_order(std::uint64_t p, std::uint64_t q);

/// gcd(lcm(1..m), x) without materializing lcm(1..m).
std::uint64_t gcd_lcm_range(std::uint64_t m, std::uint64_t x);

/// Product of prime^exponent; throws ValueTooLarge if it overflows 64 bits.
std::uint64_t multiply_out(const Factorization& factors);

}  // namespace kexit::arith
