#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kexit {

enum class Errc {
  parse_error,
  not_prime,
  duplicate_prime,
  length_mismatch,
  degree_out_of_range,
  odd_degree_sum,
  prime_not_in_group,
  not_coprime,
  not_prime_power,
  unknown_fixture,
  value_too_large,
  composite_too_hard,
  limit_exceeded,
  invalid_argument,
};

std::string_view errc_name(Errc code) noexcept;

/// Single exception type for the library. `prime()` carries the offending
/// prime for the errors that name one (NotPrime(p), DegreeOutOfRange(p), ...).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message,
        std::optional<std::uint64_t> prime = std::nullopt);

  Errc code() const noexcept { return code_; }
  std::optional<std::uint64_t> prime() const noexcept { return prime_; }

 private:
  Errc code_;
  std::optional<std::uint64_t> prime_;
};

}  // namespace kexit
