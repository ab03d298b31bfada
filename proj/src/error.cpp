#include "kexit/error.hpp"

namespace kexit {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::parse_error: return "ParseError";
    case Errc::not_prime: return "NotPrime";
    case Errc::duplicate_prime: return "DuplicatePrime";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::degree_out_of_range: return "DegreeOutOfRange";
    case Errc::odd_degree_sum: return "OddDegreeSum";
    case Errc::prime_not_in_group: return "PrimeNotInGroup";
    case Errc::not_coprime: return "NotCoprime";
    case Errc::not_prime_power: return "NotPrimePower";
    case Errc::unknown_fixture: return "UnknownFixture";
    case Errc::value_too_large: return "ValueTooLarge";
    case Errc::composite_too_hard: return "CompositeTooHard";
    case Errc::limit_exceeded: return "LimitExceeded";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message,
             std::optional<std::uint64_t> prime)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code),
      prime_(prime) {}

}  // namespace kexit
