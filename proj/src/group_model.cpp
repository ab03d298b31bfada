#include "kexit/group_model.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include <json.hpp>

#include "kexit/error.hpp"

namespace kexit {
namespace {

using nlohmann::json;

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_blanks() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_blanks();
    return pos_ == text_.size();
  }

  bool accept(char c) {
    skip_blanks();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::uint64_t number(std::string_view what) {
    skip_blanks();
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) {
      throw Error(Errc::value_too_large, std::string(what) + " at offset " +
                                             std::to_string(pos_) + " does not fit in 64 bits");
    }
    if (ec != std::errc() || ptr == first) {
      throw Error(Errc::parse_error, "expected " + std::string(what) + " at offset " +
                                         std::to_string(pos_) + " in \"" + std::string(text_) +
                                         "\"");
    }
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  [[noreturn]] void fail(std::string_view expected) const {
    throw Error(Errc::parse_error, "expected " + std::string(expected) + " at offset " +
                                       std::to_string(pos_) + " in \"" + std::string(text_) +
                                       "\"");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, std::string("malformed JSON: ") + e.what());
  }
}

std::uint64_t json_uint(const json& value, std::string_view what) {
  if (!value.is_number_unsigned()) {
    throw Error(Errc::parse_error, std::string(what) + " must be a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

GroupOrder order_from_json(const json& value) {
  if (!value.is_array()) throw Error(Errc::parse_error, "order must be a JSON array of pairs");
  std::vector<PrimePower> factors;
  for (const auto& pair : value) {
    if (!pair.is_array() || pair.size() != 2) {
      throw Error(Errc::parse_error, "order entries must be [prime, exponent] pairs");
    }
    factors.push_back({json_uint(pair[0], "prime"), json_uint(pair[1], "exponent")});
  }
  return GroupOrder::from_factors(std::move(factors));
}

DegreePattern degrees_from_json(const json& value) {
  if (!value.is_array()) throw Error(Errc::parse_error, "degrees must be a JSON array");
  std::vector<std::uint64_t> degrees;
  for (const auto& d : value) degrees.push_back(json_uint(d, "degree"));
  return DegreePattern(std::move(degrees));
}

bool looks_like_json(std::string_view text) {
  auto it = std::find_if_not(text.begin(), text.end(),
                             [](unsigned char c) { return std::isspace(c); });
  return it != text.end() && *it == '[';
}

}  // namespace

GroupOrder GroupOrder::from_factors(std::vector<PrimePower> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& [p, e] = factors[i];
    if (i > 0 && factors[i - 1].prime == p) {
      throw Error(Errc::duplicate_prime, "prime " + std::to_string(p) + " listed twice", p);
    }
    if (p > arith::kMaxModulus) {
      throw Error(Errc::value_too_large, "prime " + std::to_string(p) + " exceeds 2^63-1", p);
    }
    if (!arith::is_prime(p)) {
      throw Error(Errc::not_prime, std::to_string(p) + " is not prime", p);
    }
    if (e == 0) {
      throw Error(Errc::parse_error, "exponent of " + std::to_string(p) + " must be at least 1", p);
    }
  }
  return GroupOrder(std::move(factors));
}

std::vector<std::uint64_t> GroupOrder::primes() const {
  std::vector<std::uint64_t> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.prime);
  return out;
}

bool GroupOrder::contains(std::uint64_t p) const noexcept { return exponent_of(p) != 0; }

std::uint64_t GroupOrder::exponent_of(std::uint64_t p) const noexcept {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), p,
                             [](const PrimePower& f, std::uint64_t v) { return f.prime < v; });
  return it != factors_.end() && it->prime == p ? it->exponent : 0;
}

std::size_t GroupOrder::index_of(std::uint64_t p) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), p,
                             [](const PrimePower& f, std::uint64_t v) { return f.prime < v; });
  if (it == factors_.end() || it->prime != p) {
    throw Error(Errc::prime_not_in_group, std::to_string(p) + " does not divide |G|", p);
  }
  return static_cast<std::size_t>(it - factors_.begin());
}

GroupOrder parse_order(std::string_view text) {
  Scanner in(text);
  std::vector<PrimePower> factors;
  do {
    const std::uint64_t prime = in.number("prime");
    std::uint64_t exponent = 1;
    if (in.accept('^')) exponent = in.number("exponent");
    factors.push_back({prime, exponent});
  } while (in.accept('*'));
  if (!in.at_end()) in.fail("'*' or end of input");
  return GroupOrder::from_factors(std::move(factors));
}

DegreePattern parse_degrees(std::string_view text) {
  Scanner in(text);
  std::vector<std::uint64_t> degrees;
  do {
    degrees.push_back(in.number("degree"));
  } while (in.accept(','));
  if (!in.at_end()) in.fail("',' or end of input");
  return DegreePattern(std::move(degrees));
}

std::string render_order(const GroupOrder& order) {
  std::string out;
  for (const auto& [p, e] : order.factors()) {
    if (!out.empty()) out += '*';
    out += std::to_string(p);
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

KExitContext validate(GroupOrder order, DegreePattern degrees, const ValidateOptions& options) {
  const std::size_t n = order.size();
  if (degrees.size() != n) {
    throw Error(Errc::length_mismatch, std::to_string(degrees.size()) + " degrees for " +
                                           std::to_string(n) + " primes");
  }
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t p = order.factors()[i].prime;
    if (degrees[i] > n - 1) {
      throw Error(Errc::degree_out_of_range,
                  "degree " + std::to_string(degrees[i]) + " of prime " + std::to_string(p) +
                      " exceeds " + std::to_string(n - 1),
                  p);
    }
    sum += degrees[i];
  }
  if (sum % 2 != 0 && !options.allow_odd_degree_sum) {
    throw Error(Errc::odd_degree_sum,
                "degree sum " + std::to_string(sum) + " is odd, so no graph has this pattern");
  }
  return KExitContext(std::move(order), std::move(degrees));
}

GroupOrder parse_order_json(std::string_view text) { return order_from_json(parse_json(text)); }

DegreePattern parse_degrees_json(std::string_view text) {
  return degrees_from_json(parse_json(text));
}

KExitContext parse_context_json(std::string_view text, const ValidateOptions& options) {
  const json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("degrees")) {
    throw Error(Errc::parse_error, "context must be an object with \"order\" and \"degrees\"");
  }
  return validate(order_from_json(doc["order"]), degrees_from_json(doc["degrees"]), options);
}

GroupOrder parse_order_any(std::string_view text) {
  return looks_like_json(text) ? parse_order_json(text) : parse_order(text);
}

DegreePattern parse_degrees_any(std::string_view text) {
  return looks_like_json(text) ? parse_degrees_json(text) : parse_degrees(text);
}

}  // namespace kexit
