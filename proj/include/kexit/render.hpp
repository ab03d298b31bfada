#pragma once

#include <string>
#include <string_view>

#include "kexit/kexit.hpp"

namespace kexit {

enum class Format { text, md, csv, json };

/// Throws ParseError.
Format parse_format(std::string_view text);

/// Columns, in order: p, theta(p), theta_bar(p), H(p,G), d_G(p), |H(p,G)|,
/// result. Under Method::L the H columns show L(p,G) and |L(p,G)| instead.
/// Sets are ascending comma-separated primes; an empty set is "∅" in text
/// and md, an empty field in csv and [] in json. JSON carries every field of
/// every row.
std::string render(const KExitTable& table, Format format);

/// Inverse of render(table, Format::json). Throws ParseError.
KExitTable table_from_json(std::string_view text);

}  // namespace kexit
