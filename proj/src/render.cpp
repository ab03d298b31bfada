#include "kexit/render.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "kexit/error.hpp"

namespace kexit {
namespace {

using nlohmann::ordered_json;

constexpr std::string_view kEmptySet = "∅";
constexpr std::string_view kNotIn = "∉";
constexpr std::string_view kPi = "π";

std::string join(const PrimeSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

// Display width of UTF-8 text: count everything but continuation bytes.
std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

const PrimeSet& witness_set(const KExitRow& row, Method method) {
  return method == Method::L ? row.l_set : row.page;
}

using Cells = std::array<std::string, 7>;

Cells header(Method method, bool ascii) {
  const bool l = method == Method::L;
  if (ascii) {
    return {"p", "theta", "theta_bar", l ? "L" : "H", "d", l ? "|L|" : "|H|", "result"};
  }
  return {"p",      "theta(p)", "theta_bar(p)", l ? "L(p,G)" : "H(p,G)",
          "d_G(p)", l ? "|L(p,G)|" : "|H(p,G)|", "result"};
}

Cells cells(const KExitRow& row, Method method, std::string_view empty) {
  auto set = [&](const PrimeSet& s) { return s.empty() ? std::string(empty) : join(s); };
  const PrimeSet& witness = witness_set(row, method);
  return {std::to_string(row.prime),
          set(row.theta),
          set(row.theta_bar),
          set(witness),
          std::to_string(row.degree),
          std::to_string(witness.size()),
          row_excluded(row, method) ? "excluded" : "-"};
}

std::string verdict_line(const KExitTable& table) {
  std::string out = "result: ";
  if (table.excluded.empty()) return out + "no prime exits\n";
  for (std::size_t i = 0; i < table.excluded.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(table.excluded[i]);
    out += ' ';
    out += kNotIn;
    out += ' ';
    out += kPi;
    out += "(K)";
  }
  return out + "\n";
}

std::string render_text(const KExitTable& table) {
  std::vector<Cells> lines;
  lines.push_back(header(table.method, false));
  for (const auto& row : table.rows) lines.push_back(cells(row, table.method, kEmptySet));

  std::array<std::size_t, 7> width{};
  for (const auto& line : lines) {
    for (std::size_t c = 0; c < width.size(); ++c) {
      width[c] = std::max(width[c], display_width(line[c]));
    }
  }

  std::ostringstream out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string line;
    for (std::size_t c = 0; c < width.size(); ++c) {
      if (c) line += "  ";
      line += lines[i][c];
      line.append(width[c] - display_width(lines[i][c]), ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
    if (i == 0) {
      std::size_t total = 2 * (width.size() - 1);
      for (std::size_t w : width) total += w;
      out << std::string(total, '-') << '\n';
    }
  }
  out << '\n' << verdict_line(table);
  return out.str();
}

std::string render_md(const KExitTable& table) {
  std::ostringstream out;
  auto emit = [&](const Cells& c) {
    out << '|';
    for (const auto& cell : c) {
      out << ' ';
      for (char ch : cell) out << (ch == '|' ? "\\|" : std::string(1, ch));
      out << " |";
    }
    out << '\n';
  };
  emit(header(table.method, false));
  out << "|---|---|---|---|---|---|---|\n";
  for (const auto& row : table.rows) emit(cells(row, table.method, kEmptySet));
  out << '\n' << verdict_line(table);
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const KExitTable& table) {
  std::ostringstream out;
  auto emit = [&](const Cells& c) {
    for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << csv_field(c[i]);
    out << '\n';
  };
  emit(header(table.method, true));
  for (const auto& row : table.rows) emit(cells(row, table.method, ""));
  return out.str();
}

std::string render_json(const KExitTable& table) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : table.rows) {
    rows.push_back({{"prime", row.prime},
                    {"m", row.m},
                    {"theta", row.theta},
                    {"theta_bar", row.theta_bar},
                    {"page", row.page},
                    {"l_set", row.l_set},
                    {"degree", row.degree},
                    {"page_size", row.page.size()},
                    {"l_size", row.l_set.size()},
                    {"exits_by_H", row.exits_by_H},
                    {"exits_by_L", row.exits_by_L}});
  }
  ordered_json doc;
  doc["rows"] = std::move(rows);
  doc["excluded"] = table.excluded;
  doc["method"] = std::string(method_name(table.method));
  return doc.dump() + "\n";
}

template <typename T>
T field(const ordered_json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw Error(Errc::parse_error, std::string("table JSON is missing \"") + key + "\"");
  }
  try {
    return obj.at(key).get<T>();
  } catch (const ordered_json::exception& e) {
    throw Error(Errc::parse_error, std::string("bad \"") + key + "\": " + e.what());
  }
}

}  // namespace

Format parse_format(std::string_view text) {
  if (text == "text") return Format::text;
  if (text == "md") return Format::md;
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  throw Error(Errc::parse_error,
              "unknown format \"" + std::string(text) + "\" (text, md, csv, json)");
}

std::string render(const KExitTable& table, Format format) {
  switch (format) {
    case Format::text: return render_text(table);
    case Format::md: return render_md(table);
    case Format::csv: return render_csv(table);
    case Format::json: return render_json(table);
  }
  return {};
}

KExitTable table_from_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw Error(Errc::parse_error, std::string("malformed table JSON: ") + e.what());
  }

  KExitTable table;
  table.method = parse_method(field<std::string>(doc, "method"));
  table.excluded = field<PrimeSet>(doc, "excluded");
  if (!doc.contains("rows") || !doc["rows"].is_array()) {
    throw Error(Errc::parse_error, "table JSON needs a \"rows\" array");
  }
  for (const auto& obj : doc["rows"]) {
    KExitRow row;
    row.prime = field<std::uint64_t>(obj, "prime");
    row.m = field<std::uint64_t>(obj, "m");
    row.theta = field<PrimeSet>(obj, "theta");
    row.theta_bar = field<PrimeSet>(obj, "theta_bar");
    row.page = field<PrimeSet>(obj, "page");
    row.l_set = field<PrimeSet>(obj, "l_set");
    row.degree = field<std::uint64_t>(obj, "degree");
    row.exits_by_H = field<bool>(obj, "exits_by_H");
    row.exits_by_L = field<bool>(obj, "exits_by_L");
    if (field<std::uint64_t>(obj, "page_size") != row.page.size() ||
        field<std::uint64_t>(obj, "l_size") != row.l_set.size()) {
      throw Error(Errc::parse_error, "row " + std::to_string(row.prime) +
                                         ": set sizes disagree with the sets");
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace kexit
