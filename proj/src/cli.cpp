#include "kexit/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kexit/catalog.hpp"
#include "kexit/error.hpp"
#include "kexit/group_model.hpp"
#include "kexit/kexit.hpp"
#include "kexit/oracle.hpp"
#include "kexit/render.hpp"

namespace kexit::cli {
namespace {

struct InputOptions {
  std::string fixture;
  std::string order;
  std::string degrees;
  std::string input;
  bool allow_odd_degree_sum = false;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  auto* fixture = cmd->add_option("--fixture", in.fixture, "Built-in fixture (see `fixtures`)");
  auto* order = cmd->add_option("--order", in.order,
                                "Group order, e.g. \"2^11*3*5\" or [[2,11],[3,1],[5,1]]");
  auto* degrees = cmd->add_option("--degrees", in.degrees,
                                  "Degree pattern aligned to ascending primes, e.g. \"1,1,0\"");
  auto* input = cmd->add_option("--input", in.input,
                                "JSON file {\"order\": ..., \"degrees\": ...}; '-' reads stdin");
  order->needs(degrees);
  degrees->needs(order);
  fixture->excludes(order, degrees, input);
  input->excludes(order, degrees);
  cmd->add_flag("--allow-odd-degree-sum", in.allow_odd_degree_sum,
                "Accept degree patterns with an odd sum");
}

std::string read_all(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path);
  if (!file) throw Error(Errc::invalid_argument, "cannot open " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

KExitContext load_context(const InputOptions& in) {
  const ValidateOptions options{in.allow_odd_degree_sum};
  if (!in.fixture.empty()) {
    auto f = catalog::fixture(in.fixture);
    return validate(std::move(f.order), std::move(f.degrees), options);
  }
  if (!in.input.empty()) return parse_context_json(read_all(in.input), options);
  if (!in.order.empty()) {
    return validate(parse_order_any(in.order), parse_degrees_any(in.degrees), options);
  }
  throw Error(Errc::invalid_argument, "give --fixture, --order/--degrees, or --input");
}

std::string join(const PrimeSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::parse_error:
    case Errc::unknown_fixture:
    case Errc::invalid_argument:
      return kUsageError;
    case Errc::composite_too_hard:
    case Errc::limit_exceeded:
      return kLimitExceeded;
    default:
      return kValidationError;
  }
}

int compute(const InputOptions& in, const std::string& format_name,
            const std::string& method_name, bool annotate, std::ostream& out,
            std::ostream& err) {
  const Format format = parse_format(format_name);
  const Method method = parse_method(method_name);
  if (annotate && in.fixture.empty()) {
    throw Error(Errc::invalid_argument, "--annotate-paper-diffs needs --fixture");
  }
  const KExitContext ctx = load_context(in);
  const KExitTable table = build_table(ctx, method);
  out << render(table, format);

  if (annotate) {
    const auto diffs =
        catalog::published_differences(table, catalog::published_table(in.fixture));
    std::ostream& note = (format == Format::text || format == Format::md) ? out : err;
    note << "\ndifferences from the published table (" << diffs.size() << "):\n";
    for (const auto& d : diffs) {
      note << "  " << d.column << '(' << d.prime << "): computed " << d.computed << ", printed "
           << d.printed << '\n';
    }
  }
  return kOk;
}

int verify(const InputOptions& in, std::ostream& out) {
  const KExitContext ctx = load_context(in);
  const auto mismatches = oracle::verify(ctx);
  if (mismatches.empty()) {
    out << "ok: " << 4 * ctx.size() << " cells match the exact-integer oracle\n";
    return kOk;
  }
  for (const auto& m : mismatches) {
    out << "mismatch " << m.cell << '(' << m.prime << "): fast " << join(m.fast) << ", exact "
        << join(m.exact) << '\n';
  }
  return kVerifyMismatch;
}

int catalog_cmd(const std::string& family, std::uint64_t parameter, const std::string& format,
                std::ostream& out) {
  const catalog::FamilySpec spec{catalog::parse_family(family), parameter};
  const GroupOrder order = catalog::family_order(spec);
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["family"] = std::string(catalog::family_name(spec.family));
    doc["parameter"] = parameter;
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    for (const auto& [p, e] : order.factors()) pairs.push_back({p, e});
    doc["order"] = std::move(pairs);
    out << doc.dump() << '\n';
  } else if (format == "text") {
    out << catalog::family_name(spec.family) << '(' << parameter << "): " << render_order(order)
        << '\n';
  } else {
    throw Error(Errc::parse_error, "catalog supports --format text or json");
  }
  return kOk;
}

int list_fixtures(std::ostream& out) {
  for (const auto& name : catalog::fixture_names()) {
    const auto f = catalog::fixture(name);
    out << name << "  " << f.group << "  order " << render_order(f.order) << "  degrees ";
    for (std::size_t i = 0; i < f.degrees.size(); ++i) out << (i ? "," : "") << f.degrees[i];
    out << '\n';
  }
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"K-Exit tables: primes provably outside every normal solvable subgroup", "kexit"};
  app.require_subcommand(1);

  InputOptions compute_in;
  std::string format = "text";
  std::string method = "both";
  bool annotate = false;
  auto* compute_cmd = app.add_subcommand("compute", "Build the K-Exit table");
  add_input_options(compute_cmd, compute_in);
  compute_cmd->add_option("--format", format, "text, md, csv, or json")->capture_default_str();
  compute_cmd->add_option("--method", method, "Exit rule: H, L, or both")->capture_default_str();
  compute_cmd->add_flag("--annotate-paper-diffs", annotate,
                        "List cells that differ from the published table of the fixture");

  std::string family;
  std::uint64_t parameter = 0;
  std::string catalog_format = "text";
  auto* catalog_sub = app.add_subcommand("catalog", "Factor the order of a simple group");
  catalog_sub->add_option("--family", family, "Alternating, PSL2, PSU3, PSU4")->required();
  catalog_sub->add_option("--param", parameter, "n for Alternating, q otherwise")->required();
  catalog_sub->add_option("--format", catalog_format, "text or json")->capture_default_str();

  InputOptions verify_in;
  auto* verify_cmd =
      app.add_subcommand("verify", "Check the table against the exact-integer oracle");
  add_input_options(verify_cmd, verify_in);

  auto* fixtures_cmd = app.add_subcommand("fixtures", "List built-in fixtures");

  // CLI11 consumes arguments from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (*compute_cmd) return compute(compute_in, format, method, annotate, out, err);
    if (*catalog_sub) return catalog_cmd(family, parameter, catalog_format, out);
    if (*verify_cmd) return verify(verify_in, out);
    if (*fixtures_cmd) return list_fixtures(out);
  } catch (const Error& e) {
    err << "kexit: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kUsageError;
}

}  // namespace kexit::cli
