#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "clhs/constraints.hpp"
#include "clhs/csrs.hpp"
#include "clhs/curves.hpp"
#include "clhs/diagnostics.hpp"
#include "clhs/errors.hpp"
#include "clhs/io.hpp"
#include "clhs/oracle.hpp"
#include "clhs/sampling.hpp"

namespace clhs::cli {
namespace {

struct GenerateArgs {
  std::string spec;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string method = "clhs";
  std::string out;
  std::string format;
  std::optional<std::size_t> max_retries;
};

struct SamplesArgs {
  std::string spec;
  std::string samples;
  std::string out;
  bool oracle = false;
  std::vector<double> levels;
  std::size_t points = 0;
};

std::size_t retries_from_env() {
  const char* raw = std::getenv("CLHS_MAX_RETRIES");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxRetries;
  std::size_t value = 0;
  const std::string_view s(raw);
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || value == 0) {
    throw SpecError("CLHS_MAX_RETRIES must be a positive integer, got '" + std::string(s) + "'");
  }
  return value;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_file(path, text);
  }
}

SampleMatrix load_samples(const std::string& path) {
  return parse_samples(read_file(path), format_for_path(path));
}

int generate(const GenerateArgs& a, std::ostream& out) {
  const DesignSpec spec = parse_design_spec(read_file(a.spec));
  Rng rng(a.seed);
  SampleMatrix m = [&] {
    if (a.method == "srs") return srs(spec, a.n, rng);
    if (a.method == "lhs") return lhs(spec, a.n, rng);
    if (a.method == "csrs") return csrs(spec, a.n, rng);
    return clhs::clhs(spec, a.n, rng, a.max_retries.value_or(retries_from_env()));
  }();
  SampleFormat format = SampleFormat::csv;
  if (a.format == "json") {
    format = SampleFormat::json;
  } else if (a.format.empty() && !a.out.empty()) {
    format = format_for_path(a.out);
  }
  emit(a.out, write_samples(m, format), out);
  return kOk;
}

int diagnose(const SamplesArgs& a, std::ostream& out) {
  const DesignSpec spec = parse_design_spec(read_file(a.spec));
  const SampleMatrix m = load_samples(a.samples);
  emit(a.out, report_to_json(report(m, spec)).dump(2) + "\n", out);
  return kOk;
}

int check(const SamplesArgs& a, std::ostream& out) {
  const DesignSpec spec = parse_design_spec(read_file(a.spec));
  const SampleMatrix m = load_samples(a.samples);
  const DiagnosticsReport r = report(m, spec);
  bool ok = true;
  for (const auto& c : r.columns) {
    out << "column " << c.name << ": " << (c.stratified ? "stratified" : "NOT stratified") << "\n";
    ok = ok && c.stratified;
  }
  for (const auto& l : r.links) {
    out << "link " << spec.variable(l.left).name() << " " << symbol(l.relation) << " "
        << spec.variable(l.right).name() << ": " << l.violations << " violating rows\n";
    ok = ok && l.violations == 0;
  }
  if (a.oracle) {
    for (const auto& link : spec.links()) {
      const auto left = m.column(link.left);
      const auto right = m.column(link.right());
      const bool criterion = existence_criterion(score_vector(left, right, link.relation));
      const bool exists = oracle::brute_force_exists(left, right, link.relation);
      const auto count = oracle::count_satisfying_permutations(left, right, link.relation);
      out << "oracle " << spec.variable(link.left).name() << " " << symbol(link.relation) << " "
          << spec.variable(link.right()).name() << ": criterion=" << std::boolalpha << criterion
          << " brute_force=" << exists << " satisfying_permutations=" << count << "\n";
      ok = ok && criterion == exists;
    }
  }
  out << (ok ? "OK" : "FAILED") << "\n";
  return ok ? kOk : kValidationFailure;
}

int curves(const SamplesArgs& a, std::ostream& out) {
  const DesignSpec spec = parse_design_spec(read_file(a.spec));
  const SampleMatrix m = load_samples(a.samples);
  std::vector<double> knots = a.levels;
  if (knots.empty()) {
    const auto& meta = spec.metadata();
    if (meta.contains("levels") && meta["levels"].is_array()) {
      for (const auto& v : meta["levels"]) {
        if (!v.is_number()) throw SpecError("metadata.levels: expected numbers");
        knots.push_back(v.get<double>());
      }
    } else {
      for (std::size_t j = 0; j < m.cols(); ++j) knots.push_back(static_cast<double>(j + 1));
    }
  }
  if (knots.size() != m.cols()) {
    throw SpecError("curves: " + std::to_string(knots.size()) + " levels for " +
                    std::to_string(m.cols()) + " columns");
  }
  const auto grid = a.points > 0 ? even_grid(knots, a.points) : std::vector<double>{};
  try {
    emit(a.out, write_curve_table(make_curve_table(m, knots, grid)), out);
  } catch (const DomainError& e) {
    throw SpecError(std::string("curves: ") + e.what());
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Latin hypercube designs under chained inequality constraints", "clhs"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate_cmd = app.add_subcommand("generate", "Generate a design");
  generate_cmd->add_option("--spec", gen.spec, "Design spec (JSON)")->required();
  generate_cmd->add_option("--n", gen.n, "Number of experiments")
      ->required()
      ->check(CLI::PositiveNumber);
  generate_cmd->add_option("--seed", gen.seed, "64-bit seed");
  generate_cmd->add_option("--method", gen.method, "Sampling method")
      ->check(CLI::IsMember({"srs", "lhs", "csrs", "clhs"}));
  generate_cmd->add_option("--out", gen.out, "Output file (default stdout)");
  generate_cmd->add_option("--format", gen.format, "csv or json (default from --out extension)")
      ->check(CLI::IsMember({"csv", "json"}));
  generate_cmd->add_option("--max-retries", gen.max_retries,
                           "Column redraw cap for clhs (env CLHS_MAX_RETRIES)")
      ->check(CLI::PositiveNumber);

  SamplesArgs diag;
  auto* diagnose_cmd = app.add_subcommand("diagnose", "Diagnostics report (JSON)");
  diagnose_cmd->add_option("--spec", diag.spec, "Design spec (JSON)")->required();
  diagnose_cmd->add_option("--samples", diag.samples, "Sample file (CSV or JSON)")->required();
  diagnose_cmd->add_option("--out", diag.out, "Output file (default stdout)");

  SamplesArgs chk;
  auto* check_cmd = app.add_subcommand("check", "Exit 0 iff constraints and stratification hold");
  check_cmd->add_option("--spec", chk.spec, "Design spec (JSON)")->required();
  check_cmd->add_option("--samples", chk.samples, "Sample file (CSV or JSON)")->required();
  check_cmd->add_flag("--oracle", chk.oracle)->group("");

  SamplesArgs crv;
  auto* curves_cmd = app.add_subcommand("curves", "Rows as piecewise linear curves (CSV)");
  curves_cmd->add_option("--spec", crv.spec, "Design spec (JSON)")->required();
  curves_cmd->add_option("--samples", crv.samples, "Sample file (CSV or JSON)")->required();
  curves_cmd->add_option("--levels", crv.levels, "Level of each column, comma separated")
      ->delimiter(',');
  curves_cmd->add_option("--points", crv.points, "Evenly spaced evaluation points");
  curves_cmd->add_option("--out", crv.out, "Output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidationFailure;
  }

  try {
    if (*generate_cmd) return generate(gen, out);
    if (*diagnose_cmd) return diagnose(diag, out);
    if (*check_cmd) return check(chk, out);
    if (*curves_cmd) return curves(crv, out);
  } catch (const RetryExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kRetryExhausted;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  }
  return kValidationFailure;
}

}  // namespace clhs::cli
