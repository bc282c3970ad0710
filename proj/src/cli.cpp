#include "poisson_zeta/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <exception>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "poisson_zeta/bernoulli.hpp"
#include "poisson_zeta/errors.hpp"
#include "poisson_zeta/estimator.hpp"
#include "poisson_zeta/oracle.hpp"

namespace poisson_zeta::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { kPlain, kJson, kCsv };

struct RunConfig {
  double s_re = 4.0;
  double s_im = 0.0;
  int r = 10;
  int r_min = 2;
  int r_max = 12;
  long precision_bits = kDefaultPrecisionBits;
  Format format = Format::kPlain;
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::uint64_t truncation_cap = oracle::kDefaultTruncationCap;
};

SParameter make_s(const RunConfig& config) {
  if (config.precision_bits > kMaxPrecisionBits) {
    throw DomainError("precision must be <= " + std::to_string(kMaxPrecisionBits) + " bits");
  }
  return SParameter(config.s_re, config.s_im, config.precision_bits);
}

void check_r(int r) {
  if (r < 1) throw DomainError("order r must be >= 1, got " + std::to_string(r));
}

std::string format_double(double x) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

// CSV cells never contain commas or quotes, so no escaping is needed.
void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
  out << '\n';
}

// estimate ---------------------------------------------------------------------

int cmd_estimate(const RunConfig& config, std::ostream& out) {
  check_r(config.r);
  const SParameter s = make_s(config);
  const estimator::ZetaEstimate est = estimator::zeta_estimate(s, config.r);
  const long bits = config.precision_bits;

  switch (config.format) {
    case Format::kJson: {
      Json record;
      record["s_re"] = config.s_re;
      record["s_im"] = config.s_im;
      record["r"] = config.r;
      record["value_re"] = est.value.re.to_double();
      record["value_im"] = est.value.im.to_double();
      record["bound"] = est.bound.to_double();
      record["head_re"] = est.head.re.to_double();
      record["head_im"] = est.head.im.to_double();
      record["tail_re"] = est.tail.re.to_double();
      record["tail_im"] = est.tail.im.to_double();
      record["condition_estimate"] = est.diagnostics.condition_estimate;
      record["precision_bits"] = bits;
      out << record.dump() << '\n';
      break;
    }
    case Format::kCsv:
      out << "#schema=1\n";
      write_csv_row(out, {"s_re", "s_im", "r", "value_re", "value_im", "bound", "head_re", "head_im", "tail_re",
                          "tail_im", "condition_estimate", "precision_bits"});
      write_csv_row(out, {format_double(config.s_re), format_double(config.s_im), std::to_string(config.r),
                          format_number(est.value.re, bits), format_number(est.value.im, bits),
                          format_number(est.bound, bits), format_number(est.head.re, bits),
                          format_number(est.head.im, bits), format_number(est.tail.re, bits),
                          format_number(est.tail.im, bits), format_double(est.diagnostics.condition_estimate),
                          std::to_string(bits)});
      break;
    case Format::kPlain:
      out << "s         = " << format_double(config.s_re) << " + " << format_double(config.s_im) << "i\n"
          << "r         = " << config.r << '\n'
          << "value     = " << format_number(est.value.re, bits) << " + " << format_number(est.value.im, bits)
          << "i\n"
          << "bound     = " << format_number(est.bound, bits) << '\n'
          << "head      = " << format_number(est.head.re, bits) << " + " << format_number(est.head.im, bits)
          << "i\n"
          << "tail      = " << format_number(est.tail.re, bits) << " + " << format_number(est.tail.im, bits)
          << "i\n"
          << "condition = " << format_double(est.diagnostics.condition_estimate) << '\n'
          << "residual  = " << format_double(est.diagnostics.residual_norm) << '\n'
          << "precision = " << bits << " bits\n";
      break;
  }
  return kSuccess;
}

// validate ---------------------------------------------------------------------

int cmd_validate(const RunConfig& config, std::ostream& out) {
  check_r(config.r);
  const SParameter s = make_s(config);
  oracle::ValidationConfig vc;
  vc.suite = oracle::parse_suite(config.suite);
  vc.seed = config.seed;
  vc.truncation_cap = config.truncation_cap;
  const oracle::ValidationReport report = oracle::run_validation(s, config.r, vc);

  switch (config.format) {
    case Format::kJson: {
      Json context;
      context["s_re"] = report.context.s_re;
      context["s_im"] = report.context.s_im;
      context["r"] = report.context.r;
      context["precision_bits"] = report.context.precision_bits;
      context["suite"] = oracle::suite_name(vc.suite);
      context["seed"] = vc.seed;
      context["truncation_cap"] = vc.truncation_cap;
      context["fourier_terms_coarse"] = vc.fourier_terms_coarse;
      context["fourier_terms_fine"] = vc.fourier_terms_fine;
      context["half_sum_terms"] = vc.half_sum_terms;
      Json checks = Json::array();
      for (const oracle::Check& c : report.checks) {
        Json item;
        item["name"] = c.name;
        item["residual"] = c.residual;
        item["tolerance"] = c.tolerance;
        item["pass"] = c.pass;
        checks.push_back(std::move(item));
      }
      Json record;
      record["context"] = std::move(context);
      record["checks"] = std::move(checks);
      record["skipped"] = report.skipped;
      record["passed"] = report.all_passed();
      out << record.dump() << '\n';
      break;
    }
    case Format::kCsv:
      out << "#schema=1\n";
      write_csv_row(out, {"name", "residual", "tolerance", "pass"});
      for (const oracle::Check& c : report.checks) {
        write_csv_row(out, {c.name, format_double(c.residual), format_double(c.tolerance), c.pass ? "true" : "false"});
      }
      for (const std::string& name : report.skipped) write_csv_row(out, {name, "", "", "skipped"});
      break;
    case Format::kPlain:
      out << "validate s = " << format_double(config.s_re) << " + " << format_double(config.s_im)
          << "i, r = " << config.r << ", " << config.precision_bits << " bits, suite " << config.suite << '\n';
      for (const oracle::Check& c : report.checks) {
        out << (c.pass ? "PASS " : "FAIL ") << c.name << "  residual " << format_double(c.residual)
            << "  tolerance " << format_double(c.tolerance) << '\n';
      }
      for (const std::string& name : report.skipped) out << "SKIP " << name << '\n';
      out << (report.all_passed() ? "all checks passed" : "some checks failed") << '\n';
      break;
  }
  return report.all_passed() ? kSuccess : kValidationFailure;
}

// table ------------------------------------------------------------------------

struct TableRow {
  int r = 0;
  std::optional<estimator::ZetaEstimate> estimate;
  std::optional<estimator::Bracket> bracket;
  std::optional<Real> abs_error;
  bool crossover = false;
};

int cmd_table(const RunConfig& config, std::ostream& out) {
  check_r(config.r_min);
  if (config.r_min > config.r_max) {
    throw DomainError("empty r range [" + std::to_string(config.r_min) + ", " + std::to_string(config.r_max) + "]");
  }
  const SParameter s = make_s(config);
  const long bits = config.precision_bits;
  const Real crossover = estimator::crossover_radius(s);
  std::optional<Real> reference;
  if (const auto even = s.even_integer()) reference = bernoulli::zeta_even(*even, bits);

  const int count = config.r_max - config.r_min + 1;
  std::vector<TableRow> rows(static_cast<std::size_t>(count));
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < count; ++i) {
    TableRow& row = rows[static_cast<std::size_t>(i)];
    row.r = config.r_min + i;
    try {
      row.estimate = estimator::zeta_estimate(s, row.r);
      if (row.r >= 2) row.bracket = estimator::naive_bracket(s, row.r);
      if (reference) row.abs_error = abs(row.estimate->value - Complex(*reference));
      row.crossover = Real(static_cast<long>(row.r), bits) >= crossover;
    } catch (...) {
      failures[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const std::exception_ptr& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }

  auto optional_number = [bits](const std::optional<Real>& x) { return x ? format_number(*x, bits) : std::string(); };
  switch (config.format) {
    case Format::kJson: {
      Json table = Json::array();
      for (const TableRow& row : rows) {
        Json item;
        item["r"] = row.r;
        item["value_re"] = row.estimate->value.re.to_double();
        item["value_im"] = row.estimate->value.im.to_double();
        item["bound"] = row.estimate->bound.to_double();
        item["naive_lower"] = row.bracket ? Json(row.bracket->lower.to_double()) : Json(nullptr);
        item["naive_upper"] = row.bracket ? Json(row.bracket->upper.to_double()) : Json(nullptr);
        item["abs_error"] = row.abs_error ? Json(row.abs_error->to_double()) : Json(nullptr);
        item["crossover"] = row.crossover;
        table.push_back(std::move(item));
      }
      out << table.dump() << '\n';
      break;
    }
    case Format::kCsv:
    case Format::kPlain: {
      const bool csv = config.format == Format::kCsv;
      if (csv) out << "#schema=1\n";
      std::vector<std::string> header = {"r", "value_re", "value_im", "bound", "naive_lower", "naive_upper",
                                         "abs_error", "crossover"};
      std::vector<std::vector<std::string>> cells;
      cells.push_back(header);
      for (const TableRow& row : rows) {
        std::optional<Real> lower;
        std::optional<Real> upper;
        if (row.bracket) {
          lower = row.bracket->lower;
          upper = row.bracket->upper;
        }
        cells.push_back({std::to_string(row.r), format_number(row.estimate->value.re, bits),
                         format_number(row.estimate->value.im, bits), format_number(row.estimate->bound, bits),
                         optional_number(lower), optional_number(upper), optional_number(row.abs_error),
                         row.crossover ? "true" : "false"});
      }
      if (csv) {
        for (const auto& line : cells) write_csv_row(out, line);
        break;
      }
      std::vector<std::size_t> width(header.size(), 0);
      for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
      }
      for (const auto& line : cells) {
        for (std::size_t c = 0; c < line.size(); ++c) {
          out << (c ? "  " : "") << line[c];
          if (c + 1 < line.size()) out << std::string(width[c] - line[c].size(), ' ');
        }
        out << '\n';
      }
      break;
    }
  }
  return kSuccess;
}

// option plumbing ----------------------------------------------------------------

void add_common(CLI::App* sub, RunConfig& config, bool s_required) {
  auto* s_re = sub->add_option("--s-re", config.s_re, "Real part of s (>= 4)");
  if (s_required) {
    s_re->required();
  } else {
    s_re->capture_default_str();
  }
  sub->add_option("--s-im", config.s_im, "Imaginary part of s")->capture_default_str();
  sub->add_option("--precision", config.precision_bits, "Working precision in bits (>= 53)")->capture_default_str();
  sub->add_option("--format", config.format, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"plain", Format::kPlain}, {"json", Format::kJson}, {"csv", Format::kCsv}},
          CLI::ignore_case))
      ->default_str("plain");
  sub->add_option("--seed", config.seed, "Seed for randomized checks")->capture_default_str();
  sub->add_option("--truncation-cap", config.truncation_cap, "Largest N a brute-force sum may use")
      ->capture_default_str();
}

}  // namespace

std::string format_number(const Real& x, long precision_bits) {
  Real rounded(0L, precision_bits);
  mpfr_set(rounded.get(), x.get(), MPFR_RNDN);
  if (precision_bits == kMinPrecisionBits) return format_double(rounded.to_double());
  return rounded.to_string();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Estimates sum_{n>=1} n^(-s) with a certified error bound", "pzeta");
  app.require_subcommand(1);
  RunConfig config;

  CLI::App* estimate = app.add_subcommand("estimate", "Estimate zeta(s) at order r");
  add_common(estimate, config, true);
  estimate->add_option("--r", config.r, "Order r (>= 1)")->capture_default_str();

  CLI::App* validate = app.add_subcommand("validate", "Run oracle validation suites");
  add_common(validate, config, false);
  validate->add_option("--r", config.r, "Order r (>= 1)")->capture_default_str();
  validate->add_option("--suite", config.suite, "Suite to run")
      ->check(CLI::IsMember({"all", "identity", "half-sum", "bernoulli", "smoothing"}))
      ->capture_default_str();

  CLI::App* table = app.add_subcommand("table", "Convergence table over a range of r");
  add_common(table, config, true);
  table->add_option("--r-min", config.r_min, "First order")->capture_default_str();
  table->add_option("--r-max", config.r_max, "Last order")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    std::ostringstream help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (estimate->parsed()) return cmd_estimate(config, out);
    if (validate->parsed()) return cmd_validate(config, out);
    return cmd_table(config, out);
  } catch (const ConditioningError& e) {
    err << "conditioning error: " << e.what() << '\n';
    return kConditioningError;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << '\n';
    return kResourceError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace poisson_zeta::cli
