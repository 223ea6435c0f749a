#include "commands.hpp"

#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "sepstat/asymptotics.hpp"
#include "sepstat/brute_oracle.hpp"
#include "sepstat/exact_numbers.hpp"
#include "sepstat/formulas.hpp"
#include "sepstat/gf_series.hpp"
#include "sepstat/setpart.hpp"
#include "sepstat/stats.hpp"
#include "sepstat/verify.hpp"

namespace sepstat::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Format { kPlain, kJson, kCsv };

constexpr const char* kLiteralWarning =
    "WARNING: --literal evaluates the formulas exactly as printed; these variants are "
    "NOT validated and disagree with enumeration.\n";

// Thrown for argument combinations CLI11 cannot express.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void add_format_option(CLI::App* cmd, Format& format, bool allow_csv = true) {
  std::map<std::string, Format> names{{"plain", Format::kPlain}, {"json", Format::kJson}};
  if (allow_csv) names.emplace("csv", Format::kCsv);
  cmd->add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

Json envelope(const std::string& command, Json args, Json result) {
  Json j;
  j["command"] = command;
  j["args"] = std::move(args);
  j["result"] = std::move(result);
  return j;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

// ---------------------------------------------------------------------------

struct EnumerateOptions {
  std::size_t n = 0;
  std::optional<std::size_t> k;
  Format format = Format::kPlain;
};

int run_enumerate(const EnumerateOptions& o, std::ostream& out) {
  const std::optional<Letter> k =
      o.k ? std::optional<Letter>(static_cast<Letter>(*o.k)) : std::nullopt;
  RgsStream stream(o.n, k);
  switch (o.format) {
    case Format::kPlain:
      while (stream.next()) out << format_word(stream.word()) << '\n';
      break;
    case Format::kCsv:
      out << "word\n";
      while (stream.next()) out << csv_field(format_word(stream.word())) << '\n';
      break;
    case Format::kJson: {
      Json words = Json::array();
      while (stream.next()) words.push_back(format_word(stream.word()));
      Json args{{"n", o.n}, {"k", o.k ? Json(*o.k) : Json(nullptr)}};
      emit_json(out, envelope("enumerate", std::move(args), std::move(words)));
      break;
    }
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct StatOptions {
  std::string word;
  std::string stats = "sep";
  std::optional<Letter> a;
  Format format = Format::kPlain;
};

int run_stat(const StatOptions& o, std::ostream& out) {
  const Word word = parse_word(o.word);
  std::vector<std::pair<std::string, std::string>> values;
  for (const auto& name : split_list(o.stats)) {
    if (name == "sep") {
      values.emplace_back(name, to_string(sep(word)));
    } else if (name == "srec") {
      values.emplace_back(name, to_string(srec(word)));
    } else if (name == "swrec") {
      values.emplace_back(name, to_string(swrec(word)));
    } else if (name == "sep_a") {
      if (!o.a) throw UsageError("statistic sep_a needs --a");
      values.emplace_back(name, to_string(sep_a(word, *o.a)));
    } else if (name == "records") {
      std::string text;
      for (const auto& r : records(word)) {
        if (!text.empty()) text += ' ';
        text += "(" + std::to_string(r.value) + "," + std::to_string(r.position) + ")";
      }
      values.emplace_back(name, text);
    } else {
      throw UsageError("unknown statistic '" + name + "'");
    }
  }
  switch (o.format) {
    case Format::kPlain:
      for (const auto& [name, value] : values) out << name << ": " << value << '\n';
      break;
    case Format::kCsv:
      out << "stat,value\n";
      for (const auto& [name, value] : values) {
        out << csv_field(name) << ',' << csv_field(value) << '\n';
      }
      break;
    case Format::kJson: {
      Json result = Json::object();
      for (const auto& [name, value] : values) result[name] = value;
      Json args{{"word", format_word(word)}, {"stats", o.stats}};
      if (o.a) args["a"] = *o.a;
      emit_json(out, envelope("stat", std::move(args), std::move(result)));
      break;
    }
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct TotalOptions {
  std::size_t n = 0;
  std::optional<std::size_t> k;
  std::string method = "formula";
  Format format = Format::kPlain;
};

BigInt series_route_total(std::size_t n, std::optional<std::size_t> k, bool literal) {
  auto route = literal ? qderiv_at_1_total_literal : qderiv_at_1_total;
  if (k) return route(*k, n)[n];
  BigInt total = 0;
  for (std::size_t kk = 1; kk <= n; ++kk) total += route(kk, n)[n];
  return total;
}

int run_total(const TotalOptions& o, std::ostream& out, std::ostream& err) {
  if (o.n < 1) throw UsageError("--n must be positive");
  if (o.k && (*o.k < 1 || *o.k > o.n)) throw UsageError("--k must lie in [1, n]");
  BigInt value;
  bool validated = true;
  if (o.method == "formula") {
    value = o.k ? total_sep_nk(o.n, *o.k) : total_sep_n(o.n);
  } else if (o.method == "brute") {
    if (o.n > kBruteMaxN) {
      throw UsageError("--method brute supports n <= " + std::to_string(kBruteMaxN));
    }
    value = o.k ? brute_total_nk(o.n, *o.k) : brute_total(o.n);
  } else if (o.method == "series") {
    value = series_route_total(o.n, o.k, false);
  } else if (o.method == "lemma") {
    if (o.k) {
      value = lemma_coeff(*o.k, o.n)[o.n];
    } else {
      value = 0;
      for (std::size_t kk = 1; kk <= o.n; ++kk) value += lemma_coeff(kk, o.n)[o.n];
    }
  } else if (o.method == "egf") {
    if (o.k) throw UsageError("--method egf sums over all k; omit --k");
    value = egf_coeffs(o.n).integer_total(o.n);
  } else if (o.method == "literal") {
    err << kLiteralWarning;
    validated = false;
    value = series_route_total(o.n, o.k, true);
  } else {
    throw UsageError("unknown method '" + o.method + "'");
  }

  switch (o.format) {
    case Format::kPlain:
      out << value << '\n';
      break;
    case Format::kCsv:
      out << "n,k,method,total\n"
          << o.n << ',' << (o.k ? std::to_string(*o.k) : std::string()) << ',' << o.method
          << ',' << value << '\n';
      break;
    case Format::kJson: {
      Json args{{"n", o.n}, {"k", o.k ? Json(*o.k) : Json(nullptr)}, {"method", o.method}};
      Json result{{"total", to_string(value)}, {"validated", validated}};
      emit_json(out, envelope("total", std::move(args), std::move(result)));
      break;
    }
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::size_t max_n = 10;
  std::string suites;
  Format format = Format::kPlain;
};

int run_verify(const VerifyOptions& o, std::ostream& out) {
  const VerifyReport report = verify(o.max_n, split_list(o.suites));
  if (o.format == Format::kJson) {
    Json suites = Json::array();
    for (const auto& s : report.suites) {
      suites.push_back({{"name", s.name},
                        {"passed", s.passed()},
                        {"checks", s.checks},
                        {"failures", s.failures},
                        {"first_failure", s.first_failure}});
    }
    Json args{{"max_n", o.max_n}, {"suites", split_list(o.suites)}};
    Json result{{"passed", report.passed()}, {"suites", std::move(suites)}};
    emit_json(out, envelope("verify", std::move(args), std::move(result)));
  } else {
    print_report(out, report);
  }
  return report.passed() ? kSuccess : kVerificationFailure;
}

// ---------------------------------------------------------------------------

struct PfdOptions {
  std::size_t k = 0;
  bool oracle = false;
  bool literal = false;
  Format format = Format::kPlain;
};

int run_pfd(const PfdOptions& o, std::ostream& out, std::ostream& err) {
  if (o.k < 1) throw UsageError("--k must be positive");
  if (o.oracle && o.literal) throw UsageError("--oracle and --literal are exclusive");
  if (o.literal) err << kLiteralWarning;
  const PfdCoefficients c =
      o.oracle ? pfd_oracle(o.k) : (o.literal ? pfd_coeffs_literal(o.k) : pfd_coeffs(o.k));
  switch (o.format) {
    case Format::kPlain:
      for (std::size_t m = 1; m <= c.k; ++m) {
        const auto& r = c.at(m);
        out << c.k << ' ' << m << ' ' << numerator(r.a) << ' ' << denominator(r.a) << ' '
            << numerator(r.b) << ' ' << denominator(r.b) << '\n';
      }
      break;
    case Format::kCsv:
      out << "k,m,a,b\n";
      for (std::size_t m = 1; m <= c.k; ++m) {
        out << c.k << ',' << m << ',' << to_string(c.at(m).a) << ',' << to_string(c.at(m).b)
            << '\n';
      }
      break;
    case Format::kJson: {
      Json rows = Json::array();
      for (std::size_t m = 1; m <= c.k; ++m) {
        rows.push_back({{"m", m}, {"a", to_string(c.at(m).a)}, {"b", to_string(c.at(m).b)}});
      }
      const char* source = o.oracle ? "oracle" : (o.literal ? "literal" : "closed_form");
      Json args{{"k", o.k}, {"source", source}};
      Json result{{"rows", std::move(rows)}, {"validated", !o.literal}};
      emit_json(out, envelope("pfd", std::move(args), std::move(result)));
      break;
    }
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct SeriesOptions {
  std::size_t k = 0;
  std::size_t a = 0;
  std::size_t order = 0;
  bool literal = false;
  Format format = Format::kPlain;
};

int run_series(const SeriesOptions& o, std::ostream& out, std::ostream& err) {
  if (o.a < 1 || o.a > o.k || o.k > o.order) throw UsageError("need 1 <= a <= k <= N");
  if (o.literal) err << kLiteralWarning;
  const XSeries s = o.literal ? series_Pka_literal(o.k, o.a, o.order)
                              : series_Pka(o.k, o.a, o.order);
  if (o.format == Format::kJson) {
    Json coeffs = Json::object();
    for (std::size_t n = 0; n <= s.order(); ++n) {
      if (s[n].is_zero()) continue;
      Json poly = Json::array();
      for (const auto& c : s[n].coeffs()) poly.push_back(c.str());
      coeffs[std::to_string(n)] = std::move(poly);
    }
    Json args{{"k", o.k}, {"a", o.a}, {"N", o.order}, {"literal", o.literal}};
    emit_json(out, envelope("series", std::move(args), std::move(coeffs)));
  } else {
    print_series(out, s);
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct AsymOptions {
  std::vector<std::size_t> ns{50, 100, 200, 400};
  Format format = Format::kCsv;
};

int run_asym(const AsymOptions& o, std::ostream& out) {
  for (std::size_t n : o.ns) {
    if (n < 1 || n > kAsymptoticMaxN) {
      throw UsageError("--n values must lie in [1, " + std::to_string(kAsymptoticMaxN) + "]");
    }
  }
  switch (o.format) {
    case Format::kCsv:
      write_asymptotic_csv(out, o.ns);
      break;
    case Format::kPlain: {
      const auto flags = out.flags();
      const auto precision = out.precision();
      out << std::setprecision(12);
      for (std::size_t n : o.ns) {
        const auto rep = estimate_ratio(n);
        out << "n=" << rep.n << " r=" << rep.r << " ratio=" << rep.ratio
            << " abs_err=" << rep.abs_err << " ratio_leading=" << rep.ratio_leading
            << " total_over_bell=" << rep.total_over_bell << '\n';
      }
      out.flags(flags);
      out.precision(precision);
      break;
    }
    case Format::kJson: {
      Json rows = Json::array();
      for (std::size_t n : o.ns) {
        const auto rep = estimate_ratio(n);
        rows.push_back({{"n", rep.n},
                        {"r", rep.r},
                        {"ratio", rep.ratio},
                        {"abs_err", rep.abs_err},
                        {"ratio_leading", rep.ratio_leading},
                        {"total_over_bell", rep.total_over_bell}});
      }
      emit_json(out, envelope("asym", Json{{"n", o.ns}}, std::move(rows)));
      break;
    }
  }
  return kSuccess;
}

// ---------------------------------------------------------------------------

struct GoldenOptions {
  std::string kind;
  std::optional<std::size_t> max;
};

int run_golden(const GoldenOptions& o, std::ostream& out) {
  if (o.kind == "distribution") {
    const std::size_t max_n = o.max.value_or(kDistributionMaxN);
    if (max_n > kDistributionMaxN) throw UsageError("distribution golden supports max <= 9");
    write_distribution_golden(out, max_n);
  } else if (o.kind == "totals") {
    const std::size_t max_n = o.max.value_or(kBruteMaxN);
    if (max_n > kBruteMaxN) throw UsageError("totals golden supports max <= 12");
    write_totals_golden(out, max_n);
  } else if (o.kind == "pfd") {
    write_pfd_golden(out, o.max.value_or(15));
  } else {
    throw UsageError("unknown golden kind '" + o.kind + "'");
  }
  return kSuccess;
}

}  // namespace

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Set partitions and the sum-of-elements-preceding-records statistic", "sepstat"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "sepstat 0.1.0");

  EnumerateOptions enumerate;
  auto* cmd_enumerate = app.add_subcommand("enumerate", "List canonical forms of length n");
  cmd_enumerate->add_option("--n", enumerate.n, "Word length")->required()->check(CLI::PositiveNumber);
  cmd_enumerate->add_option("--k", enumerate.k, "Exact number of blocks");
  add_format_option(cmd_enumerate, enumerate.format);

  StatOptions stat;
  auto* cmd_stat = app.add_subcommand("stat", "Record statistics of a word");
  cmd_stat->add_option("--word", stat.word, "Digits, or comma-separated letters")->required();
  cmd_stat->add_option("--stats", stat.stats,
                       "Comma list of sep, sep_a, srec, swrec, records");
  cmd_stat->add_option("--a", stat.a, "Record value for sep_a");
  add_format_option(cmd_stat, stat.format);

  TotalOptions total;
  auto* cmd_total = app.add_subcommand("total", "Total of sep over P_n or P_{n,k}");
  cmd_total->add_option("--n", total.n, "Set size")->required();
  cmd_total->add_option("--k", total.k, "Number of blocks");
  cmd_total->add_option("--method", total.method,
                        "formula, brute, series, lemma, egf or literal");
  add_format_option(cmd_total, total.format);

  VerifyOptions verify_opts;
  auto* cmd_verify = app.add_subcommand("verify", "Cross-check every route against enumeration");
  cmd_verify->add_option("--max-n", verify_opts.max_n, "Largest n for enumeration suites")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--suites", verify_opts.suites, "Comma list of suites (default all)");
  add_format_option(cmd_verify, verify_opts.format, false);

  PfdOptions pfd;
  auto* cmd_pfd = app.add_subcommand("pfd", "Partial-fraction coefficients a_{k,m}, b_{k,m}");
  cmd_pfd->add_option("--k", pfd.k, "Number of blocks")->required();
  cmd_pfd->add_flag("--oracle", pfd.oracle, "Use exact residues instead of the closed form");
  cmd_pfd->add_flag("--literal", pfd.literal, "Closed form with +k^3/12 (not validated)");
  add_format_option(cmd_pfd, pfd.format);

  SeriesOptions series;
  auto* cmd_series = app.add_subcommand("series", "Expand P_{k,a}(x, q) up to x^N");
  cmd_series->add_option("--k", series.k, "Number of blocks")->required();
  cmd_series->add_option("--a", series.a, "Record value")->required();
  cmd_series->add_option("--N", series.order, "Truncation order")->required();
  cmd_series->add_flag("--literal", series.literal, "Printed nested variant (not validated)");
  add_format_option(cmd_series, series.format, false);

  AsymOptions asym;
  auto* cmd_asym = app.add_subcommand("asym", "Asymptotic estimate against the exact total");
  cmd_asym->add_option("--n", asym.ns, "Values of n")->delimiter(',');
  add_format_option(cmd_asym, asym.format);

  GoldenOptions golden;
  auto* cmd_golden = app.add_subcommand("golden", "Write a golden reference table");
  cmd_golden->add_option("--kind", golden.kind, "distribution, totals or pfd")->required();
  cmd_golden->add_option("--max", golden.max, "Largest n (or k for pfd)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << "sepstat 0.1.0\n";
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (*cmd_enumerate) return run_enumerate(enumerate, out);
    if (*cmd_stat) return run_stat(stat, out);
    if (*cmd_total) return run_total(total, out, err);
    if (*cmd_verify) return run_verify(verify_opts, out);
    if (*cmd_pfd) return run_pfd(pfd, out, err);
    if (*cmd_series) return run_series(series, out, err);
    if (*cmd_asym) return run_asym(asym, out);
    if (*cmd_golden) return run_golden(golden, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace sepstat::cli
