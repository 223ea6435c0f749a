#include "sepstat/verify.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "sepstat/brute_oracle.hpp"
#include "sepstat/setpart.hpp"
#include "sepstat/stats.hpp"

namespace sepstat {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  template <typename Describe>
  void check(bool ok, Describe describe) {
    ++result_.checks;
    if (ok) return;
    if (result_.failures++ == 0) result_.first_failure = describe();
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

template <typename... Parts>
std::string cat(const Parts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

constexpr std::size_t kPfdMaxK = 15;
constexpr std::size_t kEgfMaxN = 30;
constexpr std::size_t kIntegralityMaxN = 200;
constexpr std::size_t kRowSumMaxN = 40;

SuiteResult run_counts(std::size_t max_n) {
  Suite s("counts");
  for (std::size_t n = 1; n <= std::min(max_n, kBruteMaxN); ++n) {
    std::vector<std::uint64_t> by_k(n + 1, 0);
    std::uint64_t all = 0;
    RgsStream stream(n);
    while (stream.next()) {
      ++all;
      ++by_k[stream.blocks()];
    }
    s.check(all == bell(n), [&] { return cat("|P_", n, "| = ", all, " != B_n"); });
    for (std::size_t k = 1; k <= n; ++k) {
      std::uint64_t count = 0;
      RgsStream exact(n, static_cast<Letter>(k));
      while (exact.next()) ++count;
      s.check(count == stirling2(n, k) && by_k[k] == count,
              [&] { return cat("|P_{", n, ",", k, "}| = ", count, " != S(n,k)"); });
    }
  }
  return s.take();
}

SuiteResult run_roundtrip(std::size_t max_n) {
  Suite s("roundtrip");
  for (std::size_t n = 1; n <= std::min(max_n, kDistributionMaxN); ++n) {
    RgsStream stream(n);
    while (stream.next()) {
      const CanonicalForm cf = validate(stream.word());
      s.check(from_blocks(to_blocks(cf)) == cf,
              [&] { return cat("round trip failed for ", format_word(cf.word())); });
    }
  }
  return s.take();
}

SuiteResult run_stats(std::size_t max_n) {
  Suite s("stats");
  for (std::size_t n = 1; n <= std::min(max_n, kDistributionMaxN); ++n) {
    RgsStream stream(n);
    while (stream.next()) {
      const auto w = stream.word();
      s.check(sep_value(w) == sep_dual_value(w),
              [&] { return cat("sep routes differ on ", format_word(w)); });
      const RecordList recs = records(w);
      bool first_occurrences = recs.size() == stream.blocks();
      for (std::size_t i = 0; first_occurrences && i < recs.size(); ++i) {
        first_occurrences = recs[i].value == i + 1 &&
                            static_cast<std::size_t>(std::find(w.begin(), w.end(), i + 1) -
                                                     w.begin()) +
                                    1 ==
                                recs[i].position;
      }
      s.check(first_occurrences,
              [&] { return cat("records are not first occurrences in ", format_word(w)); });
    }
  }
  return s.take();
}

SuiteResult run_nk(std::size_t max_n, const FormulaSet& f) {
  Suite s("nk");
  for (std::size_t n = 1; n <= std::min(max_n, kBruteMaxN); ++n) {
    const auto brute = brute_totals_by_k(n);
    for (std::size_t k = 1; k <= n; ++k) {
      const BigInt formula = f.total_sep_nk(n, k);
      s.check(formula == brute[k], [&] {
        return cat("total_sep_nk(", n, ",", k, ") = ", formula, ", enumeration gives ",
                   brute[k]);
      });
    }
  }
  return s.take();
}

SuiteResult run_total(std::size_t max_n, const FormulaSet& f) {
  Suite s("total");
  for (std::size_t n = 1; n <= std::min(max_n, kBruteMaxN); ++n) {
    const BigInt brute = brute_total(n);
    const BigInt formula = f.total_sep_n(n);
    s.check(formula == brute, [&] {
      return cat("total_sep_n(", n, ") = ", formula, ", enumeration gives ", brute);
    });
  }
  return s.take();
}

SuiteResult run_distribution(std::size_t max_n, const FormulaSet& f) {
  Suite s("distribution");
  const std::size_t top = std::min(max_n, kDistributionMaxN);
  for (std::size_t k = 1; k <= top; ++k) {
    for (std::size_t a = 1; a <= k; ++a) {
      const XSeries series = f.series_Pka(k, a, top);
      for (std::size_t n = k; n <= top; ++n) {
        const auto dist = brute_distribution_a(n, k, a);
        std::vector<BigInt> expected;
        for (const auto& [value, count] : dist.counts) {
          if (expected.size() <= value) expected.resize(value + 1, BigInt(0));
          expected[value] = count;
        }
        s.check(series[n] == QPolynomial(expected), [&] {
          return cat("[x^", n, "] P_{", k, ",", a, "} = ", series[n].to_string(),
                     ", enumeration gives ", QPolynomial(expected).to_string());
        });
      }
    }
  }
  return s.take();
}

SuiteResult run_routes(std::size_t max_n, const FormulaSet& f) {
  Suite s("routes");
  const std::size_t top = std::min(max_n, kBruteMaxN);
  for (std::size_t k = 1; k <= top; ++k) {
    const auto lemma = f.lemma_coeff(k, top);
    const auto series = f.qderiv_total(k, top);
    for (std::size_t n = k; n <= top; ++n) {
      const BigInt closed = f.total_sep_nk(n, k);
      s.check(lemma[n] == closed && series[n] == closed, [&] {
        return cat("(n,k)=(", n, ",", k, "): lemma ", lemma[n], ", series ", series[n],
                   ", closed form ", closed);
      });
    }
  }
  return s.take();
}

SuiteResult run_pfd(const FormulaSet& f) {
  Suite s("pfd");
  for (std::size_t k = 1; k <= kPfdMaxK; ++k) {
    const auto closed = f.pfd_coeffs(k);
    const auto oracle = pfd_oracle(k);
    for (std::size_t m = 1; m <= k; ++m) {
      s.check(closed.at(m) == oracle.at(m), [&] {
        return cat("k=", k, " m=", m, ": closed (", to_string(closed.at(m).a), ", ",
                   to_string(closed.at(m).b), "), residues (", to_string(oracle.at(m).a),
                   ", ", to_string(oracle.at(m).b), ")");
      });
    }
    for (std::size_t j = 0; j <= 2 * k; ++j) {
      const BigRational y(BigInt(2 * j + 1), BigInt(2));
      s.check(pfd_evaluate(closed, y) == pfd_function_value(k, y),
              [&] { return cat("k=", k, ": reconstruction differs at y=", to_string(y)); });
    }
  }
  return s.take();
}

SuiteResult run_egf(const FormulaSet& f) {
  Suite s("egf");
  const EgfSeries egf = f.egf_coeffs(kEgfMaxN);
  s.check(egf.coeffs[0] == 0, [&] { return cat("constant term ", to_string(egf.coeffs[0])); });
  for (std::size_t n = 1; n <= kEgfMaxN; ++n) {
    const BigRational scaled = egf.coeffs[n] * factorial(n);
    const BigInt expected = f.total_sep_n(n);
    s.check(scaled == BigRational(expected), [&] {
      return cat("n! e_n = ", to_string(scaled), " at n=", n, ", closed form ", expected);
    });
  }
  for (const auto& id : bell_shift_identities_check(kEgfMaxN)) {
    s.check(id.holds(), [&] { return cat(id.name, " fails at n=", *id.first_failure); });
  }
  return s.take();
}

SuiteResult run_integrality(const FormulaSet& f) {
  Suite s("integrality");
  for (std::size_t n = 0; n <= kIntegralityMaxN; ++n) {
    const BigInt twelve = total_sep_n_times_12(n);
    s.check(twelve % 12 == 0, [&] { return cat("not divisible by 12 at n=", n); });
    if (n >= 1) {
      s.check(f.total_sep_n(n) * 12 == twelve,
              [&] { return cat("total_sep_n disagrees with integer form at n=", n); });
    }
  }
  return s.take();
}

SuiteResult run_rowsum(const FormulaSet& f) {
  Suite s("rowsum");
  for (std::size_t n = 1; n <= kRowSumMaxN; ++n) {
    BigInt sum = 0;
    for (std::size_t k = 1; k <= n; ++k) sum += f.total_sep_nk(n, k);
    const BigInt total = f.total_sep_n(n);
    s.check(sum == total,
            [&] { return cat("n=", n, ": row sum ", sum, " != total ", total); });
  }
  return s.take();
}

SuiteResult run_suite(const std::string& name, std::size_t max_n, const FormulaSet& f) {
  if (name == "counts") return run_counts(max_n);
  if (name == "roundtrip") return run_roundtrip(max_n);
  if (name == "stats") return run_stats(max_n);
  if (name == "nk") return run_nk(max_n, f);
  if (name == "total") return run_total(max_n, f);
  if (name == "distribution") return run_distribution(max_n, f);
  if (name == "routes") return run_routes(max_n, f);
  if (name == "pfd") return run_pfd(f);
  if (name == "egf") return run_egf(f);
  if (name == "integrality") return run_integrality(f);
  return run_rowsum(f);
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{
      "counts", "roundtrip", "stats", "nk",  "total",       "distribution",
      "routes", "pfd",       "egf",   "integrality", "rowsum"};
  return names;
}

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& r) { return r.passed(); });
}

VerifyReport verify(std::size_t max_n, const std::vector<std::string>& suites,
                    const FormulaSet& formulas) {
  if (max_n == 0) throw std::invalid_argument("verify: max_n must be positive");
  const auto& known = verify_suite_names();
  for (const auto& name : suites) {
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      throw std::invalid_argument("unknown verification suite '" + name + "'");
    }
  }
  auto selected = [&](const std::string& name) {
    return suites.empty() || std::find(suites.begin(), suites.end(), name) != suites.end();
  };

  VerifyReport report;
  report.max_n = max_n;
  for (const auto& name : known) {
    if (!selected(name)) continue;
    try {
      report.suites.push_back(run_suite(name, max_n, formulas));
    } catch (const std::exception& e) {
      report.suites.push_back({name, 1, 1, std::string("exception: ") + e.what()});
    }
  }
  return report;
}

void print_report(std::ostream& os, const VerifyReport& report) {
  for (const auto& r : report.suites) {
    os << "suite " << r.name << ": ";
    if (r.passed()) {
      os << "PASS (" << r.checks << " checks)\n";
    } else {
      os << "FAIL (" << r.failures << "/" << r.checks << ") first: " << r.first_failure << '\n';
    }
  }
  os << "result: " << (report.passed() ? "PASS" : "FAIL") << '\n';
}

}  // namespace sepstat
