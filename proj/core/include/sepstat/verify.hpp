#ifndef SEPSTAT_VERIFY_HPP
#define SEPSTAT_VERIFY_HPP

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "sepstat/exact_numbers.hpp"
#include "sepstat/formulas.hpp"
#include "sepstat/gf_series.hpp"

namespace sepstat {

// The formula routes checked by verify(). Defaults are the library
// implementations; tests swap in deliberately broken ones.
struct FormulaSet {
  std::function<BigInt(std::size_t, std::size_t)> total_sep_nk = sepstat::total_sep_nk;
  std::function<BigInt(std::size_t)> total_sep_n = sepstat::total_sep_n;
  std::function<std::vector<BigInt>(std::size_t, std::size_t)> lemma_coeff =
      sepstat::lemma_coeff;
  std::function<std::vector<BigInt>(std::size_t, std::size_t)> qderiv_total =
      sepstat::qderiv_at_1_total;
  std::function<XSeries(std::size_t, std::size_t, std::size_t)> series_Pka =
      sepstat::series_Pka;
  std::function<PfdCoefficients(std::size_t)> pfd_coeffs = sepstat::pfd_coeffs;
  std::function<EgfSeries(std::size_t)> egf_coeffs = sepstat::egf_coeffs;
};

// Suite names, in execution order:
//   counts roundtrip stats nk total distribution routes pfd egf integrality rowsum
// Enumeration-based suites run for n <= max_n (capped at 12, or 9 for
// roundtrip/stats/distribution); formula-only suites use fixed ranges
// (pfd k <= 15, egf n <= 30, integrality n <= 200, rowsum n <= 40).
const std::vector<std::string>& verify_suite_names();

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

struct VerifyReport {
  std::size_t max_n = 0;
  std::vector<SuiteResult> suites;

  bool passed() const;
};

// Throws std::invalid_argument for an unknown suite name or max_n == 0.
// An empty `suites` selects every suite.
VerifyReport verify(std::size_t max_n, const std::vector<std::string>& suites = {},
                    const FormulaSet& formulas = {});

// `suite <name>: PASS (<checks> checks)` or
// `suite <name>: FAIL (<failures>/<checks>) first: <message>` per suite,
// then `result: PASS` or `result: FAIL`.
void print_report(std::ostream& os, const VerifyReport& report);

}  // namespace sepstat

#endif  // SEPSTAT_VERIFY_HPP
