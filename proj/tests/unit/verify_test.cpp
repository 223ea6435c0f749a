#include "sepstat/verify.hpp"

#include <sstream>

#include "gtest/gtest.h"

namespace sepstat {
namespace {

const SuiteResult& Find(const VerifyReport& report, const std::string& name) {
  for (const auto& s : report.suites) {
    if (s.name == name) return s;
  }
  throw std::runtime_error("suite not run: " + name);
}

TEST(VerifyTest, AllSuitesPass) {
  const auto report = verify(8);
  EXPECT_EQ(report.suites.size(), verify_suite_names().size());
  for (const auto& s : report.suites) {
    EXPECT_TRUE(s.passed()) << s.name << ": " << s.first_failure;
    EXPECT_GT(s.checks, 0u) << s.name;
  }
  EXPECT_TRUE(report.passed());
}

TEST(VerifyTest, SuiteSelectionAndErrors) {
  const auto report = verify(5, {"pfd", "nk"});
  ASSERT_EQ(report.suites.size(), 2u);
  // Execution order is fixed, not the order requested.
  EXPECT_EQ(report.suites[0].name, "nk");
  EXPECT_EQ(report.suites[1].name, "pfd");
  EXPECT_THROW(verify(5, {"nope"}), std::invalid_argument);
  EXPECT_THROW(verify(0), std::invalid_argument);
}

TEST(VerifyTest, PrintedReportShape) {
  std::ostringstream os;
  print_report(os, verify(4, {"counts"}));
  EXPECT_EQ(os.str(), "suite counts: PASS (14 checks)\nresult: PASS\n");
}

TEST(VerifyTest, BrokenCellFormulaIsCaught) {
  FormulaSet broken;
  broken.total_sep_nk = [](std::size_t n, std::size_t k) {
    BigInt v = total_sep_nk(n, k);
    if (n == 5 && k == 3) v += 1;
    return v;
  };
  const auto report = verify(8, {"nk", "rowsum"}, broken);
  EXPECT_FALSE(report.passed());
  EXPECT_FALSE(Find(report, "nk").passed());
  EXPECT_FALSE(Find(report, "rowsum").passed());
  EXPECT_NE(Find(report, "nk").first_failure.find("5"), std::string::npos);
}

TEST(VerifyTest, SignFlipsAreCaught) {
  FormulaSet literal_pfd;
  literal_pfd.pfd_coeffs = pfd_coeffs_literal;
  EXPECT_FALSE(verify(6, {"pfd"}, literal_pfd).passed());

  FormulaSet literal_series;
  literal_series.series_Pka = series_Pka_literal;
  EXPECT_FALSE(verify(6, {"distribution"}, literal_series).passed());

  FormulaSet negated_total;
  negated_total.total_sep_n = [](std::size_t n) { return BigInt(-total_sep_n(n)); };
  const auto report = verify(6, {"total", "egf"}, negated_total);
  EXPECT_FALSE(Find(report, "total").passed());
  EXPECT_FALSE(Find(report, "egf").passed());
}

TEST(VerifyTest, ThrowingFormulaCountsAsFailure) {
  FormulaSet throwing;
  throwing.lemma_coeff = [](std::size_t, std::size_t) -> std::vector<BigInt> {
    throw std::logic_error("boom");
  };
  const auto report = verify(5, {"routes"}, throwing);
  ASSERT_EQ(report.suites.size(), 1u);
  EXPECT_FALSE(report.passed());
  EXPECT_NE(report.suites[0].first_failure.find("boom"), std::string::npos);
}

}  // namespace
}  // namespace sepstat
