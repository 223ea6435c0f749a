#include "sepstat/asymptotics.hpp"

#include <boost/math/special_functions/lambert_w.hpp>
#include <cmath>
#include <sstream>
#include <vector>

#include "gtest/gtest.h"

namespace sepstat {
namespace {

double RelativeResidual(std::size_t n) {
  const double r = solve_r(n);
  const double target = static_cast<double>(n) + 1.0;
  return std::abs(r * std::exp(r) - target) / target;
}

TEST(SolveRTest, ResidualWithinTolerance) {
  for (std::size_t n : {1u, 2u, 10u, 100u, 1000u, 100000u}) {
    EXPECT_LE(RelativeResidual(n), 1e-12) << "n=" << n;
  }
  EXPECT_THROW(solve_r(0), std::invalid_argument);
}

TEST(SolveRTest, AgreesWithLambertW) {
  for (std::size_t n = 1; n <= 1000; n += 37) {
    const double w = boost::math::lambert_w0(static_cast<double>(n) + 1.0);
    EXPECT_NEAR(solve_r(n), w, 1e-11 * w) << "n=" << n;
  }
}

TEST(SolveRTest, IncreasingInN) {
  double prev = 0.0;
  for (std::size_t n = 1; n <= 1000; ++n) {
    const double r = solve_r(n);
    ASSERT_GT(r, prev);
    prev = r;
  }
}

TEST(EstimateRatioTest, SmallExactQuotient) {
  const auto rep = estimate_ratio(4);
  EXPECT_DOUBLE_EQ(rep.total_over_bell, 50.0 / 15.0);
  EXPECT_EQ(rep.n, 4u);
  EXPECT_DOUBLE_EQ(rep.abs_err, std::abs(rep.ratio - 1.0));
  EXPECT_THROW(estimate_ratio(0), std::out_of_range);
  EXPECT_THROW(estimate_ratio(kAsymptoticMaxN + 1), std::out_of_range);
}

// The exact mean of sep grows like n^3 / (3 r^3); the ratio against the
// bare (n/r)^3 creeps up toward 1/3 rather than 1.
TEST(EstimateRatioTest, ObservedLimitIsOneThird) {
  std::vector<double> leading;
  for (std::size_t n : {50u, 100u, 200u, 400u, 1000u}) {
    const auto rep = estimate_ratio(n);
    EXPECT_GT(rep.ratio_leading, 0.2);
    EXPECT_LT(rep.ratio_leading, 1.0 / 3.0 + 0.02);
    leading.push_back(rep.ratio);
  }
  for (std::size_t i = 1; i < leading.size(); ++i) EXPECT_GT(leading[i], leading[i - 1]);
  EXPECT_NEAR(leading.back(), 1.0 / 3.0, 0.03);
}

TEST(BellShiftTest, ErrorShrinksWithN) {
  for (std::size_t h = 1; h <= 3; ++h) {
    double prev = bell_shift_error(50, h);
    for (std::size_t n : {100u, 200u, 400u, 1000u}) {
      const double e = bell_shift_error(n, h);
      EXPECT_LT(e, prev) << "n=" << n << " h=" << h;
      prev = e;
    }
  }
  EXPECT_THROW(bell_shift_error(10, 0), std::out_of_range);
  EXPECT_THROW(bell_shift_error(10, 4), std::out_of_range);
}

TEST(AsymptoticCsvTest, Format) {
  std::ostringstream os;
  const std::vector<std::size_t> ns{50, 100};
  write_asymptotic_csv(os, ns);
  std::istringstream in(os.str());
  std::string line;
  ASSERT_TRUE(std::getline(in, line));
  EXPECT_EQ(line, "n,r,ratio,abs_err");
  ASSERT_TRUE(std::getline(in, line));
  EXPECT_EQ(line.rfind("50,2.87557350008,", 0), 0u) << line;
  ASSERT_TRUE(std::getline(in, line));
  EXPECT_EQ(line.rfind("100,", 0), 0u);
  EXPECT_FALSE(std::getline(in, line));
}

}  // namespace
}  // namespace sepstat
