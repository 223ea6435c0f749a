#include "sepstat/gf_series.hpp"

#include <map>
#include <sstream>
#include <tuple>

#include "golden.hpp"
#include "gtest/gtest.h"
#include "sepstat/brute_oracle.hpp"
#include "sepstat/setpart.hpp"

namespace sepstat {
namespace {

using testing_support::ReadGolden;

QPolynomial Poly(std::initializer_list<long> coeffs) {
  std::vector<BigInt> v;
  for (long c : coeffs) v.emplace_back(c);
  return QPolynomial(std::move(v));
}

XSeries ConstantOne(std::size_t order) { return XSeries::monomial(order, BigInt(1), 0); }

TEST(QPolynomialTest, Arithmetic) {
  const QPolynomial p = Poly({1, 2});     // 1 + 2q
  const QPolynomial r = Poly({0, 1, 1});  // q + q^2
  EXPECT_EQ(p * r, Poly({0, 1, 3, 2}));
  EXPECT_EQ(p + r, Poly({1, 3, 1}));
  EXPECT_EQ(Poly({1, 0, 0}), Poly({1}));
  EXPECT_TRUE(Poly({0, 0}).is_zero());
  EXPECT_EQ(Poly({0, 0}).degree(), -1);
  EXPECT_EQ(QPolynomial::power_range(1, 3), Poly({0, 1, 1, 1}));
  EXPECT_EQ(QPolynomial::monomial(5, 2), Poly({0, 0, 5}));
  EXPECT_EQ(Poly({3, 0, 2}).at_one(), 5);
  EXPECT_EQ(Poly({3, 0, 2}).derivative_at_one(), 4);
  EXPECT_EQ(Poly({3, 0, 2}).to_string(), "3*q^0 + 0*q^1 + 2*q^2");
  EXPECT_EQ(QPolynomial().to_string(), "0");
  QPolynomial cancel = Poly({1, 1});
  cancel += Poly({0, -1});
  EXPECT_EQ(cancel, Poly({1}));
}

TEST(XSeriesTest, GeometricExamples) {
  const auto inv = series_geom_inverse(XSeries::monomial(3, BigInt(1), 1));
  for (std::size_t n = 0; n <= 3; ++n) EXPECT_EQ(inv[n], Poly({1}));

  const auto q_geom = series_geom_inverse(XSeries::monomial(2, Poly({0, 1}), 1));
  EXPECT_EQ(q_geom[0], Poly({1}));
  EXPECT_EQ(q_geom[1], Poly({0, 1}));
  EXPECT_EQ(q_geom[2], Poly({0, 0, 1}));
}

TEST(XSeriesTest, GeometricByWordWeights) {
  // Words of length 2 over {1, 2} weighted by q^{letter sum}.
  std::map<std::size_t, long> weights;
  for (int a = 1; a <= 2; ++a) {
    for (int b = 1; b <= 2; ++b) ++weights[a + b];
  }
  std::vector<BigInt> expected(5, BigInt(0));
  for (auto [s, c] : weights) expected[s] = c;

  const auto s = series_geom_inverse(XSeries::monomial(4, Poly({0, 1, 1}), 1));
  EXPECT_EQ(s[2], QPolynomial(expected));
  EXPECT_EQ(s[2], Poly({0, 0, 1, 2, 1}));
}

TEST(XSeriesTest, DivOneMinusMatchesMultiplicationByInverse) {
  XSeries s(6);
  s[1] = Poly({2, 1});
  s[3] = Poly({0, 0, 4});
  XSeries f(6);
  f[1] = Poly({1, 1});
  f[2] = Poly({0, 3});
  EXPECT_EQ(series_div_one_minus(s, f), series_mul(s, series_geom_inverse(f)));
  // (1 - f) * (1/(1 - f)) == 1
  XSeries one_minus_f = ConstantOne(6);
  for (std::size_t n = 1; n <= 6; ++n) {
    QPolynomial neg = f[n];
    neg *= BigInt(-1);
    one_minus_f[n] = neg;
  }
  EXPECT_EQ(series_mul(one_minus_f, series_geom_inverse(f)), ConstantOne(6));
}

TEST(XSeriesTest, RejectsNonzeroConstantAndMismatchedOrders) {
  EXPECT_THROW(series_geom_inverse(ConstantOne(3)), std::invalid_argument);
  EXPECT_THROW(series_add(ConstantOne(3), ConstantOne(4)), std::invalid_argument);
  EXPECT_THROW(series_mul(ConstantOne(3), ConstantOne(4)), std::invalid_argument);
}

TEST(SeriesPkaTest, Examples) {
  const auto p11 = series_Pka(1, 1, 3);
  EXPECT_TRUE(p11[0].is_zero());
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(p11[n], Poly({1}));

  // Enumeration of P_{3,2}: sep_2(112) = 2, sep_2(121) = sep_2(122) = 1.
  EXPECT_EQ(series_Pka(2, 2, 3)[3], Poly({0, 2, 1}));
  EXPECT_EQ(series_Pka(2, 2, 2)[2], Poly({0, 1}));

  EXPECT_THROW(series_Pka(3, 4, 5), std::out_of_range);
  EXPECT_THROW(series_Pka(6, 1, 5), std::out_of_range);
  EXPECT_THROW(series_Pka(2, 0, 5), std::out_of_range);
}

TEST(SeriesPkaTest, MatchesFrozenDistributionGolden) {
  std::istringstream golden(ReadGolden("sep_a_distribution.txt"));
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::vector<BigInt>> expected;
  std::size_t n, k, a, s;
  std::string count;
  while (golden >> n >> k >> a >> s >> count) {
    auto& v = expected[{n, k, a}];
    if (v.size() <= s) v.resize(s + 1, BigInt(0));
    v[s] = BigInt(count);
  }
  ASSERT_FALSE(expected.empty());
  for (std::size_t kk = 1; kk <= kDistributionMaxN; ++kk) {
    for (std::size_t aa = 1; aa <= kk; ++aa) {
      const auto series = series_Pka(kk, aa, kDistributionMaxN);
      for (std::size_t nn = kk; nn <= kDistributionMaxN; ++nn) {
        ASSERT_EQ(series[nn], QPolynomial(expected.at({nn, kk, aa})))
            << "n=" << nn << " k=" << kk << " a=" << aa;
      }
    }
  }
}

TEST(SeriesPkaTest, AtQEqualOneGivesStirling) {
  for (std::size_t k = 1; k <= 10; ++k) {
    for (std::size_t a = 1; a <= k; ++a) {
      const auto series = series_Pka(k, a, 14);
      for (std::size_t n = 0; n <= 14; ++n) {
        ASSERT_EQ(series[n].at_one(), stirling2(n, k)) << n << " " << k << " " << a;
      }
    }
  }
}

TEST(SeriesPkaTest, QDegreeBound) {
  for (std::size_t k = 1; k <= 8; ++k) {
    for (std::size_t a = 1; a <= k; ++a) {
      const auto series = series_Pka(k, a, 10);
      for (std::size_t n = 1; n <= 10; ++n) {
        ASSERT_LE(series[n].degree(), static_cast<long>(n * (n - 1) / 2));
      }
    }
  }
}

TEST(SeriesPkaTest, LiteralVariantDisagreesWithEnumeration) {
  // For a = 1 the printed form collapses to x^k.
  EXPECT_TRUE(series_Pka_literal(2, 1, 4)[3].is_zero());
  EXPECT_EQ(series_Pka(2, 1, 4)[3].at_one(), 3);

  bool any_difference = false;
  for (std::size_t k = 2; k <= 5; ++k) {
    for (std::size_t a = 1; a <= k; ++a) {
      any_difference = any_difference || series_Pka_literal(k, a, 7) != series_Pka(k, a, 7);
    }
  }
  EXPECT_TRUE(any_difference);
  EXPECT_NE(qderiv_at_1_total_literal(3, 6), qderiv_at_1_total(3, 6));
}

TEST(QDerivTest, Examples) {
  for (auto v : qderiv_at_1_total(1, 6)) EXPECT_EQ(v, 0);
  const auto k2 = qderiv_at_1_total(2, 4);
  EXPECT_EQ(k2[3], 4);
  EXPECT_EQ(k2[4], 11);
  EXPECT_EQ(qderiv_at_1_total(3, 4)[4], 29);
  EXPECT_THROW(qderiv_at_1_total(5, 4), std::out_of_range);
}

TEST(QDerivTest, MatchesEnumerationTotals) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto brute = brute_totals_by_k(n);
    for (std::size_t k = 1; k <= n; ++k) {
      ASSERT_EQ(qderiv_at_1_total(k, n)[n], brute[k]) << n << "," << k;
    }
  }
}

TEST(SeriesPrinterTest, DeterministicLines) {
  std::ostringstream os;
  print_series(os, series_Pka(2, 2, 3));
  EXPECT_EQ(os.str(), "2: 0*q^0 + 1*q^1\n3: 0*q^0 + 2*q^1 + 1*q^2\n");
}

}  // namespace
}  // namespace sepstat
