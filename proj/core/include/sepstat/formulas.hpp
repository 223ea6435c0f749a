#ifndef SEPSTAT_FORMULAS_HPP
#define SEPSTAT_FORMULAS_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sepstat/exact_numbers.hpp"

namespace sepstat {

// ---------------------------------------------------------------------------
// Closed-form totals of sep.

// sum_{a=1}^{k} a(a-1)/2: the sep contribution of the k record letters alone.
BigInt record_triangle_sum(std::size_t k);

// Total of sep over P_{n,k}:
//   S(n,k) sum_{a=1}^{k} a(a-1)/2
//     + sum_{i=1}^{k-1} (k-i) i (i+1)/2 * sum_{j=1}^{n-k} S(n-j,k) i^{j-1}.
// Requires 1 <= k <= n (std::out_of_range).
BigInt total_sep_nk(std::size_t n, std::size_t k);

// Total of sep over P_n:
//   B_{n+3}/3 - B_{n+2}/4 - (n/2 + 13/12) B_{n+1} - (1/12 + n/2) B_n.
// Evaluated in rationals; throws std::logic_error if the result is not an
// integer. Requires n >= 1.
BigInt total_sep_n(std::size_t n);

// 4B_{n+3} - 3B_{n+2} - (6n+13)B_{n+1} - (6n+1)B_n, i.e. 12 * total_sep_n(n)
// computed in integers only.
BigInt total_sep_n_times_12(std::size_t n);

// Power-series expansion of
//   x^k/prod(1-ix) * sum_a a(a-1)/2
//     + x^{k+1}/prod(1-ix) * sum_{i=1}^{k-1} (k-i)i(i+1) / (2(1-ix))
// up to x^order. Element n is the total of sep over P_{n,k}.
// Requires 1 <= k <= order.
std::vector<BigInt> lemma_coeff(std::size_t k, std::size_t order);

// ---------------------------------------------------------------------------
// Partial fractions of F_k(y) = d/dq P_k(1/y, q) at q = 1,
//   F_k(y) = (sum_a a(a-1)/2 + sum_i (k-i)i(i+1)/(2(y-i))) prod_i 1/(y-i)
//          = sum_m a_{k,m}/(y-m)^2 + b_{k,m}/(y-m).

struct PfdRow {
  BigRational a;  // coefficient of 1/(y-m)^2
  BigRational b;  // coefficient of 1/(y-m)

  friend bool operator==(const PfdRow&, const PfdRow&) = default;
};

struct PfdCoefficients {
  std::size_t k = 0;
  std::vector<PfdRow> rows;  // rows[m-1] for m = 1..k

  const PfdRow& at(std::size_t m) const { return rows.at(m - 1); }
  friend bool operator==(const PfdCoefficients&, const PfdCoefficients&) = default;
};

// Closed form with the -k^3/12 term in b_{k,m}.
PfdCoefficients pfd_coeffs(std::size_t k);

// The uncorrected closed form, with +k^3/12. Disagrees with the residues.
// Wrong for every k; exposed only for comparison.
PfdCoefficients pfd_coeffs_literal(std::size_t k);

// Residues computed from the polynomial form F_k = Num(y)/prod(y-i)^2: with
// G_m(y) = (y-m)^2 F_k(y) = Num(y)/prod_{i!=m}(y-i)^2, a_{k,m} = G_m(m) and
// b_{k,m} = G_m'(m) by the quotient rule on exact polynomial values.
PfdCoefficients pfd_oracle(std::size_t k);

// F_k(y) from its definition; y must not be a pole (std::domain_error).
BigRational pfd_function_value(std::size_t k, const BigRational& y);

// sum_m a/(y-m)^2 + b/(y-m); y must not be a pole.
BigRational pfd_evaluate(const PfdCoefficients& c, const BigRational& y);

// Golden-file line format `k m a_num a_den b_num b_den`, increasing (k, m).
void write_pfd_golden(std::ostream& os, std::size_t max_k);

// ---------------------------------------------------------------------------
// Exponential generating functions, as truncated series with rational
// coefficients (element n multiplies x^n).

using RationalSeries = std::vector<BigRational>;

RationalSeries rational_series_mul(const RationalSeries& f, const RationalSeries& g);

// e^{cx} and x e^{cx} truncated at x^order.
RationalSeries exp_linear_series(long c, std::size_t order);
RationalSeries x_exp_linear_series(long c, std::size_t order);

// e^{e^x - 1} with coefficients B_n/n! taken from the Bell numbers.
RationalSeries bell_egf(std::size_t order);

// e^{e^x - 1} by series exponentiation (h' = f' h), independent of Bell
// tables.
RationalSeries bell_egf_by_exponentiation(std::size_t order);

struct EgfSeries {
  RationalSeries coeffs;

  std::size_t order() const { return coeffs.size() - 1; }
  // n! * e_n; throws std::logic_error if it is not an integer.
  BigInt integer_total(std::size_t n) const;
};

// e^{e^x-1} (e^{3x}/3 - x e^{2x}/2 + 3e^{2x}/4 - x e^x - e^x - 1/12).
EgfSeries egf_coeffs(std::size_t order);

struct IdentityCheck {
  std::string name;
  std::size_t checked_up_to = 0;
  std::optional<std::size_t> first_failure;  // smallest n that fails

  bool holds() const { return !first_failure; }
};

// Coefficient identities for E = e^{e^x - 1}, checked for 0 <= n <= order
// in the normalization n! [x^n]:
//   e^x E -> B_{n+1};  e^{2x} E -> B_{n+2} - B_{n+1};
//   e^{3x} E -> B_{n+3} - 3B_{n+2} + 2B_{n+1};
//   x e^x E -> n B_n;  x e^{2x} E -> n B_{n+1} - n B_n.
std::vector<IdentityCheck> bell_shift_identities_check(std::size_t order);

}  // namespace sepstat

#endif  // SEPSTAT_FORMULAS_HPP
