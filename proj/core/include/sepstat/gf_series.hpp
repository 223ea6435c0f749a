#ifndef SEPSTAT_GF_SERIES_HPP
#define SEPSTAT_GF_SERIES_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "sepstat/exact_numbers.hpp"

namespace sepstat {

// Polynomial in q with integer coefficients; coeffs()[i] multiplies q^i.
// Trailing zero coefficients are always trimmed, so the zero polynomial has
// an empty coefficient vector.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigInt> coeffs);
  QPolynomial(BigInt constant);  // NOLINT(google-explicit-constructor)

  static QPolynomial monomial(BigInt c, std::size_t power);
  // q^lo + q^(lo+1) + ... + q^hi.
  static QPolynomial power_range(std::size_t lo, std::size_t hi);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt coeff(std::size_t power) const;

  // Value at q = 1 and first derivative at q = 1.
  BigInt at_one() const;
  BigInt derivative_at_one() const;

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator*=(const BigInt& scalar);
  friend QPolynomial operator+(QPolynomial lhs, const QPolynomial& rhs) { return lhs += rhs; }
  friend QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs);
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  // Dense rendering `c0*q^0 + c1*q^1 + ...`; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Power series in x truncated after x^order; each coefficient is a
// QPolynomial. Operations never look at terms beyond the truncation order.
class XSeries {
 public:
  explicit XSeries(std::size_t order);
  XSeries(std::size_t order, std::vector<QPolynomial> coeffs);

  // c * x^power, zero if power > order.
  static XSeries monomial(std::size_t order, QPolynomial c, std::size_t power);

  std::size_t order() const { return coeffs_.size() - 1; }
  const QPolynomial& operator[](std::size_t n) const { return coeffs_.at(n); }
  QPolynomial& operator[](std::size_t n) { return coeffs_.at(n); }
  const std::vector<QPolynomial>& coeffs() const { return coeffs_; }

  friend bool operator==(const XSeries&, const XSeries&) = default;

 private:
  std::vector<QPolynomial> coeffs_;
};

// Both operands must share a truncation order (std::invalid_argument).
XSeries series_add(const XSeries& f, const XSeries& g);
XSeries series_mul(const XSeries& f, const XSeries& g);

// 1 / (1 - f). Requires f's constant term to be the zero polynomial.
XSeries series_geom_inverse(const XSeries& f);

// s / (1 - f), by the recurrence h_n = s_n + sum_{j>=1} f_j h_{n-j}.
// Requires f's constant term to be the zero polynomial.
XSeries series_div_one_minus(const XSeries& s, const XSeries& f);

// Generating function of P_{n,k} by sep_a, truncated at x^order:
//   x^k q^{a(a-1)/2} prod_{j=1}^{a-1} 1/(1 - x(q + ... + q^j))
//                    prod_{i=a}^{k}   1/(1 - i x).
// The x^n q^s coefficient counts forms in P_{n,k} with sep_a = s.
// Requires 1 <= a <= k <= order (std::out_of_range).
XSeries series_Pka(std::size_t k, std::size_t a, std::size_t order);

// The printed variant with the i-product nested inside the j-product and
// 1/(1 - a x) in place of 1/(1 - i x). Does not match enumeration; kept for
// demonstrating the discrepancy.
XSeries series_Pka_literal(std::size_t k, std::size_t a, std::size_t order);

// Element n is sum_a d/dq [x^n] series_Pka(k, a, order) at q = 1, which is
// the total of sep over P_{n,k}. Requires 1 <= k <= order.
std::vector<BigInt> qderiv_at_1_total(std::size_t k, std::size_t order);
std::vector<BigInt> qderiv_at_1_total_literal(std::size_t k, std::size_t order);

// One line `n: c0*q^0 + c1*q^1 + ...` per nonzero x^n coefficient, in
// increasing n.
void print_series(std::ostream& os, const XSeries& s);

}  // namespace sepstat

#endif  // SEPSTAT_GF_SERIES_HPP
