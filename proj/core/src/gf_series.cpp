#include "sepstat/gf_series.hpp"

#include <ostream>
#include <stdexcept>

namespace sepstat {

QPolynomial::QPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPolynomial::QPolynomial(BigInt constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

QPolynomial QPolynomial::monomial(BigInt c, std::size_t power) {
  if (c == 0) return {};
  std::vector<BigInt> coeffs(power + 1, BigInt(0));
  coeffs[power] = std::move(c);
  return QPolynomial(std::move(coeffs));
}

QPolynomial QPolynomial::power_range(std::size_t lo, std::size_t hi) {
  if (lo > hi) return {};
  std::vector<BigInt> coeffs(hi + 1, BigInt(0));
  for (std::size_t i = lo; i <= hi; ++i) coeffs[i] = 1;
  return QPolynomial(std::move(coeffs));
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPolynomial::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : BigInt(0);
}

BigInt QPolynomial::at_one() const {
  BigInt total = 0;
  for (const auto& c : coeffs_) total += c;
  return total;
}

BigInt QPolynomial::derivative_at_one() const {
  BigInt total = 0;
  for (std::size_t s = 1; s < coeffs_.size(); ++s) total += coeffs_[s] * s;
  return total;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

QPolynomial operator*(const QPolynomial& lhs, const QPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return QPolynomial(std::move(out));
}

std::string QPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) out += " + ";
    out += coeffs_[i].str() + "*q^" + std::to_string(i);
  }
  return out;
}

XSeries::XSeries(std::size_t order) : coeffs_(order + 1) {}

XSeries::XSeries(std::size_t order, std::vector<QPolynomial> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(order + 1);
}

XSeries XSeries::monomial(std::size_t order, QPolynomial c, std::size_t power) {
  XSeries s(order);
  if (power <= order) s.coeffs_[power] = std::move(c);
  return s;
}

namespace {

void require_same_order(const XSeries& f, const XSeries& g) {
  if (f.order() != g.order()) throw std::invalid_argument("series truncation orders differ");
}

void require_no_constant(const XSeries& f) {
  if (!f[0].is_zero()) {
    throw std::invalid_argument("1/(1 - f) needs f with zero constant term");
  }
}

}  // namespace

XSeries series_add(const XSeries& f, const XSeries& g) {
  require_same_order(f, g);
  XSeries out = f;
  for (std::size_t n = 0; n <= out.order(); ++n) out[n] += g[n];
  return out;
}

XSeries series_mul(const XSeries& f, const XSeries& g) {
  require_same_order(f, g);
  const std::size_t order = f.order();
  XSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (g[j].is_zero()) continue;
      out[i + j] += f[i] * g[j];
    }
  }
  return out;
}

XSeries series_div_one_minus(const XSeries& s, const XSeries& f) {
  require_same_order(s, f);
  require_no_constant(f);
  const std::size_t order = s.order();
  XSeries h(order);
  for (std::size_t n = 0; n <= order; ++n) {
    QPolynomial acc = s[n];
    for (std::size_t j = 1; j <= n; ++j) {
      if (f[j].is_zero() || h[n - j].is_zero()) continue;
      acc += f[j] * h[n - j];
    }
    h[n] = std::move(acc);
  }
  return h;
}

XSeries series_geom_inverse(const XSeries& f) {
  return series_div_one_minus(XSeries::monomial(f.order(), BigInt(1), 0), f);
}

namespace {

void check_pka_args(std::size_t k, std::size_t a, std::size_t order) {
  if (a < 1 || a > k || k > order) {
    throw std::out_of_range("series_Pka: need 1 <= a <= k <= order");
  }
}

XSeries pka_seed(std::size_t k, std::size_t a, std::size_t order) {
  return XSeries::monomial(order, QPolynomial::monomial(1, a * (a - 1) / 2), k);
}

XSeries x_times(std::size_t order, QPolynomial c) {
  return XSeries::monomial(order, std::move(c), 1);
}

}  // namespace

XSeries series_Pka(std::size_t k, std::size_t a, std::size_t order) {
  check_pka_args(k, a, order);
  XSeries s = pka_seed(k, a, order);
  for (std::size_t j = 1; j < a; ++j) {
    s = series_div_one_minus(s, x_times(order, QPolynomial::power_range(1, j)));
  }
  for (std::size_t i = a; i <= k; ++i) {
    s = series_div_one_minus(s, x_times(order, QPolynomial(BigInt(i))));
  }
  return s;
}

XSeries series_Pka_literal(std::size_t k, std::size_t a, std::size_t order) {
  check_pka_args(k, a, order);
  XSeries s = pka_seed(k, a, order);
  const auto ax = x_times(order, QPolynomial(BigInt(a)));
  for (std::size_t j = 1; j < a; ++j) {
    s = series_div_one_minus(s, x_times(order, QPolynomial::power_range(1, j)));
    for (std::size_t i = a; i <= k; ++i) s = series_div_one_minus(s, ax);
  }
  return s;
}

namespace {

template <typename Builder>
std::vector<BigInt> qderiv_total(std::size_t k, std::size_t order, Builder build) {
  if (k < 1 || k > order) throw std::out_of_range("qderiv_at_1_total: need 1 <= k <= order");
  std::vector<BigInt> out(order + 1, BigInt(0));
  for (std::size_t a = 1; a <= k; ++a) {
    const XSeries s = build(k, a, order);
    for (std::size_t n = 0; n <= order; ++n) out[n] += s[n].derivative_at_one();
  }
  return out;
}

}  // namespace

std::vector<BigInt> qderiv_at_1_total(std::size_t k, std::size_t order) {
  return qderiv_total(k, order, series_Pka);
}

std::vector<BigInt> qderiv_at_1_total_literal(std::size_t k, std::size_t order) {
  return qderiv_total(k, order, series_Pka_literal);
}

void print_series(std::ostream& os, const XSeries& s) {
  for (std::size_t n = 0; n <= s.order(); ++n) {
    if (s[n].is_zero()) continue;
    os << n << ": " << s[n].to_string() << '\n';
  }
}

}  // namespace sepstat
