#include "sepstat/exact_numbers.hpp"

#include <cmath>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace sepstat {

namespace mp = boost::multiprecision;

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  // Boost refuses a negative denominator, so move the sign up first.
  return den < 0 ? BigRational(-num, -den) : BigRational(num, den);
}

BigInt numerator(const BigRational& q) { return mp::numerator(q); }
BigInt denominator(const BigRational& q) { return mp::denominator(q); }

bool is_integral(const BigRational& q) { return mp::denominator(q) == 1; }

double to_double(const BigRational& q) {
  BigInt num = mp::numerator(q);
  const BigInt den = mp::denominator(q);
  if (num == 0) return 0.0;
  const bool negative = num < 0;
  if (negative) num = -num;

  // Scale so the integer quotient carries 64 significant bits.
  const long long shift =
      64 - (static_cast<long long>(mp::msb(num)) - static_cast<long long>(mp::msb(den)));
  BigInt quotient;
  if (shift >= 0) {
    quotient = (num << static_cast<unsigned>(shift)) / den;
  } else {
    quotient = num / (den << static_cast<unsigned>(-shift));
  }
  double value = std::ldexp(quotient.convert_to<double>(), static_cast<int>(-shift));
  return negative ? -value : value;
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const BigRational& q) {
  if (is_integral(q)) return mp::numerator(q).str();
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

StirlingTable::StirlingTable(std::size_t max_n) {
  rows_.reserve(max_n + 1);
  rows_.push_back({BigInt(1)});
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto& prev = rows_.back();
    std::vector<BigInt> row(n + 1);
    row[0] = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      BigInt v = (k - 1 < prev.size()) ? prev[k - 1] : BigInt(0);
      if (k < prev.size()) v += prev[k] * k;
      row[k] = std::move(v);
    }
    rows_.push_back(std::move(row));
  }
}

const BigInt& StirlingTable::operator()(std::size_t n, std::size_t k) const {
  static const BigInt zero = 0;
  const auto& r = row(n);
  return k < r.size() ? r[k] : zero;
}

const std::vector<BigInt>& StirlingTable::row(std::size_t n) const {
  if (n >= rows_.size()) throw std::out_of_range("StirlingTable: n exceeds table size");
  return rows_[n];
}

BellTable::BellTable(std::size_t max_n) {
  values_.reserve(max_n + 1);
  values_.push_back(1);
  // Each triangle row starts with the last entry of the previous row; its
  // first entry is the next Bell number.
  std::vector<BigInt> row{BigInt(1)};
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::vector<BigInt> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const auto& v : row) next.push_back(next.back() + v);
    values_.push_back(next.front());
    row = std::move(next);
  }
}

const BigInt& BellTable::operator[](std::size_t n) const {
  if (n >= values_.size()) throw std::out_of_range("BellTable: n exceeds table size");
  return values_[n];
}

namespace {

struct StirlingMemo {
  std::mutex mu;
  std::deque<std::vector<BigInt>> rows{{BigInt(1)}};

  const std::vector<BigInt>& row(std::size_t n) {
    std::lock_guard<std::mutex> lock(mu);
    while (rows.size() <= n) {
      const auto& prev = rows.back();
      const std::size_t m = prev.size();  // new row index
      std::vector<BigInt> next(m + 1);
      for (std::size_t k = 1; k <= m; ++k) {
        next[k] = prev[k - 1];
        if (k < m) next[k] += prev[k] * k;
      }
      rows.push_back(std::move(next));
    }
    return rows[n];
  }
};

struct BellMemo {
  std::mutex mu;
  std::deque<BigInt> values{BigInt(1)};
  std::vector<BigInt> last_row{BigInt(1)};

  const BigInt& get(std::size_t n) {
    std::lock_guard<std::mutex> lock(mu);
    while (values.size() <= n) {
      std::vector<BigInt> next;
      next.reserve(last_row.size() + 1);
      next.push_back(last_row.back());
      for (const auto& v : last_row) next.push_back(next.back() + v);
      values.push_back(next.front());
      last_row = std::move(next);
    }
    return values[n];
  }
};

StirlingMemo& stirling_memo() {
  static StirlingMemo memo;
  return memo;
}

BellMemo& bell_memo() {
  static BellMemo memo;
  return memo;
}

}  // namespace

const BigInt& stirling2(std::size_t n, std::size_t k) {
  static const BigInt zero = 0;
  if (k > n) return zero;
  return stirling_memo().row(n)[k];
}

const BigInt& bell(std::size_t n) { return bell_memo().get(n); }

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt factorial(std::size_t n) {
  BigInt result = 1;
  for (std::size_t i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt rising_product(std::size_t n, std::size_t h) {
  BigInt result = 1;
  for (std::size_t i = 1; i <= h; ++i) result *= n + i;
  return result;
}

}  // namespace sepstat
