#ifndef SEPSTAT_EXACT_NUMBERS_HPP
#define SEPSTAT_EXACT_NUMBERS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sepstat {

// Unbounded signed integer and always-reduced rational (denominator > 0).
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

BigRational make_rational(const BigInt& num, const BigInt& den);

BigInt numerator(const BigRational& q);
BigInt denominator(const BigRational& q);

bool is_integral(const BigRational& q);

// Nearest double to q, computed without converting the (possibly huge)
// numerator and denominator separately.
double to_double(const BigRational& q);

std::string to_string(const BigInt& v);
std::string to_string(const BigRational& q);

// Triangular table of Stirling numbers of the second kind, S[n][k] for
// 0 <= k <= n <= max_n. Immutable once built.
class StirlingTable {
 public:
  explicit StirlingTable(std::size_t max_n);

  std::size_t max_n() const { return rows_.size() - 1; }

  // S(n, k); zero when k > n. Throws std::out_of_range if n > max_n().
  const BigInt& operator()(std::size_t n, std::size_t k) const;

  const std::vector<BigInt>& row(std::size_t n) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

// Bell numbers B[0..max_n] built with the Bell (Aitken) triangle.
class BellTable {
 public:
  explicit BellTable(std::size_t max_n);

  std::size_t max_n() const { return values_.size() - 1; }
  const BigInt& operator[](std::size_t n) const;

 private:
  std::vector<BigInt> values_;
};

// Process-wide memoized accessors. The backing tables grow on demand under a
// lock; returned references stay valid for the life of the process.
const BigInt& stirling2(std::size_t n, std::size_t k);
const BigInt& bell(std::size_t n);

BigInt binomial(std::size_t n, std::size_t k);
BigInt factorial(std::size_t n);

// Rising product (n+1)(n+2)...(n+h) = (n+h)!/n!.
BigInt rising_product(std::size_t n, std::size_t h);

}  // namespace sepstat

#endif  // SEPSTAT_EXACT_NUMBERS_HPP
