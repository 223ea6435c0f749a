#include "sepstat/asymptotics.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <string>

#include "sepstat/exact_numbers.hpp"
#include "sepstat/formulas.hpp"

namespace sepstat {

namespace {

constexpr double kResidualTolerance = 1e-12;
constexpr int kMaxIterations = 200;

void check_budget(std::size_t n) {
  if (n < 1 || n > kAsymptoticMaxN) {
    throw std::out_of_range("n must lie in [1, " + std::to_string(kAsymptoticMaxN) + "]");
  }
}

}  // namespace

double solve_r(std::size_t n) {
  if (n == 0) throw std::invalid_argument("solve_r: need n >= 1");
  const double target = static_cast<double>(n) + 1.0;
  auto residual = [target](double r) { return r * std::exp(r) - target; };

  double lo = 1e-9;
  double hi = std::log(target + 1.0);
  double r = n == 1 ? 0.5 : std::log(target) - std::log(std::log(target));

  for (int it = 0; it < kMaxIterations; ++it) {
    const double f = residual(r);
    if (std::abs(f) <= kResidualTolerance * target) return r;
    // r e^r is increasing, so the sign of f tightens the bracket.
    if (f > 0) {
      hi = std::min(hi, r);
    } else {
      lo = std::max(lo, r);
    }
    const double step = f / ((r + 1.0) * std::exp(r));
    double next = r - step;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == r) break;
    r = next;
  }
  if (std::abs(residual(r)) <= kResidualTolerance * target) return r;
  throw std::runtime_error("solve_r: no convergence for n = " + std::to_string(n));
}

AsymptoticReport estimate_ratio(std::size_t n) {
  check_budget(n);
  AsymptoticReport rep;
  rep.n = n;
  rep.r = solve_r(n);
  // The exact quotient is reduced before any conversion to floating point.
  rep.total_over_bell = to_double(BigRational(total_sep_n(n), bell(n)));
  const double nr = static_cast<double>(n) / rep.r;
  const double leading = nr * nr * nr;
  rep.ratio = rep.total_over_bell / (leading * (1.0 + rep.r / static_cast<double>(n)));
  rep.abs_err = std::abs(rep.ratio - 1.0);
  rep.ratio_leading = rep.total_over_bell / leading;
  return rep;
}

double bell_shift_error(std::size_t n, std::size_t h) {
  check_budget(n);
  if (h < 1 || h > 3) throw std::out_of_range("bell_shift_error: need 1 <= h <= 3");
  const double r = solve_r(n);
  const double exact = to_double(BigRational(bell(n + h), bell(n)));
  const double approx =
      rising_product(n, h).convert_to<double>() / std::pow(r, static_cast<double>(h));
  return std::abs(approx / exact - 1.0);
}

void write_asymptotic_csv(std::ostream& os, std::span<const std::size_t> ns) {
  os << "n,r,ratio,abs_err\n";
  const auto flags = os.flags();
  const auto precision = os.precision();
  os << std::setprecision(12);
  for (std::size_t n : ns) {
    const auto rep = estimate_ratio(n);
    os << rep.n << ',' << rep.r << ',' << rep.ratio << ',' << rep.abs_err << '\n';
  }
  os.flags(flags);
  os.precision(precision);
}

}  // namespace sepstat
