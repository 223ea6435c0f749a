#ifndef SEPSTAT_ASYMPTOTICS_HPP
#define SEPSTAT_ASYMPTOTICS_HPP

#include <cstddef>
#include <iosfwd>
#include <span>

namespace sepstat {

// Largest n accepted by the exact-ratio routines (Bell numbers to n + 3).
inline constexpr std::size_t kAsymptoticMaxN = 1000;

// Positive root of r e^r = n + 1, relative residual <= 1e-12. Newton steps
// with a bisection fallback on [1e-9, ln(n + 2)]. Throws
// std::invalid_argument for n == 0 and std::runtime_error if the iteration
// cap is hit.
double solve_r(std::size_t n);

struct AsymptoticReport {
  std::size_t n = 0;
  double r = 0.0;
  // (total/B_n) / ((n/r)^3 (1 + r/n)): the estimate B_n n^3/r^3 (1 + r/n)
  // against the exact total.
  double ratio = 0.0;
  double abs_err = 0.0;  // |ratio - 1|
  // Same, with the bare leading term (n/r)^3.
  double ratio_leading = 0.0;
  // Exact total/B_n, before any scaling.
  double total_over_bell = 0.0;
};

// Requires 1 <= n <= kAsymptoticMaxN (std::out_of_range).
AsymptoticReport estimate_ratio(std::size_t n);

// |B_n (n+h)!/(n! r^h) / B_{n+h} - 1| with the Bell ratio taken exactly.
// Requires 1 <= h <= 3 and 1 <= n <= kAsymptoticMaxN.
double bell_shift_error(std::size_t n, std::size_t h);

// CSV with header `n,r,ratio,abs_err`, 12 significant digits.
void write_asymptotic_csv(std::ostream& os, std::span<const std::size_t> ns);

}  // namespace sepstat

#endif  // SEPSTAT_ASYMPTOTICS_HPP
