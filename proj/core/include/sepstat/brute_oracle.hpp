#ifndef SEPSTAT_BRUTE_ORACLE_HPP
#define SEPSTAT_BRUTE_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "sepstat/exact_numbers.hpp"
#include "sepstat/setpart.hpp"

namespace sepstat {

// Ground truth by exhaustive enumeration of canonical forms.
inline constexpr std::size_t kBruteMaxN = 12;
inline constexpr std::size_t kDistributionMaxN = 9;

enum class SepRoute {
  kPerRecord,  // sum of prefix sums at each record
  kDual,       // sum_p word[p] * #{records after p}
};

// Worker count for enumeration sweeps: SEPSTAT_THREADS if set and positive,
// otherwise std::thread::hardware_concurrency().
unsigned worker_threads();

BigInt brute_total_nk(std::size_t n, std::size_t k, SepRoute route = SepRoute::kPerRecord);
BigInt brute_total(std::size_t n, SepRoute route = SepRoute::kPerRecord);

// One enumeration pass over P_n; element k holds the total over P_{n,k}
// (index 0 is always zero).
std::vector<BigInt> brute_totals_by_k(std::size_t n, SepRoute route = SepRoute::kPerRecord);

struct SepDistribution {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t a = 0;
  std::map<std::uint64_t, BigInt> counts;  // statistic value -> multiplicity

  BigInt total_count() const;
};

// Distribution of sep_a over P_{n,k}; requires 1 <= a <= k <= n <= 9.
SepDistribution brute_distribution_a(std::size_t n, std::size_t k, std::size_t a);

// Golden-file line format `n k a s count`, one line per nonzero count, in
// increasing (n, k, a, s) order.
void write_distribution_golden(std::ostream& os, std::size_t max_n);

// Golden-file line format `n k total` for 1 <= k <= n <= max_n.
void write_totals_golden(std::ostream& os, std::size_t max_n);

}  // namespace sepstat

#endif  // SEPSTAT_BRUTE_ORACLE_HPP
