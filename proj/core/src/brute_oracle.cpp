#include "sepstat/brute_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "sepstat/stats.hpp"

namespace sepstat {

namespace {

void check_n(std::size_t n, std::size_t cap, const char* who) {
  if (n < 1 || n > cap) {
    throw std::out_of_range(std::string(who) + ": n must lie in [1, " + std::to_string(cap) +
                            "]");
  }
}

std::uint64_t word_sep(std::span<const Letter> w, SepRoute route) {
  return route == SepRoute::kDual ? sep_dual_value(w) : sep_value(w);
}

// Runs `work(part_index, stream)` over prefix sub-streams on a small thread
// pool. Each part writes only to its own slot, so no locking is needed.
template <typename Work>
void for_each_part(std::vector<RgsStream>& parts, Work work) {
  const unsigned threads =
      std::max(1u, std::min<unsigned>(worker_threads(), static_cast<unsigned>(parts.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < parts.size(); ++i) work(i, parts[i]);
    return;
  }
  std::atomic<std::size_t> cursor{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = cursor++; i < parts.size(); i = cursor++) work(i, parts[i]);
    });
  }
  for (auto& th : pool) th.join();
}

std::size_t split_depth(std::size_t n) { return std::min<std::size_t>(n, 5); }

}  // namespace

unsigned worker_threads() {
  if (const char* env = std::getenv("SEPSTAT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<BigInt> brute_totals_by_k(std::size_t n, SepRoute route) {
  check_n(n, kBruteMaxN, "brute_totals_by_k");
  auto parts = split_by_prefix(n, split_depth(n));
  std::vector<std::vector<std::uint64_t>> partial(parts.size(),
                                                  std::vector<std::uint64_t>(n + 1, 0));
  for_each_part(parts, [&](std::size_t idx, RgsStream& s) {
    auto& acc = partial[idx];
    while (s.next()) acc[s.blocks()] += word_sep(s.word(), route);
  });
  std::vector<BigInt> totals(n + 1, BigInt(0));
  for (const auto& acc : partial) {
    for (std::size_t k = 0; k <= n; ++k) totals[k] += acc[k];
  }
  return totals;
}

BigInt brute_total_nk(std::size_t n, std::size_t k, SepRoute route) {
  check_n(n, kBruteMaxN, "brute_total_nk");
  if (k < 1 || k > n) throw std::out_of_range("brute_total_nk: k must lie in [1, n]");
  auto parts = split_by_prefix(n, split_depth(n), static_cast<Letter>(k));
  std::vector<std::uint64_t> partial(parts.size(), 0);
  for_each_part(parts, [&](std::size_t idx, RgsStream& s) {
    std::uint64_t acc = 0;
    while (s.next()) acc += word_sep(s.word(), route);
    partial[idx] = acc;
  });
  BigInt total = 0;
  for (auto v : partial) total += v;
  return total;
}

BigInt brute_total(std::size_t n, SepRoute route) {
  check_n(n, kBruteMaxN, "brute_total");
  BigInt total = 0;
  for (const auto& v : brute_totals_by_k(n, route)) total += v;
  return total;
}

BigInt SepDistribution::total_count() const {
  BigInt total = 0;
  for (const auto& [s, c] : counts) total += c;
  return total;
}

SepDistribution brute_distribution_a(std::size_t n, std::size_t k, std::size_t a) {
  check_n(n, kDistributionMaxN, "brute_distribution_a");
  if (k < 1 || k > n || a < 1 || a > k) {
    throw std::out_of_range("brute_distribution_a: need 1 <= a <= k <= n");
  }
  SepDistribution dist{n, k, a, {}};
  std::map<std::uint64_t, std::uint64_t> counts;
  RgsStream s(n, static_cast<Letter>(k));
  while (s.next()) ++counts[sep_a_value(s.word(), static_cast<Letter>(a))];
  for (const auto& [value, c] : counts) dist.counts.emplace(value, BigInt(c));
  return dist;
}

void write_distribution_golden(std::ostream& os, std::size_t max_n) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t a = 1; a <= k; ++a) {
        const auto dist = brute_distribution_a(n, k, a);
        for (const auto& [s, c] : dist.counts) {
          os << n << ' ' << k << ' ' << a << ' ' << s << ' ' << c << '\n';
        }
      }
    }
  }
}

void write_totals_golden(std::ostream& os, std::size_t max_n) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto totals = brute_totals_by_k(n);
    for (std::size_t k = 1; k <= n; ++k) os << n << ' ' << k << ' ' << totals[k] << '\n';
  }
}

}  // namespace sepstat
