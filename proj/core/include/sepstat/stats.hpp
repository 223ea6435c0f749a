#ifndef SEPSTAT_STATS_HPP
#define SEPSTAT_STATS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sepstat/exact_numbers.hpp"
#include "sepstat/setpart.hpp"

namespace sepstat {

struct Record {
  Letter value;
  std::size_t position;  // 1-based

  friend bool operator==(const Record&, const Record&) = default;
};

using RecordList = std::vector<Record>;

// Left-to-right strict maxima of a word over positive integers.
// All functions below throw std::invalid_argument on an empty word.
RecordList records(std::span<const Letter> word);

// Sum of the letters strictly before the position of record `a`.
// Throws std::invalid_argument if `a` is not a record value of the word.
BigInt sep_a(std::span<const Letter> word, Letter a);

// Sum of sep_a over all records of the word.
BigInt sep(std::span<const Letter> word);

// Same total via sum_p word[p] * #{records strictly after p}.
BigInt sep_dual(std::span<const Letter> word);

BigInt srec(std::span<const Letter> word);
BigInt swrec(std::span<const Letter> word);

// Machine-word versions for enumeration loops. No empty-word check.
std::uint64_t sep_value(std::span<const Letter> word);
std::uint64_t sep_dual_value(std::span<const Letter> word);
std::uint64_t sep_a_value(std::span<const Letter> word, Letter a);

}  // namespace sepstat

#endif  // SEPSTAT_STATS_HPP
