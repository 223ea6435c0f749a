#include "sepstat/stats.hpp"

#include <stdexcept>
#include <string>

namespace sepstat {

namespace {

void require_nonempty(std::span<const Letter> word) {
  if (word.empty()) throw std::invalid_argument("statistic of an empty word");
}

}  // namespace

RecordList records(std::span<const Letter> word) {
  require_nonempty(word);
  RecordList out;
  Letter best = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i == 0 || word[i] > best) {
      out.push_back({word[i], i + 1});
      best = word[i];
    }
  }
  return out;
}

std::uint64_t sep_value(std::span<const Letter> word) {
  std::uint64_t prefix = 0;
  std::uint64_t total = 0;
  Letter best = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] > best) {
      total += prefix;
      best = word[i];
    }
    prefix += word[i];
  }
  return total;
}

std::uint64_t sep_dual_value(std::span<const Letter> word) {
  // Records after p are counted right to left: a position is a record iff it
  // exceeds the maximum of everything before it, so precompute prefix maxima.
  std::vector<bool> is_record(word.size(), false);
  Letter best = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] > best) {
      is_record[i] = true;
      best = word[i];
    }
  }
  std::uint64_t later_records = 0;
  std::uint64_t total = 0;
  for (std::size_t i = word.size(); i-- > 0;) {
    total += static_cast<std::uint64_t>(word[i]) * later_records;
    if (is_record[i]) ++later_records;
  }
  return total;
}

std::uint64_t sep_a_value(std::span<const Letter> word, Letter a) {
  std::uint64_t prefix = 0;
  Letter best = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] > best) {
      if (word[i] == a) return prefix;
      best = word[i];
    }
    prefix += word[i];
  }
  throw std::invalid_argument(std::to_string(a) + " is not a record of the word");
}

BigInt sep_a(std::span<const Letter> word, Letter a) {
  require_nonempty(word);
  return sep_a_value(word, a);
}

BigInt sep(std::span<const Letter> word) {
  require_nonempty(word);
  return sep_value(word);
}

BigInt sep_dual(std::span<const Letter> word) {
  require_nonempty(word);
  return sep_dual_value(word);
}

BigInt srec(std::span<const Letter> word) {
  BigInt total = 0;
  for (const auto& r : records(word)) total += r.position;
  return total;
}

BigInt swrec(std::span<const Letter> word) {
  BigInt total = 0;
  for (const auto& r : records(word)) total += BigInt(r.position) * r.value;
  return total;
}

}  // namespace sepstat
