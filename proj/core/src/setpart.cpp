#include "sepstat/setpart.hpp"

#include <algorithm>
#include <charconv>

namespace sepstat {

std::optional<std::size_t> first_rgs_violation(std::span<const Letter> word) {
  if (word.empty()) return 0;
  Letter running_max = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] < 1 || word[i] > running_max + 1) return i + 1;
    running_max = std::max(running_max, word[i]);
  }
  return std::nullopt;
}

CanonicalForm::CanonicalForm(Word word) : word_(std::move(word)) {
  if (auto bad = first_rgs_violation(word_)) {
    if (*bad == 0) throw RgsError("empty word is not a canonical form", 0);
    throw RgsError("restricted growth violated at position " + std::to_string(*bad),
                   *bad);
  }
  blocks_ = *std::max_element(word_.begin(), word_.end());
}

CanonicalForm validate(std::span<const Letter> word) {
  return CanonicalForm(Word(word.begin(), word.end()));
}

BlockPartition to_blocks(const CanonicalForm& cf) {
  BlockPartition bp;
  bp.blocks.resize(cf.blocks());
  for (std::size_t i = 0; i < cf.size(); ++i) {
    bp.blocks[cf.word()[i] - 1].push_back(i + 1);
  }
  return bp;
}

CanonicalForm from_blocks(const BlockPartition& bp) {
  std::size_t n = 0;
  for (const auto& b : bp.blocks) {
    if (b.empty()) throw std::invalid_argument("from_blocks: empty block");
    n += b.size();
  }
  if (n == 0) throw std::invalid_argument("from_blocks: no elements");

  // Order blocks by their minima.
  std::vector<std::size_t> order(bp.blocks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<std::size_t> minima;
  minima.reserve(bp.blocks.size());
  for (const auto& b : bp.blocks) minima.push_back(*std::min_element(b.begin(), b.end()));
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return minima[x] < minima[y]; });

  Word word(n, 0);
  for (std::size_t label = 0; label < order.size(); ++label) {
    for (std::size_t element : bp.blocks[order[label]]) {
      if (element < 1 || element > n) {
        throw std::invalid_argument("from_blocks: element " + std::to_string(element) +
                                    " outside [1, " + std::to_string(n) + "]");
      }
      if (word[element - 1] != 0) {
        throw std::invalid_argument("from_blocks: element " + std::to_string(element) +
                                    " appears in two blocks");
      }
      word[element - 1] = static_cast<Letter>(label + 1);
    }
  }
  // n distinct elements in [1, n] cover it, so the word is complete.
  return CanonicalForm(std::move(word));
}

std::string format_word(std::span<const Letter> word) {
  const bool wide = std::any_of(word.begin(), word.end(), [](Letter l) { return l > 9; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (wide && i > 0) out.push_back(',');
    out += std::to_string(word[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word word;
  auto parse_letter = [](std::string_view token) {
    Letter value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() ||
        value == 0) {
      throw std::invalid_argument("invalid letter '" + std::string(token) + "'");
    }
    return value;
  };
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      word.push_back(parse_letter(text.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) word.push_back(parse_letter(text.substr(i, 1)));
  }
  if (word.empty()) throw std::invalid_argument("empty word");
  return word;
}

RgsStream::RgsStream(std::size_t n, std::optional<Letter> k, Word prefix)
    : n_(n), k_(k), prefix_(std::move(prefix)) {
  if (n_ == 0) throw std::invalid_argument("RgsStream: n must be positive");
  if (k_ && (*k_ < 1 || *k_ > n_)) {
    throw std::invalid_argument("RgsStream: k must lie in [1, n]");
  }
  if (prefix_.size() > n_) throw std::invalid_argument("RgsStream: prefix longer than n");
  if (!prefix_.empty() && first_rgs_violation(prefix_)) {
    throw std::invalid_argument("RgsStream: prefix is not a restricted growth string");
  }
  word_.assign(n_, 1);
  max_.assign(n_, 1);
}

bool RgsStream::fill_from(std::size_t pos) {
  const Letter m = pos == 0 ? 0 : max_[pos - 1];
  const std::size_t remaining = n_ - pos;
  std::size_t climb = 0;  // trailing positions reserved for m+1, ..., k
  if (k_) {
    if (m > *k_ || *k_ - m > remaining) return false;
    climb = *k_ - m;
  }
  for (std::size_t i = pos; i < n_ - climb; ++i) {
    word_[i] = 1;
    max_[i] = std::max<Letter>(1, i == 0 ? 0 : max_[i - 1]);
  }
  for (std::size_t i = n_ - climb; i < n_; ++i) {
    word_[i] = (i == 0 ? 0 : max_[i - 1]) + 1;
    max_[i] = word_[i];
  }
  return true;
}

bool RgsStream::next() {
  if (done_) return false;
  const std::size_t fixed = std::max<std::size_t>(prefix_.size(), 1);
  if (!started_) {
    started_ = true;
    Letter m = 0;
    for (std::size_t i = 0; i < fixed; ++i) {
      word_[i] = prefix_.empty() ? 1 : prefix_[i];
      m = std::max(m, word_[i]);
      max_[i] = m;
    }
    if (!fill_from(fixed)) done_ = true;
    return !done_;
  }
  for (std::size_t i = n_; i-- > fixed;) {
    const Letter before = max_[i - 1];
    Letter cap = before + 1;
    if (k_) cap = std::min(cap, *k_);
    for (Letter c = word_[i] + 1; c <= cap; ++c) {
      const Letter m = std::max(before, c);
      if (k_ && *k_ - m > n_ - 1 - i) continue;
      word_[i] = c;
      max_[i] = m;
      fill_from(i + 1);
      return true;
    }
  }
  done_ = true;
  return false;
}

std::vector<CanonicalForm> all_forms(std::size_t n, std::optional<Letter> k) {
  std::vector<CanonicalForm> out;
  RgsStream stream(n, k);
  while (stream.next()) out.emplace_back(Word(stream.word().begin(), stream.word().end()));
  return out;
}

std::vector<RgsStream> split_by_prefix(std::size_t n, std::size_t depth,
                                       std::optional<Letter> k) {
  if (depth < 1 || depth > n) {
    throw std::invalid_argument("split_by_prefix: depth must lie in [1, n]");
  }
  std::vector<RgsStream> parts;
  RgsStream prefixes(depth);
  while (prefixes.next()) {
    const Letter m = prefixes.blocks();
    if (k && (m > *k || *k - m > n - depth)) continue;
    parts.emplace_back(n, k, Word(prefixes.word().begin(), prefixes.word().end()));
  }
  return parts;
}

}  // namespace sepstat
