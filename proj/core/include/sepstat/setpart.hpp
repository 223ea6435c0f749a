#ifndef SEPSTAT_SETPART_HPP
#define SEPSTAT_SETPART_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sepstat {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

// Thrown when a word is not a restricted growth string. `index` is the
// 1-based position of the first offending letter (0 for an empty word).
class RgsError : public std::invalid_argument {
 public:
  RgsError(const std::string& what, std::size_t index)
      : std::invalid_argument(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

// A set partition of [n] in canonical sequential form: pi_1 = 1 and every
// letter is at most one more than the maximum of the letters before it.
class CanonicalForm {
 public:
  // Validates; throws RgsError.
  explicit CanonicalForm(Word word);

  const Word& word() const { return word_; }
  std::size_t size() const { return word_.size(); }
  Letter blocks() const { return blocks_; }

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  Word word_;
  Letter blocks_ = 0;
};

// Blocks of a set partition, each sorted, ordered by increasing minimum.
struct BlockPartition {
  std::vector<std::vector<std::size_t>> blocks;

  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;
};

CanonicalForm validate(std::span<const Letter> word);

// Position of the first RGS violation (1-based), or nullopt if `word` is a
// valid canonical form. An empty word reports position 0.
std::optional<std::size_t> first_rgs_violation(std::span<const Letter> word);

BlockPartition to_blocks(const CanonicalForm& cf);

// Throws std::invalid_argument for empty, overlapping, or non-covering
// blocks. Block order in the input does not matter.
CanonicalForm from_blocks(const BlockPartition& bp);

// Bare digits when every letter is <= 9, comma-separated otherwise.
std::string format_word(std::span<const Letter> word);

// Inverse of format_word: a string containing a comma is split on commas,
// otherwise each character is one digit letter. Throws std::invalid_argument.
Word parse_word(std::string_view text);

// Streaming lexicographic enumeration of restricted growth strings of a
// fixed length, optionally restricted to exactly k blocks and to words that
// start with a fixed prefix.
//
// The current word is held in an internal buffer that is overwritten by
// each call to next(); copy it if it must outlive the step.
class RgsStream {
 public:
  // Throws std::invalid_argument if n == 0, k is out of [1, n], or the
  // prefix is not a valid RGS prefix of length <= n.
  explicit RgsStream(std::size_t n, std::optional<Letter> k = std::nullopt,
                     Word prefix = {});

  // Advances to the next word; the first call positions on the first word.
  // Returns false once the stream is exhausted.
  bool next();

  std::span<const Letter> word() const { return word_; }
  // Running maximum of the current word.
  Letter blocks() const { return max_.back(); }

  std::size_t length() const { return n_; }
  const Word& prefix() const { return prefix_; }

 private:
  bool fill_from(std::size_t pos);

  std::size_t n_;
  std::optional<Letter> k_;
  Word prefix_;
  Word word_;
  // max_[i] = max(word_[0..i]); max_.back() is the word maximum.
  std::vector<Letter> max_;
  bool started_ = false;
  bool done_ = false;
};

// All canonical forms of length n, materialized. Intended for small n.
std::vector<CanonicalForm> all_forms(std::size_t n, std::optional<Letter> k = std::nullopt);

// Sub-streams keyed by every valid RGS prefix of length `depth`, in
// lexicographic prefix order. Concatenated, they reproduce RgsStream(n, k).
// Prefixes that cannot be completed to exactly k blocks are omitted.
std::vector<RgsStream> split_by_prefix(std::size_t n, std::size_t depth,
                                       std::optional<Letter> k = std::nullopt);

}  // namespace sepstat

#endif  // SEPSTAT_SETPART_HPP
