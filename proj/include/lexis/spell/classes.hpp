#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexis/fsa/regex.hpp"

namespace lexis::spell {

/// Partition of graphemes into phonetic/optical confusion classes, loaded
/// from a text file (one class per line, members separated by whitespace,
/// `#` comments). Classes that share a grapheme are merged at load time so
/// the table is always a partition.
class EquivalenceClassTable {
 public:
  static EquivalenceClassTable parse(std::string_view text);
  static EquivalenceClassTable load(const std::filesystem::path& path);

  std::size_t size() const { return classes_.size(); }
  std::span<const std::u32string> members(std::size_t cls) const;
  std::optional<std::size_t> class_of(std::u32string_view grapheme) const;

  struct Match {
    std::size_t length;
    std::size_t cls;
  };
  /// Longest class member that is a prefix of `text`.
  std::optional<Match> longest_match(std::u32string_view text) const;

 private:
  std::vector<std::vector<std::u32string>> classes_;
  std::map<std::u32string, std::size_t, std::less<>> index_;
  std::size_t max_grapheme_len_ = 0;
};

/// One piece of a word: a grapheme that belongs to a confusion class, or
/// a single unclassed character.
struct Segment {
  std::u32string text;
  std::optional<std::size_t> cls;
};
using Segmentation = std::vector<Segment>;

/// Left-to-right longest-match decomposition of a word into class
/// graphemes; characters in no class become unclassed single-character
/// segments. Total and lossless: segments concatenate back to the word.
Segmentation segment(std::u32string_view word, const EquivalenceClassTable& table);

/// One regex group per segment: classed segments expand to their whole
/// class, unclassed segments to a singleton alternative.
fsa::GraphemeRegex expand(const Segmentation& segments, const EquivalenceClassTable& table);

}  // namespace lexis::spell
