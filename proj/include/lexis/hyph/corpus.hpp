#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lexis::hyph {

/// A word together with its syllable boundaries. `cuts` holds ascending
/// character indices; a cut at i means a boundary before word[i].
struct HyphenatedForm {
  std::u32string word;
  std::vector<std::size_t> cuts;

  std::vector<std::u32string> syllables() const;
  /// "δό-λι-α"-style rendering.
  std::string to_line() const;

  bool operator==(const HyphenatedForm&) const = default;
};

HyphenatedForm parse_hyphenated(std::u32string_view line);

/// Parses a hyphenated-corpus file: UTF-8, one word per line with `-` at
/// each syllable boundary, `#` comments, blank lines ignored. Every line
/// is kept, so a form may occur more than once (statistics count lines;
/// exception building lets the last occurrence win).
std::vector<HyphenatedForm> parse_corpus(std::string_view text);

std::vector<HyphenatedForm> load_corpus(const std::filesystem::path& path);

void save_corpus(const std::filesystem::path& path, std::span<const HyphenatedForm> corpus);

}  // namespace lexis::hyph
