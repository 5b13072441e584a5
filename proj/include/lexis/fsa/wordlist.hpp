#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace lexis::fsa {

/// Parses a word-list file: UTF-8, one word per line, LF line endings,
/// `#`-prefixed comment lines ignored, no blank entries. Every word is
/// NFC-normalized. Order is preserved as found.
std::vector<std::u32string> parse_word_list(std::string_view text);

std::vector<std::u32string> load_word_list(const std::filesystem::path& path);

/// Sorted ascending by scalar sequence, duplicates removed: the shape
/// Mdag::build requires.
std::vector<std::u32string> sorted_unique(std::vector<std::u32string> words);

}  // namespace lexis::fsa
