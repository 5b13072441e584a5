#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lexis::hyph {

/// The deterministic part of the Greek syllabification grammar:
///   1. every syllable contains at least one vowel;
///   2. V C V splits before the consonant;
///   3. V C C...C V splits before the cluster when its leading bigram can
///      start a Greek word, otherwise after the first consonant;
///   4a/4b. listed vowel combinations and digraphs never split (υι/υί are
///      digraphs only when not preceded by ο or ε).
/// Adjacent vowel pairs not covered by 4a/4b either match one of the 24
/// ambiguous bigrams (decided elsewhere) or split.
class SyllabificationRules {
 public:
  /// Rule tables for Modern Greek; uppercase letters are admitted and
  /// case-folded for table lookups.
  static SyllabificationRules modern_greek();

  SyllabificationRules(std::u32string vowels, std::u32string consonants,
                       std::vector<std::u32string> onsets,
                       std::vector<std::u32string> combinations_4a,
                       std::vector<std::u32string> digraphs_4b);

  bool in_alphabet(char32_t c) const;
  bool is_vowel(char32_t c) const;
  bool is_consonant(char32_t c) const;
  bool legal_onset(char32_t a, char32_t b) const;
  bool keeps_together_4a(char32_t a, char32_t b) const;
  /// `prev` is the character before `a` in the word, or 0 at word start.
  bool digraph_4b(char32_t a, char32_t b, char32_t prev) const;

  const std::u32string& vowels() const { return vowels_; }
  const std::u32string& consonants() const { return consonants_; }
  const std::vector<std::u32string>& onsets() const { return onsets_; }
  const std::vector<std::u32string>& combinations_4a() const { return combinations_4a_; }
  const std::vector<std::u32string>& digraphs_4b() const { return digraphs_4b_; }

 private:
  std::u32string vowels_, consonants_;
  std::vector<std::u32string> onsets_, combinations_4a_, digraphs_4b_;
  std::set<char32_t> vowel_set_, consonant_set_;
  std::set<std::uint64_t> onset_set_, set_4a_, set_4b_;
};

/// The 24 two-vowel bigrams whose split/no-split behaviour depends on
/// synizesis and is resolved by per-bigram decision trees.
std::span<const std::u32string_view> ambiguous_bigrams();

/// Case-folded membership test against the ambiguous-bigram inventory.
bool is_ambiguous_bigram(char32_t a, char32_t b);

/// Folded two-character key used to index the trained trees.
std::u32string bigram_key(char32_t a, char32_t b);

}  // namespace lexis::hyph
