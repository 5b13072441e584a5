#include "lexis/hyph/rules.hpp"

#include <span>

#include "lexis/error.hpp"
#include "lexis/unicode.hpp"

namespace lexis::hyph {

namespace {

std::uint64_t pack(char32_t a, char32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::uint64_t pack_folded(char32_t a, char32_t b) {
  return pack(uni::greek_tolower(a), uni::greek_tolower(b));
}

constexpr std::array<std::u32string_view, 24> kAmbiguous = {
    U"ια", U"ιο", U"ιά", U"ιώ", U"ιε", U"ιω", U"ιό", U"υό",
    U"υα", U"ιέ", U"αϊ", U"υο", U"υά", U"οϊ", U"εϊ", U"αη",
    U"όη", U"υώ", U"άι", U"υέ", U"όι", U"άη", U"όε", U"ηώ"};

}  // namespace

SyllabificationRules::SyllabificationRules(std::u32string vowels, std::u32string consonants,
                                           std::vector<std::u32string> onsets,
                                           std::vector<std::u32string> combinations_4a,
                                           std::vector<std::u32string> digraphs_4b)
    : vowels_(std::move(vowels)),
      consonants_(std::move(consonants)),
      onsets_(std::move(onsets)),
      combinations_4a_(std::move(combinations_4a)),
      digraphs_4b_(std::move(digraphs_4b)) {
  for (char32_t c : vowels_) vowel_set_.insert(c);
  for (char32_t c : consonants_) consonant_set_.insert(c);
  for (char32_t c : vowels_)
    if (consonant_set_.contains(c))
      throw InvalidInput(detail::msg("rules: '", uni::utf8_encode({&c, 1}),
                                     "' is both vowel and consonant"));
  const auto check_pair = [&](const std::u32string& s, const std::set<char32_t>& allowed,
                              const char* what) {
    if (s.size() != 2 || !allowed.contains(uni::greek_tolower(s[0])) ||
        !allowed.contains(uni::greek_tolower(s[1])))
      throw InvalidInput(detail::msg("rules: bad ", what, " entry '", uni::utf8_encode(s), "'"));
  };
  for (const auto& s : onsets_) {
    check_pair(s, consonant_set_, "onset");
    onset_set_.insert(pack_folded(s[0], s[1]));
  }
  for (const auto& s : combinations_4a_) {
    check_pair(s, vowel_set_, "combination");
    set_4a_.insert(pack_folded(s[0], s[1]));
  }
  for (const auto& s : digraphs_4b_) {
    check_pair(s, vowel_set_, "digraph");
    set_4b_.insert(pack_folded(s[0], s[1]));
  }
}

SyllabificationRules SyllabificationRules::modern_greek() {
  return SyllabificationRules(
      U"αάεέηήιίϊΐοόυύϋΰωώ" U"ΑΆΕΈΗΉΙΊΪΟΌΥΎΫΩΏ",
      U"βγδζθκλμνξπρσςτφχψ" U"ΒΓΔΖΘΚΛΜΝΞΠΡΣΤΦΧΨ",
      {U"βγ", U"βδ", U"βλ", U"βρ", U"γδ", U"γκ", U"γλ", U"γν", U"γρ", U"δρ",
       U"θλ", U"θν", U"θρ", U"κβ", U"κλ", U"κν", U"κρ", U"κτ", U"μν", U"μπ",
       U"ντ", U"πλ", U"πν", U"πρ", U"πτ", U"σβ", U"σγ", U"σθ", U"σκ", U"σλ",
       U"σμ", U"σν", U"σπ", U"στ", U"σφ", U"σχ", U"τζ", U"τμ", U"τρ", U"τσ",
       U"φθ", U"φλ", U"φρ", U"φτ", U"χθ", U"χλ", U"χν", U"χρ", U"χτ"},
      {U"αυ", U"άυ", U"ευ", U"εύ", U"ηυ", U"ηύ"},
      {U"αι", U"αί", U"ει", U"εί", U"οι", U"οί", U"υι", U"υί", U"ου", U"ού"});
}

bool SyllabificationRules::in_alphabet(char32_t c) const {
  return vowel_set_.contains(c) || consonant_set_.contains(c);
}

bool SyllabificationRules::is_vowel(char32_t c) const { return vowel_set_.contains(c); }

bool SyllabificationRules::is_consonant(char32_t c) const { return consonant_set_.contains(c); }

bool SyllabificationRules::legal_onset(char32_t a, char32_t b) const {
  return onset_set_.contains(pack_folded(a, b));
}

bool SyllabificationRules::keeps_together_4a(char32_t a, char32_t b) const {
  return set_4a_.contains(pack_folded(a, b));
}

bool SyllabificationRules::digraph_4b(char32_t a, char32_t b, char32_t prev) const {
  if (!set_4b_.contains(pack_folded(a, b))) return false;
  const char32_t fa = uni::greek_tolower(a);
  if (fa == U'υ') {
    // υι, υί: digraphs only when not preceded by ο or ε; otherwise the υ
    // belongs to the preceding ου/ευ unit.
    const char32_t fp = uni::greek_tolower(prev);
    if (fp == U'ο' || fp == U'ε') return false;
  }
  return true;
}

std::span<const std::u32string_view> ambiguous_bigrams() { return kAmbiguous; }

bool is_ambiguous_bigram(char32_t a, char32_t b) {
  const char32_t fa = uni::greek_tolower(a);
  const char32_t fb = uni::greek_tolower(b);
  for (const auto& bg : kAmbiguous)
    if (bg[0] == fa && bg[1] == fb) return true;
  return false;
}

std::u32string bigram_key(char32_t a, char32_t b) {
  return {uni::greek_tolower(a), uni::greek_tolower(b)};
}

}  // namespace lexis::hyph
