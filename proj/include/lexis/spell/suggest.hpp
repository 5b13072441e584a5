#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexis/fsa/mdag.hpp"
#include "lexis/spell/classes.hpp"

namespace lexis::spell {

/// Causes of spelling errors. Grammatical errors are part of the taxonomy
/// but no generator produces them; handling them needs syntactic context.
enum class ErrorCategory { typographic, morphological, pronunciation, grammatical };
std::string_view to_string(ErrorCategory c);

enum class SuggestionSource { typographic, phonographic, combined };
std::string_view to_string(SuggestionSource s);

struct Suggestion {
  std::u32string word;       // guaranteed to be in the lexicon
  std::size_t distance = 0;  // levenshtein(input, word)
  SuggestionSource source = SuggestionSource::typographic;
};

/// The full Greek alphabet (both cases, accented vowels included); the
/// default candidate alphabet.
std::u32string_view greek_alphabet();

/// Every string one typing slip away from `word`: a wrong character, an
/// extra character, a missing character, or two adjacent characters
/// transposed. Sorted, de-duplicated, `word` itself excluded. The raw set
/// is not filtered by any lexicon (a one-letter word contributes the
/// empty string via deletion).
std::vector<std::u32string> typographic_candidates(std::u32string_view word,
                                                   std::u32string_view alphabet);

struct SuggestOptions {
  std::size_t limit = 10;
  std::optional<std::size_t> max_distance;  // no cutoff by default
  /// At most this many unfiltered typographic candidates are expanded
  /// phonographically in the combined pass (shortest first); bounds the
  /// worst-case latency of the mixed-error path.
  std::size_t combined_cap = 500;
  std::u32string alphabet;  // empty → greek_alphabet()
};

/// Ranked corrections for an unknown word: lexicon-filtered typographic
/// candidates, phonographic regex search, and phonographic expansion of
/// unfiltered typographic candidates, de-duplicated and ordered by edit
/// distance (ties lexicographic ascending), truncated to `limit`.
std::vector<Suggestion> suggest(std::u32string_view word, const fsa::Mdag& lexicon,
                                const EquivalenceClassTable& table,
                                const SuggestOptions& options = {});

struct Token {
  std::u32string text;
  std::size_t offset = 0;  // character index into the input
  bool known = false;
};

/// Tokenizes `text` into maximal runs of Greek letters (plus any
/// `extra_letters`) and checks each against the lexicon. The input is
/// used as given; callers normalize beforehand so offsets stay valid.
std::vector<Token> check_text(std::u32string_view text, const fsa::Mdag& lexicon,
                              std::u32string_view extra_letters = U"");

}  // namespace lexis::spell
