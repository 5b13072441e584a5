#include "lexis/spell/suggest.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lexis/error.hpp"
#include "lexis/spell/distance.hpp"
#include "lexis/unicode.hpp"

namespace lexis::spell {

std::string_view to_string(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::typographic: return "typographic";
    case ErrorCategory::morphological: return "morphological";
    case ErrorCategory::pronunciation: return "pronunciation";
    case ErrorCategory::grammatical: return "grammatical";
  }
  return "?";
}

std::string_view to_string(SuggestionSource s) {
  switch (s) {
    case SuggestionSource::typographic: return "typographic";
    case SuggestionSource::phonographic: return "phonographic";
    case SuggestionSource::combined: return "combined";
  }
  return "?";
}

std::u32string_view greek_alphabet() {
  static const std::u32string alphabet = [] {
    std::u32string a =
        U"αάβγδεέζηήθιίϊΐκλμνξοόπρσςτυύϋΰφχψωώ"
        U"ΑΆΒΓΔΕΈΖΗΉΘΙΊΪΚΛΜΝΞΟΌΠΡΣΤΥΎΫΦΧΨΩΏ";
    return a;
  }();
  return alphabet;
}

std::vector<std::u32string> typographic_candidates(std::u32string_view word,
                                                   std::u32string_view alphabet) {
  if (alphabet.empty()) throw InvalidInput("typographic_candidates: empty alphabet");
  std::set<std::u32string> out;
  const std::u32string w(word);

  for (std::size_t i = 0; i < w.size(); ++i) {
    // substitution
    for (char32_t a : alphabet) {
      if (a == w[i]) continue;
      std::u32string s = w;
      s[i] = a;
      out.insert(std::move(s));
    }
    // deletion
    std::u32string d = w;
    d.erase(i, 1);
    out.insert(std::move(d));
  }
  // insertion
  for (std::size_t i = 0; i <= w.size(); ++i) {
    for (char32_t a : alphabet) {
      std::u32string s = w;
      s.insert(s.begin() + static_cast<std::ptrdiff_t>(i), a);
      out.insert(std::move(s));
    }
  }
  // adjacent transposition
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    std::u32string s = w;
    std::swap(s[i], s[i + 1]);
    out.insert(std::move(s));
  }

  out.erase(w);
  return {out.begin(), out.end()};
}

std::vector<Suggestion> suggest(std::u32string_view raw_word, const fsa::Mdag& lexicon,
                                const EquivalenceClassTable& table, const SuggestOptions& options) {
  if (options.limit < 1) throw InvalidInput("suggest: limit must be >= 1");
  const std::u32string word = uni::nfc(raw_word);
  const std::u32string_view alphabet =
      options.alphabet.empty() ? greek_alphabet() : std::u32string_view(options.alphabet);

  std::map<std::u32string, Suggestion> found;
  const auto add = [&](std::u32string candidate, SuggestionSource source) {
    if (found.contains(candidate)) return;
    Suggestion s;
    s.distance = levenshtein(word, candidate);
    s.source = source;
    s.word = std::move(candidate);
    found.emplace(s.word, std::move(s));
  };

  // Typographic pass, filtered by the lexicon.
  const std::vector<std::u32string> candidates = typographic_candidates(word, alphabet);
  for (const auto& c : candidates)
    if (!c.empty() && lexicon.contains(c)) add(c, SuggestionSource::typographic);

  // Phonographic pass: within-class substitutions of the word itself.
  for (auto& m : lexicon.regex_search(expand(segment(word, table), table)))
    add(std::move(m), SuggestionSource::phonographic);

  // Combined pass: expand unfiltered typographic candidates, shortest
  // first, up to the cap.
  std::vector<const std::u32string*> by_length;
  by_length.reserve(candidates.size());
  for (const auto& c : candidates)
    if (!c.empty()) by_length.push_back(&c);
  std::sort(by_length.begin(), by_length.end(), [](const auto* a, const auto* b) {
    if (a->size() != b->size()) return a->size() < b->size();
    return *a < *b;
  });
  if (by_length.size() > options.combined_cap) by_length.resize(options.combined_cap);
  for (const auto* c : by_length)
    for (auto& m : lexicon.regex_search(expand(segment(*c, table), table)))
      add(std::move(m), SuggestionSource::combined);

  std::vector<Suggestion> out;
  out.reserve(found.size());
  for (auto& [_, s] : found) {
    if (options.max_distance && s.distance > *options.max_distance) continue;
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const Suggestion& a, const Suggestion& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    return a.word < b.word;
  });
  if (out.size() > options.limit) out.resize(options.limit);
  return out;
}

std::vector<Token> check_text(std::u32string_view text, const fsa::Mdag& lexicon,
                              std::u32string_view extra_letters) {
  const auto is_letter = [&](char32_t c) {
    return uni::is_greek_letter(c) ||
           extra_letters.find(c) != std::u32string_view::npos;
  };
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_letter(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && is_letter(text[i])) ++i;
    Token t;
    t.text = std::u32string(text.substr(start, i - start));
    t.offset = start;
    t.known = lexicon.contains(t.text);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace lexis::spell
