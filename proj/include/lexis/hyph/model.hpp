#pragma once

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexis/hyph/corpus.hpp"
#include "lexis/hyph/decision_tree.hpp"
#include "lexis/hyph/rules.hpp"

namespace lexis::hyph {

/// Hybrid hyphenator state: deterministic rule tables, one decision tree
/// per ambiguous vowel bigram, and an exception list that wins outright.
/// Immutable once trained; hyphenate is pure.
struct HyphenationModel {
  SyllabificationRules rules = SyllabificationRules::modern_greek();
  std::map<std::u32string, DecisionTree> trees;          // keyed by folded bigram
  std::map<std::u32string, HyphenatedForm> exceptions;   // word -> stored hyphenation

  void save(const std::filesystem::path& path) const;
  static HyphenationModel load(const std::filesystem::path& path);
  std::string to_json_text() const;
  static HyphenationModel parse(std::string_view json_text);
};

struct Syllabification {
  std::vector<std::u32string> syllables;
  /// Word had no vowel: returned whole, cannot be split.
  bool unsyllabifiable = false;
};

/// Exception list first (exact match wins), then rules 1-4b left to
/// right, decision trees at ambiguous bigrams (conservative no-split when
/// no tree is trained). Throws InvalidInput for characters outside the
/// rule alphabet.
Syllabification hyphenate(std::u32string_view word, const HyphenationModel& model);

enum class FixedPolicy { always_split, never_split };

/// Reference run of rules 1-4b with a fixed policy in place of the
/// decision trees; no exceptions. Used for differential testing.
Syllabification deterministic_oracle(std::u32string_view word, const SyllabificationRules& rules,
                                     FixedPolicy policy);

/// Features for the bigram occurrence whose first vowel sits at `pos`.
FeatureVector extract_features(std::u32string_view word, std::size_t pos);

/// One training pattern per literal occurrence of `bigram` in a corpus
/// form (case-folded match); the label records whether a syllable
/// boundary falls between the bigram's two vowels.
std::vector<TrainingPattern> extract_patterns(std::span<const HyphenatedForm> corpus,
                                              std::u32string_view bigram);

/// Trains one tree per ambiguous bigram that occurs in the corpus.
std::map<std::u32string, DecisionTree> train_trees(std::span<const HyphenatedForm> corpus,
                                                   std::size_t min_patterns = 2);

/// Every corpus form the rules+trees mishandle, stored with its corpus
/// hyphenation, plus all homograph entries (conservative hyphenations
/// supplied by the caller), which override.
std::map<std::u32string, HyphenatedForm> build_exceptions(
    std::span<const HyphenatedForm> corpus, const HyphenationModel& model,
    std::span<const HyphenatedForm> homographs = {});

struct BigramRow {
  std::u32string bigram;
  std::uint64_t occurrences = 0;
  std::uint64_t splits = 0;
  double split_pct() const;
  double nonsplit_pct() const;
};

struct AmbiguityReport {
  std::vector<BigramRow> rows;  // all 24 bigrams, occurrence count descending
  std::uint64_t total_occurrences = 0;
  std::uint64_t total_splits = 0;
  std::uint64_t forms = 0;
  std::uint64_t forms_with_ambiguous = 0;
  double ambiguous_fraction() const;
};

AmbiguityReport ambiguity_stats(std::span<const HyphenatedForm> corpus);

}  // namespace lexis::hyph
