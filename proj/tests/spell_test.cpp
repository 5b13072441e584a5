#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "lexis/error.hpp"
#include "lexis/fsa/wordlist.hpp"
#include "lexis/spell/classes.hpp"
#include "lexis/spell/distance.hpp"
#include "lexis/spell/suggest.hpp"
#include "support/oracles.hpp"
#include "support/testenv.hpp"

using lexis::fsa::Mdag;
using lexis::spell::EquivalenceClassTable;
using lexis::spell::levenshtein;
using lexis::spell::segment;
using lexis::spell::SuggestOptions;
using lexis::spell::Suggestion;
using lexis::spell::SuggestionSource;
using testenv::u8;

namespace {

const EquivalenceClassTable& default_table() {
  static const auto table =
      EquivalenceClassTable::load(testenv::data_dir() / "classes_default.txt");
  return table;
}

Mdag lexicon_of(std::vector<std::u32string> words) {
  return Mdag::build(lexis::fsa::sorted_unique(std::move(words)));
}

}  // namespace

TEST_CASE("levenshtein: worked example distances") {
  CHECK(levenshtein(U"ΠΣΙΧΥ", U"ΨΥΧΗ") == 4);
  CHECK(levenshtein(U"ΠΣΙΧΥ", U"ΨΥΧΕΙ") == 5);
  CHECK(levenshtein(U"ΠΣΙΧΥ", U"ΨΥΧΟΙ") == 5);
  CHECK(levenshtein(U"θέλω", U"θέλω") == 0);
  CHECK(levenshtein(U"", U"θέλω") == 4);
  CHECK(levenshtein(U"θέλω", U"") == 4);
}

TEST_CASE("levenshtein: metric axioms and DP-oracle agreement on random triples") {
  std::mt19937 rng(2024);
  const std::u32string alphabet = U"αβγδεζ";
  std::uniform_int_distribution<std::size_t> len(0, 10);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  const auto word = [&] {
    std::u32string w;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) w.push_back(alphabet[pick(rng)]);
    return w;
  };
  for (int round = 0; round < 1000; ++round) {
    const auto a = word(), b = word(), c = word();
    const auto ab = levenshtein(a, b), ba = levenshtein(b, a);
    const auto bc = levenshtein(b, c), ac = levenshtein(a, c);
    CHECK(ab == ba);                       // symmetry
    CHECK((ab == 0) == (a == b));          // identity of indiscernibles
    CHECK(ac <= ab + bc);                  // triangle inequality
    CHECK(ab == oracle::dp_levenshtein(a, b));
  }
}

TEST_CASE("classes: parsing, merging and lookups") {
  const auto table = EquivalenceClassTable::parse("α ο\nβ δ\n");
  CHECK(table.size() == 2);
  CHECK(table.class_of(U"α") == table.class_of(U"ο"));
  CHECK(table.class_of(U"α") != table.class_of(U"β"));
  CHECK_FALSE(table.class_of(U"ζ").has_value());

  // Shared grapheme merges classes into one.
  const auto merged = EquivalenceClassTable::parse("λλ λ\nμ λ\n");
  CHECK(merged.size() == 1);
  CHECK(merged.members(0).size() == 3);

  CHECK_THROWS_WITH_AS(static_cast<void>(EquivalenceClassTable::parse("α\n")),
                       doctest::Contains("at least 2"), lexis::InvalidInput);
  CHECK_THROWS_WITH_AS(static_cast<void>(EquivalenceClassTable::parse("α α\n")),
                       doctest::Contains("duplicate"), lexis::InvalidInput);
}

TEST_CASE("classes: the shipped default table") {
  const auto& table = default_table();
  // πσ/ψ confusion pair, both cases.
  CHECK(table.class_of(U"πσ") == table.class_of(U"ψ"));
  CHECK(table.class_of(U"ΠΣ") == table.class_of(U"Ψ"));
  // The ι-family holds the digraphs too.
  CHECK(table.class_of(U"ι") == table.class_of(U"οι"));
  CHECK(table.class_of(U"Υ") == table.class_of(U"ΕΙ"));
  // Optical overlap (β/θ and ο/θ) merged into one class.
  CHECK(table.class_of(U"β") == table.class_of(U"ο"));
}

TEST_CASE("segment: longest match, unclassed fall-through, losslessness") {
  const auto& table = default_table();

  const auto seg = segment(U"πσιχυ", table);
  REQUIRE(seg.size() == 4);
  CHECK(seg[0].text == U"πσ");
  CHECK(seg[0].cls == table.class_of(U"ψ"));
  CHECK(seg[1].text == U"ι");
  CHECK(seg[2].text == U"χ");
  CHECK_FALSE(seg[2].cls.has_value());
  CHECK(seg[3].text == U"υ");
  CHECK(seg[3].cls == table.class_of(U"ι"));

  // Longest match: αι is one segment, not [α][ι].
  const auto ai = segment(U"αι", table);
  REQUIRE(ai.size() == 1);
  CHECK(ai[0].text == U"αι");
  CHECK(ai[0].cls == table.class_of(U"ε"));

  // ζ belongs to no class.
  const auto zzz = segment(U"ζζζ", table);
  REQUIRE(zzz.size() == 3);
  for (const auto& s : zzz) CHECK_FALSE(s.cls.has_value());

  // Lossless for arbitrary strings, including empty.
  CHECK(segment(U"", table).empty());
  std::mt19937 rng(5);
  for (int round = 0; round < 200; ++round) {
    const auto words = oracle::random_words(rng, U"αβγδειουψπσζ", 1, 1, 15);
    std::u32string joined;
    for (const auto& s : segment(words[0], table)) joined += s.text;
    CHECK(joined == words[0]);
  }
}

TEST_CASE("expand: groups mirror segments; the word always matches itself") {
  const auto& table = default_table();
  const auto regex = expand(segment(U"πσιχυ", table), table);
  REQUIRE(regex.groups.size() == 4);
  CHECK(regex.groups[0].size() == 2);   // πσ | ψ
  CHECK(regex.groups[2] == std::vector<std::u32string>{U"χ"});
  CHECK(regex.groups[1] == regex.groups[3]);
  CHECK(regex.groups[1].size() == 16);  // the ι family

  // A fully unclassed word expands to itself only.
  const auto literal = expand(segment(U"ζζ", table), table);
  CHECK(oracle::expand_all(literal) == std::vector<std::u32string>{U"ζζ"});

  // Expansion always contains the original word.
  std::mt19937 rng(6);
  for (int round = 0; round < 100; ++round) {
    const auto words = oracle::random_words(rng, U"αβγδειουψπσ", 1, 1, 8);
    const auto all = oracle::expand_all(expand(segment(words[0], table), table));
    CHECK(std::find(all.begin(), all.end(), words[0]) != all.end());
  }
}

TEST_CASE("typographic_candidates: membership and count oracle") {
  const auto candidates = lexis::spell::typographic_candidates(U"θλω", lexis::spell::greek_alphabet());
  const std::set<std::u32string> set(candidates.begin(), candidates.end());
  CHECK(set.contains(U"θέλω"));  // insertion of έ
  CHECK_FALSE(set.contains(U"θλω"));

  // Degenerate deletion: a one-character word contributes the empty string.
  const auto single = lexis::spell::typographic_candidates(U"α", U"αβ");
  CHECK(std::find(single.begin(), single.end(), U"") != single.end());

  // Count-and-dedupe oracle on short words over a small alphabet.
  std::mt19937 rng(77);
  const std::u32string alphabet = U"αβγ";
  for (int round = 0; round < 50; ++round) {
    const auto words = oracle::random_words(rng, alphabet, 1, 1, 5);
    const auto& w = words[0];
    std::set<std::u32string> expect;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (char32_t a : alphabet)
        if (a != w[i]) {
          auto s = w;
          s[i] = a;
          expect.insert(s);
        }
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto s = w;
      s.erase(i, 1);
      expect.insert(s);
    }
    for (std::size_t i = 0; i <= w.size(); ++i)
      for (char32_t a : alphabet) {
        auto s = w;
        s.insert(s.begin() + static_cast<std::ptrdiff_t>(i), a);
        expect.insert(s);
      }
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      auto s = w;
      std::swap(s[i], s[i + 1]);
      expect.insert(s);
    }
    expect.erase(w);
    const auto got = lexis::spell::typographic_candidates(w, alphabet);
    CHECK(got == std::vector<std::u32string>(expect.begin(), expect.end()));
    // Raw multiset size minus collisions equals the set size.
    const std::size_t raw = w.size() * (alphabet.size() - 1) + (w.size() + 1) * alphabet.size() +
                            w.size() + (w.size() - 1);
    CHECK(got.size() <= raw);
  }
}

TEST_CASE("suggest: the ΠΣΙΧΥ worked example") {
  const auto& table = default_table();
  const Mdag lex = lexicon_of({U"ΨΥΧΗ", U"ΨΥΧΕΙ", U"ΨΥΧΟΙ"});
  const auto suggestions = lexis::spell::suggest(U"ΠΣΙΧΥ", lex, table);

  REQUIRE(suggestions.size() == 3);
  CHECK(suggestions[0].word == U"ΨΥΧΗ");
  CHECK(suggestions[0].distance == 4);
  CHECK(suggestions[1].word == U"ΨΥΧΕΙ");
  CHECK(suggestions[1].distance == 5);
  CHECK(suggestions[2].word == U"ΨΥΧΟΙ");
  CHECK(suggestions[2].distance == 5);
  CHECK(suggestions[0].source == SuggestionSource::phonographic);

  // ΨΑΡΙ in the lexicon does not leak into the list.
  const Mdag lex2 = lexicon_of({U"ΨΥΧΗ", U"ΨΥΧΕΙ", U"ΨΥΧΟΙ", U"ΨΑΡΙ"});
  const auto again = lexis::spell::suggest(U"ΠΣΙΧΥ", lex2, table);
  REQUIRE(again.size() == 3);
  CHECK(again[0].word == U"ΨΥΧΗ");
}

TEST_CASE("suggest: known word comes back at distance 0 in first position") {
  const auto& table = default_table();
  const Mdag lex = lexicon_of({U"θέλω", U"θέμα", U"μέλω"});
  const auto suggestions = lexis::spell::suggest(U"θέλω", lex, table);
  REQUIRE(!suggestions.empty());
  CHECK(suggestions[0].word == U"θέλω");
  CHECK(suggestions[0].distance == 0);
}

TEST_CASE("suggest: typographic pass finds one-edit corrections") {
  const auto& table = default_table();
  const Mdag lex = lexicon_of({U"θέλω", U"παράθυρο"});
  const auto suggestions = lexis::spell::suggest(U"θλω", lex, table);
  REQUIRE(!suggestions.empty());
  CHECK(suggestions[0].word == U"θέλω");
  CHECK(suggestions[0].distance == 1);
  CHECK(suggestions[0].source == SuggestionSource::typographic);
}

TEST_CASE("suggest: limit, max-distance, determinism") {
  const auto& table = default_table();
  const Mdag lex = lexicon_of({U"θέλω", U"θέλα", U"θέλη", U"μέλο"});
  SuggestOptions opts;
  opts.limit = 2;
  auto s = lexis::spell::suggest(U"θέλο", lex, table, opts);
  CHECK(s.size() == 2);

  opts.limit = 10;
  opts.max_distance = 1;
  s = lexis::spell::suggest(U"θέλο", lex, table, opts);
  for (const auto& x : s) CHECK(x.distance <= 1);

  opts.max_distance.reset();
  const auto once = lexis::spell::suggest(U"θέλο", lex, table, opts);
  const auto twice = lexis::spell::suggest(U"θέλο", lex, table, opts);
  REQUIRE(once.size() == twice.size());
  for (std::size_t i = 0; i < once.size(); ++i) CHECK(once[i].word == twice[i].word);

  opts.limit = 0;
  CHECK_THROWS_AS(static_cast<void>(lexis::spell::suggest(U"θέλο", lex, table, opts)),
                  lexis::InvalidInput);
}

TEST_CASE("suggest: ranking soundness against a full-lexicon scan") {
  const auto& table = default_table();
  std::mt19937 rng(404);
  const std::u32string alphabet = U"αβγδειου";
  for (int round = 0; round < 10; ++round) {
    const auto words = oracle::random_words(rng, alphabet, 300, 2, 8);
    const Mdag lex = Mdag::build(words);
    const auto probes = oracle::random_words(rng, alphabet, 20, 2, 9);
    for (const auto& probe : probes) {
      SuggestOptions opts;
      opts.limit = 1000;
      const auto suggestions = lexis::spell::suggest(probe, lex, table, opts);
      std::size_t prev = 0;
      for (const auto& s : suggestions) {
        CHECK(lex.contains(s.word));                          // members are lexicon words
        CHECK(s.distance == levenshtein(probe, s.word));      // distances are exact
        CHECK(s.distance >= prev);                            // non-decreasing
        prev = s.distance;
      }
    }
  }
}

TEST_CASE("suggest: phonographic completeness for within-class substitutions") {
  const auto& table = default_table();
  std::mt19937 rng(808);
  const std::u32string alphabet = U"αβγδειουηψ";
  for (int round = 0; round < 30; ++round) {
    const auto words = oracle::random_words(rng, alphabet, 80, 2, 7);
    const Mdag lex = Mdag::build(words);
    // Pick a lexicon word, substitute class members in its segmentation.
    const auto& v = words[round % words.size()];
    const auto seg = segment(v, table);
    std::u32string w;
    std::uniform_int_distribution<std::size_t> coin(0, 1);
    for (const auto& s : seg) {
      if (s.cls && coin(rng)) {
        const auto members = table.members(*s.cls);
        w += members[rng() % members.size()];
      } else {
        w += s.text;
      }
    }
    // The invariant requires the segmentations to correspond class-wise;
    // substitution can shift the greedy segmentation, so check and skip
    // mismatch samples.
    const auto seg_w = segment(w, table);
    if (seg_w.size() != seg.size()) continue;
    bool same_classes = true;
    for (std::size_t i = 0; i < seg.size(); ++i)
      if (seg[i].cls != seg_w[i].cls || (!seg[i].cls && seg[i].text != seg_w[i].text))
        same_classes = false;
    if (!same_classes) continue;

    SuggestOptions opts;
    opts.limit = 100000;
    const auto suggestions = lexis::spell::suggest(w, lex, table, opts);
    const bool found = std::any_of(suggestions.begin(), suggestions.end(),
                                   [&](const Suggestion& s) { return s.word == v; });
    CHECK(found);
  }
}

TEST_CASE("check_text: tokenization, offsets, reconstruction") {
  const Mdag lex = lexicon_of({U"θέλω"});
  const auto tokens = lexis::spell::check_text(U"θέλω ΠΣΙΧΥ.", lex);
  REQUIRE(tokens.size() == 2);
  CHECK(tokens[0].text == U"θέλω");
  CHECK(tokens[0].offset == 0);
  CHECK(tokens[0].known);
  CHECK(tokens[1].text == U"ΠΣΙΧΥ");
  CHECK(tokens[1].offset == 5);
  CHECK_FALSE(tokens[1].known);

  CHECK(lexis::spell::check_text(U"", lex).empty());
  CHECK(lexis::spell::check_text(U"123 ... !", lex).empty());

  // Extra letters join tokens.
  const auto latin = lexis::spell::check_text(U"abθέλωab", lex, U"ab");
  REQUIRE(latin.size() == 1);
  CHECK(latin[0].text == U"abθέλωab");

  // Tokens plus skipped separators reconstruct the input.
  std::mt19937 rng(11);
  const std::u32string mixed = U"αβγθέλω ,.;12\nψωχ";
  for (int round = 0; round < 100; ++round) {
    std::u32string text;
    std::uniform_int_distribution<std::size_t> len(0, 30);
    std::uniform_int_distribution<std::size_t> pick(0, mixed.size() - 1);
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) text.push_back(mixed[pick(rng)]);
    const auto toks = lexis::spell::check_text(text, lex);
    std::u32string rebuilt = text;
    for (const auto& t : toks)
      for (std::size_t i = 0; i < t.text.size(); ++i) {
        CHECK(rebuilt[t.offset + i] == t.text[i]);
      }
  }
}

TEST_CASE("error categories are declared; grammatical is never produced") {
  using lexis::spell::ErrorCategory;
  CHECK(lexis::spell::to_string(ErrorCategory::typographic) == "typographic");
  CHECK(lexis::spell::to_string(ErrorCategory::morphological) == "morphological");
  CHECK(lexis::spell::to_string(ErrorCategory::pronunciation) == "pronunciation");
  CHECK(lexis::spell::to_string(ErrorCategory::grammatical) == "grammatical");
  CHECK(lexis::spell::to_string(SuggestionSource::combined) == "combined");
}
