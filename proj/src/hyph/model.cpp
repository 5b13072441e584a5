#include "lexis/hyph/model.hpp"

#include <algorithm>
#include <functional>

#include "lexis/error.hpp"
#include "lexis/io.hpp"
#include "lexis/unicode.hpp"

namespace lexis::hyph {

namespace {

// Shared rule engine. `resolve(pos)` is consulted at ambiguous bigrams
// whose first vowel sits at `pos`; it returns true to split.
template <class Resolver>
std::vector<std::size_t> rule_cuts(std::u32string_view w, const SyllabificationRules& rules,
                                   Resolver&& resolve, bool& unsyllabifiable) {
  unsyllabifiable = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!rules.in_alphabet(w[i]))
      throw InvalidInput(detail::msg("character '", uni::utf8_encode({&w[i], 1}),
                                     "' at position ", i, " is outside the rule alphabet"));
  }

  std::vector<std::size_t> vowels;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (rules.is_vowel(w[i])) vowels.push_back(i);
  if (vowels.empty()) {
    unsyllabifiable = !w.empty();
    return {};
  }

  std::vector<std::size_t> cuts;

  // Rules 2/3: place the boundary inside each consonant gap between
  // successive vowels.
  for (std::size_t k = 0; k + 1 < vowels.size(); ++k) {
    const std::size_t a = vowels[k];
    const std::size_t b = vowels[k + 1];
    const std::size_t gap = b - a - 1;
    if (gap == 0) continue;  // vowel adjacency, rule 4 below
    if (gap == 1) {
      cuts.push_back(a + 1);
    } else {
      cuts.push_back(rules.legal_onset(w[a + 1], w[a + 2]) ? a + 1 : a + 2);
    }
  }

  // Rule 4: scan each maximal vowel run left to right. 4a combinations
  // and 4b digraphs bind without consuming the second vowel (it may
  // anchor the next pair, e.g. ου + ι). An ambiguous-bigram decision
  // consumes both vowels; the scan resumes after the second one.
  std::size_t r = 0;
  while (r < vowels.size()) {
    std::size_t end = r;
    while (end + 1 < vowels.size() && vowels[end + 1] == vowels[end] + 1) ++end;
    std::size_t i = vowels[r];
    const std::size_t last = vowels[end];
    while (i < last) {
      const char32_t a = w[i];
      const char32_t b = w[i + 1];
      const char32_t prev = i > 0 ? w[i - 1] : 0;
      if (rules.keeps_together_4a(a, b) || rules.digraph_4b(a, b, prev)) {
        i += 1;
      } else if (is_ambiguous_bigram(a, b)) {
        if (resolve(i)) cuts.push_back(i + 1);
        i += 2;
      } else {
        cuts.push_back(i + 1);
        i += 1;
      }
    }
    r = end + 1;
  }

  std::sort(cuts.begin(), cuts.end());
  return cuts;
}

Syllabification to_syllabification(std::u32string_view w, std::vector<std::size_t> cuts,
                                   bool unsyllabifiable) {
  HyphenatedForm form;
  form.word = std::u32string(w);
  form.cuts = std::move(cuts);
  Syllabification out;
  out.syllables = form.syllables();
  out.unsyllabifiable = unsyllabifiable;
  return out;
}

}  // namespace

FeatureVector extract_features(std::u32string_view word, std::size_t pos) {
  FeatureVector f{};
  const auto at = [&](std::ptrdiff_t offset) -> std::int64_t {
    const std::ptrdiff_t i = static_cast<std::ptrdiff_t>(pos) + offset;
    if (i < 0 || i >= static_cast<std::ptrdiff_t>(word.size())) return -1;
    return static_cast<std::int64_t>(word[static_cast<std::size_t>(i)]);
  };
  f[0] = at(-3);
  f[1] = at(-2);
  f[2] = at(-1);
  f[3] = at(+2);
  f[4] = at(+3);
  f[5] = at(+4);
  f[6] = uni::has_tonos(word[pos]) ? 1 : 0;
  f[7] = uni::has_tonos(word[pos + 1]) ? 1 : 0;
  f[8] = static_cast<std::int64_t>(pos);
  f[9] = static_cast<std::int64_t>(word.size());
  return f;
}

Syllabification hyphenate(std::u32string_view raw_word, const HyphenationModel& model) {
  const std::u32string word = uni::nfc(raw_word);
  if (word.empty()) throw InvalidInput("hyphenate: empty word");

  if (const auto it = model.exceptions.find(word); it != model.exceptions.end()) {
    Syllabification out;
    out.syllables = it->second.syllables();
    return out;
  }

  const auto resolve = [&](std::size_t pos) {
    const auto it = model.trees.find(bigram_key(word[pos], word[pos + 1]));
    if (it == model.trees.end()) return false;  // conservative: keep together
    return it->second.classify(extract_features(word, pos));
  };
  bool unsyllabifiable = false;
  auto cuts = rule_cuts(word, model.rules, resolve, unsyllabifiable);
  return to_syllabification(word, std::move(cuts), unsyllabifiable);
}

Syllabification deterministic_oracle(std::u32string_view raw_word,
                                     const SyllabificationRules& rules, FixedPolicy policy) {
  const std::u32string word = uni::nfc(raw_word);
  if (word.empty()) throw InvalidInput("deterministic_oracle: empty word");
  bool unsyllabifiable = false;
  auto cuts = rule_cuts(
      word, rules, [&](std::size_t) { return policy == FixedPolicy::always_split; },
      unsyllabifiable);
  return to_syllabification(word, std::move(cuts), unsyllabifiable);
}

std::vector<TrainingPattern> extract_patterns(std::span<const HyphenatedForm> corpus,
                                              std::u32string_view bigram) {
  std::vector<TrainingPattern> out;
  for (const auto& form : corpus) {
    const std::u32string& w = form.word;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (uni::greek_tolower(w[i]) != bigram[0] || uni::greek_tolower(w[i + 1]) != bigram[1])
        continue;
      TrainingPattern p;
      p.features = extract_features(w, i);
      p.split = std::binary_search(form.cuts.begin(), form.cuts.end(), i + 1);
      out.push_back(p);
    }
  }
  return out;
}

std::map<std::u32string, DecisionTree> train_trees(std::span<const HyphenatedForm> corpus,
                                                   std::size_t min_patterns) {
  std::map<std::u32string, DecisionTree> trees;
  for (const auto bigram : ambiguous_bigrams()) {
    auto patterns = extract_patterns(corpus, bigram);
    if (patterns.empty()) continue;
    trees.emplace(std::u32string(bigram), DecisionTree::train(patterns, min_patterns));
  }
  return trees;
}

std::map<std::u32string, HyphenatedForm> build_exceptions(
    std::span<const HyphenatedForm> corpus, const HyphenationModel& model,
    std::span<const HyphenatedForm> homographs) {
  HyphenationModel bare;
  bare.rules = model.rules;
  bare.trees = model.trees;

  std::map<std::u32string, HyphenatedForm> exceptions;
  for (const auto& form : corpus) {
    bool matches = false;
    try {
      const auto predicted = hyphenate(form.word, bare);
      matches = !predicted.unsyllabifiable && predicted.syllables == form.syllables();
    } catch (const InvalidInput&) {
      matches = false;  // outside the rule alphabet: only the list can handle it
    }
    if (!matches) exceptions[form.word] = form;
  }
  for (const auto& form : homographs) exceptions[form.word] = form;
  return exceptions;
}

double BigramRow::split_pct() const {
  return occurrences == 0 ? 0.0 : 100.0 * static_cast<double>(splits) / static_cast<double>(occurrences);
}

double BigramRow::nonsplit_pct() const { return occurrences == 0 ? 0.0 : 100.0 - split_pct(); }

double AmbiguityReport::ambiguous_fraction() const {
  return forms == 0 ? 0.0
                    : static_cast<double>(forms_with_ambiguous) / static_cast<double>(forms);
}

AmbiguityReport ambiguity_stats(std::span<const HyphenatedForm> corpus) {
  AmbiguityReport report;
  report.forms = corpus.size();
  std::map<std::u32string, BigramRow> rows;
  for (const auto bigram : ambiguous_bigrams()) {
    BigramRow row;
    row.bigram = std::u32string(bigram);
    rows.emplace(row.bigram, std::move(row));
  }
  for (const auto& form : corpus) {
    bool any = false;
    const std::u32string& w = form.word;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const auto it = rows.find(bigram_key(w[i], w[i + 1]));
      if (it == rows.end()) continue;
      any = true;
      it->second.occurrences += 1;
      if (std::binary_search(form.cuts.begin(), form.cuts.end(), i + 1)) it->second.splits += 1;
    }
    if (any) report.forms_with_ambiguous += 1;
  }
  for (auto& [_, row] : rows) {
    report.total_occurrences += row.occurrences;
    report.total_splits += row.splits;
    report.rows.push_back(std::move(row));
  }
  std::sort(report.rows.begin(), report.rows.end(), [](const BigramRow& a, const BigramRow& b) {
    if (a.occurrences != b.occurrences) return a.occurrences > b.occurrences;
    return a.bigram < b.bigram;
  });
  return report;
}

namespace {

nlohmann::ordered_json strings_to_json(const std::vector<std::u32string>& v) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& s : v) arr.push_back(uni::utf8_encode(s));
  return arr;
}

std::vector<std::u32string> strings_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array()) throw FormatError(detail::msg("model: ", what, " is not an array"));
  std::vector<std::u32string> out;
  for (const auto& e : j) out.push_back(uni::decode_nfc(e.get<std::string>()));
  return out;
}

}  // namespace

std::string HyphenationModel::to_json_text() const {
  nlohmann::ordered_json j;
  j["format"] = "hyphenation-model";
  j["version"] = 1;
  j["alphabet"]["vowels"] = uni::utf8_encode(rules.vowels());
  j["alphabet"]["consonants"] = uni::utf8_encode(rules.consonants());
  j["alphabet"]["onsets"] = strings_to_json(rules.onsets());
  j["alphabet"]["combinations"] = strings_to_json(rules.combinations_4a());
  j["alphabet"]["digraphs"] = strings_to_json(rules.digraphs_4b());
  nlohmann::ordered_json trees_json = nlohmann::ordered_json::object();
  for (const auto& [bigram, tree] : trees) trees_json[uni::utf8_encode(bigram)] = tree.to_json();
  j["trees"] = std::move(trees_json);
  nlohmann::ordered_json exc = nlohmann::ordered_json::object();
  for (const auto& [word, form] : exceptions) exc[uni::utf8_encode(word)] = form.to_line();
  j["exceptions"] = std::move(exc);
  return j.dump(1, '\t') + "\n";
}

HyphenationModel HyphenationModel::parse(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(detail::msg("model: ", e.what()));
  }
  try {
    if (j.value("format", "") != "hyphenation-model")
      throw FormatError("model: missing or wrong format tag");
    if (j.value("version", 0) != 1)
      throw FormatError(detail::msg("model: unsupported version ", j.value("version", 0)));

    HyphenationModel model;
    const auto& alphabet = j.at("alphabet");
    model.rules = SyllabificationRules(
        uni::decode_nfc(alphabet.at("vowels").get<std::string>()),
        uni::decode_nfc(alphabet.at("consonants").get<std::string>()),
        strings_from_json(alphabet.at("onsets"), "onsets"),
        strings_from_json(alphabet.at("combinations"), "combinations"),
        strings_from_json(alphabet.at("digraphs"), "digraphs"));

    for (const auto& [name, tree_json] : j.at("trees").items()) {
      const std::u32string bigram = uni::decode_nfc(name);
      bool known = false;
      for (const auto b : ambiguous_bigrams())
        if (b == bigram) known = true;
      if (!known)
        throw FormatError(detail::msg("model: '", name, "' is not an ambiguous bigram"));
      model.trees.emplace(bigram, DecisionTree::from_json(tree_json));
    }

    for (const auto& [word_utf8, line] : j.at("exceptions").items()) {
      HyphenatedForm form = parse_hyphenated(uni::decode_nfc(line.get<std::string>()));
      if (uni::utf8_encode(form.word) != word_utf8)
        throw FormatError(detail::msg("model: exception '", word_utf8,
                                      "' does not match its hyphenation"));
      for (const auto& syllable : form.syllables()) {
        const bool has_vowel =
            std::any_of(syllable.begin(), syllable.end(),
                        [&](char32_t c) { return model.rules.is_vowel(c); });
        if (!has_vowel)
          throw FormatError(detail::msg("model: exception '", word_utf8,
                                        "' has a vowelless syllable"));
      }
      model.exceptions.emplace(form.word, std::move(form));
    }
    return model;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(detail::msg("model: ", e.what()));
  }
}

void HyphenationModel::save(const std::filesystem::path& path) const {
  io::write_text_file(path, to_json_text());
}

HyphenationModel HyphenationModel::load(const std::filesystem::path& path) {
  try {
    return parse(io::read_text_file(path));
  } catch (const FormatError& e) {
    throw FormatError(detail::msg(path.string(), ": ", e.what()));
  }
}

}  // namespace lexis::hyph
