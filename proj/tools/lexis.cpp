// lexis: proofing-tools command line.
//   build / stats / bench        lexicon compilation and measurement
//   spell check | suggest        spelling
//   hyph split | train | exceptions | stats
//   thes lookup | check | stats

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <thread>

#include "lexis/error.hpp"
#include "lexis/fsa/mdag.hpp"
#include "lexis/fsa/trie.hpp"
#include "lexis/fsa/wordlist.hpp"
#include "lexis/hyph/model.hpp"
#include "lexis/io.hpp"
#include "lexis/spell/suggest.hpp"
#include "lexis/thes/thesaurus.hpp"
#include "lexis/unicode.hpp"

namespace fs = std::filesystem;
using lexis::uni::utf8_encode;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitError = 2;

struct Config {
  std::optional<fs::path> classes;
  std::optional<fs::path> lexicon;
  std::optional<fs::path> hyph_model;
  std::optional<fs::path> thesaurus;
  std::optional<std::size_t> limit;
  std::optional<std::size_t> max_distance;
  std::string format = "text";
};

Config load_config(const fs::path& path) {
  Config cfg;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(lexis::io::read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw lexis::FormatError(lexis::detail::msg("config ", path.string(), ": ", e.what()));
  }
  const auto take_path = [&](const char* key, std::optional<fs::path>& out) {
    if (!j.contains(key)) return;
    out = fs::path(j[key].get<std::string>());
    if (!fs::exists(*out))
      throw lexis::InvalidInput(
          lexis::detail::msg("config ", key, ": path does not exist: ", out->string()));
  };
  take_path("classes", cfg.classes);
  take_path("lexicon", cfg.lexicon);
  take_path("hyph_model", cfg.hyph_model);
  take_path("thesaurus", cfg.thesaurus);
  if (j.contains("limit")) {
    cfg.limit = j["limit"].get<std::size_t>();
    if (*cfg.limit < 1) throw lexis::InvalidInput("config limit: must be >= 1");
  }
  if (j.contains("max_distance")) cfg.max_distance = j["max_distance"].get<std::size_t>();
  if (j.contains("format")) {
    cfg.format = j["format"].get<std::string>();
    if (cfg.format != "text" && cfg.format != "tsv")
      throw lexis::InvalidInput("config format: must be 'text' or 'tsv'");
  }
  return cfg;
}

lexis::fsa::Mdag load_mdag(const fs::path& path) {
  return lexis::fsa::Mdag::deserialize(lexis::io::read_binary_file(path));
}

void print_stats(const lexis::fsa::AutomatonStats& s) {
  std::cout << "nodes=" << s.nodes << " transitions=" << s.transitions
            << " terminals=" << s.terminals << " bytes=" << s.bytes << "\n";
}

std::string pct(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", value);
  return buf;
}

std::string join(const std::vector<std::u32string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += utf8_encode(v[i]);
  }
  return out;
}

std::string cpu_description() {
  std::ifstream in("/proc/cpuinfo");
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("model name", 0) == 0) {
      const auto colon = line.find(':');
      if (colon != std::string::npos) return line.substr(colon + 2);
    }
  }
  return "unknown cpu";
}

// ----------------------------------------------------------------------
// build / stats / bench

int cmd_build(const fs::path& wordlist, const fs::path& out) {
  auto words = lexis::fsa::load_word_list(wordlist);
  const std::uintmax_t raw_bytes = fs::file_size(wordlist);
  words = lexis::fsa::sorted_unique(std::move(words));
  const auto mdag = lexis::fsa::Mdag::build(words);
  lexis::io::write_binary_file(out, mdag.serialize());
  const auto s = mdag.stats();
  print_stats(s);
  std::cout << "raw_bytes=" << raw_bytes << " compiled_bytes=" << s.bytes << " ratio="
            << pct(raw_bytes ? 100.0 * static_cast<double>(s.bytes) / static_cast<double>(raw_bytes)
                             : 0.0)
            << "%\n";
  return kExitOk;
}

int cmd_stats(const fs::path& path) {
  const auto bytes = lexis::io::read_binary_file(path);
  if (bytes.size() >= 4 && bytes[0] == 'M') {
    print_stats(lexis::fsa::Mdag::deserialize(bytes).stats());
  } else if (bytes.size() >= 4 && bytes[0] == 'T') {
    print_stats(lexis::fsa::Trie::deserialize(bytes).stats());
  } else {
    throw lexis::FormatError(lexis::detail::msg(path.string(), ": unrecognized header"));
  }
  return kExitOk;
}

int cmd_bench(const fs::path& lexicon_path, const fs::path& query_path, std::size_t iterations,
              std::size_t threads, const std::optional<fs::path>& classes_path,
              std::size_t suggest_count) {
  using clock = std::chrono::steady_clock;
  const auto mdag = load_mdag(lexicon_path);
  const auto queries = lexis::fsa::load_word_list(query_path);
  if (queries.empty()) throw lexis::InvalidInput("bench: empty query file");

  std::cout << "# cpu: " << cpu_description() << "\n";
  std::cout << "# lexicon: " << mdag.stats().terminals << " transitions=" << mdag.stats().transitions
            << " compiled_bytes=" << mdag.stats().bytes << "\n";
  std::cout << "# queries: " << queries.size() << "  iterations: " << iterations << "\n";

  const auto run_once = [&] {
    const auto start = clock::now();
    std::size_t hits = 0;
    for (const auto& q : queries)
      if (mdag.contains(q)) ++hits;
    const std::chrono::duration<double> elapsed = clock::now() - start;
    return std::pair<double, std::size_t>(static_cast<double>(queries.size()) / elapsed.count(),
                                          hits);
  };

  std::vector<double> rates;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < iterations; ++i) {
    const auto [rate, h] = run_once();
    rates.push_back(rate);
    hits = h;
  }
  std::sort(rates.begin(), rates.end());
  const double median = rates[rates.size() / 2];
  std::cout << "lookup_single_thread_words_per_s=" << static_cast<std::uint64_t>(median)
            << " hits=" << hits << "\n";

  if (threads > 1) {
    const auto start = clock::now();
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        volatile std::size_t sink = 0;
        for (const auto& q : queries)
          if (mdag.contains(q)) sink = sink + 1;
      });
    for (auto& t : pool) t.join();
    const std::chrono::duration<double> elapsed = clock::now() - start;
    const double aggregate = static_cast<double>(queries.size() * threads) / elapsed.count();
    std::cout << "lookup_threads_" << threads
              << "_words_per_s=" << static_cast<std::uint64_t>(aggregate) << "\n";
  }

  if (classes_path) {
    const auto table = lexis::spell::EquivalenceClassTable::load(*classes_path);
    std::vector<std::u32string> unknown;
    for (const auto& q : queries) {
      if (unknown.size() >= suggest_count) break;
      if (!mdag.contains(q)) unknown.push_back(q);
    }
    // Pad with mutated queries when the file has too few unknown words.
    for (std::size_t i = 0; unknown.size() < suggest_count && i < queries.size(); ++i) {
      auto w = queries[i] + U"ξψ";
      if (!mdag.contains(w)) unknown.push_back(std::move(w));
    }
    std::vector<double> latencies;
    for (const auto& w : unknown) {
      const auto start = clock::now();
      const auto suggestions = lexis::spell::suggest(w, mdag, table);
      const std::chrono::duration<double, std::milli> elapsed = clock::now() - start;
      latencies.push_back(elapsed.count());
      if (!suggestions.empty() && latencies.size() == 1)
        std::cout << "# first suggestion: " << utf8_encode(suggestions[0].word) << "\n";
    }
    std::sort(latencies.begin(), latencies.end());
    if (!latencies.empty()) {
      const auto at = [&](double q) {
        return latencies[std::min(latencies.size() - 1,
                                  static_cast<std::size_t>(q * static_cast<double>(latencies.size())))];
      };
      std::cout << "suggest_latency_ms p50=" << pct(at(0.50)) << " p90=" << pct(at(0.90))
                << " max=" << pct(latencies.back()) << " n=" << latencies.size() << "\n";
    }
  }
  return kExitOk;
}

// ----------------------------------------------------------------------
// spell

int cmd_spell_check(const fs::path& lexicon_path, const fs::path& text_path) {
  const auto mdag = load_mdag(lexicon_path);
  const auto text = lexis::uni::decode_nfc(lexis::io::read_text_file(text_path));
  bool findings = false;
  for (const auto& token : lexis::spell::check_text(text, mdag)) {
    if (token.known) continue;
    findings = true;
    std::cout << token.offset << "\t" << utf8_encode(token.text) << "\n";
  }
  return findings ? kExitFindings : kExitOk;
}

int cmd_spell_suggest(const fs::path& lexicon_path, const std::string& word_utf8,
                      const Config& cfg, std::optional<std::size_t> limit,
                      std::optional<std::size_t> max_distance,
                      std::optional<fs::path> classes_path) {
  if (!classes_path) classes_path = cfg.classes;
  if (!classes_path)
    throw lexis::InvalidInput("spell suggest: no class table (--classes or config)");
  const auto table = lexis::spell::EquivalenceClassTable::load(*classes_path);
  const auto mdag = load_mdag(lexicon_path);

  lexis::spell::SuggestOptions options;
  options.limit = limit ? *limit : cfg.limit.value_or(10);
  options.max_distance = max_distance ? max_distance : cfg.max_distance;

  const auto suggestions =
      lexis::spell::suggest(lexis::uni::decode_nfc(word_utf8), mdag, table, options);
  for (const auto& s : suggestions)
    std::cout << utf8_encode(s.word) << "\t" << s.distance << "\t" << to_string(s.source) << "\n";
  return suggestions.empty() ? kExitFindings : kExitOk;
}

// ----------------------------------------------------------------------
// hyph

int cmd_hyph_split(const fs::path& model_path, const std::string& target) {
  const auto model = lexis::hyph::HyphenationModel::load(model_path);
  std::vector<std::u32string> words;
  if (fs::exists(fs::path(target))) {
    words = lexis::fsa::load_word_list(target);
  } else {
    words.push_back(lexis::uni::decode_nfc(target));
  }
  for (const auto& w : words) {
    const auto result = lexis::hyph::hyphenate(w, model);
    std::string line;
    for (std::size_t i = 0; i < result.syllables.size(); ++i) {
      if (i) line.push_back('-');
      line += utf8_encode(result.syllables[i]);
    }
    std::cout << line << "\n";
  }
  return kExitOk;
}

int cmd_hyph_train(const fs::path& corpus_path, const fs::path& out, std::size_t min_patterns) {
  const auto corpus = lexis::hyph::load_corpus(corpus_path);
  lexis::hyph::HyphenationModel model;
  model.trees = lexis::hyph::train_trees(corpus, min_patterns);
  std::size_t patterns = 0;
  for (const auto bigram : lexis::hyph::ambiguous_bigrams())
    patterns += lexis::hyph::extract_patterns(corpus, bigram).size();
  model.save(out);
  std::cout << "forms=" << corpus.size() << " trees=" << model.trees.size()
            << " patterns=" << patterns << "\n";
  return kExitOk;
}

int cmd_hyph_exceptions(const fs::path& corpus_path, const fs::path& model_path,
                        const std::optional<fs::path>& homograph_path,
                        std::optional<fs::path> out) {
  const auto corpus = lexis::hyph::load_corpus(corpus_path);
  auto model = lexis::hyph::HyphenationModel::load(model_path);
  std::vector<lexis::hyph::HyphenatedForm> homographs;
  if (homograph_path) homographs = lexis::hyph::load_corpus(*homograph_path);
  model.exceptions = lexis::hyph::build_exceptions(corpus, model, homographs);
  model.save(out.value_or(model_path));
  std::cout << "exceptions=" << model.exceptions.size() << "\n";
  return kExitOk;
}

int cmd_hyph_stats(const fs::path& corpus_path) {
  const auto corpus = lexis::hyph::load_corpus(corpus_path);
  const auto report = lexis::hyph::ambiguity_stats(corpus);
  std::cout << "# bigram\toccurrences\tsplit_pct\tnonsplit_pct\n";
  for (const auto& row : report.rows)
    std::cout << utf8_encode(row.bigram) << "\t" << row.occurrences << "\t"
              << pct(row.split_pct()) << "\t" << pct(row.nonsplit_pct()) << "\n";
  const double total_split =
      report.total_occurrences
          ? 100.0 * static_cast<double>(report.total_splits) /
                static_cast<double>(report.total_occurrences)
          : 0.0;
  std::cout << "# total\t" << report.total_occurrences << "\t" << pct(total_split) << "\t"
            << pct(report.total_occurrences ? 100.0 - total_split : 0.0) << "\n";
  std::cout << "# forms\t" << report.forms << "\tambiguous\t" << report.forms_with_ambiguous
            << "\tfraction\t" << pct(100.0 * report.ambiguous_fraction()) << "%\n";
  return kExitOk;
}

// ----------------------------------------------------------------------
// thes

int cmd_thes_lookup(const fs::path& path, const std::string& word_utf8, const std::string& format) {
  const auto thesaurus = lexis::thes::Thesaurus::load(path);
  const auto word = lexis::uni::decode_nfc(word_utf8);
  const auto lemmas = thesaurus.lookup(word);
  for (const auto* lemma : lemmas) {
    if (format == "tsv") {
      for (std::size_t m = 0; m < lemma->meanings.size(); ++m) {
        const auto& meaning = lemma->meanings[m];
        std::cout << lemma->id << "\t" << utf8_encode(lemma->headword) << "\t" << m + 1 << "\t"
                  << join(meaning.synonyms, ";") << "\t" << join(meaning.antonyms, ";") << "\t"
                  << join(lemma->style, ";") << "\t" << join(lemma->domain, ";") << "\n";
      }
      continue;
    }
    std::cout << utf8_encode(lemma->headword) << " (id " << lemma->id << ")";
    if (!lemma->style.empty()) std::cout << " [" << join(lemma->style, ", ") << "]";
    if (!lemma->domain.empty()) std::cout << " [" << join(lemma->domain, ", ") << "]";
    std::cout << "\n";
    for (std::size_t m = 0; m < lemma->meanings.size(); ++m) {
      const auto& meaning = lemma->meanings[m];
      std::cout << "  " << m + 1 << ") " << join(meaning.synonyms, ", ");
      if (!meaning.antonyms.empty())
        std::cout << " | αντίθετα: " << join(meaning.antonyms, ", ");
      std::cout << "\n";
      for (const auto& example : meaning.examples)
        std::cout << "     π.χ. " << utf8_encode(example) << "\n";
    }
  }
  return lemmas.empty() ? kExitFindings : kExitOk;
}

int cmd_thes_check(const fs::path& path) {
  const auto thesaurus = lexis::thes::Thesaurus::load(path);
  const auto report = thesaurus.check_closure();
  for (const auto& v : report.violations)
    std::cout << "lemma " << v.lemma_id << "\tmeaning " << v.meaning_index + 1 << "\t"
              << (v.relation == lexis::thes::Thesaurus::Relation::synonym ? "synonym" : "antonym")
              << "\t" << utf8_encode(v.word) << "\n";
  std::cout << "# resolved: headword=" << report.headword_matches
            << " form_only=" << report.form_only_matches
            << " violations=" << report.violations.size() << "\n";
  return report.closed() ? kExitOk : kExitFindings;
}

int cmd_thes_stats(const fs::path& path) {
  const auto thesaurus = lexis::thes::Thesaurus::load(path);
  std::cout << "lemmas=" << thesaurus.lemmas().size() << " forms=" << thesaurus.form_count()
            << "\n";
  std::cout << "index: ";
  print_stats(thesaurus.form_index().stats());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proofing tools for Modern Greek: lexicon automata, spelling, hyphenation, thesaurus"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON config with default paths and options (env: LEXIS_CONFIG)")
      ->envname("LEXIS_CONFIG");

  Config cfg;
  std::function<int()> action;

  // build
  {
    auto* build = app.add_subcommand("build", "Compile a word list into an automaton");
    auto wordlist = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    build->add_option("wordlist", *wordlist, "UTF-8 word list, one word per line")->required();
    build->add_option("-o,--output", *out, "Output path for the compiled automaton")->required();
    build->callback([&action, wordlist, out] {
      action = [=] { return cmd_build(*wordlist, *out); };
    });
  }

  // stats
  {
    auto* stats = app.add_subcommand("stats", "Print stats of a compiled automaton");
    auto path = std::make_shared<std::string>();
    stats->add_option("file", *path, "Compiled automaton")->required();
    stats->callback([&action, path] {
      action = [=] { return cmd_stats(*path); };
    });
  }

  // bench
  {
    auto* bench = app.add_subcommand("bench", "Measure lookup throughput and suggestion latency");
    auto lexicon = std::make_shared<std::string>();
    auto queries = std::make_shared<std::string>();
    auto iterations = std::make_shared<std::size_t>(5);
    auto threads = std::make_shared<std::size_t>(4);
    auto classes = std::make_shared<std::string>();
    auto suggest_n = std::make_shared<std::size_t>(100);
    bench->add_option("lexicon", *lexicon, "Compiled spelling lexicon")->required();
    bench->add_option("queries", *queries, "Query word list")->required();
    bench->add_option("--iterations", *iterations, "Timing repetitions (median reported)");
    bench->add_option("--threads", *threads, "Reader threads for the aggregate number");
    bench->add_option("--classes", *classes, "Class table; enables the suggestion benchmark");
    bench->add_option("--suggest", *suggest_n, "How many unknown words to time");
    bench->callback([&action, lexicon, queries, iterations, threads, classes, suggest_n] {
      action = [=] {
        return cmd_bench(*lexicon, *queries, *iterations, *threads,
                         classes->empty() ? std::nullopt : std::optional<fs::path>(*classes),
                         *suggest_n);
      };
    });
  }

  // spell
  {
    auto* spell = app.add_subcommand("spell", "Spelling check and correction");
    spell->require_subcommand(1);

    auto* check = spell->add_subcommand("check", "Report unknown words in a text file");
    auto check_lexicon = std::make_shared<std::string>();
    auto check_text_path = std::make_shared<std::string>();
    check->add_option("lexicon", *check_lexicon, "Compiled spelling lexicon")->required();
    check->add_option("textfile", *check_text_path, "UTF-8 text to check")->required();
    check->callback([&action, check_lexicon, check_text_path] {
      action = [=] { return cmd_spell_check(*check_lexicon, *check_text_path); };
    });

    auto* suggest = spell->add_subcommand("suggest", "Ranked corrections for a word");
    auto sug_lexicon = std::make_shared<std::string>();
    auto sug_word = std::make_shared<std::string>();
    auto sug_limit = std::make_shared<std::size_t>(0);
    auto sug_maxd = std::make_shared<long>(-1);
    auto sug_classes = std::make_shared<std::string>();
    suggest->add_option("lexicon", *sug_lexicon, "Compiled spelling lexicon")->required();
    suggest->add_option("word", *sug_word, "Word to correct")->required();
    suggest->add_option("--limit", *sug_limit, "Maximum number of suggestions");
    suggest->add_option("--max-distance", *sug_maxd, "Drop suggestions beyond this distance");
    suggest->add_option("--classes", *sug_classes, "Equivalence-class table");
    suggest->callback([&action, &cfg, sug_lexicon, sug_word, sug_limit, sug_maxd, sug_classes] {
      action = [=, &cfg] {
        return cmd_spell_suggest(
            *sug_lexicon, *sug_word, cfg,
            *sug_limit ? std::optional<std::size_t>(*sug_limit) : std::nullopt,
            *sug_maxd >= 0 ? std::optional<std::size_t>(static_cast<std::size_t>(*sug_maxd))
                           : std::nullopt,
            sug_classes->empty() ? std::nullopt : std::optional<fs::path>(*sug_classes));
      };
    });
  }

  // hyph
  {
    auto* hyph = app.add_subcommand("hyph", "Hyphenation");
    hyph->require_subcommand(1);

    auto* split = hyph->add_subcommand("split", "Hyphenate a word or a file of words");
    auto split_model = std::make_shared<std::string>();
    auto split_target = std::make_shared<std::string>();
    split->add_option("model", *split_model, "Trained hyphenation model (JSON)")->required();
    split->add_option("word", *split_target, "Word, or path to a word list")->required();
    split->callback([&action, split_model, split_target] {
      action = [=] { return cmd_hyph_split(*split_model, *split_target); };
    });

    auto* train = hyph->add_subcommand("train", "Train decision trees from a hyphenated corpus");
    auto train_corpus = std::make_shared<std::string>();
    auto train_out = std::make_shared<std::string>();
    auto train_min = std::make_shared<std::size_t>(2);
    train->add_option("corpus", *train_corpus, "Hyphenated corpus")->required();
    train->add_option("-o,--output", *train_out, "Output model path")->required();
    train->add_option("--min-patterns", *train_min, "Node split threshold");
    train->callback([&action, train_corpus, train_out, train_min] {
      action = [=] { return cmd_hyph_train(*train_corpus, *train_out, *train_min); };
    });

    auto* exceptions =
        hyph->add_subcommand("exceptions", "Build the exception list against a trained model");
    auto exc_corpus = std::make_shared<std::string>();
    auto exc_model = std::make_shared<std::string>();
    auto exc_homographs = std::make_shared<std::string>();
    auto exc_out = std::make_shared<std::string>();
    exceptions->add_option("corpus", *exc_corpus, "Hyphenated corpus")->required();
    exceptions->add_option("model", *exc_model, "Trained model (updated in place unless -o)")
        ->required();
    exceptions->add_option("--homographs", *exc_homographs,
                           "Conservative hyphenations that must win");
    exceptions->add_option("-o,--output", *exc_out, "Write the updated model here instead");
    exceptions->callback([&action, exc_corpus, exc_model, exc_homographs, exc_out] {
      action = [=] {
        return cmd_hyph_exceptions(
            *exc_corpus, *exc_model,
            exc_homographs->empty() ? std::nullopt : std::optional<fs::path>(*exc_homographs),
            exc_out->empty() ? std::nullopt : std::optional<fs::path>(*exc_out));
      };
    });

    auto* stats = hyph->add_subcommand("stats", "Ambiguous-bigram statistics of a corpus");
    auto stats_corpus = std::make_shared<std::string>();
    stats->add_option("corpus", *stats_corpus, "Hyphenated corpus")->required();
    stats->callback([&action, stats_corpus] {
      action = [=] { return cmd_hyph_stats(*stats_corpus); };
    });
  }

  // thes
  {
    auto* thes = app.add_subcommand("thes", "Thesaurus queries");
    thes->require_subcommand(1);

    auto* lookup = thes->add_subcommand("lookup", "Meanings and synonyms for any word form");
    auto lk_file = std::make_shared<std::string>();
    auto lk_word = std::make_shared<std::string>();
    auto lk_format = std::make_shared<std::string>();
    lookup->add_option("file", *lk_file, "Thesaurus JSON file")->required();
    lookup->add_option("word", *lk_word, "Word form to look up")->required();
    lookup->add_option("--format", *lk_format, "text or tsv");
    lookup->callback([&action, &cfg, lk_file, lk_word, lk_format] {
      action = [=, &cfg] {
        return cmd_thes_lookup(*lk_file, *lk_word, lk_format->empty() ? cfg.format : *lk_format);
      };
    });

    auto* check = thes->add_subcommand("check", "Verify the closure property");
    auto ck_file = std::make_shared<std::string>();
    check->add_option("file", *ck_file, "Thesaurus JSON file")->required();
    check->callback([&action, ck_file] {
      action = [=] { return cmd_thes_check(*ck_file); };
    });

    auto* stats = thes->add_subcommand("stats", "Lemma, form and index statistics");
    auto st_file = std::make_shared<std::string>();
    stats->add_option("file", *st_file, "Thesaurus JSON file")->required();
    stats->callback([&action, st_file] {
      action = [=] { return cmd_thes_stats(*st_file); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (!config_path.empty()) cfg = load_config(config_path);
    return action ? action() : kExitError;
  } catch (const lexis::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
