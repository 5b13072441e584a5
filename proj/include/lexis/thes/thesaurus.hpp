#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexis/fsa/trie.hpp"

namespace lexis::thes {

struct Meaning {
  std::vector<std::u32string> synonyms;  // order significant: first is best
  std::vector<std::u32string> antonyms;
  std::vector<std::u32string> examples;
};

struct Lemma {
  std::uint64_t id = 0;
  std::u32string headword;  // canonical form; always a member of forms
  std::vector<std::u32string> style;   // e.g. informal
  std::vector<std::u32string> domain;  // e.g. Biology
  std::vector<std::u32string> forms;   // all morphological forms
  std::vector<std::uint64_t> related;
  std::vector<Meaning> meanings;
};

/// Loaded thesaurus with every morphological form of every lemma indexed
/// in a record trie. Immutable after load; all queries are safe for
/// concurrent callers.
class Thesaurus {
 public:
  static Thesaurus parse(std::string_view json_text);
  static Thesaurus load(const std::filesystem::path& path);
  std::string to_json_text() const;
  void save(const std::filesystem::path& path) const;

  std::span<const Lemma> lemmas() const { return lemmas_; }
  const Lemma* by_id(std::uint64_t id) const;
  const Lemma* by_headword(std::u32string_view headword) const;

  /// All lemmas whose form set contains `form`, ascending id.
  std::vector<const Lemma*> lookup(std::u32string_view form) const;

  enum class Relation { synonym, antonym };

  struct Violation {
    std::uint64_t lemma_id = 0;
    std::size_t meaning_index = 0;
    Relation relation = Relation::synonym;
    std::u32string word;
  };

  struct ClosureReport {
    std::vector<Violation> violations;
    /// Words resolved by exact headword equality vs. only through the
    /// form index (the more permissive route).
    std::uint64_t headword_matches = 0;
    std::uint64_t form_only_matches = 0;
    bool closed() const { return violations.empty(); }
  };

  /// Checks that every word appearing as a synonym or antonym resolves to
  /// a lemma (headword or any form). Empty violation list = closed.
  ClosureReport check_closure() const;

  struct MeaningAlternatives {
    const Lemma* lemma = nullptr;
    std::size_t meaning_index = 0;
    const Meaning* meaning = nullptr;
  };

  /// Per-meaning synonym lists for every lemma matching `form`, in stored
  /// order; labels and antonyms ride along on the lemma/meaning.
  std::vector<MeaningAlternatives> suggest_alternatives(std::u32string_view form) const;

  std::size_t form_count() const { return postings_.size(); }
  const fsa::Trie& form_index() const { return index_; }

 private:
  void build_index();

  std::vector<Lemma> lemmas_;
  std::map<std::uint64_t, std::size_t> by_id_;
  std::map<std::u32string, std::size_t, std::less<>> by_headword_;
  fsa::Trie index_;  // form -> postings slot
  std::vector<std::vector<std::uint32_t>> postings_;
};

}  // namespace lexis::thes
