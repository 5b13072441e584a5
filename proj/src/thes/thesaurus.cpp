#include "lexis/thes/thesaurus.hpp"

#include <algorithm>

#include <json.hpp>

#include "lexis/error.hpp"
#include "lexis/io.hpp"
#include "lexis/unicode.hpp"

namespace lexis::thes {

namespace {

std::vector<std::u32string> read_strings(const nlohmann::json& j, std::uint64_t lemma_id,
                                         const char* field) {
  if (!j.is_array())
    throw FormatError(detail::msg("lemma ", lemma_id, ": '", field, "' is not an array"));
  std::vector<std::u32string> out;
  for (const auto& e : j) {
    if (!e.is_string())
      throw FormatError(detail::msg("lemma ", lemma_id, ": '", field, "' contains a non-string"));
    std::u32string s = uni::decode_nfc(e.get<std::string>());
    if (s.empty())
      throw FormatError(detail::msg("lemma ", lemma_id, ": '", field, "' contains an empty string"));
    out.push_back(std::move(s));
  }
  return out;
}

nlohmann::ordered_json strings_json(const std::vector<std::u32string>& v) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& s : v) arr.push_back(uni::utf8_encode(s));
  return arr;
}

}  // namespace

Thesaurus Thesaurus::parse(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(detail::msg("thesaurus: ", e.what()));
  }
  if (!doc.is_array()) throw FormatError("thesaurus: top level must be a list of lemmas");

  Thesaurus t;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& j = doc[i];
    if (!j.is_object())
      throw FormatError(detail::msg("thesaurus: entry ", i, " is not an object"));
    Lemma lemma;
    try {
      lemma.id = j.at("id").get<std::uint64_t>();
      lemma.headword = uni::decode_nfc(j.at("headword").get<std::string>());
    } catch (const nlohmann::json::exception& e) {
      throw FormatError(detail::msg("thesaurus: entry ", i, ": ", e.what()));
    }
    lemma.style = read_strings(j.value("style", nlohmann::json::array()), lemma.id, "style");
    lemma.domain = read_strings(j.value("domain", nlohmann::json::array()), lemma.id, "domain");
    lemma.forms = read_strings(j.value("forms", nlohmann::json::array()), lemma.id, "forms");
    if (j.contains("related")) {
      if (!j["related"].is_array())
        throw FormatError(detail::msg("lemma ", lemma.id, ": 'related' is not an array"));
      for (const auto& r : j["related"]) lemma.related.push_back(r.get<std::uint64_t>());
    }
    if (!j.contains("meanings") || !j["meanings"].is_array() || j["meanings"].empty())
      throw FormatError(detail::msg("lemma ", lemma.id, ": needs a non-empty 'meanings' list"));
    for (const auto& m : j["meanings"]) {
      Meaning meaning;
      meaning.synonyms =
          read_strings(m.value("synonyms", nlohmann::json::array()), lemma.id, "synonyms");
      meaning.antonyms =
          read_strings(m.value("antonyms", nlohmann::json::array()), lemma.id, "antonyms");
      meaning.examples =
          read_strings(m.value("examples", nlohmann::json::array()), lemma.id, "examples");
      if (meaning.synonyms.empty())
        throw FormatError(detail::msg("lemma ", lemma.id, ": a meaning has no synonyms"));
      for (const auto& s : meaning.synonyms)
        for (const auto& a : meaning.antonyms)
          if (s == a)
            throw FormatError(detail::msg("lemma ", lemma.id, ": '", uni::utf8_encode(s),
                                          "' is both synonym and antonym of one meaning"));
      lemma.meanings.push_back(std::move(meaning));
    }

    if (lemma.headword.empty())
      throw FormatError(detail::msg("thesaurus: entry ", i, " has an empty headword"));
    if (std::find(lemma.forms.begin(), lemma.forms.end(), lemma.headword) == lemma.forms.end())
      throw FormatError(detail::msg("lemma ", lemma.id, ": headword '",
                                    uni::utf8_encode(lemma.headword),
                                    "' is missing from its own forms"));
    if (t.by_id_.contains(lemma.id))
      throw FormatError(detail::msg("thesaurus: duplicate lemma id ", lemma.id));
    if (t.by_headword_.contains(lemma.headword))
      throw FormatError(detail::msg("thesaurus: duplicate headword '",
                                    uni::utf8_encode(lemma.headword), "'"));
    t.by_id_.emplace(lemma.id, t.lemmas_.size());
    t.by_headword_.emplace(lemma.headword, t.lemmas_.size());
    t.lemmas_.push_back(std::move(lemma));
  }

  for (const Lemma& lemma : t.lemmas_)
    for (std::uint64_t r : lemma.related)
      if (!t.by_id_.contains(r))
        throw FormatError(detail::msg("lemma ", lemma.id, ": related id ", r,
                                      " does not resolve to any lemma"));

  t.build_index();
  return t;
}

void Thesaurus::build_index() {
  // form -> ascending lemma ids; the trie payload is a postings slot.
  std::map<std::u32string, std::vector<std::uint32_t>> forms;
  for (std::size_t idx = 0; idx < lemmas_.size(); ++idx)
    for (const auto& form : lemmas_[idx].forms) forms[form].push_back(static_cast<std::uint32_t>(idx));

  std::vector<fsa::Trie::Entry> entries;
  entries.reserve(forms.size());
  postings_.clear();
  for (auto& [form, idxs] : forms) {
    std::sort(idxs.begin(), idxs.end(), [&](std::uint32_t a, std::uint32_t b) {
      return lemmas_[a].id < lemmas_[b].id;
    });
    idxs.erase(std::unique(idxs.begin(), idxs.end()), idxs.end());
    entries.push_back({form, postings_.size()});
    postings_.push_back(std::move(idxs));
  }
  index_ = fsa::Trie::build(entries);
}

Thesaurus Thesaurus::load(const std::filesystem::path& path) {
  try {
    return parse(io::read_text_file(path));
  } catch (const FormatError& e) {
    throw FormatError(detail::msg(path.string(), ": ", e.what()));
  }
}

std::string Thesaurus::to_json_text() const {
  auto doc = nlohmann::ordered_json::array();
  for (const Lemma& lemma : lemmas_) {
    nlohmann::ordered_json j;
    j["id"] = lemma.id;
    j["headword"] = uni::utf8_encode(lemma.headword);
    j["style"] = strings_json(lemma.style);
    j["domain"] = strings_json(lemma.domain);
    j["forms"] = strings_json(lemma.forms);
    j["related"] = lemma.related;
    auto meanings = nlohmann::ordered_json::array();
    for (const Meaning& m : lemma.meanings) {
      nlohmann::ordered_json mj;
      mj["synonyms"] = strings_json(m.synonyms);
      mj["antonyms"] = strings_json(m.antonyms);
      mj["examples"] = strings_json(m.examples);
      meanings.push_back(std::move(mj));
    }
    j["meanings"] = std::move(meanings);
    doc.push_back(std::move(j));
  }
  return doc.dump(1, '\t') + "\n";
}

void Thesaurus::save(const std::filesystem::path& path) const {
  io::write_text_file(path, to_json_text());
}

const Lemma* Thesaurus::by_id(std::uint64_t id) const {
  const auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &lemmas_[it->second];
}

const Lemma* Thesaurus::by_headword(std::u32string_view headword) const {
  const auto it = by_headword_.find(headword);
  return it == by_headword_.end() ? nullptr : &lemmas_[it->second];
}

std::vector<const Lemma*> Thesaurus::lookup(std::u32string_view form) const {
  const auto slot = index_.lookup(form);
  if (!slot) return {};
  std::vector<const Lemma*> out;
  for (std::uint32_t idx : postings_[*slot]) out.push_back(&lemmas_[idx]);
  return out;
}

Thesaurus::ClosureReport Thesaurus::check_closure() const {
  ClosureReport report;
  const auto resolve = [&](const Lemma& lemma, std::size_t meaning_index, Relation relation,
                           const std::u32string& word) {
    if (by_headword_.contains(word)) {
      ++report.headword_matches;
      return;
    }
    if (index_.lookup(word)) {
      ++report.form_only_matches;
      return;
    }
    report.violations.push_back({lemma.id, meaning_index, relation, word});
  };
  for (const Lemma& lemma : lemmas_) {
    for (std::size_t m = 0; m < lemma.meanings.size(); ++m) {
      for (const auto& w : lemma.meanings[m].synonyms) resolve(lemma, m, Relation::synonym, w);
      for (const auto& w : lemma.meanings[m].antonyms) resolve(lemma, m, Relation::antonym, w);
    }
  }
  return report;
}

std::vector<Thesaurus::MeaningAlternatives> Thesaurus::suggest_alternatives(
    std::u32string_view form) const {
  std::vector<MeaningAlternatives> out;
  for (const Lemma* lemma : lookup(form))
    for (std::size_t m = 0; m < lemma->meanings.size(); ++m)
      out.push_back({lemma, m, &lemma->meanings[m]});
  return out;
}

}  // namespace lexis::thes
