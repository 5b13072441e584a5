#include "lexis/spell/classes.hpp"

#include <algorithm>

#include "lexis/error.hpp"
#include "lexis/io.hpp"
#include "lexis/unicode.hpp"

namespace lexis::spell {

EquivalenceClassTable EquivalenceClassTable::parse(std::string_view text) {
  // Raw classes in file order, then merge any that share a grapheme.
  std::vector<std::vector<std::u32string>> raw;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::u32string> members;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      if (j > i) members.push_back(uni::decode_nfc(line.substr(i, j - i)));
      i = j;
    }
    if (members.empty()) continue;
    if (members.size() < 2)
      throw InvalidInput(detail::msg("class file line ", line_no,
                                     ": a class needs at least 2 members"));
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        if (members[a] == members[b])
          throw InvalidInput(detail::msg("class file line ", line_no, ": duplicate member '",
                                         uni::utf8_encode(members[a]), "'"));
    raw.push_back(std::move(members));
  }

  // Merge classes that share a grapheme, keeping first-appearance order.
  EquivalenceClassTable table;
  for (auto& cls : raw) {
    std::optional<std::size_t> target;
    for (const auto& g : cls) {
      if (auto it = table.index_.find(g); it != table.index_.end()) {
        target = it->second;
        break;
      }
    }
    if (!target) {
      target = table.classes_.size();
      table.classes_.emplace_back();
    }
    for (auto& g : cls) {
      if (table.index_.contains(g)) continue;
      table.index_.emplace(g, *target);
      table.max_grapheme_len_ = std::max(table.max_grapheme_len_, g.size());
      table.classes_[*target].push_back(std::move(g));
    }
  }
  return table;
}

EquivalenceClassTable EquivalenceClassTable::load(const std::filesystem::path& path) {
  try {
    return parse(io::read_text_file(path));
  } catch (const InvalidInput& e) {
    throw InvalidInput(detail::msg(path.string(), ": ", e.what()));
  }
}

std::span<const std::u32string> EquivalenceClassTable::members(std::size_t cls) const {
  return classes_[cls];
}

std::optional<std::size_t> EquivalenceClassTable::class_of(std::u32string_view grapheme) const {
  const auto it = index_.find(grapheme);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<EquivalenceClassTable::Match> EquivalenceClassTable::longest_match(
    std::u32string_view text) const {
  const std::size_t cap = std::min(max_grapheme_len_, text.size());
  for (std::size_t len = cap; len >= 1; --len) {
    if (auto cls = class_of(text.substr(0, len))) return Match{len, *cls};
  }
  return std::nullopt;
}

Segmentation segment(std::u32string_view word, const EquivalenceClassTable& table) {
  Segmentation out;
  std::size_t pos = 0;
  while (pos < word.size()) {
    if (auto m = table.longest_match(word.substr(pos))) {
      out.push_back({std::u32string(word.substr(pos, m->length)), m->cls});
      pos += m->length;
    } else {
      out.push_back({std::u32string(1, word[pos]), std::nullopt});
      ++pos;
    }
  }
  return out;
}

fsa::GraphemeRegex expand(const Segmentation& segments, const EquivalenceClassTable& table) {
  fsa::GraphemeRegex regex;
  regex.groups.reserve(segments.size());
  for (const Segment& s : segments) {
    if (s.cls) {
      const auto m = table.members(*s.cls);
      regex.groups.emplace_back(m.begin(), m.end());
    } else {
      regex.groups.push_back({s.text});
    }
  }
  return regex;
}

}  // namespace lexis::spell
