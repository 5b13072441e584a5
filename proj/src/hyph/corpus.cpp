#include "lexis/hyph/corpus.hpp"

#include <span>

#include "lexis/error.hpp"
#include "lexis/io.hpp"
#include "lexis/unicode.hpp"

namespace lexis::hyph {

std::vector<std::u32string> HyphenatedForm::syllables() const {
  std::vector<std::u32string> out;
  std::size_t start = 0;
  for (std::size_t cut : cuts) {
    out.push_back(word.substr(start, cut - start));
    start = cut;
  }
  out.push_back(word.substr(start));
  return out;
}

std::string HyphenatedForm::to_line() const {
  std::string out;
  const auto sylls = syllables();
  for (std::size_t i = 0; i < sylls.size(); ++i) {
    if (i) out.push_back('-');
    out += uni::utf8_encode(sylls[i]);
  }
  return out;
}

HyphenatedForm parse_hyphenated(std::u32string_view line) {
  HyphenatedForm form;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == U'-') {
      if (i == start) throw InvalidInput("empty syllable");
      form.word.append(line.substr(start, i - start));
      if (i < line.size()) form.cuts.push_back(form.word.size());
      start = i + 1;
    }
  }
  return form;
}

std::vector<HyphenatedForm> parse_corpus(std::string_view text) {
  std::vector<HyphenatedForm> out;
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

    try {
      out.push_back(parse_hyphenated(uni::decode_nfc(line)));
    } catch (const Error& e) {
      throw InvalidInput(detail::msg("line ", line_no, ": ", e.what()));
    }
  }
  return out;
}

std::vector<HyphenatedForm> load_corpus(const std::filesystem::path& path) {
  try {
    return parse_corpus(io::read_text_file(path));
  } catch (const InvalidInput& e) {
    throw InvalidInput(detail::msg(path.string(), ": ", e.what()));
  }
}

void save_corpus(const std::filesystem::path& path, std::span<const HyphenatedForm> corpus) {
  std::string text;
  for (const auto& form : corpus) {
    text += form.to_line();
    text.push_back('\n');
  }
  io::write_text_file(path, text);
}

}  // namespace lexis::hyph
