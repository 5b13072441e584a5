#include "lexis/fsa/wordlist.hpp"

#include <algorithm>

#include "lexis/error.hpp"
#include "lexis/io.hpp"
#include "lexis/unicode.hpp"

namespace lexis::fsa {

std::vector<std::u32string> parse_word_list(std::string_view text) {
  std::vector<std::u32string> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (line.empty() && nl == std::string_view::npos) break;  // no final newline artifact
    if (!line.empty() && line.front() == '#') continue;
    if (!line.empty() && line.back() == '\r')
      throw InvalidInput(detail::msg("line ", line_no, ": CR line ending (expected LF)"));
    if (line.empty())
      throw InvalidInput(detail::msg("line ", line_no, ": blank entry"));
    out.push_back(uni::decode_nfc(line));
  }
  return out;
}

std::vector<std::u32string> load_word_list(const std::filesystem::path& path) {
  try {
    return parse_word_list(io::read_text_file(path));
  } catch (const InvalidInput& e) {
    throw InvalidInput(detail::msg(path.string(), ": ", e.what()));
  }
}

std::vector<std::u32string> sorted_unique(std::vector<std::u32string> words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

}  // namespace lexis::fsa
