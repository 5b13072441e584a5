#include "lexis/io.hpp"

#include <fstream>

#include "lexis/error.hpp"

namespace lexis::io {

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(detail::msg("cannot open ", path.string()));
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError(detail::msg("read failed: ", path.string()));
  return text;
}

std::vector<std::uint8_t> read_binary_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  return {text.begin(), text.end()};
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(detail::msg("cannot open ", path.string(), " for writing"));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError(detail::msg("write failed: ", path.string()));
}

void write_binary_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(detail::msg("cannot open ", path.string(), " for writing"));
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError(detail::msg("write failed: ", path.string()));
}

}  // namespace lexis::io
