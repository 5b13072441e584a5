#include "lexis/unicode.hpp"

#include <unicode/unorm2.h>
#include <unicode/ustring.h>

#include <array>
#include <cstdint>

#include "lexis/error.hpp"

namespace lexis::uni {

std::u32string utf8_decode(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  const auto fail = [&](const char* what) {
    throw FormatError(detail::msg("invalid UTF-8 (", what, ") at byte ", i));
  };
  while (i < bytes.size()) {
    const auto b0 = static_cast<unsigned char>(bytes[i]);
    std::size_t len = 0;
    char32_t cp = 0;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      fail("bad lead byte");
    }
    if (i + len > bytes.size()) fail("truncated sequence");
    for (std::size_t k = 1; k < len; ++k) {
      const auto b = static_cast<unsigned char>(bytes[i + k]);
      if ((b & 0xC0) != 0x80) fail("bad continuation byte");
      cp = (cp << 6) | (b & 0x3F);
    }
    static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (len > 1 && cp < kMin[len]) fail("overlong sequence");
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail("not a scalar value");
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string utf8_encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size() * 2);
  for (char32_t cp : text) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

std::u32string nfc(std::u32string_view text) {
  if (text.empty()) return {};
  UErrorCode ec = U_ZERO_ERROR;
  const UNormalizer2* norm = unorm2_getNFCInstance(&ec);
  if (U_FAILURE(ec)) throw Error("ICU NFC normalizer unavailable");

  // ICU works in UTF-16.
  std::u16string u16;
  u16.reserve(text.size());
  for (char32_t cp : text) {
    if (cp < 0x10000) {
      u16.push_back(static_cast<char16_t>(cp));
    } else {
      cp -= 0x10000;
      u16.push_back(static_cast<char16_t>(0xD800 + (cp >> 10)));
      u16.push_back(static_cast<char16_t>(0xDC00 + (cp & 0x3FF)));
    }
  }

  std::u16string out16(u16.size() + 16, u'\0');
  int32_t n = unorm2_normalize(norm, u16.data(), static_cast<int32_t>(u16.size()),
                               out16.data(), static_cast<int32_t>(out16.size()), &ec);
  if (ec == U_BUFFER_OVERFLOW_ERROR) {
    ec = U_ZERO_ERROR;
    out16.resize(static_cast<std::size_t>(n));
    n = unorm2_normalize(norm, u16.data(), static_cast<int32_t>(u16.size()),
                         out16.data(), static_cast<int32_t>(out16.size()), &ec);
  }
  if (U_FAILURE(ec)) throw Error("NFC normalization failed");
  out16.resize(static_cast<std::size_t>(n));

  std::u32string out;
  out.reserve(out16.size());
  for (std::size_t i = 0; i < out16.size(); ++i) {
    const char16_t u = out16[i];
    if (u >= 0xD800 && u <= 0xDBFF && i + 1 < out16.size()) {
      const char16_t lo = out16[i + 1];
      out.push_back(0x10000 + ((static_cast<char32_t>(u) - 0xD800) << 10) + (lo - 0xDC00));
      ++i;
    } else {
      out.push_back(u);
    }
  }
  return out;
}

std::u32string decode_nfc(std::string_view bytes) { return nfc(utf8_decode(bytes)); }

namespace {

constexpr std::u32string_view kLowerVowels = U"αάεέηήιίϊΐοόυύϋΰωώ";
constexpr std::u32string_view kUpperVowels = U"ΑΆΕΈΗΉΙΊΪΟΌΥΎΫΩΏ";
constexpr std::u32string_view kLowerConsonants = U"βγδζθκλμνξπρσςτφχψ";
constexpr std::u32string_view kUpperConsonants = U"ΒΓΔΖΘΚΛΜΝΞΠΡΣΤΦΧΨ";
constexpr std::u32string_view kTonos = U"άέήίόύώΐΰΆΈΉΊΌΎΏ";

}  // namespace

bool is_greek_letter(char32_t c) {
  return kLowerVowels.find(c) != std::u32string_view::npos ||
         kUpperVowels.find(c) != std::u32string_view::npos ||
         kLowerConsonants.find(c) != std::u32string_view::npos ||
         kUpperConsonants.find(c) != std::u32string_view::npos;
}

bool has_tonos(char32_t c) { return kTonos.find(c) != std::u32string_view::npos; }

char32_t greek_tolower(char32_t c) {
  switch (c) {
    case U'Ά': return U'ά';
    case U'Έ': return U'έ';
    case U'Ή': return U'ή';
    case U'Ί': return U'ί';
    case U'Ό': return U'ό';
    case U'Ύ': return U'ύ';
    case U'Ώ': return U'ώ';
    case U'Ϊ': return U'ϊ';
    case U'Ϋ': return U'ϋ';
    default:
      if (c >= U'Α' && c <= U'Ρ') return c + 0x20;
      if (c >= U'Σ' && c <= U'Ω') return c + 0x20;
      return c;
  }
}

}  // namespace lexis::uni
