#pragma once

#include <string>
#include <string_view>

namespace lexis::uni {

/// Decodes UTF-8 into a sequence of Unicode scalar values.
/// Throws FormatError on malformed input, naming the byte offset.
std::u32string utf8_decode(std::string_view bytes);

/// Encodes Unicode scalar values as UTF-8.
std::string utf8_encode(std::u32string_view text);

/// Canonical composition (NFC). Accented Greek letters become single
/// scalar values, which keeps automaton labels and character counts
/// deterministic.
std::u32string nfc(std::u32string_view text);

/// Decode + NFC in one step.
std::u32string decode_nfc(std::string_view bytes);

/// Letters of the Modern Greek alphabet, both cases, including the
/// accented and dialytika-bearing vowels.
bool is_greek_letter(char32_t c);

/// True for vowels carrying a tonos (acute) mark: ά έ ή ί ό ύ ώ ΐ ΰ and
/// their uppercase counterparts.
bool has_tonos(char32_t c);

/// Lowercases Greek letters (Ά → ά, Σ → σ); other scalars pass through.
char32_t greek_tolower(char32_t c);

}  // namespace lexis::uni
