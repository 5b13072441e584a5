#pragma once

#include <cstddef>
#include <string_view>

namespace lexis::spell {

/// Unit-cost edit distance (insertions, deletions, substitutions).
std::size_t levenshtein(std::u32string_view a, std::u32string_view b);

}  // namespace lexis::spell
