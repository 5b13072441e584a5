#pragma once

#include <string>
#include <vector>

namespace lexis::fsa {

/// Restricted regular expression: a concatenation of groups, each group a
/// non-empty alternation of literal grapheme strings. This is the only
/// algebra the correction pipeline produces, e.g.
///   (πσ|ψ)(ι|ί|η|...)(χ)(ι|ί|η|...)
struct GraphemeRegex {
  std::vector<std::vector<std::u32string>> groups;

  /// Throws InvalidInput when a group is empty or an alternative is the
  /// empty string.
  void validate() const;

  /// Number of words the fully expanded cross product would contain.
  /// Used by tests; traversal never materializes it.
  std::size_t expansion_count() const;
};

}  // namespace lexis::fsa
