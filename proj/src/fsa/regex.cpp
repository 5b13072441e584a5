#include "lexis/fsa/regex.hpp"

#include "lexis/error.hpp"

namespace lexis::fsa {

void GraphemeRegex::validate() const {
  for (std::size_t g = 0; g < groups.size(); ++g) {
    if (groups[g].empty())
      throw InvalidInput(detail::msg("regex group ", g, " has no alternatives"));
    for (const auto& alt : groups[g])
      if (alt.empty())
        throw InvalidInput(detail::msg("regex group ", g, " contains an empty alternative"));
  }
}

std::size_t GraphemeRegex::expansion_count() const {
  std::size_t n = 1;
  for (const auto& g : groups) n *= g.size();
  return n;
}

}  // namespace lexis::fsa
