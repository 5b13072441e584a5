#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexis/fsa/regex.hpp"

namespace lexis::fsa {

struct Transition {
  char32_t label;
  std::uint32_t target;
};

struct AutomatonStats {
  std::uint64_t nodes = 0;
  std::uint64_t transitions = 0;
  std::uint64_t terminals = 0;
  std::uint64_t bytes = 0;  // size of the serialized form
};

/// Minimal deterministic acyclic word automaton. Shares both prefix and
/// suffix paths, so it is the compact choice for storing a spelling
/// lexicon. Immutable once built; safe for concurrent readers.
///
/// States are dense indices, state 0 is the start state, and the outgoing
/// transitions of every state are sorted by label, which makes
/// enumeration produce words in ascending scalar order.
class Mdag {
 public:
  static constexpr std::uint32_t start_state = 0;

  /// Accepts nothing: a single non-terminal start state.
  Mdag();

  /// Incremental construction from a sorted, de-duplicated list of
  /// non-empty words (the Mihov scheme: minimize the suffix of the
  /// previous word as soon as the next word diverges). Unsorted or
  /// duplicate input is rejected with a diagnostic naming the first
  /// offending pair.
  static Mdag build(std::span<const std::u32string> sorted_unique_words);

  /// Membership test; work is proportional to |word|, independent of
  /// lexicon size.
  bool contains(std::u32string_view word) const;

  /// Same, counting transition lookups (successful steps plus at most
  /// one failing step).
  bool contains(std::u32string_view word, std::size_t& steps) const;

  /// All stored words in ascending scalar order.
  std::vector<std::u32string> enumerate() const;

  /// Every stored word expressible as one alternative from each group,
  /// concatenated in order. Sorted, de-duplicated. Implemented as a
  /// synchronized traversal; the cross product is never expanded.
  std::vector<std::u32string> regex_search(const GraphemeRegex& regex) const;

  AutomatonStats stats() const;

  std::vector<std::uint8_t> serialize() const;
  static Mdag deserialize(std::span<const std::uint8_t> bytes);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t transition_count() const { return arcs_.size(); }
  std::size_t terminal_count() const;
  bool is_terminal(std::uint32_t state) const { return nodes_[state].terminal; }
  std::span<const Transition> transitions_of(std::uint32_t state) const;
  std::optional<std::uint32_t> step(std::uint32_t state, char32_t label) const;

 private:
  struct Node {
    std::uint32_t first = 0;  // index into arcs_
    std::uint32_t count = 0;
    bool terminal = false;
  };

  std::vector<Node> nodes_;
  std::vector<Transition> arcs_;
};

}  // namespace lexis::fsa
