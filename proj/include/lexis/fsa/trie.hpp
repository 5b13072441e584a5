#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexis/fsa/mdag.hpp"

namespace lexis::fsa {

/// Prefix tree with a record identifier on each terminal node. Bigger
/// than an Mdag for the same key set (no suffix sharing) but each stored
/// key ends in its own node, so keys can index records.
class Trie {
 public:
  static constexpr std::uint32_t start_state = 0;

  struct Entry {
    std::u32string key;
    std::uint64_t record = 0;
  };

  Trie();

  /// Keys may arrive in any order; empty or duplicate keys are rejected
  /// with a diagnostic naming the key.
  static Trie build(std::span<const Entry> entries);

  std::optional<std::uint64_t> lookup(std::u32string_view key) const;

  /// All entries sorted by key.
  std::vector<Entry> enumerate() const;

  AutomatonStats stats() const;

  std::vector<std::uint8_t> serialize() const;
  static Trie deserialize(std::span<const std::uint8_t> bytes);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t transition_count() const { return arcs_.size(); }
  std::size_t terminal_count() const;
  bool is_terminal(std::uint32_t state) const { return nodes_[state].terminal; }
  std::optional<std::uint64_t> record_of(std::uint32_t state) const;
  std::span<const Transition> transitions_of(std::uint32_t state) const;
  std::optional<std::uint32_t> step(std::uint32_t state, char32_t label) const;

 private:
  struct Node {
    std::uint32_t first = 0;
    std::uint32_t count = 0;
    bool terminal = false;
    std::uint64_t record = 0;  // meaningful iff terminal
  };

  std::vector<Node> nodes_;
  std::vector<Transition> arcs_;
};

}  // namespace lexis::fsa
