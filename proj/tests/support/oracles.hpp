#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here deliberately avoids the code paths under test.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lexis/fsa/mdag.hpp"
#include "lexis/fsa/regex.hpp"
#include "lexis/hyph/corpus.hpp"
#include "lexis/unicode.hpp"

namespace oracle {

// ---------------------------------------------------------------------
// Minimal-automaton oracle: build a plain trie, then merge states with
// equal right languages bottom-up. For a finite language this yields the
// minimal deterministic acyclic automaton.

struct Automaton {
  struct Node {
    bool terminal = false;
    std::map<char32_t, int> edges;
  };
  std::vector<Node> nodes;  // 0 = root

  std::size_t node_count() const { return nodes.size(); }
  std::size_t transition_count() const {
    std::size_t n = 0;
    for (const auto& node : nodes) n += node.edges.size();
    return n;
  }
  std::size_t terminal_count() const {
    std::size_t n = 0;
    for (const auto& node : nodes)
      if (node.terminal) ++n;
    return n;
  }
};

inline Automaton trie_of(const std::vector<std::u32string>& words) {
  Automaton a;
  a.nodes.emplace_back();
  for (const auto& w : words) {
    int node = 0;
    for (char32_t c : w) {
      auto it = a.nodes[static_cast<std::size_t>(node)].edges.find(c);
      if (it == a.nodes[static_cast<std::size_t>(node)].edges.end()) {
        const int child = static_cast<int>(a.nodes.size());
        a.nodes[static_cast<std::size_t>(node)].edges.emplace(c, child);
        a.nodes.emplace_back();
        node = child;
      } else {
        node = it->second;
      }
    }
    a.nodes[static_cast<std::size_t>(node)].terminal = true;
  }
  return a;
}

inline Automaton minimize(const Automaton& trie) {
  // Post-order signatures; equal signature = equal right language.
  std::vector<int> cls(trie.nodes.size(), -1);
  std::map<std::string, int> registry;
  std::vector<std::vector<std::pair<char32_t, int>>> class_edges;
  std::vector<bool> class_terminal;

  const auto visit = [&](auto&& self, int node) -> int {
    const auto& n = trie.nodes[static_cast<std::size_t>(node)];
    std::string sig(n.terminal ? "T" : "t");
    std::vector<std::pair<char32_t, int>> edges;
    for (const auto& [label, child] : n.edges) {
      const int c = self(self, child);
      edges.emplace_back(label, c);
      sig += std::to_string(static_cast<std::uint32_t>(label)) + ":" + std::to_string(c) + ";";
    }
    auto [it, inserted] = registry.emplace(sig, static_cast<int>(class_edges.size()));
    if (inserted) {
      class_edges.push_back(std::move(edges));
      class_terminal.push_back(n.terminal);
    }
    cls[static_cast<std::size_t>(node)] = it->second;
    return it->second;
  };
  const int root_class = visit(visit, 0);

  // Re-emit only classes reachable from the root class.
  Automaton out;
  std::map<int, int> remap;
  const auto emit = [&](auto&& self, int c) -> int {
    if (auto it = remap.find(c); it != remap.end()) return it->second;
    const int id = static_cast<int>(out.nodes.size());
    remap.emplace(c, id);
    out.nodes.emplace_back();
    out.nodes[static_cast<std::size_t>(id)].terminal = class_terminal[static_cast<std::size_t>(c)];
    for (const auto& [label, child_class] : class_edges[static_cast<std::size_t>(c)]) {
      const int child_id = self(self, child_class);  // may grow out.nodes
      out.nodes[static_cast<std::size_t>(id)].edges.emplace(label, child_id);
    }
    return id;
  };
  emit(emit, root_class);
  return out;
}

/// Structural equality up to state renaming, walked in lockstep.
inline bool isomorphic(const lexis::fsa::Mdag& a, const Automaton& b) {
  if (a.node_count() != b.node_count()) return false;
  std::map<std::uint32_t, int> bind;
  const auto walk = [&](auto&& self, std::uint32_t sa, int sb) -> bool {
    if (auto it = bind.find(sa); it != bind.end()) return it->second == sb;
    bind.emplace(sa, sb);
    const auto& nb = b.nodes[static_cast<std::size_t>(sb)];
    if (a.is_terminal(sa) != nb.terminal) return false;
    const auto arcs = a.transitions_of(sa);
    if (arcs.size() != nb.edges.size()) return false;
    auto itb = nb.edges.begin();
    for (const auto& arc : arcs) {
      if (arc.label != itb->first) return false;
      if (!self(self, arc.target, itb->second)) return false;
      ++itb;
    }
    return true;
  };
  return walk(walk, lexis::fsa::Mdag::start_state, 0);
}

// ---------------------------------------------------------------------
// Full cross-product expansion of a restricted regex (small inputs only).

inline std::vector<std::u32string> expand_all(const lexis::fsa::GraphemeRegex& regex) {
  std::vector<std::u32string> acc{U""};
  for (const auto& group : regex.groups) {
    std::vector<std::u32string> next;
    next.reserve(acc.size() * group.size());
    for (const auto& prefix : acc)
      for (const auto& alt : group) next.push_back(prefix + alt);
    acc = std::move(next);
  }
  return acc;
}

/// Brute-force regex search: filter the enumerated lexicon against the
/// expansion set.
inline std::vector<std::u32string> regex_filter(const lexis::fsa::Mdag& lexicon,
                                                const lexis::fsa::GraphemeRegex& regex) {
  const auto expansion = expand_all(regex);
  const std::set<std::u32string> wanted(expansion.begin(), expansion.end());
  std::vector<std::u32string> out;
  for (const auto& w : lexicon.enumerate())
    if (wanted.contains(w)) out.push_back(w);
  return out;
}

// ---------------------------------------------------------------------
// Independent full-matrix edit distance.

inline std::size_t dp_levenshtein(std::u32string_view a, std::u32string_view b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i)
    for (std::size_t j = 1; j <= b.size(); ++j)
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
  return d[a.size()][b.size()];
}

// ---------------------------------------------------------------------
// Brute-force ambiguity statistics by substring scan.

struct BigramScan {
  std::uint64_t occurrences = 0;
  std::uint64_t splits = 0;
};

inline std::map<std::u32string, BigramScan> scan_bigrams(
    const std::vector<lexis::hyph::HyphenatedForm>& corpus,
    const std::vector<std::u32string>& bigrams) {
  std::map<std::u32string, BigramScan> out;
  for (const auto& bg : bigrams) out[bg];
  for (const auto& form : corpus) {
    for (const auto& bg : bigrams) {
      for (std::size_t i = 0; i + 1 < form.word.size(); ++i) {
        if (lexis::uni::greek_tolower(form.word[i]) != bg[0] ||
            lexis::uni::greek_tolower(form.word[i + 1]) != bg[1])
          continue;
        out[bg].occurrences += 1;
        if (std::find(form.cuts.begin(), form.cuts.end(), i + 1) != form.cuts.end())
          out[bg].splits += 1;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------
// Deterministic random generators.

inline std::vector<std::u32string> random_words(std::mt19937& rng, std::u32string_view alphabet,
                                                std::size_t count, std::size_t min_len,
                                                std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::set<std::u32string> out;
  while (out.size() < count) {
    std::u32string w;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) w.push_back(alphabet[pick(rng)]);
    out.insert(std::move(w));
  }
  return {out.begin(), out.end()};
}

}  // namespace oracle
