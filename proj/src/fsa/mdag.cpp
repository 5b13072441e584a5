#include "lexis/fsa/mdag.hpp"

#include <algorithm>
#include <unordered_map>

#include "lexis/error.hpp"
#include "lexis/unicode.hpp"
#include "wire.hpp"

namespace lexis::fsa {

namespace {

// Builder-side node. Edges stay sorted by label because words arrive in
// ascending order and new edges always attach at the high end.
struct BuildNode {
  bool terminal = false;
  std::vector<std::pair<char32_t, std::uint32_t>> edges;
};

// Right-language signature of a node whose children are already
// minimized. Equal signatures mean equal right languages.
std::string signature(const BuildNode& n) {
  std::string sig;
  sig.reserve(1 + n.edges.size() * 8);
  sig.push_back(n.terminal ? '\1' : '\0');
  for (const auto& [label, target] : n.edges) {
    for (int i = 0; i < 4; ++i) sig.push_back(static_cast<char>(label >> (8 * i)));
    for (int i = 0; i < 4; ++i) sig.push_back(static_cast<char>(target >> (8 * i)));
  }
  return sig;
}

struct Builder {
  std::vector<BuildNode> pool;
  std::unordered_map<std::string, std::uint32_t> registry;
  // Suffix path of the previous word that has not been minimized yet:
  // (parent, label, child) triples from the divergence point down.
  struct Unchecked {
    std::uint32_t parent;
    char32_t label;
    std::uint32_t child;
  };
  std::vector<Unchecked> unchecked;

  Builder() { pool.emplace_back(); }

  void minimize(std::size_t down_to) {
    while (unchecked.size() > down_to) {
      const auto [parent, label, child] = unchecked.back();
      unchecked.pop_back();
      const std::string sig = signature(pool[child]);
      if (auto it = registry.find(sig); it != registry.end()) {
        pool[parent].edges.back().second = it->second;
        (void)label;
      } else {
        registry.emplace(sig, child);
      }
    }
  }

  void insert_suffix(std::u32string_view word, std::size_t from) {
    std::uint32_t node = unchecked.empty() ? 0 : unchecked.back().child;
    for (std::size_t i = from; i < word.size(); ++i) {
      const auto child = static_cast<std::uint32_t>(pool.size());
      pool.emplace_back();
      pool[node].edges.emplace_back(word[i], child);
      unchecked.push_back({node, word[i], child});
      node = child;
    }
    pool[node].terminal = true;
  }
};

}  // namespace

Mdag::Mdag() { nodes_.push_back({0, 0, false}); }

Mdag Mdag::build(std::span<const std::u32string> words) {
  Builder b;
  std::u32string_view prev;
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::u32string& w = words[i];
    if (w.empty())
      throw InvalidInput(detail::msg("empty word at index ", i));
    if (i > 0) {
      if (w == prev)
        throw InvalidInput(detail::msg("duplicate word '", uni::utf8_encode(w),
                                       "' at index ", i));
      if (w < prev)
        throw InvalidInput(detail::msg("unsorted input: '", uni::utf8_encode(prev),
                                       "' precedes '", uni::utf8_encode(w), "'"));
    }
    std::size_t common = 0;
    while (common < w.size() && common < prev.size() && w[common] == prev[common]) ++common;
    b.minimize(common);
    b.insert_suffix(w, common);
    prev = w;
  }
  b.minimize(0);

  // Flatten in preorder following sorted labels; the layout is canonical,
  // so isomorphic automata flatten identically.
  Mdag out;
  out.nodes_.clear();
  std::vector<std::uint32_t> remap(b.pool.size(), UINT32_MAX);
  std::vector<std::uint32_t> order;
  std::vector<std::uint32_t> stack{0};
  remap[0] = 0;
  order.push_back(0);
  while (!stack.empty()) {
    const std::uint32_t n = stack.back();
    stack.pop_back();
    // push children in reverse so they pop in label order
    const auto& edges = b.pool[n].edges;
    for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
      if (remap[it->second] == UINT32_MAX) {
        remap[it->second] = static_cast<std::uint32_t>(order.size());
        order.push_back(it->second);
        stack.push_back(it->second);
      }
    }
  }
  out.nodes_.resize(order.size());
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const BuildNode& src = b.pool[order[idx]];
    Node& dst = out.nodes_[idx];
    dst.terminal = src.terminal;
    dst.first = static_cast<std::uint32_t>(out.arcs_.size());
    dst.count = static_cast<std::uint32_t>(src.edges.size());
    for (const auto& [label, target] : src.edges)
      out.arcs_.push_back({label, remap[target]});
  }
  return out;
}

std::span<const Transition> Mdag::transitions_of(std::uint32_t state) const {
  const Node& n = nodes_[state];
  return {arcs_.data() + n.first, n.count};
}

std::optional<std::uint32_t> Mdag::step(std::uint32_t state, char32_t label) const {
  const auto arcs = transitions_of(state);
  const auto it = std::lower_bound(arcs.begin(), arcs.end(), label,
                                   [](const Transition& t, char32_t c) { return t.label < c; });
  if (it == arcs.end() || it->label != label) return std::nullopt;
  return it->target;
}

bool Mdag::contains(std::u32string_view word) const {
  std::size_t steps = 0;
  return contains(word, steps);
}

bool Mdag::contains(std::u32string_view word, std::size_t& steps) const {
  steps = 0;
  std::uint32_t state = start_state;
  for (char32_t c : word) {
    ++steps;
    const auto next = step(state, c);
    if (!next) return false;
    state = *next;
  }
  return nodes_[state].terminal;
}

std::size_t Mdag::terminal_count() const {
  std::size_t n = 0;
  for (const Node& node : nodes_)
    if (node.terminal) ++n;
  return n;
}

std::vector<std::u32string> Mdag::enumerate() const {
  std::vector<std::u32string> out;
  std::u32string path;
  // Explicit stack of (state, next transition offset).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> stack{{start_state, 0}};
  if (nodes_[start_state].terminal) out.push_back(path);
  while (!stack.empty()) {
    auto& [state, offset] = stack.back();
    const auto arcs = transitions_of(state);
    if (offset >= arcs.size()) {
      stack.pop_back();
      if (!path.empty()) path.pop_back();
      continue;
    }
    const Transition t = arcs[offset++];
    path.push_back(t.label);
    if (nodes_[t.target].terminal) out.push_back(path);
    stack.emplace_back(t.target, 0);
  }
  return out;
}

std::vector<std::u32string> Mdag::regex_search(const GraphemeRegex& regex) const {
  regex.validate();
  std::vector<std::u32string> out;
  std::u32string word;

  const auto walk = [&](auto&& self, std::uint32_t state, std::size_t group) -> void {
    if (group == regex.groups.size()) {
      if (nodes_[state].terminal) out.push_back(word);
      return;
    }
    for (const std::u32string& alt : regex.groups[group]) {
      std::uint32_t s = state;
      bool ok = true;
      for (char32_t c : alt) {
        const auto next = step(s, c);
        if (!next) {
          ok = false;
          break;
        }
        s = *next;
      }
      if (!ok) continue;
      word.append(alt);
      self(self, s, group + 1);
      word.resize(word.size() - alt.size());
    }
  };
  walk(walk, start_state, 0);

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {
constexpr char kMdagMagic[4] = {'M', 'D', 'G', '1'};
}

AutomatonStats Mdag::stats() const {
  AutomatonStats s;
  s.nodes = nodes_.size();
  s.transitions = arcs_.size();
  s.terminals = terminal_count();
  s.bytes = 4 + 4 + 8 + nodes_.size() * 5ull + arcs_.size() * 8ull;
  return s;
}

std::vector<std::uint8_t> Mdag::serialize() const {
  wire::Writer w;
  w.reserve(stats().bytes);
  w.magic(kMdagMagic);
  w.u32(wire::kFormatVersion);
  w.u64(nodes_.size());
  for (const Node& n : nodes_) {
    w.u8(n.terminal ? 1 : 0);
    w.u32(n.count);
    for (std::uint32_t i = 0; i < n.count; ++i) {
      const Transition& t = arcs_[n.first + i];
      w.u32(static_cast<std::uint32_t>(t.label));
      w.u32(t.target);
    }
  }
  return w.take();
}

Mdag Mdag::deserialize(std::span<const std::uint8_t> bytes) {
  wire::Reader r(bytes, "mdag");
  r.expect_magic(kMdagMagic);
  const std::uint32_t version = r.u32();
  if (version != wire::kFormatVersion)
    throw FormatError(detail::msg("mdag: unsupported format version ", version));
  const std::uint64_t count = r.u64();
  // 5 bytes is the smallest possible node record; a bigger claim than the
  // payload can hold is corruption, caught below without overcommitting.
  if (count > bytes.size() / 5 + 1) throw FormatError("mdag: node count exceeds payload");
  Mdag out;
  out.nodes_.clear();
  out.nodes_.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint8_t flag = r.u8();
    if (flag > 1) throw FormatError("mdag: corrupt terminal flag");
    Node n;
    n.terminal = flag == 1;
    n.count = r.u32();
    n.first = static_cast<std::uint32_t>(out.arcs_.size());
    char32_t prev_label = 0;
    for (std::uint32_t k = 0; k < n.count; ++k) {
      const auto label = static_cast<char32_t>(r.u32());
      const std::uint32_t target = r.u32();
      if (target >= count) throw FormatError("mdag: transition target out of range");
      if (k > 0 && label <= prev_label) throw FormatError("mdag: transitions not sorted");
      prev_label = label;
      out.arcs_.push_back({label, target});
    }
    out.nodes_.push_back(n);
  }
  r.expect_end();
  if (out.nodes_.empty()) throw FormatError("mdag: no states");
  return out;
}

}  // namespace lexis::fsa
