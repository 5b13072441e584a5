#include "lexis/fsa/trie.hpp"

#include <algorithm>
#include <map>

#include "lexis/error.hpp"
#include "lexis/unicode.hpp"
#include "wire.hpp"

namespace lexis::fsa {

namespace {

struct BuildNode {
  bool terminal = false;
  std::uint64_t record = 0;
  std::map<char32_t, std::uint32_t> children;
};

constexpr char kTrieMagic[4] = {'T', 'R', 'I', '1'};

}  // namespace

Trie::Trie() { nodes_.push_back({0, 0, false, 0}); }

Trie Trie::build(std::span<const Entry> entries) {
  std::vector<BuildNode> pool(1);
  for (const Entry& e : entries) {
    if (e.key.empty()) throw InvalidInput("empty key");
    std::uint32_t node = 0;
    for (char32_t c : e.key) {
      auto it = pool[node].children.find(c);
      if (it == pool[node].children.end()) {
        const auto child = static_cast<std::uint32_t>(pool.size());
        pool[node].children.emplace(c, child);
        pool.emplace_back();
        node = child;
      } else {
        node = it->second;
      }
    }
    if (pool[node].terminal)
      throw InvalidInput(detail::msg("duplicate key '", uni::utf8_encode(e.key), "'"));
    pool[node].terminal = true;
    pool[node].record = e.record;
  }

  Trie out;
  out.nodes_.clear();
  std::vector<std::uint32_t> remap(pool.size(), 0);
  std::vector<std::uint32_t> order{0};
  std::vector<std::uint32_t> stack{0};
  while (!stack.empty()) {
    const std::uint32_t n = stack.back();
    stack.pop_back();
    for (auto it = pool[n].children.rbegin(); it != pool[n].children.rend(); ++it) {
      remap[it->second] = static_cast<std::uint32_t>(order.size());
      order.push_back(it->second);
      stack.push_back(it->second);
    }
  }
  out.nodes_.resize(order.size());
  for (std::size_t idx = 0; idx < order.size(); ++idx) {
    const BuildNode& src = pool[order[idx]];
    Node& dst = out.nodes_[idx];
    dst.terminal = src.terminal;
    dst.record = src.record;
    dst.first = static_cast<std::uint32_t>(out.arcs_.size());
    dst.count = static_cast<std::uint32_t>(src.children.size());
    for (const auto& [label, target] : src.children)
      out.arcs_.push_back({label, remap[target]});
  }
  return out;
}

std::span<const Transition> Trie::transitions_of(std::uint32_t state) const {
  const Node& n = nodes_[state];
  return {arcs_.data() + n.first, n.count};
}

std::optional<std::uint32_t> Trie::step(std::uint32_t state, char32_t label) const {
  const auto arcs = transitions_of(state);
  const auto it = std::lower_bound(arcs.begin(), arcs.end(), label,
                                   [](const Transition& t, char32_t c) { return t.label < c; });
  if (it == arcs.end() || it->label != label) return std::nullopt;
  return it->target;
}

std::optional<std::uint64_t> Trie::lookup(std::u32string_view key) const {
  std::uint32_t state = start_state;
  for (char32_t c : key) {
    const auto next = step(state, c);
    if (!next) return std::nullopt;
    state = *next;
  }
  if (!nodes_[state].terminal) return std::nullopt;
  return nodes_[state].record;
}

std::optional<std::uint64_t> Trie::record_of(std::uint32_t state) const {
  if (!nodes_[state].terminal) return std::nullopt;
  return nodes_[state].record;
}

std::vector<Trie::Entry> Trie::enumerate() const {
  std::vector<Entry> out;
  std::u32string path;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> stack{{start_state, 0}};
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
    if (nodes_[t.target].terminal) out.push_back({path, nodes_[t.target].record});
    stack.emplace_back(t.target, 0);
  }
  return out;
}

std::size_t Trie::terminal_count() const {
  std::size_t n = 0;
  for (const Node& node : nodes_)
    if (node.terminal) ++n;
  return n;
}

AutomatonStats Trie::stats() const {
  AutomatonStats s;
  s.nodes = nodes_.size();
  s.transitions = arcs_.size();
  s.terminals = terminal_count();
  s.bytes = 4 + 4 + 8 + nodes_.size() * 5ull + arcs_.size() * 8ull + s.terminals * 8ull;
  return s;
}

std::vector<std::uint8_t> Trie::serialize() const {
  wire::Writer w;
  w.reserve(stats().bytes);
  w.magic(kTrieMagic);
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
    if (n.terminal) w.u64(n.record);
  }
  return w.take();
}

Trie Trie::deserialize(std::span<const std::uint8_t> bytes) {
  wire::Reader r(bytes, "trie");
  r.expect_magic(kTrieMagic);
  const std::uint32_t version = r.u32();
  if (version != wire::kFormatVersion)
    throw FormatError(detail::msg("trie: unsupported format version ", version));
  const std::uint64_t count = r.u64();
  if (count > bytes.size() / 5 + 1) throw FormatError("trie: node count exceeds payload");
  Trie out;
  out.nodes_.clear();
  out.nodes_.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint8_t flag = r.u8();
    if (flag > 1) throw FormatError("trie: corrupt terminal flag");
    Node n;
    n.terminal = flag == 1;
    n.count = r.u32();
    n.first = static_cast<std::uint32_t>(out.arcs_.size());
    char32_t prev_label = 0;
    for (std::uint32_t k = 0; k < n.count; ++k) {
      const auto label = static_cast<char32_t>(r.u32());
      const std::uint32_t target = r.u32();
      if (target >= count) throw FormatError("trie: transition target out of range");
      if (k > 0 && label <= prev_label) throw FormatError("trie: transitions not sorted");
      prev_label = label;
      out.arcs_.push_back({label, target});
    }
    if (n.terminal) n.record = r.u64();
    out.nodes_.push_back(n);
  }
  r.expect_end();
  if (out.nodes_.empty()) throw FormatError("trie: no states");
  return out;
}

}  // namespace lexis::fsa
