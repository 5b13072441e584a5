#include "lexis/hyph/decision_tree.hpp"

#include <algorithm>
#include <cmath>

#include "lexis/error.hpp"
#include "lexis/unicode.hpp"

namespace lexis::hyph {

namespace {

constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "c-3", "c-2", "c-1", "c+2", "c+3", "c+4", "accent1", "accent2", "offset", "length"};

double entropy(std::size_t split_n, std::size_t keep_n) {
  const double n = static_cast<double>(split_n + keep_n);
  if (split_n == 0 || keep_n == 0) return 0.0;
  const double ps = split_n / n;
  const double pk = keep_n / n;
  return -(ps * std::log2(ps) + pk * std::log2(pk));
}

}  // namespace

std::string_view feature_name(std::size_t feature) { return kFeatureNames[feature]; }

bool feature_is_char(std::size_t feature) { return feature < 6; }

std::uint32_t DecisionTree::make_leaf(std::size_t split_n, std::size_t keep_n) {
  Node leaf;
  leaf.feature = -1;
  leaf.label = split_n > keep_n;  // tie -> keep (conservative)
  leaf.support_split = static_cast<std::uint32_t>(split_n);
  leaf.support_keep = static_cast<std::uint32_t>(keep_n);
  nodes_.push_back(std::move(leaf));
  return static_cast<std::uint32_t>(nodes_.size() - 1);
}

std::uint32_t DecisionTree::build(std::span<const TrainingPattern*> patterns,
                                  std::uint32_t used_mask, std::size_t min_patterns) {
  std::size_t split_n = 0;
  for (const auto* p : patterns)
    if (p->split) ++split_n;
  const std::size_t keep_n = patterns.size() - split_n;

  const bool pure = split_n == 0 || keep_n == 0;
  const bool exhausted = used_mask + 1 == (1u << kFeatureCount);
  if (pure || exhausted || patterns.size() < min_patterns)
    return make_leaf(split_n, keep_n);

  // Pick the unused feature with maximal information gain; ties go to the
  // smallest feature index.
  const double h = entropy(split_n, keep_n);
  double best_gain = 0.0;
  int best_feature = -1;
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    if (used_mask & (1u << f)) continue;
    std::map<std::int64_t, std::pair<std::size_t, std::size_t>> parts;
    for (const auto* p : patterns) {
      auto& [s, k] = parts[p->features[f]];
      (p->split ? s : k) += 1;
    }
    if (parts.size() < 2) continue;
    double rest = 0.0;
    for (const auto& [_, sk] : parts)
      rest += (sk.first + sk.second) / static_cast<double>(patterns.size()) *
              entropy(sk.first, sk.second);
    const double gain = h - rest;
    if (gain > best_gain + 1e-12) {
      best_gain = gain;
      best_feature = static_cast<int>(f);
    }
  }
  if (best_feature < 0) return make_leaf(split_n, keep_n);

  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.emplace_back();
  nodes_[id].feature = best_feature;
  nodes_[id].support_split = static_cast<std::uint32_t>(split_n);
  nodes_[id].support_keep = static_cast<std::uint32_t>(keep_n);

  std::map<std::int64_t, std::vector<const TrainingPattern*>> partition;
  for (const auto* p : patterns) partition[p->features[static_cast<std::size_t>(best_feature)]].push_back(p);

  const std::uint32_t child_mask = used_mask | (1u << best_feature);
  for (auto& [value, subset] : partition) {
    const std::uint32_t child = build(subset, child_mask, min_patterns);
    nodes_[id].children.emplace(value, child);
  }
  nodes_[id].fallback = static_cast<std::int32_t>(make_leaf(split_n, keep_n));
  return id;
}

DecisionTree DecisionTree::train(std::span<const TrainingPattern> patterns,
                                 std::size_t min_patterns) {
  if (patterns.empty()) throw InvalidInput("train: no training patterns");
  DecisionTree tree;
  std::vector<const TrainingPattern*> ptrs;
  ptrs.reserve(patterns.size());
  for (const auto& p : patterns) ptrs.push_back(&p);
  // Root is built first, so it lands at index 0.
  tree.build(ptrs, 0, min_patterns);
  return tree;
}

bool DecisionTree::classify(const FeatureVector& features) const {
  std::uint32_t id = 0;
  while (nodes_[id].feature >= 0) {
    const Node& n = nodes_[id];
    const auto it = n.children.find(features[static_cast<std::size_t>(n.feature)]);
    id = it != n.children.end() ? it->second : static_cast<std::uint32_t>(n.fallback);
  }
  return nodes_[id].label;
}

bool DecisionTree::root_is_leaf() const { return nodes_[0].feature < 0; }

int DecisionTree::root_feature() const { return nodes_[0].feature; }

namespace {

std::string value_key(std::size_t feature, std::int64_t value) {
  if (feature_is_char(feature)) {
    if (value < 0) return "";  // outside-word sentinel
    const char32_t c = static_cast<char32_t>(value);
    return lexis::uni::utf8_encode(std::u32string_view(&c, 1));
  }
  return std::to_string(value);
}

std::int64_t key_value(std::size_t feature, const std::string& key) {
  if (feature_is_char(feature)) {
    if (key.empty()) return -1;
    const std::u32string s = lexis::uni::utf8_decode(key);
    if (s.size() != 1)
      throw FormatError(detail::msg("tree: child key '", key, "' is not one character"));
    return static_cast<std::int64_t>(s[0]);
  }
  try {
    return std::stoll(key);
  } catch (const std::exception&) {
    throw FormatError(detail::msg("tree: child key '", key, "' is not an integer"));
  }
}

}  // namespace

nlohmann::ordered_json DecisionTree::node_to_json(std::uint32_t id) const {
  const Node& n = nodes_[id];
  nlohmann::ordered_json j;
  if (n.feature < 0) {
    j["leaf"] = n.label ? "split" : "keep";
  } else {
    const auto f = static_cast<std::size_t>(n.feature);
    j["feature"] = std::string(feature_name(f));
    nlohmann::ordered_json children = nlohmann::ordered_json::object();
    for (const auto& [value, child] : n.children)
      children[value_key(f, value)] = node_to_json(child);
    j["children"] = std::move(children);
    j["default"] = node_to_json(static_cast<std::uint32_t>(n.fallback));
  }
  j["support"] = {n.support_split, n.support_keep};
  return j;
}

nlohmann::ordered_json DecisionTree::to_json() const { return node_to_json(0); }

std::uint32_t DecisionTree::node_from_json(const nlohmann::json& j) {
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.emplace_back();
  if (!j.is_object()) throw FormatError("tree: node is not an object");
  if (j.contains("support")) {
    if (!j["support"].is_array() || j["support"].size() != 2)
      throw FormatError("tree: bad support counts");
    nodes_[id].support_split = j["support"][0].get<std::uint32_t>();
    nodes_[id].support_keep = j["support"][1].get<std::uint32_t>();
  }
  if (j.contains("leaf")) {
    const std::string label = j["leaf"].get<std::string>();
    if (label != "split" && label != "keep")
      throw FormatError(detail::msg("tree: unknown leaf label '", label, "'"));
    nodes_[id].feature = -1;
    nodes_[id].label = label == "split";
    return id;
  }
  if (!j.contains("feature") || !j.contains("children") || !j.contains("default"))
    throw FormatError("tree: internal node needs feature/children/default");
  const std::string fname = j["feature"].get<std::string>();
  int feature = -1;
  for (std::size_t f = 0; f < kFeatureCount; ++f)
    if (feature_name(f) == fname) feature = static_cast<int>(f);
  if (feature < 0) throw FormatError(detail::msg("tree: unknown feature '", fname, "'"));
  nodes_[id].feature = feature;
  for (const auto& [key, child] : j["children"].items()) {
    const std::int64_t value = key_value(static_cast<std::size_t>(feature), key);
    const std::uint32_t child_id = node_from_json(child);
    if (!nodes_[id].children.emplace(value, child_id).second)
      throw FormatError(detail::msg("tree: duplicate child key '", key, "'"));
  }
  if (nodes_[id].children.empty()) throw FormatError("tree: internal node has no children");
  nodes_[id].fallback = static_cast<std::int32_t>(node_from_json(j["default"]));
  return id;
}

DecisionTree DecisionTree::from_json(const nlohmann::json& j) {
  DecisionTree tree;
  tree.node_from_json(j);
  return tree;
}

std::size_t training_errors(const DecisionTree& tree, std::span<const TrainingPattern> patterns) {
  std::size_t errors = 0;
  for (const auto& p : patterns)
    if (tree.classify(p.features) != p.split) ++errors;
  return errors;
}

}  // namespace lexis::hyph
