#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace lexis::hyph {

/// Features describing one occurrence of an ambiguous vowel bigram, all
/// encoded as integers:
///   0..2  characters at offsets -3..-1 from the bigram (-1 = outside word)
///   3..5  characters at offsets +2..+4
///   6,7   tonos flag of the first/second vowel
///   8     bigram offset from word start
///   9     word length
inline constexpr std::size_t kFeatureCount = 10;
using FeatureVector = std::array<std::int64_t, kFeatureCount>;

std::string_view feature_name(std::size_t feature);
/// Features 0..5 hold character scalars (sentinel -1); the rest are plain
/// integers. Controls how child keys are written in JSON.
bool feature_is_char(std::size_t feature);

struct TrainingPattern {
  FeatureVector features{};
  bool split = false;
};

/// Plain ID3 classifier: internal nodes test one feature with one child
/// per observed value plus a default leaf for unseen values; leaves carry
/// the majority label and the support counts that reached them.
class DecisionTree {
 public:
  /// Information-gain induction. Growth stops at pure nodes, exhausted
  /// features, or fewer than `min_patterns` patterns. Equal gains pick the
  /// smallest feature index; label ties resolve to no-split.
  static DecisionTree train(std::span<const TrainingPattern> patterns,
                            std::size_t min_patterns = 2);

  bool classify(const FeatureVector& features) const;

  std::size_t node_count() const { return nodes_.size(); }
  bool root_is_leaf() const;
  int root_feature() const;  // -1 for a leaf

  nlohmann::ordered_json to_json() const;
  static DecisionTree from_json(const nlohmann::json& j);

 private:
  struct Node {
    std::int32_t feature = -1;  // -1: leaf
    bool label = false;         // leaf only: true = split
    std::uint32_t support_split = 0;
    std::uint32_t support_keep = 0;
    std::map<std::int64_t, std::uint32_t> children;
    std::int32_t fallback = -1;  // default child for unseen values
  };

  std::uint32_t build(std::span<const TrainingPattern*> patterns, std::uint32_t used_mask,
                      std::size_t min_patterns);
  std::uint32_t make_leaf(std::size_t split_n, std::size_t keep_n);

  nlohmann::ordered_json node_to_json(std::uint32_t id) const;
  std::uint32_t node_from_json(const nlohmann::json& j);

  std::vector<Node> nodes_;
};

/// Count of training patterns the tree mislabels.
std::size_t training_errors(const DecisionTree& tree, std::span<const TrainingPattern> patterns);

}  // namespace lexis::hyph
