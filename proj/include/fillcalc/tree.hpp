#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <vector>

#include "fillcalc/assembly.hpp"
#include "fillcalc/lens.hpp"
#include "fillcalc/seifert.hpp"

namespace fillcalc {

/// Decomposition alternatives of one component; empty for terminal components.
inline std::vector<Step> component_steps(const Component& c) {
  if (const auto* chain = std::get_if<StabilizedChain>(&c)) {
    if (classify(*chain) == ContactClass::UniversallyTight) return {};
    return children(*chain);
  }
  if (const auto* pos = std::get_if<SeifertPos>(&c)) return seifert_steps(*pos);
  if (const auto* neg = std::get_if<SeifertNeg>(&c)) return seifert_steps(*neg);
  return {};
}

/// Class label of a component: tightness for lens pieces, mixedness for Seifert pieces.
inline const char* component_class(const Component& c) {
  if (const auto* chain = std::get_if<StabilizedChain>(&c)) return to_string(classify(*chain));
  if (std::holds_alternative<SphereBundle>(c)) return "universally-tight";
  if (const auto* pos = std::get_if<SeifertPos>(&c)) {
    if (is_universally_tight_small(*pos)) return "universally-tight";
    return to_string(classify_mixedness(*pos).kind);
  }
  return to_string(classify_mixedness(std::get<SeifertNeg>(c)).kind);
}

struct TreeEdge {
  std::size_t parent = 0;
  std::size_t child = 0;
  std::size_t component = 0;  // index into the parent's component list
  Rule rule = Rule::StabilizedKnot;
  std::vector<Deletion> deletions;
  std::int64_t round_handles = 1;
};

struct TreeNode {
  std::size_t id = 0;
  ContactAssembly assembly;
  std::optional<std::size_t> parent;
  std::size_t depth = 0;
  std::vector<std::size_t> children;

  bool is_leaf() const noexcept { return children.empty(); }
};

/// Rooted tree of assemblies, node ids in breadth-first order.
class DecompositionTree {
 public:
  const std::vector<TreeNode>& nodes() const noexcept { return nodes_; }
  const std::vector<TreeEdge>& edges() const noexcept { return edges_; }
  const TreeNode& root() const { return nodes_.at(0); }
  const TreeNode& node(std::size_t id) const { return nodes_.at(id); }

  std::vector<std::size_t> leaves() const {
    std::vector<std::size_t> out;
    for (const auto& n : nodes_)
      if (n.is_leaf()) out.push_back(n.id);
    return out;
  }

  std::size_t depth() const {
    std::size_t d = 0;
    for (const auto& n : nodes_) d = std::max(d, n.depth);
    return d;
  }

  /// Expands the first non-terminal component of each assembly until none remain.
  static DecompositionTree build(const ContactAssembly& root) {
    DecompositionTree t;
    t.nodes_.push_back({0, root, std::nullopt, 0, {}});
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      const std::size_t id = queue.front();
      queue.pop_front();
      const ContactAssembly assembly = t.nodes_[id].assembly;
      for (std::size_t ci = 0; ci < assembly.size(); ++ci) {
        std::vector<Step> steps = component_steps(assembly[ci]);
        if (steps.empty()) continue;
        for (auto& step : steps) {
          const std::size_t child = t.nodes_.size();
          t.nodes_.push_back({child, assembly.replaced(ci, step.parts), id, t.nodes_[id].depth + 1, {}});
          t.nodes_[id].children.push_back(child);
          t.edges_.push_back({id, child, ci, step.rule, std::move(step.deletions), step.round_handles});
          queue.push_back(child);
        }
        break;
      }
    }
    return t;
  }

 private:
  std::vector<TreeNode> nodes_;
  std::vector<TreeEdge> edges_;
};

inline DecompositionTree build_tree(const StabilizedChain& c) { return DecompositionTree::build(ContactAssembly({c})); }
inline DecompositionTree build_seifert_tree(const SeifertPos& s) {
  return DecompositionTree::build(ContactAssembly({s}));
}
inline DecompositionTree build_seifert_tree(const SeifertNeg& s) {
  return DecompositionTree::build(ContactAssembly({s}));
}

/// Largest known leaf filling count, or nullopt if some leaf is outside the known families.
inline std::optional<Integer> max_leaf_filling_count(const DecompositionTree& t) {
  Integer best = 0;
  for (auto id : t.leaves()) {
    auto c = leaf_filling_count(t.node(id).assembly);
    if (!c) return std::nullopt;
    if (*c > best) best = *c;
  }
  return best;
}

}  // namespace fillcalc
