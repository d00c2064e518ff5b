#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fillcalc/knot.hpp"
#include "fillcalc/seifert_types.hpp"

namespace fillcalc {

/// S^1 x S^2 with its unique tight structure; appears when every leg of a star is deleted.
struct SphereBundle {
  friend auto operator<=>(const SphereBundle&, const SphereBundle&) = default;
};

/// Variant order is the canonical kind order used when sorting assemblies.
using Component = std::variant<StabilizedChain, SphereBundle, SeifertPos, SeifertNeg>;

inline const char* kind_name(const Component& c) {
  switch (c.index()) {
    case 0: return "lens";
    case 1: return "s1xs2";
    case 2: return "seifert-pos";
    default: return "seifert-neg";
  }
}

namespace detail {

inline bool component_less(const Component& a, const Component& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (const auto* x = std::get_if<StabilizedChain>(&a)) {
    const auto& y = std::get<StabilizedChain>(b);
    LensSpace lx = x->lens(), ly = y.lens();
    if (lx.p != ly.p) return lx.p < ly.p;
    if (lx.q != ly.q) return lx.q < ly.q;
    return x->nodes() < y.nodes();
  }
  return a < b;
}

}  // namespace detail

/// Disjoint union of contact manifolds, kept sorted so equal unions compare and print equal.
class ContactAssembly {
 public:
  ContactAssembly() = default;
  explicit ContactAssembly(std::vector<Component> components) : components_(std::move(components)) {
    std::stable_sort(components_.begin(), components_.end(), detail::component_less);
  }

  const std::vector<Component>& components() const noexcept { return components_; }
  std::size_t size() const noexcept { return components_.size(); }
  const Component& operator[](std::size_t i) const { return components_.at(i); }

  /// Copy with component i replaced by the given parts.
  ContactAssembly replaced(std::size_t i, const std::vector<Component>& parts) const {
    std::vector<Component> out;
    for (std::size_t k = 0; k < components_.size(); ++k)
      if (k != i) out.push_back(components_[k]);
    out.insert(out.end(), parts.begin(), parts.end());
    return ContactAssembly(std::move(out));
  }

  friend bool operator==(const ContactAssembly&, const ContactAssembly&) = default;

 private:
  std::vector<Component> components_;
};

/// Decomposition rule applied on a tree edge.
enum class Rule {
  StabilizedKnot,
  AdjacentPair,
  ThoroughlyMixed,
  LightlyMixed,
  CentrallyMixed,
  LegAmputation,
  LegCleaning,
  SimultaneousSplit,
};

inline const char* to_string(Rule r) {
  switch (r) {
    case Rule::StabilizedKnot: return "stabilized-knot";
    case Rule::AdjacentPair: return "adjacent-pair";
    case Rule::ThoroughlyMixed: return "thoroughly-mixed";
    case Rule::LightlyMixed: return "lightly-mixed";
    case Rule::CentrallyMixed: return "centrally-mixed";
    case Rule::LegAmputation: return "leg-amputation";
    case Rule::LegCleaning: return "leg-cleaning";
    case Rule::SimultaneousSplit: return "simultaneous-split";
  }
  return "unknown";
}

/// Position of a deleted knot inside the expanded component.
struct KnotRef {
  enum class Where { Chain, Leg, Central };
  Where where = Where::Chain;
  std::size_t leg = 0;
  std::size_t index = 0;

  std::string to_string() const {
    switch (where) {
      case Where::Chain: return "k_" + std::to_string(index);
      case Where::Leg: return "leg_" + std::to_string(leg) + ".k_" + std::to_string(index);
      case Where::Central: return "central";
    }
    return "?";
  }

  friend bool operator==(const KnotRef&, const KnotRef&) = default;
};

/// A deleted knot and, when the step splits along a mixed torus, the splitting slope.
struct Deletion {
  KnotRef knot;
  std::optional<std::int64_t> slope;
  friend bool operator==(const Deletion&, const Deletion&) = default;
};

/// One way of decomposing a single component.
struct Step {
  std::vector<Component> parts;
  Rule rule = Rule::StabilizedKnot;
  std::vector<Deletion> deletions;
  std::int64_t round_handles = 1;
};

}  // namespace fillcalc
