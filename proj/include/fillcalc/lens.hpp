#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fillcalc/assembly.hpp"
#include "fillcalc/continued_fraction.hpp"
#include "fillcalc/errors.hpp"
#include "fillcalc/knot.hpp"
#include "fillcalc/matrix.hpp"

namespace fillcalc {

using SignPair = std::pair<std::int64_t, std::int64_t>;

/// Chain for L(p, q) with the given (plus, minus) counts per knot.
inline StabilizedChain make_lens(const Integer& p, const Integer& q, const std::vector<SignPair>& signs) {
  NegativeContinuedFraction cf = expand(p, q);
  if (signs.size() != cf.size())
    throw InputError(ErrorCode::WrongShape, "signs",
                     "expected " + std::to_string(cf.size()) + " sign entries, got " + std::to_string(signs.size()));
  std::vector<KnotNode> nodes;
  for (std::size_t i = 0; i < cf.size(); ++i) nodes.push_back({cf[i], signs[i].first, signs[i].second});
  StabilizedChain c(std::move(nodes));
  c.validate("signs");
  return c;
}

/// Number of tight structures on L(p, q): |prod (a_i + 1)| over the whole expansion.
inline Integer count_tight(const Integer& p, const Integer& q) {
  const NegativeContinuedFraction cf = expand(p, q);
  Integer prod = 1;
  for (auto a : cf.coeffs()) prod *= Integer(a + 1);
  return abs(prod);
}

struct MixedLocus {
  enum class Kind { BothSignsKnot, AdjacentPair, NoneFound };
  Kind kind = Kind::NoneFound;
  std::size_t left = 0;   // knot index for BothSignsKnot
  std::size_t right = 0;
  std::int64_t m = 0;     // unstabilized knots strictly between the pair

  friend bool operator==(const MixedLocus&, const MixedLocus&) = default;
};

/// Leftmost knot with both signs, else the leftmost pair of consecutive stabilized knots
/// with opposite signs.
inline MixedLocus find_mixed_locus(const StabilizedChain& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i].both_signs()) return {MixedLocus::Kind::BothSignsKnot, i, i, 0};
  std::optional<std::size_t> prev;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!c[i].stabilized()) continue;
    if (prev && opposite(c[*prev].sign(), c[i].sign()))
      return {MixedLocus::Kind::AdjacentPair, *prev, i, static_cast<std::int64_t>(i - *prev - 1)};
    prev = i;
  }
  return {};
}

/// Delete knot j: the knots before it and after it become separate chains.
inline std::pair<StabilizedChain, StabilizedChain> split_at(const StabilizedChain& c, std::size_t j) {
  if (j >= c.size())
    throw InputError(ErrorCode::OutOfRange, "index", "knot index " + std::to_string(j) + " out of range");
  return {c.slice(0, j), c.slice(j + 1, c.size())};
}

/// Deletion indices between a pair of opposite knots, ordered by splitting slope 0..m+1.
/// Slope 0 deletes the positively stabilized endpoint.
template <class SignOf>
std::vector<std::pair<std::size_t, std::int64_t>> slope_order(std::size_t left, std::size_t right, SignOf sign_of) {
  std::vector<std::pair<std::size_t, std::int64_t>> out;
  const bool left_positive = sign_of(left) == SignState::Positive;
  const std::size_t count = right - left + 1;
  for (std::size_t s = 0; s < count; ++s) {
    std::size_t k = left_positive ? left + s : right - s;
    out.emplace_back(k, static_cast<std::int64_t>(s));
  }
  return out;
}

/// All one-step decompositions of a virtually overtwisted chain.
inline std::vector<Step> children(const StabilizedChain& c) {
  if (classify(c) == ContactClass::UniversallyTight)
    throw InputError(ErrorCode::Precondition, "chain", "children of a universally tight chain are undefined");
  MixedLocus locus = find_mixed_locus(c);
  check_internal(locus.kind != MixedLocus::Kind::NoneFound, "virtually overtwisted chain without mixed locus");

  auto step_for = [&](std::size_t k, std::optional<std::int64_t> slope, Rule rule) {
    auto [l, r] = split_at(c, k);
    return Step{{Component(l), Component(r)}, rule, {Deletion{{KnotRef::Where::Chain, 0, k}, slope}}, 1};
  };

  if (locus.kind == MixedLocus::Kind::BothSignsKnot) return {step_for(locus.left, std::nullopt, Rule::StabilizedKnot)};

  std::vector<Step> out;
  for (auto [k, s] : slope_order(locus.left, locus.right, [&](std::size_t i) { return c[i].sign(); }))
    out.push_back(step_for(k, s, Rule::AdjacentPair));
  check_internal(static_cast<std::int64_t>(out.size()) == locus.m + 2, "adjacent pair branch count != m+2");
  return out;
}

inline IntMatrix linking_matrix(const StabilizedChain& c) { return chain_matrix(c.framings()); }

inline Integer h1_order(const StabilizedChain& c) { return abs(continuant(c.framings())); }

/// Exact fillings of a virtually overtwisted structure on a two-knot chain.
inline int fossati_count(const StabilizedChain& c) {
  if (c.size() != 2) throw InputError(ErrorCode::WrongShape, "chain", "expected exactly two knots");
  if (classify(c) == ContactClass::UniversallyTight)
    throw InputError(ErrorCode::Precondition, "chain", "expected a virtually overtwisted structure");
  for (const auto& n : c.nodes())
    if (n.framing == -4 && !n.both_signs()) return 2;
  return 1;
}

/// Known filling counts of a terminal component, if the component is in one of the settled families.
inline std::optional<Integer> component_filling_count(const Component& comp) {
  if (std::holds_alternative<SphereBundle>(comp)) return Integer(1);
  const auto* chain = std::get_if<StabilizedChain>(&comp);
  if (!chain) return std::nullopt;
  LensSpace l = chain->lens();
  if (l.is_sphere()) return Integer(1);
  if (l.q == 1) {
    if (l.p == 4 && classify(*chain) == ContactClass::UniversallyTight) return Integer(2);
    return Integer(1);
  }
  if (l.p == 3 && l.q == 2) return Integer(1);
  return std::nullopt;
}

/// Product of the known counts; Unknown (nullopt) if any component is outside the known families.
inline std::optional<Integer> leaf_filling_count(const ContactAssembly& a) {
  Integer total = 1;
  for (const auto& comp : a.components()) {
    auto c = component_filling_count(comp);
    if (!c) return std::nullopt;
    total *= *c;
  }
  return total;
}

}  // namespace fillcalc
