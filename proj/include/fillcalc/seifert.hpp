#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fillcalc/assembly.hpp"
#include "fillcalc/continued_fraction.hpp"
#include "fillcalc/errors.hpp"
#include "fillcalc/lens.hpp"
#include "fillcalc/seifert_types.hpp"

namespace fillcalc {

// ---------------------------------------------------------------------------------------------
// Construction from Seifert invariants

/// Leg framings for M(q1/p1, ..., qn/pn), e0 >= 0: leg i expands -p_i/q_i, the last leg gets a
/// -1 head when q_n > p_n.
inline std::vector<std::vector<std::int64_t>> pos_leg_framings(const std::vector<SeifertInvariant>& inv) {
  if (inv.size() < 3) throw InputError(ErrorCode::WrongShape, "invariants", "need at least 3 fibers");
  std::vector<std::vector<std::int64_t>> out;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    const auto& [p, q] = inv[i];
    const std::string where = "invariants[" + std::to_string(i) + "]";
    if (p < 2 || q <= 0) throw InputError(ErrorCode::OutOfRange, where, "need p >= 2 and q > 0");
    if (gcd(p, q) != 1) throw InputError(ErrorCode::NotCoprime, where, "p and q must be coprime");
    const bool last = i + 1 == inv.size();
    if (q < p) {
      out.push_back(expand(p, q).coeffs());
    } else if (last) {
      std::vector<std::int64_t> leg{-1};
      auto rest = expand(q, q - p).coeffs();
      leg.insert(leg.end(), rest.begin(), rest.end());
      out.push_back(std::move(leg));
    } else {
      throw InputError(ErrorCode::OutOfRange, where, "only the last fiber may have q > p");
    }
  }
  return out;
}

/// Leg framings and central framing for M(-q1/p1, ..., -qn/pn): e0 = sum floor(-q_i/p_i).
inline std::pair<std::int64_t, std::vector<std::vector<std::int64_t>>> neg_framings(
    const std::vector<SeifertInvariant>& inv) {
  if (inv.size() < 3) throw InputError(ErrorCode::WrongShape, "invariants", "need at least 3 fibers");
  Integer e0 = 0;
  std::vector<std::vector<std::int64_t>> legs;
  for (std::size_t i = 0; i < inv.size(); ++i) {
    const auto& [p, q] = inv[i];
    const std::string where = "invariants[" + std::to_string(i) + "]";
    if (p < 2 || q <= 0) throw InputError(ErrorCode::OutOfRange, where, "need p >= 2 and q > 0");
    if (gcd(p, q) != 1) throw InputError(ErrorCode::NotCoprime, where, "p and q must be coprime");
    Integer a0 = floor_div(-q, p);
    e0 += a0;
    legs.push_back(expand(p, -q - a0 * p).coeffs());
  }
  return {to_int64(e0, "euler number"), legs};
}

namespace detail {

inline StabilizedChain attach_signs(const std::vector<std::int64_t>& framings, const std::vector<SignPair>& signs,
                                    const std::string& where) {
  if (framings.size() != signs.size())
    throw InputError(ErrorCode::WrongShape, where,
                     "expected " + std::to_string(framings.size()) + " sign entries, got " + std::to_string(signs.size()));
  std::vector<KnotNode> nodes;
  for (std::size_t k = 0; k < framings.size(); ++k) nodes.push_back({framings[k], signs[k].first, signs[k].second});
  return StabilizedChain(std::move(nodes));
}

}  // namespace detail

inline SeifertPos make_seifert_pos(const std::vector<SeifertInvariant>& inv,
                                   const std::vector<std::vector<SignPair>>& signs) {
  auto framings = pos_leg_framings(inv);
  if (signs.size() != framings.size()) throw InputError(ErrorCode::WrongShape, "signs", "one sign list per leg");
  std::vector<StabilizedChain> legs;
  for (std::size_t i = 0; i < framings.size(); ++i)
    legs.push_back(detail::attach_signs(framings[i], signs[i], "signs[" + std::to_string(i) + "]"));
  SeifertPos s(std::move(legs));
  s.validate();
  return s;
}

inline SeifertNeg make_seifert_neg(const std::vector<SeifertInvariant>& inv, SignPair central,
                                   const std::vector<std::vector<SignPair>>& signs) {
  auto [e0, framings] = neg_framings(inv);
  if (signs.size() != framings.size()) throw InputError(ErrorCode::WrongShape, "signs", "one sign list per leg");
  std::vector<StabilizedChain> legs;
  for (std::size_t i = 0; i < framings.size(); ++i)
    legs.push_back(detail::attach_signs(framings[i], signs[i], "signs[" + std::to_string(i) + "]"));
  SeifertNeg s(KnotNode{e0, central.first, central.second}, std::move(legs));
  s.validate();
  return s;
}

/// (b0, b1, ...) from a last leg of the form [-1, -2 x (e0-1), b0-1, b1, ...].
inline std::vector<std::int64_t> b_coefficients(const NegativeContinuedFraction& leg, std::int64_t e0) {
  const auto& c = leg.coeffs();
  if (e0 < 1) throw InputError(ErrorCode::OutOfRange, "e0", "b-coefficients need e0 >= 1");
  const auto first = static_cast<std::size_t>(e0);
  if (c.size() <= first || c[0] != -1)
    throw InputError(ErrorCode::WrongShape, "leg", "expected a -1 head followed by e0-1 entries -2 and b0-1");
  for (std::size_t k = 1; k < first; ++k)
    if (c[k] != -2) throw InputError(ErrorCode::WrongShape, "leg[" + std::to_string(k) + "]", "expected -2");
  if (c[first] > -3) throw InputError(ErrorCode::WrongShape, "leg[" + std::to_string(first) + "]", "expected b0-1 <= -3");
  std::vector<std::int64_t> b{c[first] + 1};
  for (std::size_t k = first + 1; k < c.size(); ++k) {
    if (c[k] > -2) throw InputError(ErrorCode::WrongShape, "leg[" + std::to_string(k) + "]", "expected <= -2");
    b.push_back(c[k]);
  }
  return b;
}

inline NegativeContinuedFraction leg_from_b_coefficients(const std::vector<std::int64_t>& b, std::int64_t e0) {
  if (e0 < 1 || b.empty() || b[0] > -2)
    throw InputError(ErrorCode::WrongShape, "b", "need e0 >= 1 and b0 <= -2");
  NegativeContinuedFraction::Coefficients c{-1};
  c.insert(c.end(), static_cast<std::size_t>(e0 - 1), -2);
  c.push_back(b[0] - 1);
  c.insert(c.end(), b.begin() + 1, b.end());
  return NegativeContinuedFraction(std::move(c));
}

// ---------------------------------------------------------------------------------------------
// Classification

struct Mixedness {
  enum class Kind { ThoroughlyMixed, LightlyMixed, NeitherPos, CentrallyMixed, Canonical, OtherNeg };
  Kind kind = Kind::NeitherPos;
  std::size_t i = 0;  // lightly mixed pair
  std::size_t j = 0;
  friend bool operator==(const Mixedness&, const Mixedness&) = default;
};

inline const char* to_string(Mixedness::Kind k) {
  switch (k) {
    case Mixedness::Kind::ThoroughlyMixed: return "thoroughly-mixed";
    case Mixedness::Kind::LightlyMixed: return "lightly-mixed";
    case Mixedness::Kind::NeitherPos: return "neither-mixed";
    case Mixedness::Kind::CentrallyMixed: return "centrally-mixed";
    case Mixedness::Kind::Canonical: return "canonical";
    case Mixedness::Kind::OtherNeg: return "mixed-legs";
  }
  return "unknown";
}

/// Every K_i' exists and they all carry a positive stabilization, or all a negative one.
inline bool is_thoroughly_mixed(const SeifertPos& s) {
  bool all_plus = true, all_minus = true;
  for (std::size_t i = 0; i < s.n(); ++i) {
    auto ref = s.reference_index(i);
    if (!ref) return false;
    const auto& node = s.leg(i)[*ref];
    all_plus = all_plus && node.plus > 0;
    all_minus = all_minus && node.minus > 0;
  }
  return all_plus || all_minus;
}

/// Pairs (i, j), i < j, such that every other head is stabilized with both signs.
inline std::vector<std::pair<std::size_t, std::size_t>> lightly_mixed_pairs(const SeifertPos& s) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (is_thoroughly_mixed(s)) return out;
  for (std::size_t i = 0; i < s.n(); ++i)
    for (std::size_t j = i + 1; j < s.n(); ++j) {
      bool ok = true;
      for (std::size_t k = 0; k < s.n() && ok; ++k)
        if (k != i && k != j && !s.head(k).both_signs()) ok = false;
      if (ok) out.emplace_back(i, j);
    }
  return out;
}

inline Mixedness classify_mixedness(const SeifertPos& s) {
  if (is_thoroughly_mixed(s)) return {Mixedness::Kind::ThoroughlyMixed};
  auto pairs = lightly_mixed_pairs(s);
  if (!pairs.empty()) return {Mixedness::Kind::LightlyMixed, pairs.front().first, pairs.front().second};
  return {Mixedness::Kind::NeitherPos};
}

inline Mixedness classify_mixedness(const SeifertNeg& s) {
  if (s.central().both_signs()) return {Mixedness::Kind::CentrallyMixed};
  std::int64_t plus = s.central().plus, minus = s.central().minus;
  for (const auto& l : s.legs()) {
    plus += l.total_plus();
    minus += l.total_minus();
  }
  if (plus == 0 || minus == 0) return {Mixedness::Kind::Canonical};
  return {Mixedness::Kind::OtherNeg};
}

inline bool is_universally_tight_small(const SeifertPos& s) {
  if (s.n() != 3 || classify_mixedness(s).kind != Mixedness::Kind::NeitherPos) return false;
  for (const auto& l : s.legs())
    if (!l.single_signed()) return false;
  return true;
}

inline bool is_virtually_overtwisted_small(const SeifertPos& s) {
  if (s.n() != 3 || classify_mixedness(s).kind != Mixedness::Kind::NeitherPos) return false;
  return !is_universally_tight_small(s);
}

// ---------------------------------------------------------------------------------------------
// Counting

/// |(prod (a0^i + 1) - prod a0^i) * prod prod (a_j^i + 1)| over the e0 >= 0 leg expansions.
inline Integer count_tight_small(const std::vector<SeifertInvariant>& inv) {
  auto legs = pos_leg_framings(inv);
  Integer heads_plus = 1, heads = 1, rest = 1;
  for (const auto& leg : legs) {
    heads_plus *= Integer(leg[0] + 1);
    heads *= Integer(leg[0]);
    for (std::size_t j = 1; j < leg.size(); ++j) rest *= Integer(leg[j] + 1);
  }
  return abs((heads_plus - heads) * rest);
}

/// |(e0 + 1) * prod prod (a_j^i + 1)|: the stabilization choices of the e0 <= -3 diagram.
inline Integer count_choices_neg(const SeifertNeg& s) {
  Integer prod = Integer(s.euler_number() + 1);
  for (const auto& l : s.legs())
    for (const auto& node : l.nodes()) prod *= Integer(node.framing + 1);
  return abs(prod);
}

struct UtCensus {
  enum class Kind { Exact, Bound };
  Kind kind = Kind::Exact;
  int value = 6;
  friend bool operator==(const UtCensus&, const UtCensus&) = default;
};

/// Universally tight structures on a small Seifert space with e0 >= 0.
inline UtCensus ut_census_small(const std::vector<SeifertInvariant>& inv) {
  if (inv.size() != 3) throw InputError(ErrorCode::WrongShape, "invariants", "census needs exactly 3 fibers");
  pos_leg_framings(inv);  // validates
  Integer e0 = 0;
  for (const auto& [p, q] : inv) e0 += floor_div(q, p);
  if (e0 > 0) return {UtCensus::Kind::Bound, 8};
  bool all_minus_one = true;
  for (const auto& [p, q] : inv) all_minus_one = all_minus_one && q == p - 1;
  if (all_minus_one) return {UtCensus::Kind::Bound, 7};
  return {UtCensus::Kind::Exact, 6};
}

// ---------------------------------------------------------------------------------------------
// Decompositions

/// [reversed tail of leg i, a0^i + a0^j, tail of leg j].
inline NegativeContinuedFraction merge_chains(const NegativeContinuedFraction& leg_i,
                                              const NegativeContinuedFraction& leg_j) {
  if (leg_i.empty() || leg_j.empty()) throw InputError(ErrorCode::WrongShape, "legs", "legs must be nonempty");
  NegativeContinuedFraction::Coefficients c(leg_i.coeffs().rbegin(), leg_i.coeffs().rend() - 1);
  c.push_back(leg_i[0] + leg_j[0]);
  c.insert(c.end(), leg_j.coeffs().begin() + 1, leg_j.coeffs().end());
  return NegativeContinuedFraction(std::move(c));
}

namespace detail {

inline StabilizedChain merge_legs(const StabilizedChain& a, const StabilizedChain& b) {
  std::vector<KnotNode> nodes(a.nodes().rbegin(), a.nodes().rend() - 1);
  nodes.push_back({a[0].framing + b[0].framing, a[0].plus + b[0].plus, a[0].minus + b[0].minus});
  nodes.insert(nodes.end(), b.nodes().begin() + 1, b.nodes().end());
  return StabilizedChain(std::move(nodes));
}

inline StabilizedChain tail(const StabilizedChain& leg) { return leg.slice(1, leg.size()); }

inline std::vector<Deletion> head_deletions(const std::vector<std::size_t>& legs) {
  std::vector<Deletion> out;
  for (auto i : legs) out.push_back({{KnotRef::Where::Leg, i, 0}, std::nullopt});
  return out;
}

}  // namespace detail

/// One lens space per leg (the leg without its head), joined by n-1 round 1-handles.
inline Step decompose_thoroughly(const SeifertPos& s) {
  if (!is_thoroughly_mixed(s)) throw InputError(ErrorCode::Precondition, "structure", "not thoroughly mixed");
  Step step;
  step.rule = Rule::ThoroughlyMixed;
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i < s.n(); ++i) {
    step.parts.emplace_back(detail::tail(s.leg(i)));
    all.push_back(i);
  }
  step.deletions = detail::head_deletions(all);
  step.round_handles = static_cast<std::int64_t>(s.n()) - 1;
  return step;
}

/// Tails of the legs other than i, j, plus the merged chain of legs i and j.
inline Step decompose_lightly(const SeifertPos& s, std::size_t i, std::size_t j) {
  auto pairs = lightly_mixed_pairs(s);
  if (std::find(pairs.begin(), pairs.end(), std::make_pair(i, j)) == pairs.end())
    throw InputError(ErrorCode::Precondition, "structure",
                     "not lightly mixed about legs " + std::to_string(i) + "," + std::to_string(j));
  Step step;
  step.rule = Rule::LightlyMixed;
  std::vector<std::size_t> others;
  for (std::size_t k = 0; k < s.n(); ++k) {
    if (k == i || k == j) continue;
    step.parts.emplace_back(detail::tail(s.leg(k)));
    others.push_back(k);
  }
  step.parts.emplace_back(detail::merge_legs(s.leg(i), s.leg(j)));
  step.deletions = detail::head_deletions(others);
  step.round_handles = static_cast<std::int64_t>(others.size());
  return step;
}

/// The n legs as separate lens spaces; the central knot is the deleted handle.
inline Step decompose_centrally(const SeifertNeg& s) {
  if (classify_mixedness(s).kind != Mixedness::Kind::CentrallyMixed)
    throw InputError(ErrorCode::Precondition, "structure", "not centrally mixed");
  Step step;
  step.rule = Rule::CentrallyMixed;
  for (const auto& l : s.legs()) step.parts.emplace_back(l);
  step.deletions = {{{KnotRef::Where::Central, 0, 0}, std::nullopt}};
  step.round_handles = static_cast<std::int64_t>(s.n()) - 1;
  return step;
}

/// Star with 0-framed center and the given legs as a single component. Fewer than three legs
/// collapse: two legs merge through the center, one leg leaves its tail, none leaves S^1 x S^2.
inline Component pos_star_to_component(std::vector<StabilizedChain> legs) {
  if (legs.size() >= 3) {
    SeifertPos s(std::move(legs));
    s.validate(false);
    return s;
  }
  if (legs.size() == 2) return detail::merge_legs(legs[0], legs[1]);
  if (legs.size() == 1) return detail::tail(legs[0]);
  return SphereBundle{};
}

/// Star with the given central knot; fewer than three legs is a linear chain through the center.
inline Component neg_star_to_component(const KnotNode& central, std::vector<StabilizedChain> legs) {
  if (legs.size() >= 3) {
    SeifertNeg s(central, std::move(legs));
    s.validate(false);
    return s;
  }
  std::vector<KnotNode> nodes;
  if (legs.size() == 2) nodes.assign(legs[0].nodes().rbegin(), legs[0].nodes().rend());
  nodes.push_back(central);
  if (!legs.empty()) {
    const auto& last = legs.back();
    nodes.insert(nodes.end(), last.nodes().begin(), last.nodes().end());
  }
  return StabilizedChain(std::move(nodes));
}

namespace detail {

// Legs after cutting leg i at knot k: that leg keeps [0, k) and disappears when empty.
inline std::vector<StabilizedChain> truncated_legs(const std::vector<StabilizedChain>& legs, std::size_t i, std::size_t k) {
  std::vector<StabilizedChain> out;
  for (std::size_t j = 0; j < legs.size(); ++j) {
    if (j != i) out.push_back(legs[j]);
    else if (k > 0) out.push_back(legs[j].slice(0, k));
  }
  return out;
}

}  // namespace detail

/// Delete knot k of leg i: the knots below it form a lens space, the rest stays a star.
inline std::vector<Component> amputate_leg(const SeifertNeg& s, std::size_t leg, std::size_t knot) {
  if (leg >= s.n() || knot >= s.leg(leg).size())
    throw InputError(ErrorCode::OutOfRange, "index", "leg or knot index out of range");
  const auto& l = s.leg(leg);
  return {Component(l.slice(knot + 1, l.size())),
          neg_star_to_component(s.central(), detail::truncated_legs(s.legs(), leg, knot))};
}

/// Deletion choices for a leg containing both signs, mirroring the lens rule within the leg.
inline std::vector<Step> leg_amputations(const SeifertNeg& s, std::size_t leg) {
  const auto& l = s.leg(leg);
  MixedLocus locus = find_mixed_locus(l);
  if (locus.kind == MixedLocus::Kind::NoneFound)
    throw InputError(ErrorCode::Precondition, "leg", "leg has stabilizations of a single sign");
  auto step_for = [&](std::size_t k, std::optional<std::int64_t> slope) {
    return Step{amputate_leg(s, leg, k), Rule::LegAmputation, {{{KnotRef::Where::Leg, leg, k}, slope}}, 1};
  };
  if (locus.kind == MixedLocus::Kind::BothSignsKnot) return {step_for(locus.left, std::nullopt)};
  std::vector<Step> out;
  for (auto [k, slope] : slope_order(locus.left, locus.right, [&](std::size_t i) { return l[i].sign(); }))
    out.push_back(step_for(k, slope));
  return out;
}

/// The f+2 alternatives for a single-signed leg whose first stabilized knot f opposes the center.
inline std::vector<Step> clean_leg_vs_center(const SeifertNeg& s, std::size_t leg) {
  const SignState center = s.central().sign();
  if (center != SignState::Positive && center != SignState::Negative)
    throw InputError(ErrorCode::Precondition, "central", "central knot must be single-signed and stabilized");
  if (leg >= s.n()) throw InputError(ErrorCode::OutOfRange, "leg", "leg index out of range");
  const auto& l = s.leg(leg);
  std::optional<std::size_t> first;
  for (std::size_t k = 0; k < l.size() && !first; ++k)
    if (l[k].stabilized()) first = k;
  if (!first || !opposite(center, l[*first].sign()))
    throw InputError(ErrorCode::Precondition, "leg", "first stabilized knot must oppose the central knot");
  const std::size_t f = *first;

  // Order along the diagram from the central knot outward; position 0 is the center.
  std::vector<Step> by_position;
  by_position.push_back(Step{{}, Rule::LegCleaning, {{{KnotRef::Where::Central, 0, 0}, std::nullopt}},
                             static_cast<std::int64_t>(s.n()) - 1});
  for (const auto& part : s.legs()) by_position.back().parts.emplace_back(part);
  for (std::size_t k = 0; k <= f; ++k)
    by_position.push_back(Step{amputate_leg(s, leg, k), Rule::LegCleaning, {{{KnotRef::Where::Leg, leg, k}, std::nullopt}}, 1});

  std::vector<Step> out;
  const std::size_t count = by_position.size();
  for (std::size_t slope = 0; slope < count; ++slope) {
    std::size_t pos = center == SignState::Positive ? slope : count - 1 - slope;
    Step st = by_position[pos];
    st.deletions[0].slope = static_cast<std::int64_t>(slope);
    out.push_back(std::move(st));
  }
  return out;
}

namespace detail {

struct LegSplitOption {
  std::size_t knot;
  std::optional<std::int64_t> slope;
};

// Deletion options on leg i past its reference knot; empty when the leg needs no split.
inline std::vector<LegSplitOption> leg_split_options(const SeifertPos& s, std::size_t i) {
  const auto& l = s.leg(i);
  auto ref = s.reference_index(i);
  if (!ref) return {};
  const auto& r = l[*ref];
  if (r.both_signs()) return {{*ref, std::nullopt}};
  const SignState sign = r.sign();
  std::size_t prev = *ref;
  for (std::size_t k = *ref + 1; k < l.size(); ++k) {
    if (!l[k].stabilized()) continue;
    if (l[k].sign() == sign) {
      prev = k;
      continue;
    }
    if (l[k].both_signs()) return {{k, std::nullopt}};
    std::vector<LegSplitOption> out;
    for (auto [knot, slope] : slope_order(prev, k, [&](std::size_t x) { return l[x].sign(); }))
      out.push_back({knot, slope});
    return out;
  }
  return {};
}

}  // namespace detail

/// Split every leg of a small e0 >= 0 structure along its mixed torus at once. The children are
/// the product of the per-leg deletion choices.
inline std::vector<Step> simultaneous_split(const SeifertPos& s) {
  if (!is_virtually_overtwisted_small(s))
    throw InputError(ErrorCode::Precondition, "structure", "needs a small, unmixed structure with a mixed leg");
  std::vector<std::size_t> split_legs;
  std::vector<std::vector<detail::LegSplitOption>> options;
  for (std::size_t i = 0; i < s.n(); ++i) {
    auto o = detail::leg_split_options(s, i);
    if (o.empty()) continue;
    split_legs.push_back(i);
    options.push_back(std::move(o));
  }
  check_internal(!split_legs.empty(), "mixed leg without a splitting knot");

  std::vector<Step> out;
  std::vector<std::size_t> choice(options.size(), 0);
  while (true) {
    Step step;
    step.rule = Rule::SimultaneousSplit;
    step.round_handles = static_cast<std::int64_t>(split_legs.size());
    std::vector<StabilizedChain> remaining;
    std::size_t c = 0;
    for (std::size_t i = 0; i < s.n(); ++i) {
      const auto& l = s.leg(i);
      if (c < split_legs.size() && split_legs[c] == i) {
        const auto& opt = options[c][choice[c]];
        step.parts.emplace_back(l.slice(opt.knot + 1, l.size()));
        step.deletions.push_back({{KnotRef::Where::Leg, i, opt.knot}, opt.slope});
        if (opt.knot > 0) remaining.push_back(l.slice(0, opt.knot));
        ++c;
      } else {
        remaining.push_back(l);
      }
    }
    step.parts.push_back(pos_star_to_component(std::move(remaining)));
    out.push_back(std::move(step));

    // Odometer over the option lists, first leg slowest.
    std::size_t d = options.size();
    while (d > 0) {
      --d;
      if (++choice[d] < options[d].size()) break;
      choice[d] = 0;
      if (d == 0) return out;
    }
  }
}

/// Decomposition alternatives for one Seifert component; empty when the component is terminal.
inline std::vector<Step> seifert_steps(const SeifertPos& s) {
  Mixedness mix = classify_mixedness(s);
  switch (mix.kind) {
    case Mixedness::Kind::ThoroughlyMixed: return {decompose_thoroughly(s)};
    case Mixedness::Kind::LightlyMixed: return {decompose_lightly(s, mix.i, mix.j)};
    default: break;
  }
  if (is_virtually_overtwisted_small(s)) return simultaneous_split(s);
  return {};
}

inline std::vector<Step> seifert_steps(const SeifertNeg& s) {
  Mixedness mix = classify_mixedness(s);
  if (mix.kind == Mixedness::Kind::CentrallyMixed) return {decompose_centrally(s)};
  if (mix.kind == Mixedness::Kind::Canonical) return {};
  for (std::size_t i = 0; i < s.n(); ++i)
    if (!s.leg(i).single_signed()) return leg_amputations(s, i);
  const SignState center = s.central().sign();
  for (std::size_t i = 0; i < s.n(); ++i) {
    const auto& l = s.leg(i);
    for (const auto& node : l.nodes())
      if (node.stabilized()) {
        if (opposite(center, node.sign())) return clean_leg_vs_center(s, i);
        break;
      }
  }
  check_internal(false, "non-canonical structure with no applicable step");
  return {};
}

}  // namespace fillcalc
