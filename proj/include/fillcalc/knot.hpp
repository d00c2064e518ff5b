#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fillcalc/continued_fraction.hpp"
#include "fillcalc/errors.hpp"
#include "fillcalc/rational.hpp"

namespace fillcalc {

enum class SignState { Unstabilized, Positive, Negative, Both };

/// One Legendrian unknot of a surgery diagram: smooth framing and its stabilization counts.
struct KnotNode {
  std::int64_t framing = -2;
  std::int64_t plus = 0;
  std::int64_t minus = 0;

  std::int64_t used() const noexcept { return plus + minus; }
  bool stabilized() const noexcept { return used() > 0; }
  bool both_signs() const noexcept { return plus > 0 && minus > 0; }

  SignState sign() const noexcept {
    if (plus > 0 && minus > 0) return SignState::Both;
    if (plus > 0) return SignState::Positive;
    if (minus > 0) return SignState::Negative;
    return SignState::Unstabilized;
  }

  KnotNode flipped() const noexcept { return {framing, minus, plus}; }

  friend auto operator<=>(const KnotNode&, const KnotNode&) = default;
};

/// Opposite single signs; an unstabilized or both-signed node is opposite to nothing.
inline bool opposite(SignState a, SignState b) {
  return (a == SignState::Positive && b == SignState::Negative) ||
         (a == SignState::Negative && b == SignState::Positive);
}

enum class ContactClass { UniversallyTight, VirtuallyOvertwisted };

inline const char* to_string(ContactClass c) {
  return c == ContactClass::UniversallyTight ? "universally-tight" : "virtually-overtwisted";
}

/// A lens space L(p, q) with 0 <= q < p; p = 1 (q = 0) is S^3.
struct LensSpace {
  Integer p = 1;
  Integer q = 0;

  bool is_sphere() const { return p == 1; }
  friend bool operator==(const LensSpace&, const LensSpace&) = default;

  std::string to_string() const { return is_sphere() ? "S3" : "L(" + p.str() + "," + q.str() + ")"; }
};

/// Canonical representative of L(p, q): q reduced into [1, p), or S^3 when p = 1.
inline LensSpace normalize_lens(const Integer& p, const Integer& q) {
  if (p <= 0) throw InputError(ErrorCode::OutOfRange, "p", "lens space order must be positive, got " + p.str());
  if (p == 1) return {};
  Integer r = mod_floor(q, p);
  if (gcd(p, r) != 1)
    throw InputError(ErrorCode::NotCoprime, "q", "L(" + p.str() + "," + q.str() + ") needs coprime parameters");
  return {p, r};
}

/// Linear chain of unknots; framings are a negative continued fraction of -p/q.
class StabilizedChain {
 public:
  StabilizedChain() = default;
  explicit StabilizedChain(std::vector<KnotNode> nodes) : nodes_(std::move(nodes)) {}

  const std::vector<KnotNode>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }
  const KnotNode& operator[](std::size_t i) const { return nodes_.at(i); }

  std::vector<std::int64_t> framings() const {
    std::vector<std::int64_t> out;
    out.reserve(nodes_.size());
    for (const auto& n : nodes_) out.push_back(n.framing);
    return out;
  }

  NegativeContinuedFraction fraction() const { return NegativeContinuedFraction(framings()); }

  /// The lens space -p/q = eval(framings); the empty chain is S^3.
  LensSpace lens() const {
    if (nodes_.empty()) return {};
    Slope s = evaluate(fraction());
    return {-s.value().num(), s.value().den()};
  }

  std::int64_t total_plus() const {
    std::int64_t t = 0;
    for (const auto& n : nodes_) t += n.plus;
    return t;
  }
  std::int64_t total_minus() const {
    std::int64_t t = 0;
    for (const auto& n : nodes_) t += n.minus;
    return t;
  }

  bool single_signed() const { return total_plus() == 0 || total_minus() == 0; }

  StabilizedChain flipped() const {
    std::vector<KnotNode> out;
    for (const auto& n : nodes_) out.push_back(n.flipped());
    return StabilizedChain(std::move(out));
  }

  StabilizedChain reversed() const { return StabilizedChain(std::vector<KnotNode>(nodes_.rbegin(), nodes_.rend())); }

  StabilizedChain slice(std::size_t begin, std::size_t end) const {
    return StabilizedChain(std::vector<KnotNode>(nodes_.begin() + static_cast<std::ptrdiff_t>(begin),
                                                 nodes_.begin() + static_cast<std::ptrdiff_t>(end)));
  }

  /// Every framing <= -2 and every node uses exactly its budget -2 - framing.
  void validate(const std::string& where = "chain") const {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const auto& n = nodes_[i];
      const std::string at = where + "[" + std::to_string(i) + "]";
      if (n.framing > -2) throw InputError(ErrorCode::NoncanonicalFraming, at, "framing must be <= -2");
      if (n.plus < 0 || n.minus < 0) throw InputError(ErrorCode::OutOfRange, at, "stabilization counts must be >= 0");
      if (n.used() != -2 - n.framing)
        throw InputError(ErrorCode::BudgetMismatch, at,
                         "stabilizations " + std::to_string(n.used()) + " != budget " + std::to_string(-2 - n.framing));
    }
  }

  friend auto operator<=>(const StabilizedChain&, const StabilizedChain&) = default;
  friend bool operator==(const StabilizedChain&, const StabilizedChain&) = default;

 private:
  std::vector<KnotNode> nodes_;
};

inline ContactClass classify(const StabilizedChain& c) {
  return c.single_signed() ? ContactClass::UniversallyTight : ContactClass::VirtuallyOvertwisted;
}

}  // namespace fillcalc
