#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fillcalc/errors.hpp"
#include "fillcalc/knot.hpp"
#include "fillcalc/matrix.hpp"
#include "fillcalc/rational.hpp"

namespace fillcalc {

/// Seifert invariant q/p of one exceptional fiber.
struct SeifertInvariant {
  Integer p;
  Integer q;
  friend bool operator==(const SeifertInvariant&, const SeifertInvariant&) = default;
};

/// Star-shaped diagram for M(q1/p1, ..., qn/pn) with e0 >= 0: a 0-framed center
/// (the 1-handle) and legs whose first knots K_i are linked with it.
///
/// Heads have budget -1 - a; every other knot has budget -2 - a. Only the last leg may
/// have a -1 head, and then e0 > 0.
class SeifertPos {
 public:
  SeifertPos() = default;
  explicit SeifertPos(std::vector<StabilizedChain> legs) : legs_(std::move(legs)) {}

  const std::vector<StabilizedChain>& legs() const noexcept { return legs_; }
  std::size_t n() const noexcept { return legs_.size(); }
  const StabilizedChain& leg(std::size_t i) const { return legs_.at(i); }
  const KnotNode& head(std::size_t i) const { return legs_.at(i)[0]; }

  static std::int64_t budget(const KnotNode& node, std::size_t index) {
    return index == 0 ? -1 - node.framing : -2 - node.framing;
  }

  /// -p/q = eval(leg); r = q/p.
  SeifertInvariant invariant(std::size_t i) const {
    Slope s = evaluate(legs_.at(i).fraction());
    return {-s.value().num(), s.value().den()};
  }

  std::vector<SeifertInvariant> invariants() const {
    std::vector<SeifertInvariant> out;
    for (std::size_t i = 0; i < n(); ++i) out.push_back(invariant(i));
    return out;
  }

  std::int64_t euler_number() const {
    Integer e = 0;
    for (const auto& inv : invariants()) e += floor_div(inv.q, inv.p);
    return to_int64(e, "euler number");
  }

  /// K_i' : the head, except on a -1 headed leg where it is the first knot with nonzero budget.
  std::optional<std::size_t> reference_index(std::size_t i) const {
    const auto& l = legs_.at(i);
    if (l.empty()) return std::nullopt;
    if (l[0].framing <= -2) return 0;
    for (std::size_t k = 1; k < l.size(); ++k)
      if (budget(l[k], k) > 0) return k;
    return std::nullopt;
  }

  /// Strict validation is for user input; relaxed validation admits the truncated legs that
  /// appear inside decomposition trees (p_n may become 1 once K_n' is deleted).
  void validate(bool strict = true) const {
    if (strict && n() < 3) throw InputError(ErrorCode::WrongShape, "legs", "need at least 3 legs");
    for (std::size_t i = 0; i < n(); ++i) {
      const auto& l = legs_[i];
      const std::string where = "legs[" + std::to_string(i) + "]";
      if (l.empty()) throw InputError(ErrorCode::WrongShape, where, "legs must be nonempty");
      for (std::size_t k = 0; k < l.size(); ++k) {
        const auto& node = l[k];
        const std::string at = where + "[" + std::to_string(k) + "]";
        const bool minus_one_head = k == 0 && i + 1 == n() && node.framing == -1;
        if (node.framing > -2 && !minus_one_head)
          throw InputError(ErrorCode::NoncanonicalFraming, at,
                           k == 0 ? "only the last leg may have a -1 head" : "framing must be <= -2");
        if (node.plus < 0 || node.minus < 0) throw InputError(ErrorCode::OutOfRange, at, "stabilization counts must be >= 0");
        if (node.used() != budget(node, k))
          throw InputError(ErrorCode::BudgetMismatch, at,
                           "stabilizations " + std::to_string(node.used()) + " != budget " +
                               std::to_string(budget(node, k)));
      }
      if (strict && l[0].framing == -1 && !reference_index(i))
        throw InputError(ErrorCode::WrongShape, where, "a -1 headed leg needs a knot with framing <= -3 (p_n >= 2)");
    }
  }

  /// Linking matrix: index 0 is the 0-framed center, then legs in order.
  IntMatrix star_matrix() const { return star_matrix_with_center(0); }

  /// Row index of knot k on leg i in star_matrix().
  std::size_t matrix_index(std::size_t i, std::size_t k) const {
    std::size_t idx = 1;
    for (std::size_t j = 0; j < i; ++j) idx += legs_[j].size();
    return idx + k;
  }

  friend auto operator<=>(const SeifertPos&, const SeifertPos&) = default;
  friend bool operator==(const SeifertPos&, const SeifertPos&) = default;

 protected:
  IntMatrix star_matrix_with_center(std::int64_t center) const {
    std::size_t size = 1;
    for (const auto& l : legs_) size += l.size();
    IntMatrix m(size);
    m(0, 0) = center;
    std::size_t idx = 1;
    for (const auto& l : legs_) {
      for (std::size_t k = 0; k < l.size(); ++k) {
        m(idx + k, idx + k) = l[k].framing;
        if (k == 0) m(0, idx) = m(idx, 0) = 1;
        else m(idx + k - 1, idx + k) = m(idx + k, idx + k - 1) = 1;
      }
      idx += l.size();
    }
    return m;
  }

  std::vector<StabilizedChain> legs_;
};

/// Star-shaped diagram for M(-q1/p1, ..., -qn/pn) with e0 <= -3: a central knot of framing e0
/// and legs of framings <= -2, every knot with budget -2 - a.
class SeifertNeg {
 public:
  SeifertNeg() = default;
  SeifertNeg(KnotNode central, std::vector<StabilizedChain> legs) : central_(central), legs_(std::move(legs)) {}

  const KnotNode& central() const noexcept { return central_; }
  const std::vector<StabilizedChain>& legs() const noexcept { return legs_; }
  std::size_t n() const noexcept { return legs_.size(); }
  const StabilizedChain& leg(std::size_t i) const { return legs_.at(i); }

  std::int64_t euler_number() const noexcept { return central_.framing; }

  /// Invariant of leg i as r = -q/p with e0 folded into the first leg, so that sum floor(r_i) = e0.
  std::vector<Rational> invariants() const {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < n(); ++i) {
      Slope s = evaluate(legs_[i].fraction());  // -p/q'
      Rational frac(s.value().den(), -s.value().num());  // q'/p in (0, 1)
      out.push_back(Rational(-1) + frac);
    }
    Integer shift = Integer(central_.framing) + static_cast<std::int64_t>(n());
    if (!out.empty()) out[0] = out[0] + Rational(shift);
    return out;
  }

  void validate(bool strict = true) const {
    if (strict && n() < 3) throw InputError(ErrorCode::WrongShape, "legs", "need at least 3 legs");
    if (central_.framing > -3) throw InputError(ErrorCode::EulerBound, "central", "central framing e0 must be <= -3");
    if (central_.framing > -static_cast<std::int64_t>(n()))
      throw InputError(ErrorCode::EulerBound, "central", "e0 must be <= -n");
    if (central_.plus < 0 || central_.minus < 0)
      throw InputError(ErrorCode::OutOfRange, "central", "stabilization counts must be >= 0");
    if (central_.used() != -2 - central_.framing)
      throw InputError(ErrorCode::BudgetMismatch, "central",
                       "stabilizations " + std::to_string(central_.used()) + " != budget " +
                           std::to_string(-2 - central_.framing));
    for (std::size_t i = 0; i < n(); ++i) {
      const std::string where = "legs[" + std::to_string(i) + "]";
      if (legs_[i].empty()) throw InputError(ErrorCode::WrongShape, where, "legs must be nonempty");
      legs_[i].validate(where);
    }
  }

  /// Index 0 is the central knot, then legs in order.
  IntMatrix star_matrix() const {
    std::size_t size = 1;
    for (const auto& l : legs_) size += l.size();
    IntMatrix m(size);
    m(0, 0) = central_.framing;
    std::size_t idx = 1;
    for (const auto& l : legs_) {
      for (std::size_t k = 0; k < l.size(); ++k) {
        m(idx + k, idx + k) = l[k].framing;
        if (k == 0) m(0, idx) = m(idx, 0) = 1;
        else m(idx + k - 1, idx + k) = m(idx + k, idx + k - 1) = 1;
      }
      idx += l.size();
    }
    return m;
  }

  std::size_t matrix_index(std::size_t i, std::size_t k) const {
    std::size_t idx = 1;
    for (std::size_t j = 0; j < i; ++j) idx += legs_[j].size();
    return idx + k;
  }

  friend auto operator<=>(const SeifertNeg&, const SeifertNeg&) = default;
  friend bool operator==(const SeifertNeg&, const SeifertNeg&) = default;

 private:
  KnotNode central_;
  std::vector<StabilizedChain> legs_;
};

}  // namespace fillcalc
