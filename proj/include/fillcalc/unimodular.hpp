#pragma once

#include <string>

#include "fillcalc/errors.hpp"
#include "fillcalc/rational.hpp"

namespace fillcalc {

/// Integer 2x2 matrix (a b; c d) with determinant +1 or -1, acting on slopes as s -> (a s + b)/(c s + d).
///
/// A slope n/d is the column vector (n, d); Infinity is (1, 0).
class UnimodularMap {
 public:
  UnimodularMap() : a_(1), b_(0), c_(0), d_(1) {}

  UnimodularMap(Integer a, Integer b, Integer c, Integer d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    Integer det = determinant();
    if (det != 1 && det != -1)
      throw InputError(ErrorCode::Precondition, "", "map is not unimodular, determinant " + det.str());
  }

  static UnimodularMap identity() { return {}; }

  const Integer& a() const noexcept { return a_; }
  const Integer& b() const noexcept { return b_; }
  const Integer& c() const noexcept { return c_; }
  const Integer& d() const noexcept { return d_; }

  Integer determinant() const { return a_ * d_ - b_ * c_; }

  friend UnimodularMap operator*(const UnimodularMap& x, const UnimodularMap& y) {
    return UnimodularMap(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                         x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
  }

  friend bool operator==(const UnimodularMap&, const UnimodularMap&) = default;

  UnimodularMap inverse() const {
    // det is a unit, so the adjugate divided by det stays integral.
    Integer det = determinant();
    return UnimodularMap(d_ * det, -b_ * det, -c_ * det, a_ * det);
  }

  /// Image (n', d') of the column vector (n, d).
  std::pair<Integer, Integer> apply_vector(const Integer& n, const Integer& d) const {
    return {a_ * n + b_ * d, c_ * n + d_ * d};
  }

  std::string to_string() const {
    return "(" + a_.str() + " " + b_.str() + "; " + c_.str() + " " + d_.str() + ")";
  }

 private:
  Integer a_, b_, c_, d_;
};

inline Slope apply_map(const UnimodularMap& m, const Slope& s) {
  if (s.is_infinite()) return Slope::from_vector(m.a(), m.c());
  auto [n, d] = m.apply_vector(s.value().num(), s.value().den());
  return Slope::from_vector(n, d);
}

}  // namespace fillcalc
