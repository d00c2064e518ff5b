#pragma once

#include <cstdint>
#include <span>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "fillcalc/errors.hpp"
#include "fillcalc/rational.hpp"

namespace fillcalc {

/// Negative (Hirzebruch-Jung) continued fraction [a0, a1, ..., an] = a0 - 1/(a1 - 1/(... - 1/an)).
///
/// Any coefficient list is representable so that intermediate, non-canonical lists (a trailing -1
/// during slope increments, a 0-framed center during handle slides) can be evaluated. The empty
/// list stands for S^3 and evaluates to Infinity.
class NegativeContinuedFraction {
 public:
  using Coefficients = std::vector<std::int64_t>;

  NegativeContinuedFraction() = default;
  explicit NegativeContinuedFraction(Coefficients coeffs) : coeffs_(std::move(coeffs)) {}
  NegativeContinuedFraction(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) {}

  const Coefficients& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool empty() const noexcept { return coeffs_.empty(); }
  std::int64_t operator[](std::size_t i) const { return coeffs_.at(i); }

  /// Every coefficient is at most -2.
  bool is_canonical() const {
    for (auto a : coeffs_)
      if (a > -2) return false;
    return true;
  }

  friend bool operator==(const NegativeContinuedFraction&, const NegativeContinuedFraction&) = default;

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(coeffs_[i]);
    }
    return out + "]";
  }

 private:
  Coefficients coeffs_;
};

/// The unique expansion of -p/q with every entry <= -2, for coprime p > q > 0.
inline NegativeContinuedFraction expand(const Integer& p, const Integer& q) {
  if (q <= 0 || q >= p)
    throw InputError(ErrorCode::OutOfRange, "", "expansion needs p > q > 0, got p=" + p.str() + " q=" + q.str());
  if (gcd(p, q) != 1)
    throw InputError(ErrorCode::NotCoprime, "", "expansion needs coprime p, q, got p=" + p.str() + " q=" + q.str());

  NegativeContinuedFraction::Coefficients out;
  if (p <= std::numeric_limits<std::int64_t>::max()) {
    auto num = static_cast<std::int64_t>(p);
    auto den = static_cast<std::int64_t>(q);
    // -num/den = a - 1/x with a = -ceil(num/den); x = -den/(a*den + num) continues the expansion.
    while (den != 0) {
      const std::int64_t r = num % den;
      out.push_back(-(num / den + (r != 0)));
      num = std::exchange(den, r == 0 ? 0 : den - r);
    }
    return NegativeContinuedFraction(std::move(out));
  }
  Integer num = p;
  Integer den = q;
  while (den != 0) {
    Integer c = ceil_div(num, den);
    out.push_back(-to_int64(c, "continued fraction coefficient"));
    Integer rem = c * den - num;
    num = den;
    den = rem;
  }
  return NegativeContinuedFraction(std::move(out));
}

/// Right-to-left fold x <- a_i - 1/x. Empty input gives Infinity.
inline Slope evaluate(std::span<const std::int64_t> coeffs) {
  if (coeffs.empty()) return Slope::infinity();
  std::size_t i = coeffs.size() - 1;
  // 64-bit fold while nothing overflows, then continue exactly.
  std::int64_t n64 = coeffs[i], d64 = 1;
  bool overflow = false;
  while (i > 0) {
    if (n64 == 0) throw std::domain_error("evaluate: zero denominator in continued fraction");
    std::int64_t next;
    if (__builtin_mul_overflow(coeffs[i - 1], n64, &next) || __builtin_sub_overflow(next, d64, &next)) {
      overflow = true;
      break;
    }
    d64 = std::exchange(n64, next);
    --i;
  }
  if (!overflow) return Slope(Rational(Integer(n64), Integer(d64)));
  Integer num = n64;
  Integer den = d64;
  while (i > 0) {
    if (num == 0) throw std::domain_error("evaluate: zero denominator in continued fraction");
    Integer next = Integer(coeffs[i - 1]) * num - den;
    den = std::move(num);
    num = std::move(next);
    --i;
  }
  return Slope(Rational(num, den));
}

inline Slope evaluate(const NegativeContinuedFraction& cf) { return evaluate(std::span(cf.coeffs())); }

/// Adds one to the final entry, collapsing trailing -1 entries into their predecessor.
inline NegativeContinuedFraction increment_last(const NegativeContinuedFraction& cf) {
  auto coeffs = cf.coeffs();
  if (coeffs.empty()) throw InputError(ErrorCode::Precondition, "", "increment_last on empty continued fraction");
  coeffs.back() += 1;
  // [..., b, -1] = [..., b + 1]
  while (!coeffs.empty() && coeffs.back() == -1) {
    coeffs.pop_back();
    if (!coeffs.empty()) coeffs.back() += 1;
  }
  return NegativeContinuedFraction(std::move(coeffs));
}

/// Tridiagonal determinant (continuant) of the chain with 1s off the diagonal.
inline Integer continuant(std::span<const std::int64_t> coeffs) {
  Integer prev = 1;  // K() = 1
  Integer cur = coeffs.empty() ? Integer(1) : Integer(coeffs.front());
  if (coeffs.empty()) return cur;
  for (std::size_t i = 1; i < coeffs.size(); ++i) {
    Integer next = Integer(coeffs[i]) * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline Integer continuant(const NegativeContinuedFraction& cf) { return continuant(std::span(cf.coeffs())); }

}  // namespace fillcalc
