#pragma once

#include <cstdint>
#include <vector>

#include "fillcalc/continued_fraction.hpp"
#include "fillcalc/errors.hpp"
#include "fillcalc/rational.hpp"
#include "fillcalc/unimodular.hpp"

namespace fillcalc {

/// Boundary slopes of the two basic slices adjacent to a mixed torus.
struct SlopeTriple {
  Slope s0;
  Slope s1;
  Slope s2;
  friend bool operator==(const SlopeTriple&, const SlopeTriple&) = default;
};

/// Position of a mixed torus inside a chain: the fraction [prefix, pivot, -2 x (m+1)].
struct MixedTorusData {
  std::vector<std::int64_t> prefix;
  std::int64_t pivot = -3;
  std::int64_t m = 0;

  void validate() const {
    if (pivot > -3) throw InputError(ErrorCode::OutOfRange, "pivot", "pivot must be <= -3");
    if (m < 0) throw InputError(ErrorCode::OutOfRange, "m", "m must be nonnegative");
    if (pivot == -3 && prefix.empty())
      throw InputError(ErrorCode::Precondition, "prefix", "pivot -3 needs a nonempty prefix");
    for (std::size_t i = 0; i < prefix.size(); ++i)
      if (prefix[i] > -2)
        throw InputError(ErrorCode::NoncanonicalFraming, "prefix[" + std::to_string(i) + "]", "entries must be <= -2");
  }
};

struct SplittingData {
  Rational p0q0;
  Rational p1q1;
  Rational p2q2;
  SlopeTriple triple;
  UnimodularMap normalizer;
  Integer determinant;  // p'2 q'0 - q'2 p'0
  std::int64_t branch_count = 0;
};

/// Slopes met while peeling basic slices off the chain, from eval(cf) up to -1.
inline std::vector<Slope> basic_slice_slopes(const NegativeContinuedFraction& cf) {
  if (!cf.is_canonical()) throw InputError(ErrorCode::NoncanonicalFraming, "", "basic slices need a canonical chain");
  std::vector<Slope> out;
  if (cf.empty()) return out;
  NegativeContinuedFraction cur = cf;
  while (!cur.empty()) {
    out.push_back(evaluate(cur));
    cur = increment_last(cur);
  }
  out.push_back(Slope(-1));
  return out;
}

namespace detail {

// -p'/q' as the primitive pair (p', q') with q' > 0.
inline std::pair<Integer, Integer> positive_pair(const Rational& r) { return {-r.num(), r.den()}; }

inline std::vector<std::int64_t> concat(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Numerator/denominator pair of a continued fraction, denominator kept positive for negative values.
struct Fraction {
  Integer n;
  Integer d;
};

// r - d/n, written as (d - r n)/(-n).
inline Fraction prepend(std::int64_t r, const Fraction& f) { return {f.d - Integer(r) * f.n, -f.n}; }

inline Fraction fold(const std::vector<std::int64_t>& coeffs) {
  Fraction f{coeffs.back(), 1};
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) f = prepend(coeffs[i], f);
  return f;
}

inline Integer cross(const Fraction& x, const Fraction& y) { return x.n * y.d - y.n * x.d; }

// Rebuilds all three fractions from the tails up, checking the determinants never move.
inline void verify_by_prefix_extension(const MixedTorusData& data) {
  const std::vector<std::int64_t> twos(static_cast<std::size_t>(data.m + 1), -2);
  std::size_t shared = data.prefix.size();
  std::vector<std::int64_t> tail0, tail1, tail2;
  if (data.pivot <= -4) {
    tail2 = concat({data.pivot}, twos);
    tail1 = {data.pivot + 1};
    tail0 = {data.pivot + 2};
  } else {
    --shared;
    const std::int64_t last = data.prefix.back();
    tail2 = concat({last, data.pivot}, twos);
    tail1 = {last, data.pivot + 1};
    tail0 = {last + 1};
  }
  Fraction f0 = fold(tail0), f1 = fold(tail1), f2 = fold(tail2);
  const Integer d02 = cross(f0, f2);
  const Integer d12 = cross(f1, f2);
  const Integer d01 = cross(f0, f1);
  check_internal(d02 == data.m + 3, "base determinant differs from m+3");
  for (std::size_t k = shared; k-- > 0;) {
    f0 = prepend(data.prefix[k], f0);
    f1 = prepend(data.prefix[k], f1);
    f2 = prepend(data.prefix[k], f2);
    check_internal(cross(f0, f2) == d02, "determinant changed under prefix extension");
    check_internal(cross(f1, f2) == d12, "unit determinant changed under prefix extension");
    check_internal(cross(f0, f1) == d01, "unit determinant changed under prefix extension");
  }
}

}  // namespace detail

/// The three slopes around a mixed torus, their normalization to (-1, inf, s2), and the splitting count.
inline SplittingData splitting_data(const MixedTorusData& data) {
  data.validate();
  const std::vector<std::int64_t> twos(static_cast<std::size_t>(data.m + 1), -2);

  auto with_pivot = [&](std::int64_t pivot) { return detail::concat(data.prefix, {pivot}); };
  std::vector<std::int64_t> cf2 = detail::concat(with_pivot(data.pivot), twos);
  std::vector<std::int64_t> cf1 = with_pivot(data.pivot + 1);
  std::vector<std::int64_t> cf0;
  if (data.pivot <= -4) {
    cf0 = with_pivot(data.pivot + 2);
  } else {
    cf0 = data.prefix;
    cf0.back() += 1;
  }

  SplittingData out;
  out.p2q2 = evaluate(cf2).value();
  out.p1q1 = evaluate(cf1).value();
  out.p0q0 = evaluate(cf0).value();

  auto [p2, q2] = detail::positive_pair(out.p2q2);
  auto [p1, q1] = detail::positive_pair(out.p1q1);
  auto [p0, q0] = detail::positive_pair(out.p0q0);

  check_internal(q1 * p2 - p1 * q2 == 1, "q'1 p'2 - p'1 q'2 != 1");
  check_internal(q0 * p1 - p0 * q1 == 1, "q'0 p'1 - p'0 q'1 != 1");
  out.determinant = p2 * q0 - q2 * p0;
  check_internal(out.determinant == data.m + 3, "p'2 q'0 - q'2 p'0 != m+3");
  detail::verify_by_prefix_extension(data);

  // Send slope 1 to inf and slope 2 to 0, then shear so slope 0 lands on -1.
  UnimodularMap send(q2, p2, -q1, -p1);
  UnimodularMap shear(1, out.determinant - 1, 0, 1);
  out.normalizer = shear * send;
  out.triple = {apply_map(out.normalizer, Slope(out.p0q0)), apply_map(out.normalizer, Slope(out.p1q1)),
                apply_map(out.normalizer, Slope(out.p2q2))};
  check_internal(out.triple.s0 == Slope(-1), "normalized s0 != -1");
  check_internal(out.triple.s1.is_infinite(), "normalized s1 != inf");
  check_internal(out.triple.s2 == Slope(Rational(out.determinant - 1)), "normalized s2 mismatch");

  // Admissible splitting slopes are the integers 0 .. s2 - 1.
  out.branch_count = to_int64(out.determinant - 1, "branch count");
  return out;
}

}  // namespace fillcalc
