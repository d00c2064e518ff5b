#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fillcalc {

using Integer = boost::multiprecision::cpp_int;

inline Integer abs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

/// Quotient rounded toward negative infinity.
inline Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw std::domain_error("floor_div: division by zero");
  Integer q = a / b;
  Integer r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b) { return -floor_div(-a, b); }

/// Residue of a modulo |b|, always in [0, |b|).
inline Integer mod_floor(const Integer& a, const Integer& b) {
  Integer m = abs(b);
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

inline std::int64_t to_int64(const Integer& x, const char* what = "value") {
  if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
  return static_cast<std::int64_t>(x);
}

/// Exact fraction num/den with den > 0 and gcd(|num|, den) = 1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(const Integer& n) : num_(n), den_(1) {}  // NOLINT: implicit by design of the algebra
  Rational(std::int64_t n) : num_(n), den_(1) {}    // NOLINT
  Rational(int n) : num_(n), den_(1) {}             // NOLINT

  Rational(Integer n, Integer d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    normalize();
  }

  const Integer& num() const noexcept { return num_; }
  const Integer& den() const noexcept { return den_; }

  bool is_integer() const { return den_ == 1; }
  Integer floor() const { return floor_div(num_, den_); }

  Rational operator-() const { return Rational(-num_, den_, raw_tag{}); }
  Rational reciprocal() const { return Rational(den_, num_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    Integer lhs = a.num_ * b.den_;
    Integer rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  struct raw_tag {};
  Rational(Integer n, Integer d, raw_tag) : num_(std::move(n)), den_(std::move(d)) {}

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Integer g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Integer num_;
  Integer den_;
};

/// A boundary slope: an exact rational or the vertical slope Infinity.
class Slope {
 public:
  Slope() = default;  // Infinity
  Slope(Rational r) : value_(std::move(r)) {}  // NOLINT
  Slope(std::int64_t n) : value_(Rational(n)) {}  // NOLINT
  Slope(int n) : value_(Rational(n)) {}  // NOLINT

  static Slope infinity() { return Slope(); }

  /// Slope numerator/denominator of a primitive vector; zero denominator gives Infinity.
  static Slope from_vector(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) {
      if (numerator == 0) throw std::domain_error("Slope: zero vector");
      return infinity();
    }
    return Slope(Rational(numerator, denominator));
  }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  bool is_finite() const noexcept { return value_.has_value(); }

  const Rational& value() const {
    if (!value_) throw std::domain_error("Slope: infinite slope has no rational value");
    return *value_;
  }

  friend bool operator==(const Slope& a, const Slope& b) { return a.value_ == b.value_; }

  std::string to_string() const { return value_ ? value_->to_string() : std::string("inf"); }
  friend std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.to_string(); }

 private:
  std::optional<Rational> value_;
};

/// Ordering used only along basic-slice sequences: Infinity sits above every finite slope.
inline bool basic_slice_less(const Slope& a, const Slope& b) {
  if (a.is_infinite()) return false;
  if (b.is_infinite()) return true;
  return a.value() < b.value();
}

}  // namespace fillcalc
