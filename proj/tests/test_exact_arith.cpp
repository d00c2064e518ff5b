#include <catch_amalgamated.hpp>

#include <random>

#include "fillcalc/continued_fraction.hpp"
#include "fillcalc/matrix.hpp"
#include "fillcalc/rational.hpp"
#include "fillcalc/unimodular.hpp"

using namespace fillcalc;

TEST_CASE("rational normalizes sign and common factors") {
  Rational r(6, -4);
  CHECK(r.num() == -3);
  CHECK(r.den() == 2);
  CHECK(Rational(0, -5) == Rational(0));
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-18, 7).to_string() == "-18/7");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("integer division helpers round consistently") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(ceil_div(7, 2) == 4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(mod_floor(-7, 4) == 1);
}

TEST_CASE("infinity is a distinct slope equal only to itself") {
  CHECK(Slope::infinity() == Slope::infinity());
  CHECK_FALSE(Slope::infinity() == Slope(0));
  CHECK(Slope::from_vector(3, 0).is_infinite());
  CHECK(Slope::from_vector(-4, 2) == Slope(-2));
  CHECK_THROWS(Slope::from_vector(0, 0));
  CHECK(basic_slice_less(Slope(100), Slope::infinity()));
  CHECK_FALSE(basic_slice_less(Slope::infinity(), Slope(100)));
}

TEST_CASE("expansion of -p/q") {
  CHECK(expand(89, 24) == NegativeContinuedFraction{-4, -4, -2, -4});
  CHECK(expand(24, 7) == NegativeContinuedFraction{-4, -2, -4});
  for (int p = 2; p < 20; ++p) CHECK(expand(p, 1) == NegativeContinuedFraction{-p});
  CHECK(expand(5, 4) == NegativeContinuedFraction{-2, -2, -2, -2});
}

TEST_CASE("expansion rejects bad input") {
  CHECK_THROWS_AS(expand(5, 0), InputError);
  CHECK_THROWS_AS(expand(5, 5), InputError);
  CHECK_THROWS_AS(expand(5, 7), InputError);
  try {
    expand(6, 4);
    FAIL("expected an exception");
  } catch (const InputError& e) {
    CHECK(e.code() == ErrorCode::NotCoprime);
  }
}

TEST_CASE("evaluation folds from the right") {
  CHECK(evaluate(NegativeContinuedFraction{-4, -4, -2, -4}) == Slope(Rational(-89, 24)));
  CHECK(evaluate(NegativeContinuedFraction{-9}) == Slope(-9));
  CHECK(evaluate(NegativeContinuedFraction{}).is_infinite());
  CHECK(evaluate(NegativeContinuedFraction{-1, -2, -3}) == Slope(Rational(-2, 5)));
  // [-1, -1]: -1 - 1/(-1) = 0, usable as an intermediate.
  CHECK(evaluate(NegativeContinuedFraction{-1, -1}) == Slope(0));
  CHECK_THROWS_AS(evaluate(NegativeContinuedFraction{-2, 0, -3, 0}), std::domain_error);
}

TEST_CASE("round trip over all small coprime pairs") {
  int pairs = 0;
  for (int p = 2; p <= 300; ++p)
    for (int q = 1; q < p; ++q) {
      if (gcd(Integer(p), Integer(q)) != 1) continue;
      auto cf = expand(p, q);
      REQUIRE(cf.is_canonical());
      REQUIRE(evaluate(cf) == Slope(Rational(-p, q)));
      ++pairs;
    }
  CHECK(pairs > 27000);
}

TEST_CASE("increment_last collapses trailing -1 entries") {
  CHECK(increment_last({-4, -2, -4}) == NegativeContinuedFraction{-4, -2, -3});
  CHECK(increment_last({-4, -2}) == NegativeContinuedFraction{-3});
  CHECK(increment_last({-2}) == NegativeContinuedFraction{});
  CHECK(increment_last({-3, -2, -2}) == NegativeContinuedFraction{-2});
  CHECK(increment_last({-2, -2, -2}) == NegativeContinuedFraction{});
}

TEST_CASE("increment_last agrees with naive evaluation") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> len(1, 6), entry(-7, -2);
  for (int iter = 0; iter < 2000; ++iter) {
    NegativeContinuedFraction::Coefficients c(static_cast<std::size_t>(len(rng)));
    for (auto& a : c) a = entry(rng);
    auto naive = c;
    naive.back() += 1;
    auto collapsed = increment_last(NegativeContinuedFraction(c));
    if (collapsed.empty()) continue;
    Slope expected;
    try {
      expected = evaluate(NegativeContinuedFraction(naive));
    } catch (const std::domain_error&) {
      continue;
    }
    REQUIRE(evaluate(collapsed) == expected);
  }
}

TEST_CASE("continuant equals the tridiagonal determinant") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> len(0, 7), entry(-9, 3);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(len(rng)));
    for (auto& a : c) a = entry(rng);
    REQUIRE(continuant(c) == determinant(chain_matrix(c)));
  }
  CHECK(abs(continuant(std::vector<std::int64_t>{-4, -2, -4})) == 24);
  CHECK(continuant(std::vector<std::int64_t>{}) == 1);
}

TEST_CASE("bareiss determinant on small matrices") {
  IntMatrix m(3);
  m(0, 0) = 0, m(0, 1) = 2, m(0, 2) = 1;
  m(1, 0) = 1, m(1, 1) = 0, m(1, 2) = 3;
  m(2, 0) = 4, m(2, 1) = 1, m(2, 2) = 0;
  // 0(0-3) - 2(0-12) + 1(1-0) = 25
  CHECK(determinant(m) == 25);
  CHECK(determinant(IntMatrix()) == 1);
  CHECK(determinant(m.without(0)) == -3);
}

TEST_CASE("unimodular maps act on slopes") {
  UnimodularMap id;
  CHECK(apply_map(id, Slope(Rational(3, 7))) == Slope(Rational(3, 7)));
  CHECK(apply_map(id, Slope::infinity()).is_infinite());
  UnimodularMap m(2, 1, 1, 1);
  CHECK(apply_map(m, Slope::infinity()) == Slope(2));
  CHECK(apply_map(UnimodularMap(1, 5, 0, 1), Slope::infinity()).is_infinite());
  CHECK(apply_map(m, Slope(-1)).is_infinite());
  CHECK_THROWS_AS(UnimodularMap(2, 0, 0, 2), InputError);
  CHECK(m * m.inverse() == UnimodularMap::identity());
}

TEST_CASE("slope action is a group action") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> small(-6, 6);
  auto random_map = [&] {
    UnimodularMap m;
    for (int k = 0; k < 4; ++k) {
      int t = small(rng);
      m = m * (k % 2 ? UnimodularMap(1, t, 0, 1) : UnimodularMap(1, 0, t, 1));
    }
    if (rng() % 2) m = m * UnimodularMap(0, 1, 1, 0);
    return m;
  };
  for (int iter = 0; iter < 500; ++iter) {
    UnimodularMap a = random_map(), b = random_map();
    Slope s = (iter % 7 == 0) ? Slope::infinity() : Slope(Rational(small(rng), 1 + (rng() % 9)));
    REQUIRE(apply_map(b, apply_map(a, s)) == apply_map(b * a, s));
  }
}

TEST_CASE("values beyond 64 bits stay exact") {
  NegativeContinuedFraction::Coefficients c(40, -1000);
  c.back() = -7;
  NegativeContinuedFraction cf(c);
  Slope s = evaluate(cf);
  REQUIRE(abs(s.value().num()) > Integer(std::numeric_limits<std::int64_t>::max()));
  CHECK(expand(-s.value().num(), s.value().den()) == cf);
  Integer big = Integer(1) << 80;
  CHECK_THROWS_AS(expand(3 * big + 1, 3), std::overflow_error);
}
