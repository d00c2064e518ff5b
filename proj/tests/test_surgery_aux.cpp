#include <catch_amalgamated.hpp>

#include "fillcalc/surgery_aux.hpp"

using namespace fillcalc;

TEST_CASE("cable report on small inputs") {
  auto r = cable_report({1, -3, 2});
  CHECK(r.tb_cable == -6);
  CHECK(r.lens == LensSpace{4, 1});
  CHECK(r.surgery_coeff == Rational(-7, 4));
  CHECK(r.torus_knot_param == -1);

  auto s = cable_report({3, 1, 2});
  CHECK(s.tb_cable == 2);
  CHECK(s.lens == LensSpace{4, 1});
  CHECK(s.surgery_coeff == Rational(1, 4));
  CHECK(s.torus_knot_param == -1);
}

TEST_CASE("cable preconditions") {
  CHECK_THROWS_AS(cable_report({3, 2, 2}), InputError);
  CHECK_THROWS_AS(cable_report({0, -3, 0}), InputError);
  CHECK_THROWS_AS(cable_report({0, -6, 2}), InputError);
  try {
    cable_report({3, 1, 1});
    FAIL("boundary accepted");
  } catch (const InputError& e) {
    CHECK(e.code() == ErrorCode::Precondition);
  }
}

TEST_CASE("knot type in the standard neighbourhood") {
  CHECK(knot_type_in_neighbourhood(2, 3, -1) == std::pair<Integer, Integer>{-1, 3});
  CHECK(knot_type_in_neighbourhood(-5, 2, 4) == std::pair<Integer, Integer>{3, 2});
}

TEST_CASE("cable slope evidence") {
  auto ev = cable_slope_check({1, -3, 2});
  CHECK(ev.gamma_neighbourhood == Slope(1));
  CHECK(ev.gamma_stabilized.is_infinite());
  // 4/(-7) under (1 0; 0 1) stays -4/7.
  CHECK(ev.meridian == Slope(Rational(-4, 7)));
  CHECK(ev.m == 0);
  CHECK(ev.triple.s1.is_infinite());
}

TEST_CASE("cable window over a grid") {
  int valid = 0;
  for (std::int64_t tb = -20; tb <= 20; ++tb)
    for (std::int64_t q = 1; q <= 20; ++q)
      for (std::int64_t p = -20; p <= 20; ++p) {
        if (gcd(Integer(p), Integer(q)) != 1) continue;
        CableInput c{tb, p, q};
        if (p < q * (tb - 2)) {
          auto ev = cable_slope_check(c);
          REQUIRE(ev.meridian.value() > Rational(-1));
          REQUIRE(ev.meridian.value() < Rational(0));
          REQUIRE(cable_report(c).tb_cable == p * q);
          auto r = cable_report(c);
          REQUIRE(normalize_lens(r.lens.p, r.lens.q) == r.lens);
          ++valid;
        } else {
          REQUIRE_THROWS_AS(cable_slope_check(c), InputError);
        }
      }
  CHECK(valid > 1000);
}

TEST_CASE("circle bundles of higher genus") {
  auto r = bundle_classify({2, -3});
  CHECK(r.scope == BundleReport::Scope::Counted);
  CHECK(*r.budget == 5);
  CHECK(*r.total == 6);
  CHECK(*r.ut == 2);
  CHECK(*r.vot == 4);
  auto edge = bundle_classify({3, 4});
  CHECK(*edge.budget == 0);
  CHECK(*edge.total == 1);
  CHECK(*edge.ut == 1);
  CHECK(*edge.vot == 0);
  CHECK(bundle_classify({2, 3}).scope == BundleReport::Scope::OutOfRange);
  CHECK(bundle_classify({1, -5}).scope == BundleReport::Scope::TorusBundle);
  CHECK_THROWS_AS(bundle_classify({-1, 0}), InputError);
}

TEST_CASE("genus zero bundles route to lens spaces") {
  auto r = bundle_classify({0, -4});
  CHECK(r.scope == BundleReport::Scope::LensSpace);
  CHECK(*r.lens == LensSpace{4, 1});
  CHECK(*r.total == 3);
  CHECK(*r.ut == 2);
  CHECK(*r.vot == 1);
  auto pos = bundle_classify({0, 5});
  CHECK(*pos.lens == LensSpace{5, 4});
  CHECK(*pos.total == 1);
  CHECK(bundle_classify({0, 1}).scope == BundleReport::Scope::Sphere);
  CHECK(bundle_classify({0, -1}).scope == BundleReport::Scope::Sphere);
  CHECK(bundle_classify({0, 0}).scope == BundleReport::Scope::SphereBundle);
}

TEST_CASE("bundle counts sweep") {
  for (std::int64_t g = 2; g <= 10; ++g)
    for (std::int64_t e = -40; e < 2 * g - 2; ++e) {
      auto r = bundle_classify({g, e});
      REQUIRE(*r.total == (2 * g - 1) - e);
      REQUIRE(*r.ut == 2);
      REQUIRE(*r.vot == *r.total - 2);
    }
}
