// One line per acceptance criterion; nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "fillcalc/fillcalc.hpp"
#include "support/random_structures.hpp"

using namespace fillcalc;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void report(int id, const char* name, const std::function<Outcome()>& body) {
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.ok) ++failures;
  std::printf("%s criterion %d: %s (%s)\n", o.ok ? "PASS" : "FAIL", id, name, o.detail.c_str());
  std::fflush(stdout);
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt_ms(double ms) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f ms", ms);
  return buf;
}

Outcome lens_tree_89_24() {
  auto c = make_lens(89, 24, {{1, 1}, {2, 0}, {0, 0}, {0, 2}});
  auto start = Clock::now();
  auto t = build_tree(c);
  const double ms = ms_since(start);

  bool ok = t.root().children.size() == 1;
  const auto& child = t.node(t.root().children.at(0));
  auto orders = [](const ContactAssembly& a) {
    std::vector<Integer> out;
    for (const auto& comp : a.components()) out.push_back(std::get<StabilizedChain>(comp).lens().p);
    return out;
  };
  ok = ok && orders(child.assembly) == std::vector<Integer>{1, 24};
  ok = ok && std::get<StabilizedChain>(child.assembly[1]).lens() == LensSpace{24, 7};
  ok = ok && child.children.size() == 3;
  const std::vector<std::vector<Integer>> expected{{1, 1, 7}, {1, 4, 4}, {1, 1, 7}};
  for (std::size_t k = 0; ok && k < 3; ++k) {
    const auto& g = t.node(child.children[k]);
    ok = g.is_leaf() && orders(g.assembly) == expected[k];
    for (const auto& comp : g.assembly.components())
      ok = ok && classify(std::get<StabilizedChain>(comp)) == ContactClass::UniversallyTight;
  }
  ok = ok && t.nodes().size() == 5;
  return {ok && ms < 10.0, "5 nodes, 1 child, 3 grandchildren, " + fmt_ms(ms) + " < 10 ms"};
}

Outcome round_trip() {
  auto start = Clock::now();
  long pairs = 0, bad = 0;
  for (int p = 2; p <= 1000; ++p)
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++pairs;
      auto cf = expand(p, q);
      if (!cf.is_canonical() || evaluate(cf) != Slope(Rational(-p, q))) ++bad;
    }
  const double ms = ms_since(start);
  return {bad == 0 && ms < 1000.0,
          std::to_string(pairs) + " pairs, " + std::to_string(bad) + " failures, " + fmt_ms(ms) + " < 1000 ms"};
}

Outcome splitting_identity() {
  std::mt19937 rng(2024);
  auto start = Clock::now();
  long bad = 0;
  for (int iter = 0; iter < 10000; ++iter) {
    MixedTorusData d;
    d.prefix.resize(static_cast<std::size_t>(testing::uniform(rng, 0, 5)));
    for (auto& a : d.prefix) a = testing::uniform(rng, -8, -2);
    d.pivot = testing::uniform(rng, -9, -3);
    if (d.pivot == -3 && d.prefix.empty()) d.pivot = -4;
    d.m = testing::uniform(rng, 0, 8);
    auto s = splitting_data(d);
    const Integer p2 = -s.p2q2.num(), q2 = s.p2q2.den();
    const Integer p1 = -s.p1q1.num(), q1 = s.p1q1.den();
    const Integer p0 = -s.p0q0.num(), q0 = s.p0q0.den();
    if (q1 * p2 - p1 * q2 != 1 || q0 * p1 - p0 * q1 != 1 || p2 * q0 - q2 * p0 != d.m + 3) ++bad;
  }
  const double ms = ms_since(start);
  return {bad == 0 && ms < 2000.0, "10000 instances, " + std::to_string(bad) + " failures, " + fmt_ms(ms) + " < 2000 ms"};
}

Integer enumerate_signs(const Integer& p, const Integer& q) {
  auto cf = expand(p, q);
  std::vector<SignPair> signs(cf.size());
  Integer count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cf.size()) {
      make_lens(p, q, signs);
      ++count;
      return;
    }
    const std::int64_t budget = -2 - cf[k];
    for (std::int64_t plus = 0; plus <= budget; ++plus) {
      signs[k] = {plus, budget - plus};
      rec(k + 1);
    }
  };
  rec(0);
  return count;
}

Outcome counting() {
  long checked = 0, bad = 0;
  for (int p = 2; p <= 60; ++p)
    for (int q = 1; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      ++checked;
      if (count_tight(p, q) != enumerate_signs(p, q)) ++bad;
    }
  const Integer small = count_tight_small({{2, 1}, {2, 1}, {2, 1}});
  StabilizedChain two({KnotNode{-2, 0, 0}});
  const Integer neg = count_choices_neg(SeifertNeg({-4, 2, 0}, {two, two, two}));
  return {bad == 0 && small == 7 && neg == 3,
          std::to_string(checked) + " lens spaces, M(1/2,1/2,1/2) -> " + small.str() + ", e0=-4 [-2]^3 -> " + neg.str()};
}

Outcome h1_conservation() {
  std::mt19937 rng(500);
  long deletions = 0, bad = 0;
  for (int iter = 0; iter < 500; ++iter) {
    auto c = testing::random_chain(rng, 6, -9);
    auto m = linking_matrix(c);
    for (std::size_t k = 0; k < c.size(); ++k) {
      auto [l, r] = split_at(c, k);
      ++deletions;
      if (h1_order(l) * h1_order(r) != abs(determinant(m.without(k)))) ++bad;
    }
  }
  return {bad == 0, "500 chains, " + std::to_string(deletions) + " deletions, " + std::to_string(bad) + " failures"};
}

Outcome fossati() {
  long patterns = 0, bad = 0, twos = 0;
  for (std::int64_t a1 = -6; a1 <= -2; ++a1)
    for (std::int64_t a2 = -6; a2 <= -2; ++a2)
      for (std::int64_t p1 = 0; p1 <= -2 - a1; ++p1)
        for (std::int64_t p2 = 0; p2 <= -2 - a2; ++p2) {
          StabilizedChain c({KnotNode{a1, p1, -2 - a1 - p1}, KnotNode{a2, p2, -2 - a2 - p2}});
          if (classify(c) != ContactClass::VirtuallyOvertwisted) continue;
          ++patterns;
          bool rule = false;
          for (const auto& n : c.nodes()) rule = rule || (n.framing == -4 && !n.both_signs());
          const int expected = rule ? 2 : 1;
          twos += rule;
          auto tree_max = max_leaf_filling_count(build_tree(c));
          if (fossati_count(c) != expected || !tree_max || *tree_max != expected) ++bad;
        }
  return {bad == 0 && patterns > 0, std::to_string(patterns) + " patterns (" + std::to_string(twos) +
                                        " with two fillings), " + std::to_string(bad) + " mismatches"};
}

Outcome seifert_conservation() {
  std::mt19937 rng(200);
  int tm = 0, lm = 0, cm = 0, merges = 0;
  long bad = 0;
  const int target = 200;
  auto matches = [](const Step& s, const IntMatrix& star, const std::vector<std::size_t>& removed) {
    return testing::parts_order(s.parts) == testing::order_after_deletion(star, removed);
  };
  for (long iter = 0; iter < 200000 && tm + lm + cm < target; ++iter) {
    const int which = static_cast<int>(iter % 3);
    if (which < 2) {
      auto s = testing::random_seifert_pos(rng);
      auto mix = classify_mixedness(s);
      if (which == 0 && mix.kind == Mixedness::Kind::ThoroughlyMixed && tm < target / 3 + 1) {
        std::vector<std::size_t> removed{0};
        for (std::size_t i = 0; i < s.n(); ++i) removed.push_back(s.matrix_index(i, 0));
        bad += !matches(decompose_thoroughly(s), s.star_matrix(), removed);
        ++tm;
      } else if (which == 1 && mix.kind == Mixedness::Kind::LightlyMixed && lm < target / 3 + 1) {
        std::vector<std::size_t> removed;
        for (std::size_t k = 0; k < s.n(); ++k)
          if (k != mix.i && k != mix.j) removed.push_back(s.matrix_index(k, 0));
        bad += !matches(decompose_lightly(s, mix.i, mix.j), s.star_matrix(), removed);
        ++lm;
        // The merged chain against the slid diagram [reversed tail i, a_i, 0, a_j, tail j].
        const auto fi = s.leg(mix.i).framings(), fj = s.leg(mix.j).framings();
        std::vector<std::int64_t> slid(fi.rbegin(), fi.rend());
        slid.push_back(0);
        slid.insert(slid.end(), fj.begin(), fj.end());
        auto merged = merge_chains(NegativeContinuedFraction(fi), NegativeContinuedFraction(fj));
        bad += abs(continuant(merged)) != abs(determinant(chain_matrix(slid)));
        ++merges;
      }
    } else {
      auto s = testing::random_seifert_neg(rng);
      if (classify_mixedness(s).kind == Mixedness::Kind::CentrallyMixed && cm < target / 3 + 1) {
        bad += !matches(decompose_centrally(s), s.star_matrix(), {0});
        ++cm;
      }
    }
  }
  const int total = tm + lm + cm;
  return {bad == 0 && total >= target && tm > 0 && lm > 0 && cm > 0,
          std::to_string(total) + " inputs (" + std::to_string(tm) + " thorough, " + std::to_string(lm) + " light, " +
              std::to_string(cm) + " central), " + std::to_string(merges) + " merge checks, " + std::to_string(bad) +
              " failures"};
}

Outcome cable_window() {
  long valid = 0, rejected = 0, bad = 0, boundary = 0;
  for (std::int64_t tb = -50; tb <= 50; ++tb)
    for (std::int64_t q = 1; q <= 50; ++q)
      for (std::int64_t p = -50; p <= 50; ++p) {
        if (std::gcd(p, q) != 1) continue;
        CableInput c{tb, p, q};
        const bool inside = p < q * (tb - 2);
        try {
          auto ev = cable_slope_check(c);
          if (!inside) ++bad;
          ++valid;
          if (!(ev.meridian.is_finite() && ev.meridian.value() > Rational(-1) && ev.meridian.value() < Rational(0))) ++bad;
        } catch (const InputError& e) {
          if (inside || e.code() != ErrorCode::Precondition) ++bad;
          ++rejected;
          boundary += p == q * (tb - 2);
        }
      }
  return {bad == 0 && valid > 0, std::to_string(valid) + " accepted, " + std::to_string(rejected) + " rejected (" +
                                     std::to_string(boundary) + " on the boundary), " + std::to_string(bad) + " failures"};
}

Outcome bundle_counts() {
  long checked = 0, bad = 0;
  for (std::int64_t g = 2; g <= 10; ++g)
    for (std::int64_t e = -100; e < 2 * g - 2; ++e) {
      auto r = bundle_classify({g, e});
      ++checked;
      const Integer total = (2 * g - 1) - e;
      if (!r.total || *r.total != total || !r.budget || *r.budget < 1 || *r.ut != 2 || *r.vot != total - 2) ++bad;
    }
  return {bad == 0, std::to_string(checked) + " (g, e) pairs, " + std::to_string(bad) + " failures"};
}

}  // namespace

int main() {
  report(1, "decomposition tree of L(89,24)", lens_tree_89_24);
  report(2, "continued fraction round trip, p <= 1000", round_trip);
  report(3, "splitting slope identities", splitting_identity);
  report(4, "counting oracles", counting);
  report(5, "H1 conservation on chains", h1_conservation);
  report(6, "two-knot filling dichotomy", fossati);
  report(7, "Seifert decomposition conservation", seifert_conservation);
  report(8, "cable slope window", cable_window);
  report(9, "circle bundle counts", bundle_counts);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
