#include <catch_amalgamated.hpp>

#include <random>

#include "fillcalc/io.hpp"
#include "support/random_structures.hpp"

using namespace fillcalc;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse_structure(text);
  } catch (const InputError& e) {
    return e.code();
  }
  FAIL("input was accepted: " << text);
  return ErrorCode::Syntax;
}

}  // namespace

TEST_CASE("sign tokens") {
  CHECK(parse_sign_token("0", "") == SignPair{0, 0});
  CHECK(parse_sign_token("2+", "") == SignPair{2, 0});
  CHECK(parse_sign_token("3-", "") == SignPair{0, 3});
  CHECK(parse_sign_token(" 1+1- ", "") == SignPair{1, 1});
  CHECK_THROWS_AS(parse_sign_token("+", ""), InputError);
  CHECK_THROWS_AS(parse_sign_token("2", ""), InputError);
  CHECK_THROWS_AS(parse_sign_token("1-1+", ""), InputError);
  CHECK_THROWS_AS(parse_sign_token("-1-", ""), InputError);
  CHECK(format_sign_token({-4, 1, 1}) == "1+1-");
  CHECK(format_sign_token({-2, 0, 0}) == "0");
}

TEST_CASE("compact lens input") {
  auto d = parse_structure("lens -4,-4,-2,-4 1+1-/2+/0/2-");
  const auto& c = std::get<StabilizedChain>(d);
  CHECK(c.lens() == LensSpace{89, 24});
  CHECK(format_framings(c) == "-4,-4,-2,-4");
  CHECK(format_signs(c) == "1+1-/2+/0/2-");
  CHECK(std::get<StabilizedChain>(parse_structure("lens")).empty());
}

TEST_CASE("compact seifert input") {
  auto pos = std::get<SeifertPos>(parse_structure("seifert-pos -3;-2;-2 1+1-;1+;1+"));
  CHECK(pos.n() == 3);
  CHECK(format_leg_signs(pos.legs()) == "1+1-;1+;1+");
  auto neg = std::get<SeifertNeg>(parse_structure("seifert-neg -4:1+1- -2;-2;-2 0;0;0"));
  CHECK(neg.central() == KnotNode{-4, 1, 1});
}

TEST_CASE("input errors carry codes and locations") {
  CHECK(code_of("lens -4,-3 2+/2+") == ErrorCode::BudgetMismatch);
  CHECK(code_of("lens -4,-1 2+/0") == ErrorCode::NoncanonicalFraming);
  CHECK(code_of("lens -4,x 2+/0") == ErrorCode::Syntax);
  CHECK(code_of("lens -4 2+/0") == ErrorCode::WrongShape);
  CHECK(code_of("torus 1 2") == ErrorCode::Syntax);
  CHECK(code_of("seifert-pos -3;-2 1+1-;1+") == ErrorCode::WrongShape);
  CHECK(code_of("seifert-neg -2:0 -2;-2;-2 0;0;0") == ErrorCode::EulerBound);
  CHECK(code_of("{\"kind\": \"lens\", \"chain\": [], \"extra\": 1}") == ErrorCode::Schema);
  CHECK(code_of("{\"kind\": \"lens\"}") == ErrorCode::Schema);
  CHECK(code_of("{\"kind\": \"lens\", \"chain\": [{\"framing\": -3, \"plus\": 1}]}") == ErrorCode::Schema);
  CHECK(code_of("{\"kind\": \"cable\", \"tb\": 3, \"p\": 1, \"q\": 1}") == ErrorCode::Precondition);
  CHECK(code_of("{\"kind\": ") == ErrorCode::Syntax);
  try {
    parse_structure("lens -4,-4 1+1-/1+");
  } catch (const InputError& e) {
    CHECK(e.where() == "chain[1]");
    CHECK(std::string(e.what()).find("BUDGET_MISMATCH") == 0);
  }
}

TEST_CASE("serialization is canonical") {
  auto d = parse_structure("lens -3 1-");
  CHECK(serialize_structure(d) ==
        "{\n  \"chain\": [\n    {\n      \"framing\": -3,\n      \"minus\": 1,\n      \"plus\": 0\n    }\n  ],\n"
        "  \"kind\": \"lens\"\n}\n");
  StructureDocument b = BundleInput{2, -3};
  CHECK(serialize_structure(b) == "{\n  \"e\": -3,\n  \"g\": 2,\n  \"kind\": \"bundle\"\n}\n");
}

TEST_CASE("parse and serialize round trip") {
  std::mt19937 rng(4);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<StructureDocument> docs{fillcalc::testing::random_chain(rng, 6, -8),
                                        fillcalc::testing::random_seifert_pos(rng),
                                        fillcalc::testing::random_seifert_neg(rng),
                                        CableInput{3, -7, 2}, BundleInput{4, -1}};
    for (const auto& d : docs) {
      const std::string text = serialize_structure(d);
      auto back = parse_structure(text);
      REQUIRE(back == d);
      REQUIRE(serialize_structure(back) == text);
    }
  }
}

TEST_CASE("tree output formats") {
  auto c = std::get<StabilizedChain>(parse_structure("lens -4,-4,-2,-4 1+1-/2+/0/2-"));
  auto t = build_tree(c);
  auto j = tree_json(t);
  REQUIRE(j["nodes"].size() == 5);
  REQUIRE(j["edges"].size() == 4);
  CHECK(j["nodes"][0]["parent"].is_null());
  CHECK(j["nodes"][0]["leaf"].is_null());
  CHECK(j["edges"][0]["rule"] == "stabilized-knot");
  CHECK(j["edges"][1]["deletions"][0]["slope"] == 0);
  CHECK(j["nodes"][3]["leaf"]["filling_count"] == 4);
  CHECK(j["nodes"][2]["leaf"]["filling_count"] == "unknown");

  const std::string dot = tree_dot(t);
  CHECK(dot.rfind("digraph decomposition {\n", 0) == 0);
  CHECK(dot.find("n1 -> n3 [label=\"delete k_1 @ slope 1\"]") != std::string::npos);
  CHECK(dot.find("n0 -> n1 [label=\"delete k_0\"]") != std::string::npos);
  CHECK(emit_tree(t, Format::Dot) == dot);

  const std::string text = tree_text(t);
  CHECK(text.find("[3] (delete k_1 @ slope 1) S3 + L(4,1)[2-] + L(4,1)[2+]  fillings: 4") != std::string::npos);
  CHECK(emit_tree(t, Format::Text) == emit_tree(build_tree(c), Format::Text));
}

TEST_CASE("component labels") {
  CHECK(component_label(Component(StabilizedChain())) == "S3");
  CHECK(component_label(Component(SphereBundle{})) == "S1xS2");
  auto pos = std::get<SeifertPos>(parse_structure("seifert-pos -3;-2;-2 1+1-;1+;1+"));
  CHECK(component_label(Component(pos)) == "SFS+(-3;-2;-2 | 1+1-;1+;1+)");
  auto neg = std::get<SeifertNeg>(parse_structure("seifert-neg -4:1+1- -2;-2;-2 0;0;0"));
  CHECK(component_label(Component(neg)) == "SFS-(-4:1+1- -2;-2;-2 | 0;0;0)");
}

TEST_CASE("component classes in tree output") {
  auto neg = std::get<SeifertNeg>(parse_structure("seifert-neg -4:1+1- -2;-2;-2 0;0;0"));
  auto j = tree_json(build_seifert_tree(neg));
  CHECK(j["nodes"][0]["components"][0]["class"] == "centrally-mixed");
  CHECK(j["nodes"][1]["components"][0]["class"] == "universally-tight");
  auto pos = std::get<SeifertPos>(parse_structure("seifert-pos -2;-2;-3 1+;1-;2+"));
  CHECK(component_json(Component(pos))["class"] == "universally-tight");
  auto canon = std::get<SeifertNeg>(parse_structure("seifert-neg -4:2+ -3;-2;-2 1+;0;0"));
  CHECK(component_json(Component(canon))["class"] == "canonical");
}
