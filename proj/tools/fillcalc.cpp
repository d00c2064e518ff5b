// Command-line front end for the fillcalc library.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fillcalc/fillcalc.hpp"

using namespace fillcalc;

namespace {

struct Options {
  std::string format = "text";
  std::string in;
  std::string out = "-";

  std::string chain;
  std::string signs;
  std::string legs;
  std::string central;
  std::string central_signs;
  std::string invariants;
  bool has_chain = false;

  std::int64_t p = 0, q = 0, tb = 0, g = 0, e = 0;
  std::uint64_t seed = 1;
  std::vector<std::string> positional;
};

Format parse_format(const std::string& f) {
  if (f == "json") return Format::Json;
  if (f == "dot") return Format::Dot;
  if (f == "text") return Format::Text;
  throw InputError(ErrorCode::Syntax, "--format", "expected json, dot or text");
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream f(path);
  if (!f) throw InputError(ErrorCode::Syntax, path, "cannot open input file");
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_output(const Options& o, const std::string& text) {
  if (o.out == "-" || o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError(ErrorCode::Syntax, o.out, "cannot open output file");
  f << text;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

std::vector<std::pair<SeifertInvariant, bool>> parse_invariants(const std::string& text) {
  std::vector<std::pair<SeifertInvariant, bool>> out;
  std::stringstream ss(text);
  std::string tok;
  std::size_t i = 0;
  while (std::getline(ss, tok, ',')) {
    const std::string where = "--invariants[" + std::to_string(i++) + "]";
    auto slash = tok.find('/');
    if (slash == std::string::npos) throw InputError(ErrorCode::Syntax, where, "expected q/p");
    std::int64_t num = detail::parse_int(tok.substr(0, slash), where);
    std::int64_t den = detail::parse_int(tok.substr(slash + 1), where);
    if (den <= 0) throw InputError(ErrorCode::OutOfRange, where, "denominator must be positive");
    out.push_back({{Integer(den), Integer(num < 0 ? -num : num)}, num < 0});
  }
  if (out.empty()) throw InputError(ErrorCode::Syntax, "--invariants", "no invariants given");
  return out;
}

std::vector<std::vector<SignPair>> parse_leg_signs(const std::string& text, std::size_t legs) {
  std::vector<std::vector<SignPair>> out;
  auto parts = detail::split(text, ';');
  if (text.empty()) parts.assign(legs, std::string_view());
  for (std::size_t i = 0; i < parts.size(); ++i) out.push_back(parse_signs(parts[i], "signs[" + std::to_string(i) + "]"));
  return out;
}

StabilizedChain lens_input(const Options& o) {
  if (!o.in.empty()) {
    auto doc = parse_structure(read_input(o.in));
    if (const auto* c = std::get_if<StabilizedChain>(&doc)) return *c;
    throw InputError(ErrorCode::WrongShape, "kind", "expected a lens document");
  }
  if (o.has_chain) return parse_chain_compact(o.chain, o.signs);
  if (o.p > 0) return make_lens(o.p, o.q, parse_signs(o.signs, "signs"));
  throw InputError(ErrorCode::Schema, "--chain", "need --chain/--signs, --p/--q/--signs or --in");
}

std::variant<SeifertPos, SeifertNeg> seifert_input(const Options& o) {
  if (!o.in.empty()) {
    auto doc = parse_structure(read_input(o.in));
    if (const auto* s = std::get_if<SeifertPos>(&doc)) return *s;
    if (const auto* s = std::get_if<SeifertNeg>(&doc)) return *s;
    throw InputError(ErrorCode::WrongShape, "kind", "expected a seifert document");
  }
  if (!o.invariants.empty()) {
    auto inv = parse_invariants(o.invariants);
    std::vector<SeifertInvariant> plain;
    bool negative = false;
    for (std::size_t i = 0; i < inv.size(); ++i) {
      plain.push_back(inv[i].first);
      if (i == 0) negative = inv[i].second;
      else if (inv[i].second != negative)
        throw InputError(ErrorCode::WrongShape, "--invariants", "invariants must all be positive or all negative");
    }
    auto signs = parse_leg_signs(o.signs, plain.size());
    if (negative) return make_seifert_neg(plain, parse_sign_token(o.central_signs, "--central-signs"), signs);
    return make_seifert_pos(plain, signs);
  }
  if (o.legs.empty()) throw InputError(ErrorCode::Schema, "--legs", "need --legs/--signs, --invariants or --in");
  auto legs = parse_legs_compact(o.legs, o.signs);
  if (!o.central.empty()) {
    auto sp = parse_sign_token(o.central_signs.empty() ? "0" : o.central_signs, "--central-signs");
    SeifertNeg s(KnotNode{detail::parse_int(o.central, "--central"), sp.first, sp.second}, std::move(legs));
    s.validate();
    return s;
  }
  SeifertPos s(std::move(legs));
  s.validate();
  return s;
}

std::vector<SeifertInvariant> invariants_input(const Options& o, bool& negative) {
  if (!o.invariants.empty()) {
    std::vector<SeifertInvariant> out;
    auto inv = parse_invariants(o.invariants);
    negative = inv.front().second;
    for (auto& [v, neg] : inv) {
      if (neg != negative) throw InputError(ErrorCode::WrongShape, "--invariants", "mixed signs");
      out.push_back(v);
    }
    return out;
  }
  auto s = seifert_input(o);
  if (const auto* pos = std::get_if<SeifertPos>(&s)) {
    negative = false;
    return pos->invariants();
  }
  throw InputError(ErrorCode::WrongShape, "--invariants", "this command needs e0 >= 0 invariants");
}

// ---------------------------------------------------------------------------------------------

std::string locus_text(const MixedLocus& l) {
  switch (l.kind) {
    case MixedLocus::Kind::BothSignsKnot: return "both-signs knot " + std::to_string(l.left);
    case MixedLocus::Kind::AdjacentPair:
      return "adjacent pair " + std::to_string(l.left) + "," + std::to_string(l.right) + " m=" + std::to_string(l.m);
    case MixedLocus::Kind::NoneFound: return "none";
  }
  return "none";
}

void lens_classify(const Options& o) {
  auto c = lens_input(o);
  auto cls = classify(c);
  auto locus = find_mixed_locus(c);
  if (parse_format(o.format) == Format::Json) {
    Json j{{"class", to_string(cls)}, {"lens", c.lens().to_string()}, {"locus", locus_text(locus)}};
    write_output(o, json_text(j));
  } else {
    write_output(o, std::string(to_string(cls)) + "\n" + c.lens().to_string() + "\nlocus: " + locus_text(locus) + "\n");
  }
}

void lens_count(const Options& o) {
  if (o.positional.size() != 2) throw InputError(ErrorCode::Syntax, "count", "usage: lens count P Q");
  Integer p = detail::parse_int(o.positional[0], "P");
  Integer q = detail::parse_int(o.positional[1], "Q");
  Integer n = count_tight(p, q);
  if (parse_format(o.format) == Format::Json) write_output(o, json_text({{"count", integer_json(n)}}));
  else write_output(o, n.str() + "\n");
}

void lens_tree(const Options& o) { write_output(o, emit_tree(build_tree(lens_input(o)), parse_format(o.format))); }

void lens_fossati(const Options& o) {
  int n = fossati_count(lens_input(o));
  if (parse_format(o.format) == Format::Json) write_output(o, json_text({{"fillings", n}}));
  else write_output(o, std::to_string(n) + "\n");
}

void seifert_classify(const Options& o) {
  auto s = seifert_input(o);
  Json j;
  std::string text;
  if (const auto* pos = std::get_if<SeifertPos>(&s)) {
    auto mix = classify_mixedness(*pos);
    j["regime"] = "e0>=0";
    j["e0"] = pos->euler_number();
    j["mixedness"] = to_string(mix.kind);
    text = std::string(to_string(mix.kind));
    if (mix.kind == Mixedness::Kind::LightlyMixed) {
      Json pairs = Json::array();
      for (auto [i, k] : lightly_mixed_pairs(*pos)) pairs.push_back({i, k});
      j["pairs"] = pairs;
      text += " " + std::to_string(mix.i) + "," + std::to_string(mix.j);
    }
    if (pos->n() == 3 && mix.kind == Mixedness::Kind::NeitherPos) {
      bool ut = is_universally_tight_small(*pos);
      j["universally_tight"] = ut;
      text += ut ? " (universally tight)" : " (virtually overtwisted)";
    }
  } else {
    const auto& neg = std::get<SeifertNeg>(s);
    auto mix = classify_mixedness(neg);
    j["regime"] = "e0<=-3";
    j["e0"] = neg.euler_number();
    j["mixedness"] = to_string(mix.kind);
    text = to_string(mix.kind);
  }
  if (parse_format(o.format) == Format::Json) write_output(o, json_text(j));
  else write_output(o, text + "\n");
}

void seifert_count(const Options& o) {
  Json j;
  std::string text;
  std::optional<std::variant<SeifertPos, SeifertNeg>> parsed;
  bool negative = false;
  if (!o.invariants.empty()) {
    negative = parse_invariants(o.invariants).front().second;
  } else {
    parsed = seifert_input(o);
    negative = std::holds_alternative<SeifertNeg>(*parsed);
  }
  if (negative) {
    SeifertNeg s;
    if (parsed) {
      s = std::get<SeifertNeg>(*parsed);
    } else {
      // The count depends on framings only, so any stabilization pattern will do.
      std::vector<SeifertInvariant> inv;
      for (auto& [v, neg] : parse_invariants(o.invariants)) inv.push_back(v);
      auto [e0, framings] = neg_framings(inv);
      std::vector<StabilizedChain> legs;
      for (auto& f : framings) {
        std::vector<KnotNode> nodes;
        for (auto a : f) nodes.push_back({a, -2 - a, 0});
        legs.emplace_back(std::move(nodes));
      }
      s = SeifertNeg(KnotNode{e0, -2 - e0, 0}, std::move(legs));
    }
    Integer n = count_choices_neg(s);
    j = {{"stabilization_choices", integer_json(n)}};
    text = n.str();
  } else {
    auto inv = parsed ? std::get<SeifertPos>(*parsed).invariants() : invariants_input(o, negative);
    Integer n = count_tight_small(inv);
    if (inv.size() == 3) {
      j = {{"count", integer_json(n)}};
      text = n.str();
    } else if (inv.size() == 4) {
      j = {{"lower", integer_json(n)}, {"upper", integer_json(2 * n)}};
      text = "between " + n.str() + " and " + Integer(2 * n).str();
    } else {
      throw InputError(ErrorCode::WrongShape, "--invariants", "counts are known for 3 or 4 fibers only");
    }
  }
  if (parse_format(o.format) == Format::Json) write_output(o, json_text(j));
  else write_output(o, text + "\n");
}

void seifert_decompose(const Options& o) {
  auto s = seifert_input(o);
  std::vector<Step> steps = std::visit([](const auto& x) { return seifert_steps(x); }, s);
  Component root = std::visit([](const auto& x) { return Component(x); }, s);
  Json arr = Json::array();
  std::string text;
  if (steps.empty()) text = "terminal: " + std::string(component_class(root)) + "\n";
  for (const auto& st : steps) {
    ContactAssembly a(st.parts);
    TreeEdge e{0, 0, 0, st.rule, st.deletions, st.round_handles};
    Json comps = Json::array();
    for (const auto& c : a.components()) comps.push_back(component_json(c));
    arr.push_back({{"rule", to_string(st.rule)}, {"label", edge_label(e)}, {"round_handles", st.round_handles},
                   {"components", comps}});
    text += std::string(to_string(st.rule)) + " (" + edge_label(e) + "): " + assembly_label(a) + "\n";
  }
  if (parse_format(o.format) == Format::Json) write_output(o, json_text({{"steps", arr}}));
  else write_output(o, text);
}

void seifert_tree(const Options& o) {
  auto s = seifert_input(o);
  auto t = std::visit([](const auto& x) { return build_seifert_tree(x); }, s);
  write_output(o, emit_tree(t, parse_format(o.format)));
}

void seifert_census(const Options& o) {
  bool negative = false;
  auto inv = invariants_input(o, negative);
  if (negative) throw InputError(ErrorCode::WrongShape, "--invariants", "census needs e0 >= 0 invariants");
  auto c = ut_census_small(inv);
  const char* kind = c.kind == UtCensus::Kind::Exact ? "exact" : "bound";
  if (parse_format(o.format) == Format::Json) write_output(o, json_text({{kind, c.value}}));
  else write_output(o, std::string(kind) + " " + std::to_string(c.value) + "\n");
}

CableInput cable_input(const Options& o) {
  if (!o.in.empty()) {
    auto doc = parse_structure(read_input(o.in));
    if (const auto* c = std::get_if<CableInput>(&doc)) return *c;
    throw InputError(ErrorCode::WrongShape, "kind", "expected a cable document");
  }
  return {o.tb, o.p, o.q};
}

void cable_report_cmd(const Options& o) {
  const CableInput c = cable_input(o);
  auto r = cable_report(c);
  Json j{{"tb_cable", integer_json(r.tb_cable)},
         {"torus_knot_param", integer_json(r.torus_knot_param)},
         {"lens", r.lens.to_string()},
         {"surgery_coeff", r.surgery_coeff.to_string()}};
  if (parse_format(o.format) == Format::Json) {
    write_output(o, json_text(j));
  } else {
    write_output(o, "tb = " + r.tb_cable.str() + "\nlens = " + r.lens.to_string() + "\nsurgery coefficient = " +
                        r.surgery_coeff.to_string() + "\ncable of S+S-(L): (" + r.torus_knot_param.str() + "," +
                        std::to_string(c.q) + ")\n");
  }
}

void cable_slopes_cmd(const Options& o) {
  auto ev = cable_slope_check(cable_input(o));
  Json j{{"map", ev.map.to_string()},
         {"gamma_neighbourhood", ev.gamma_neighbourhood.to_string()},
         {"gamma_stabilized", ev.gamma_stabilized.to_string()},
         {"meridian", ev.meridian.to_string()},
         {"m", ev.m}};
  if (parse_format(o.format) == Format::Json) {
    write_output(o, json_text(j));
  } else {
    write_output(o, "map " + ev.map.to_string() + "\nneighbourhood slope " + ev.gamma_neighbourhood.to_string() +
                        "\nstabilized slope " + ev.gamma_stabilized.to_string() + "\nmeridian slope " +
                        ev.meridian.to_string() + "\nm = 0\n");
  }
}

void bundle_cmd(const Options& o) {
  BundleInput b{o.g, o.e};
  if (!o.in.empty()) {
    auto doc = parse_structure(read_input(o.in));
    if (const auto* x = std::get_if<BundleInput>(&doc)) b = *x;
    else throw InputError(ErrorCode::WrongShape, "kind", "expected a bundle document");
  }
  auto r = bundle_classify(b);
  Json j{{"scope", to_string(r.scope)}};
  auto opt = [&](const char* k, const std::optional<Integer>& v) { j[k] = v ? integer_json(*v) : Json(nullptr); };
  opt("budget", r.budget);
  opt("total", r.total);
  opt("ut", r.ut);
  opt("vot", r.vot);
  if (r.lens) j["lens"] = r.lens->to_string();
  if (!r.vot_verdict.empty()) j["vot_verdict"] = r.vot_verdict;
  if (!r.twisting_zero_verdict.empty()) j["twisting_zero_verdict"] = r.twisting_zero_verdict;
  if (!r.note.empty()) j["note"] = r.note;
  if (parse_format(o.format) == Format::Json) {
    write_output(o, json_text(j));
    return;
  }
  std::string text;
  if (r.total) {
    text = r.total->str() + " tight, " + r.ut->str() + " UT, " + r.vot->str() + " VOT";
    if (!r.vot_verdict.empty() && *r.vot > 0) text += " (" + r.vot_verdict + ")";
    text += "\n";
    if (r.lens) text += "lens space " + r.lens->to_string() + "\n";
    if (!r.twisting_zero_verdict.empty()) text += "twisting number 0: " + r.twisting_zero_verdict + "\n";
  } else {
    text = r.note + "\n";
  }
  write_output(o, text);
}

// Randomized consistency checks over the core identities.
void selftest(const Options& o) {
  std::mt19937_64 rng(o.seed);
  auto uniform = [&](std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng); };
  std::size_t checks = 0;
  for (int iter = 0; iter < 300; ++iter) {
    Integer p = uniform(2, 400);
    Integer q = uniform(1, static_cast<std::int64_t>(p) - 1);
    if (gcd(p, q) != 1) continue;
    check_internal(evaluate(expand(p, q)) == Slope(Rational(-p, q)), "round trip failed");
    ++checks;

    MixedTorusData d;
    for (auto k = uniform(0, 4); k > 0; --k) d.prefix.push_back(uniform(-9, -2));
    d.pivot = uniform(-9, -3);
    if (d.pivot == -3 && d.prefix.empty()) d.pivot = -4;
    d.m = uniform(0, 5);
    check_internal(splitting_data(d).determinant == d.m + 3, "splitting identity failed");
    ++checks;

    std::vector<KnotNode> nodes;
    for (auto k = uniform(1, 5); k > 0; --k) {
      std::int64_t a = uniform(-7, -2);
      std::int64_t plus = uniform(0, -2 - a);
      nodes.push_back({a, plus, -2 - a - plus});
    }
    StabilizedChain c(nodes);
    check_internal(h1_order(c) == c.lens().p, "h1 order differs from p");
    auto doc = parse_structure(serialize_structure(StructureDocument(c)));
    check_internal(std::get<StabilizedChain>(doc) == c, "serialization round trip failed");
    auto t = build_tree(c);
    for (auto id : t.leaves())
      for (const auto& comp : t.node(id).assembly.components())
        check_internal(classify(std::get<StabilizedChain>(comp)) == ContactClass::UniversallyTight, "leaf not tight");
    checks += 3;
  }
  write_output(o, "selftest: ok (" + std::to_string(checks) + " checks, seed " + std::to_string(o.seed) + ")\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fillcalc: decomposition calculus for symplectic fillings"};
  app.require_subcommand(1);
  Options o;

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format: json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
    cmd->add_option("--in", o.in, "Read the structure document from FILE (- for stdin)");
    cmd->add_option("--out", o.out, "Write output to FILE (- for stdout)");
  };
  auto add_chain = [&](CLI::App* cmd) {
    cmd->add_option("--chain", o.chain, "Framings, e.g. -4,-2,-4")->each([&](const std::string&) { o.has_chain = true; });
    cmd->add_option("--signs", o.signs, "Stabilizations, e.g. 2+/0/2-");
    cmd->add_option("--p", o.p, "Lens space order p");
    cmd->add_option("--q", o.q, "Lens space parameter q");
    add_io(cmd);
  };
  auto add_seifert = [&](CLI::App* cmd) {
    cmd->add_option("--legs", o.legs, "Leg framings, legs separated by ';'");
    cmd->add_option("--signs", o.signs, "Leg stabilizations, legs separated by ';'");
    cmd->add_option("--central", o.central, "Central framing e0 (e0 <= -3 regime)");
    cmd->add_option("--central-signs", o.central_signs, "Central knot stabilizations");
    cmd->add_option("--invariants", o.invariants, "Seifert invariants, e.g. 1/3,1/2,1/2 or -1/2,-1/2,-1/2");
    add_io(cmd);
  };

  auto* lens = app.add_subcommand("lens", "Tight structures on lens spaces");
  lens->require_subcommand(1);
  auto* lens_classify_cmd = lens->add_subcommand("classify", "Universally tight or virtually overtwisted");
  add_chain(lens_classify_cmd);
  lens_classify_cmd->callback([&] { lens_classify(o); });
  auto* lens_count_cmd = lens->add_subcommand("count", "Number of tight structures on L(P,Q)");
  lens_count_cmd->add_option("values", o.positional, "P Q")->expected(2);
  lens_count_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));
  lens_count_cmd->add_option("--out", o.out);
  lens_count_cmd->callback([&] { lens_count(o); });
  auto* lens_tree_cmd = lens->add_subcommand("tree", "Decomposition tree");
  add_chain(lens_tree_cmd);
  lens_tree_cmd->callback([&] { lens_tree(o); });
  auto* lens_fossati_cmd = lens->add_subcommand("fossati", "Exact filling count of a two-knot chain");
  add_chain(lens_fossati_cmd);
  lens_fossati_cmd->callback([&] { lens_fossati(o); });

  auto* seifert = app.add_subcommand("seifert", "Seifert fibered spaces over S^2");
  seifert->require_subcommand(1);
  auto* sc = seifert->add_subcommand("classify", "Mixedness class");
  add_seifert(sc);
  sc->callback([&] { seifert_classify(o); });
  auto* sn = seifert->add_subcommand("count", "Tight structure or stabilization-choice count");
  add_seifert(sn);
  sn->callback([&] { seifert_count(o); });
  auto* sd = seifert->add_subcommand("decompose", "One decomposition step");
  add_seifert(sd);
  sd->callback([&] { seifert_decompose(o); });
  auto* st = seifert->add_subcommand("tree", "Decomposition tree");
  add_seifert(st);
  st->callback([&] { seifert_tree(o); });
  auto* ss = seifert->add_subcommand("census", "Universally tight census for small e0 >= 0 spaces");
  add_seifert(ss);
  ss->callback([&] { seifert_census(o); });

  auto* cable = app.add_subcommand("cable", "Surgery on Legendrian negative cables");
  cable->require_subcommand(1);
  auto add_cable = [&](CLI::App* cmd) {
    cmd->add_option("--tb", o.tb, "Thurston-Bennequin number of L");
    cmd->add_option("--p", o.p, "Cable parameter p");
    cmd->add_option("--q", o.q, "Cable parameter q");
    add_io(cmd);
  };
  auto* cr = cable->add_subcommand("report", "tb, lens space and surgery coefficient");
  add_cable(cr);
  cr->callback([&] { cable_report_cmd(o); });
  auto* cs = cable->add_subcommand("slopes", "Transformed boundary slopes");
  add_cable(cs);
  cs->callback([&] { cable_slopes_cmd(o); });

  auto* bundle = app.add_subcommand("bundle", "Circle bundles over closed surfaces");
  bundle->require_subcommand(1);
  auto* bc = bundle->add_subcommand("classify", "Tight structure counts and filling verdicts");
  bc->add_option("--g", o.g, "Genus of the base");
  bc->add_option("--e", o.e, "Euler number");
  add_io(bc);
  bc->callback([&] { bundle_cmd(o); });

  auto* self = app.add_subcommand("selftest", "Randomized consistency checks");
  self->add_option("--seed", o.seed, "Random seed");
  self->add_option("--out", o.out);
  self->callback([&] { selftest(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
