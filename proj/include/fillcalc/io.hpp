#pragma once

#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fillcalc/assembly.hpp"
#include "fillcalc/errors.hpp"
#include "fillcalc/lens.hpp"
#include "fillcalc/seifert.hpp"
#include "fillcalc/surgery_aux.hpp"
#include "fillcalc/tree.hpp"

namespace fillcalc {

using Json = nlohmann::json;

/// A parsed input document.
using StructureDocument = std::variant<StabilizedChain, SeifertPos, SeifertNeg, CableInput, BundleInput>;

inline const char* document_kind(const StructureDocument& d) {
  switch (d.index()) {
    case 0: return "lens";
    case 1: return "seifert-pos";
    case 2: return "seifert-neg";
    case 3: return "cable";
    default: return "bundle";
  }
}

// ---------------------------------------------------------------------------------------------
// Compact notation: framings "-4,-2,-4", signs "2+/0/2-", legs separated by ';'.

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

inline std::int64_t parse_int(std::string_view s, const std::string& where) {
  s = trim(s);
  std::int64_t v = 0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  if (!s.empty() && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (s.empty() || ec != std::errc() || ptr != end)
    throw InputError(ErrorCode::Syntax, where, "expected an integer, got '" + std::string(s) + "'");
  return v;
}

inline std::int64_t parse_count(std::string_view s, const std::string& where) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string_view::npos)
    throw InputError(ErrorCode::Syntax, where, "expected a stabilization count, got '" + std::string(s) + "'");
  return parse_int(s, where);
}

}  // namespace detail

/// One sign token: "0", "N+", "N-" or "N+M-".
inline SignPair parse_sign_token(std::string_view token, const std::string& where) {
  std::string_view t = detail::trim(token);
  if (t == "0") return {0, 0};
  const auto plus = t.find('+');
  if (plus == std::string_view::npos) {
    if (t.empty() || t.back() != '-')
      throw InputError(ErrorCode::Syntax, where, "bad sign token '" + std::string(t) + "'");
    return {0, detail::parse_count(t.substr(0, t.size() - 1), where)};
  }
  std::int64_t p = detail::parse_count(t.substr(0, plus), where);
  std::string_view rest = t.substr(plus + 1);
  if (rest.empty()) return {p, 0};
  if (rest.back() != '-') throw InputError(ErrorCode::Syntax, where, "bad sign token '" + std::string(t) + "'");
  return {p, detail::parse_count(rest.substr(0, rest.size() - 1), where)};
}

inline std::string format_sign_token(const KnotNode& n) {
  if (n.plus == 0 && n.minus == 0) return "0";
  std::string out;
  if (n.plus > 0) out += std::to_string(n.plus) + "+";
  if (n.minus > 0) out += std::to_string(n.minus) + "-";
  return out;
}

inline std::vector<std::int64_t> parse_framings(std::string_view text, const std::string& where) {
  std::vector<std::int64_t> out;
  if (detail::trim(text).empty()) return out;
  auto parts = detail::split(text, ',');
  for (std::size_t i = 0; i < parts.size(); ++i)
    out.push_back(detail::parse_int(parts[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline std::vector<SignPair> parse_signs(std::string_view text, const std::string& where) {
  std::vector<SignPair> out;
  if (detail::trim(text).empty()) return out;
  auto parts = detail::split(text, '/');
  for (std::size_t i = 0; i < parts.size(); ++i)
    out.push_back(parse_sign_token(parts[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline StabilizedChain chain_from_parts(const std::vector<std::int64_t>& framings, const std::vector<SignPair>& signs,
                                        const std::string& where) {
  if (framings.size() != signs.size())
    throw InputError(ErrorCode::WrongShape, where,
                     std::to_string(framings.size()) + " framings but " + std::to_string(signs.size()) + " sign tokens");
  std::vector<KnotNode> nodes;
  for (std::size_t i = 0; i < framings.size(); ++i) nodes.push_back({framings[i], signs[i].first, signs[i].second});
  return StabilizedChain(std::move(nodes));
}

/// Lens chain from compact framings and signs, validated.
inline StabilizedChain parse_chain_compact(std::string_view chain, std::string_view signs) {
  auto c = chain_from_parts(parse_framings(chain, "chain"), parse_signs(signs, "signs"), "signs");
  c.validate("chain");
  return c;
}

/// Legs from compact text, one ';'-separated group per leg.
inline std::vector<StabilizedChain> parse_legs_compact(std::string_view legs, std::string_view signs) {
  auto leg_parts = detail::split(legs, ';');
  auto sign_parts = detail::split(signs, ';');
  if (leg_parts.size() != sign_parts.size())
    throw InputError(ErrorCode::WrongShape, "signs",
                     std::to_string(leg_parts.size()) + " legs but " + std::to_string(sign_parts.size()) + " sign groups");
  std::vector<StabilizedChain> out;
  for (std::size_t i = 0; i < leg_parts.size(); ++i) {
    const std::string where = "legs[" + std::to_string(i) + "]";
    out.push_back(chain_from_parts(parse_framings(leg_parts[i], where), parse_signs(sign_parts[i], "signs[" + std::to_string(i) + "]"),
                                   where));
  }
  return out;
}

inline std::string format_framings(const StabilizedChain& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i].framing);
  return out;
}

inline std::string format_signs(const StabilizedChain& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "/" : "") + format_sign_token(c[i]);
  return out;
}

inline std::string format_legs(const std::vector<StabilizedChain>& legs) {
  std::string out;
  for (std::size_t i = 0; i < legs.size(); ++i) out += (i ? ";" : "") + format_framings(legs[i]);
  return out;
}

inline std::string format_leg_signs(const std::vector<StabilizedChain>& legs) {
  std::string out;
  for (std::size_t i = 0; i < legs.size(); ++i) out += (i ? ";" : "") + format_signs(legs[i]);
  return out;
}

// ---------------------------------------------------------------------------------------------
// JSON

inline Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline Json node_json(const KnotNode& n) { return {{"framing", n.framing}, {"plus", n.plus}, {"minus", n.minus}}; }

inline Json chain_json(const StabilizedChain& c) {
  Json arr = Json::array();
  for (const auto& n : c.nodes()) arr.push_back(node_json(n));
  return arr;
}

inline Json legs_json(const std::vector<StabilizedChain>& legs) {
  Json arr = Json::array();
  for (const auto& l : legs) arr.push_back(chain_json(l));
  return arr;
}

inline Json document_json(const StructureDocument& d) {
  Json j;
  j["kind"] = document_kind(d);
  if (const auto* c = std::get_if<StabilizedChain>(&d)) {
    j["chain"] = chain_json(*c);
  } else if (const auto* s = std::get_if<SeifertPos>(&d)) {
    j["legs"] = legs_json(s->legs());
  } else if (const auto* s = std::get_if<SeifertNeg>(&d)) {
    j["central"] = node_json(s->central());
    j["legs"] = legs_json(s->legs());
  } else if (const auto* c = std::get_if<CableInput>(&d)) {
    j["tb"] = c->tb;
    j["p"] = c->p;
    j["q"] = c->q;
  } else if (const auto* b = std::get_if<BundleInput>(&d)) {
    j["g"] = b->g;
    j["e"] = b->e;
  }
  return j;
}

/// Canonical text form: sorted keys, two-space indent, trailing newline.
inline std::string serialize_structure(const StructureDocument& d) { return document_json(d).dump(2) + "\n"; }

namespace detail {

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InputError(ErrorCode::Schema, where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(ErrorCode::Schema, where + "." + key, "missing field");
  return *it;
}

inline std::int64_t int_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_number_integer()) throw InputError(ErrorCode::Schema, where + "." + key, "expected an integer");
  return v.get<std::int64_t>();
}

inline KnotNode node_from_json(const Json& j, const std::string& where) {
  return {int_field(j, "framing", where), int_field(j, "plus", where), int_field(j, "minus", where)};
}

inline StabilizedChain chain_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(ErrorCode::Schema, where, "expected an array of knots");
  std::vector<KnotNode> nodes;
  for (std::size_t i = 0; i < j.size(); ++i) nodes.push_back(node_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return StabilizedChain(std::move(nodes));
}

inline std::vector<StabilizedChain> legs_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(ErrorCode::Schema, where, "expected an array of legs");
  std::vector<StabilizedChain> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(chain_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

inline void reject_unknown_keys(const Json& j, std::initializer_list<const char*> allowed) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) throw InputError(ErrorCode::Schema, it.key(), "unknown field");
  }
}

}  // namespace detail

inline StructureDocument document_from_json(const Json& j) {
  if (!j.is_object()) throw InputError(ErrorCode::Schema, "$", "expected an object");
  const Json& kind_json = detail::field(j, "kind", "$");
  if (!kind_json.is_string()) throw InputError(ErrorCode::Schema, "kind", "expected a string");
  const std::string kind = kind_json.get<std::string>();
  if (kind == "lens") {
    detail::reject_unknown_keys(j, {"kind", "chain"});
    auto c = detail::chain_from_json(detail::field(j, "chain", "$"), "chain");
    c.validate("chain");
    return c;
  }
  if (kind == "seifert-pos") {
    detail::reject_unknown_keys(j, {"kind", "legs"});
    SeifertPos s(detail::legs_from_json(detail::field(j, "legs", "$"), "legs"));
    s.validate();
    return s;
  }
  if (kind == "seifert-neg") {
    detail::reject_unknown_keys(j, {"kind", "central", "legs"});
    SeifertNeg s(detail::node_from_json(detail::field(j, "central", "$"), "central"),
                 detail::legs_from_json(detail::field(j, "legs", "$"), "legs"));
    s.validate();
    return s;
  }
  if (kind == "cable") {
    detail::reject_unknown_keys(j, {"kind", "tb", "p", "q"});
    CableInput c{detail::int_field(j, "tb", "$"), detail::int_field(j, "p", "$"), detail::int_field(j, "q", "$")};
    c.validate();
    return c;
  }
  if (kind == "bundle") {
    detail::reject_unknown_keys(j, {"kind", "g", "e"});
    BundleInput b{detail::int_field(j, "g", "$"), detail::int_field(j, "e", "$")};
    if (b.g < 0) throw InputError(ErrorCode::OutOfRange, "g", "genus must be >= 0");
    return b;
  }
  throw InputError(ErrorCode::Schema, "kind", "unknown kind '" + kind + "'");
}

/// Parses a JSON document, or a compact one-line form:
///   lens <framings> <signs>
///   seifert-pos <legs> <signs>
///   seifert-neg <central framing>:<central sign> <legs> <signs>
inline StructureDocument parse_structure(std::string_view text) {
  std::string_view t = detail::trim(text);
  if (!t.empty() && t.front() == '{') {
    Json j;
    try {
      j = Json::parse(t);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(ErrorCode::Syntax, "byte " + std::to_string(e.byte), e.what());
    }
    return document_from_json(j);
  }
  std::vector<std::string> words;
  {
    std::istringstream in{std::string(t)};
    std::string w;
    while (in >> w) words.push_back(w);
  }
  if (words.empty()) throw InputError(ErrorCode::Syntax, "$", "empty input");
  const std::string& kind = words[0];
  auto arg = [&](std::size_t i) -> std::string {
    return i < words.size() ? words[i] : std::string();
  };
  if (kind == "lens") {
    if (words.size() > 3) throw InputError(ErrorCode::Syntax, "$", "expected: lens <framings> <signs>");
    return parse_chain_compact(arg(1), arg(2));
  }
  if (kind == "seifert-pos") {
    if (words.size() != 3) throw InputError(ErrorCode::Syntax, "$", "expected: seifert-pos <legs> <signs>");
    SeifertPos s(parse_legs_compact(words[1], words[2]));
    s.validate();
    return s;
  }
  if (kind == "seifert-neg") {
    if (words.size() != 4) throw InputError(ErrorCode::Syntax, "$", "expected: seifert-neg <e0>:<sign> <legs> <signs>");
    auto colon = words[1].find(':');
    if (colon == std::string::npos) throw InputError(ErrorCode::Syntax, "central", "expected <e0>:<sign>");
    auto sp = parse_sign_token(std::string_view(words[1]).substr(colon + 1), "central");
    KnotNode central{detail::parse_int(std::string_view(words[1]).substr(0, colon), "central"), sp.first, sp.second};
    SeifertNeg s(central, parse_legs_compact(words[2], words[3]));
    s.validate();
    return s;
  }
  throw InputError(ErrorCode::Syntax, "kind", "unknown compact kind '" + kind + "'");
}

// ---------------------------------------------------------------------------------------------
// Components and trees

inline std::string component_label(const Component& c) {
  if (const auto* chain = std::get_if<StabilizedChain>(&c)) {
    LensSpace l = chain->lens();
    if (l.is_sphere()) return "S3";
    return l.to_string() + "[" + format_signs(*chain) + "]";
  }
  if (std::holds_alternative<SphereBundle>(c)) return "S1xS2";
  if (const auto* s = std::get_if<SeifertPos>(&c))
    return "SFS+(" + format_legs(s->legs()) + " | " + format_leg_signs(s->legs()) + ")";
  const auto& s = std::get<SeifertNeg>(c);
  return "SFS-(" + std::to_string(s.central().framing) + ":" + format_sign_token(s.central()) + " " +
         format_legs(s.legs()) + " | " + format_leg_signs(s.legs()) + ")";
}

inline std::string assembly_label(const ContactAssembly& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? " + " : "") + component_label(a[i]);
  return out;
}

inline Json component_json(const Component& c) {
  Json j;
  j["kind"] = kind_name(c);
  j["class"] = component_class(c);
  if (const auto* chain = std::get_if<StabilizedChain>(&c)) {
    LensSpace l = chain->lens();
    j["p"] = integer_json(l.p);
    j["q"] = integer_json(l.q);
    j["chain"] = chain_json(*chain);
  } else if (const auto* s = std::get_if<SeifertPos>(&c)) {
    j["legs"] = legs_json(s->legs());
  } else if (const auto* s = std::get_if<SeifertNeg>(&c)) {
    j["central"] = node_json(s->central());
    j["legs"] = legs_json(s->legs());
  }
  return j;
}

inline Json deletion_json(const Deletion& d) {
  Json j;
  j["knot"] = d.knot.to_string();
  j["slope"] = d.slope ? Json(*d.slope) : Json(nullptr);
  return j;
}

inline std::string edge_label(const TreeEdge& e) {
  std::string out = "delete ";
  for (std::size_t i = 0; i < e.deletions.size(); ++i) {
    if (i) out += ", ";
    out += e.deletions[i].knot.to_string();
    if (e.deletions[i].slope) out += " @ slope " + std::to_string(*e.deletions[i].slope);
  }
  return out;
}

inline Json tree_json(const DecompositionTree& t) {
  Json nodes = Json::array();
  for (const auto& n : t.nodes()) {
    Json jn;
    jn["id"] = n.id;
    jn["depth"] = n.depth;
    jn["parent"] = n.parent ? Json(*n.parent) : Json(nullptr);
    Json comps = Json::array();
    for (const auto& c : n.assembly.components()) comps.push_back(component_json(c));
    jn["components"] = comps;
    if (n.is_leaf()) {
      auto count = leaf_filling_count(n.assembly);
      jn["leaf"] = {{"filling_count", count ? integer_json(*count) : Json("unknown")}};
    } else {
      jn["leaf"] = nullptr;
    }
    nodes.push_back(jn);
  }
  Json edges = Json::array();
  for (const auto& e : t.edges()) {
    Json je;
    je["parent"] = e.parent;
    je["child"] = e.child;
    je["component"] = e.component;
    je["rule"] = to_string(e.rule);
    je["round_handles"] = e.round_handles;
    Json dels = Json::array();
    for (const auto& d : e.deletions) dels.push_back(deletion_json(d));
    je["deletions"] = dels;
    edges.push_back(je);
  }
  return {{"nodes", nodes}, {"edges", edges}};
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace detail

inline std::string tree_dot(const DecompositionTree& t) {
  std::string out = "digraph decomposition {\n";
  for (const auto& n : t.nodes())
    out += "  n" + std::to_string(n.id) + " [label=\"" + detail::dot_escape(assembly_label(n.assembly)) + "\"];\n";
  for (const auto& e : t.edges())
    out += "  n" + std::to_string(e.parent) + " -> n" + std::to_string(e.child) + " [label=\"" +
           detail::dot_escape(edge_label(e)) + "\"];\n";
  out += "}\n";
  return out;
}

inline std::string tree_text(const DecompositionTree& t) {
  std::string out;
  std::vector<const TreeEdge*> incoming(t.nodes().size(), nullptr);
  for (const auto& e : t.edges()) incoming[e.child] = &e;
  // Depth-first so each subtree prints under its parent.
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t id = stack.back();
    stack.pop_back();
    const auto& n = t.node(id);
    out += std::string(2 * n.depth, ' ') + "[" + std::to_string(id) + "] ";
    if (incoming[id]) out += "(" + edge_label(*incoming[id]) + ") ";
    out += assembly_label(n.assembly);
    if (n.is_leaf()) {
      auto count = leaf_filling_count(n.assembly);
      out += "  fillings: " + (count ? count->str() : std::string("unknown"));
    }
    out += "\n";
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

enum class Format { Json, Dot, Text };

inline std::string emit_tree(const DecompositionTree& t, Format f) {
  switch (f) {
    case Format::Json: return tree_json(t).dump(2) + "\n";
    case Format::Dot: return tree_dot(t);
    case Format::Text: return tree_text(t);
  }
  return {};
}

}  // namespace fillcalc
