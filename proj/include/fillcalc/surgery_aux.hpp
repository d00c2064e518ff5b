#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "fillcalc/errors.hpp"
#include "fillcalc/knot.hpp"
#include "fillcalc/lens.hpp"
#include "fillcalc/rational.hpp"
#include "fillcalc/slope_calculus.hpp"
#include "fillcalc/unimodular.hpp"

namespace fillcalc {

/// Legendrian negative (p, q)-cable of a knot L with Thurston-Bennequin number tb.
struct CableInput {
  std::int64_t tb = 0;
  std::int64_t p = 0;
  std::int64_t q = 1;

  void validate() const {
    if (q <= 0) throw InputError(ErrorCode::OutOfRange, "q", "q must be positive");
    if (gcd(Integer(p), Integer(q)) != 1) throw InputError(ErrorCode::NotCoprime, "p", "p and q must be coprime");
    if (!(Integer(p) < Integer(q) * (Integer(tb) - 2)))
      throw InputError(ErrorCode::Precondition, "p", "negative cable needs p < q(tb - 2)");
  }

  friend bool operator==(const CableInput&, const CableInput&) = default;
};

struct CableReport {
  Integer tb_cable;
  Integer torus_knot_param;  // the cable is the (torus_knot_param, q)-cable of S+S-(L)
  LensSpace lens;
  Rational surgery_coeff;
};

/// Knot type K_{p + q tb, q} of a (p, q) torus knot in the standard neighbourhood of L.
inline std::pair<Integer, Integer> knot_type_in_neighbourhood(std::int64_t p, std::int64_t q, std::int64_t tb) {
  return {Integer(p) + Integer(q) * tb, Integer(q)};
}

inline CableReport cable_report(const CableInput& c) {
  c.validate();
  const Integer p = c.p, q = c.q, tb = c.tb;
  CableReport r;
  r.tb_cable = p * q;
  r.torus_knot_param = p + q * (2 - tb);
  r.lens = normalize_lens(q * q, p * q - 1);
  r.surgery_coeff = Rational(p * q - 1, q * q);
  return r;
}

struct CableSlopeEvidence {
  UnimodularMap map;
  Slope gamma_neighbourhood;  // image of 1/tb
  Slope gamma_stabilized;     // image of 1/(tb - 1)
  Slope meridian;             // image of q^2/(pq - 1)
  SlopeTriple triple;         // (meridian, gamma_stabilized, gamma_neighbourhood)
  std::int64_t m = 0;         // the only admissible gluing slope
};

/// Transforms the boundary slopes by (1 0; 1-tb 1) and checks the meridian lands in (-1, 0),
/// which leaves slope 0 as the only gluing choice.
inline CableSlopeEvidence cable_slope_check(const CableInput& c) {
  c.validate();
  const Integer p = c.p, q = c.q, tb = c.tb;
  CableSlopeEvidence ev;
  ev.map = UnimodularMap(1, 0, 1 - tb, 1);
  ev.gamma_neighbourhood = apply_map(ev.map, Slope::from_vector(1, tb));
  ev.gamma_stabilized = apply_map(ev.map, Slope::from_vector(1, tb - 1));
  ev.meridian = apply_map(ev.map, Slope::from_vector(q * q, p * q - 1));
  check_internal(ev.gamma_neighbourhood == Slope(1), "transformed neighbourhood slope != 1");
  check_internal(ev.gamma_stabilized.is_infinite(), "transformed stabilized slope is not vertical");
  check_internal(ev.meridian.is_finite() && Rational(-1) < ev.meridian.value() && ev.meridian.value() < Rational(0),
                 "transformed meridian slope outside (-1, 0)");
  ev.triple = {ev.meridian, ev.gamma_stabilized, ev.gamma_neighbourhood};
  ev.m = 0;
  return ev;
}

/// Circle bundle over a closed surface of genus g with Euler number e.
struct BundleInput {
  std::int64_t g = 0;
  std::int64_t e = 0;
  friend bool operator==(const BundleInput&, const BundleInput&) = default;
};

struct BundleReport {
  enum class Scope { Counted, LensSpace, Sphere, SphereBundle, TorusBundle, OutOfRange };
  Scope scope = Scope::Counted;
  std::optional<Integer> budget;  // stabilizations of K
  std::optional<Integer> total;   // tight structures with t(S^1) = -1 (or all, for lens spaces)
  std::optional<Integer> ut;
  std::optional<Integer> vot;
  std::optional<fillcalc::LensSpace> lens;
  std::string vot_verdict;
  std::string twisting_zero_verdict;
  std::string note;
};

inline const char* to_string(BundleReport::Scope s) {
  switch (s) {
    case BundleReport::Scope::Counted: return "counted";
    case BundleReport::Scope::LensSpace: return "lens-space";
    case BundleReport::Scope::Sphere: return "s3";
    case BundleReport::Scope::SphereBundle: return "s1xs2";
    case BundleReport::Scope::TorusBundle: return "torus-bundle";
    case BundleReport::Scope::OutOfRange: return "out-of-range";
  }
  return "unknown";
}

inline BundleReport bundle_classify(const BundleInput& b) {
  if (b.g < 0) throw InputError(ErrorCode::OutOfRange, "g", "genus must be >= 0");
  BundleReport r;
  const Integer g = b.g, e = b.e;
  if (b.g == 0) {
    if (e == 0) {
      r.scope = BundleReport::Scope::SphereBundle;
      r.total = r.ut = 1;
      r.vot = 0;
      r.note = "S1xS2: unique tight structure, unique filling";
      return r;
    }
    if (abs(e) == 1) {
      r.scope = BundleReport::Scope::Sphere;
      r.total = r.ut = 1;
      r.vot = 0;
      r.note = "S3: unique tight structure, unique filling";
      return r;
    }
    r.scope = BundleReport::Scope::LensSpace;
    r.lens = e < 0 ? normalize_lens(-e, 1) : normalize_lens(e, e - 1);
    r.total = count_tight(r.lens->p, r.lens->q);
    r.ut = *r.total < 2 ? *r.total : Integer(2);
    r.vot = *r.total - *r.ut;
    r.vot_verdict = *r.vot > 0 ? "unique exact filling" : "";
    r.note = "routed to lens-space rules";
    return r;
  }
  if (b.g == 1) {
    r.scope = BundleReport::Scope::TorusBundle;
    r.note = e <= -2 ? "torus bundle: virtually overtwisted structures are uniquely exactly fillable (external result)"
                     : "torus bundle: handled by external results on parabolic torus bundles";
    return r;
  }
  const Integer budget = 2 * g - 2 - e;
  if (budget < 0) {
    r.scope = BundleReport::Scope::OutOfRange;
    r.note = "e > 2g-2: outside the counted range";
    return r;
  }
  r.scope = BundleReport::Scope::Counted;
  r.budget = budget;
  r.total = budget + 1;
  r.ut = budget >= 1 ? Integer(2) : Integer(1);
  r.vot = *r.total - *r.ut;
  r.vot_verdict = "unique exact filling";
  r.twisting_zero_verdict = "not strongly fillable";
  return r;
}

}  // namespace fillcalc
