#pragma once

#include "skeinlab/diagram/diagram.hpp"
#include "skeinlab/skein/evaluator.hpp"
#include "skeinlab/skein/params.hpp"

#include <string>
#include <vector>

namespace skeinlab::skein {

inline std::string to_text(const LaurentPoly& p) { return p.str(); }
inline std::string to_text(const PowerSeries& s) { return s.str(); }

struct AuditReport {
  bool pass = true;
  std::vector<std::string> failures;
  std::vector<std::string> checks;  // "name: value" lines for passed checks
};

/// Checks the relation constants against each other and against the engine on
/// the one-crossing kinks and the two-component unlink.
template <class V>
AuditReport convention_audit(const SkeinParams<V>& p) {
  AuditReport r;
  auto check = [&r](bool ok, const std::string& name, const std::string& detail) {
    if (ok) {
      r.checks.push_back(name + ": " + detail);
    } else {
      r.pass = false;
      r.failures.push_back(name + ": " + detail);
    }
  };
  const V lhs = p.alpha - p.alpha_inv, rhs = p.z * (p.delta - p.one);
  check(lhs == rhs, lhs == rhs ? "consistency identity" : "consistency identity violated",
        "alpha - alpha^-1 = " + to_text(lhs) + ", z*(delta - 1) = " + to_text(rhs));
  check(p.alpha * p.alpha_inv == p.one, "kink factors inverse", to_text(p.alpha * p.alpha_inv));

  using diagram::Diagram;
  const Diagram unknot = Diagram::unlink(1);
  const Diagram pos = diagram::add_kink(unknot, -1, 1), neg = diagram::add_kink(unknot, -1, -1);
  Evaluator<V> ev(p);
  const V u = ev.evaluate(unknot), vp = ev.evaluate(pos), vn = ev.evaluate(neg);
  check(u == p.unknot_value, "unknot value", to_text(u));
  check(vp == p.alpha * p.unknot_value, vp == p.alpha * p.unknot_value ? "positive kink" : "positive kink law violated",
        to_text(vp));
  check(vn == p.alpha_inv * p.unknot_value,
        vn == p.alpha_inv * p.unknot_value ? "negative kink" : "negative kink law violated", to_text(vn));
  // the skein relation applied at the kink crossing must reproduce the kink law
  const V a_side = ev.evaluate(diagram::smooth(pos, 0, diagram::Smoothing::A));
  const V b_side = ev.evaluate(diagram::smooth(pos, 0, diagram::Smoothing::B));
  const V step = vn + p.z * (a_side - b_side);
  check(step == vp, step == vp ? "skein relation at a kink" : "skein relation at a kink violated", to_text(step));
  const V uu = ev.evaluate(Diagram::unlink(2));
  check(uu == p.delta * p.unknot_value, uu == p.delta * p.unknot_value ? "disjoint union" : "disjoint union law violated",
        to_text(uu));
  return r;
}

}  // namespace skeinlab::skein
