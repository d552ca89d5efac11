#pragma once

// Rewrite-rule constants of the framed skein invariant:
//   D(+kink) = alpha D,  D(-kink) = alpha^{-1} D,  D(L u O) = delta D,
//   D(cur) - D(switched) = z [D(A) - D(B)],  D(O) = unknot_value.

#include "skeinlab/ring/constants.hpp"
#include "skeinlab/ring/laurent_poly.hpp"
#include "skeinlab/ring/power_series.hpp"

#include <string>
#include <string_view>

namespace skeinlab::skein {

using ring::LaurentPoly;
using ring::PowerSeries;

enum class Normalization { Unit, Delta, Prop42 };

inline Normalization parse_normalization(std::string_view name) {
  if (name == "unit") return Normalization::Unit;
  if (name == "delta") return Normalization::Delta;
  if (name == "prop42") return Normalization::Prop42;
  throw std::invalid_argument("unknown normalization '" + std::string(name) + "'");
}

template <class V>
struct SkeinParams {
  V alpha;
  V alpha_inv;
  V z;
  V delta;
  V unknot_value;
  V one;
  std::string ring_label;
};

/// Laurent ring Q(i)[a^{+-1}, z^{+-1}].
inline SkeinParams<LaurentPoly> laurent_params(Normalization norm = Normalization::Unit) {
  const auto a = LaurentPoly::a(), ai = LaurentPoly::a(-1), z = LaurentPoly::z(), zi = LaurentPoly::z(-1);
  SkeinParams<LaurentPoly> p{a, ai, z, LaurentPoly(1) + (a - ai) * zi, LaurentPoly(1), LaurentPoly(1), "laurent"};
  switch (norm) {
    case Normalization::Unit:
      break;
    case Normalization::Delta:
      p.unknot_value = p.delta;
      break;
    case Normalization::Prop42:
      // unknot a^{-tau}(a + a^{-1}) z^{-1} + 1 at tau = 0, kinks weighted a^{-1}
      p.alpha = ai;
      p.alpha_inv = a;
      p.delta = LaurentPoly(1) + (a + ai) * zi;
      p.unknot_value = p.delta;
      p.ring_label = "laurent/prop42";
      break;
  }
  return p;
}

/// Truncated series ring in x with t = e^x: alpha = t^{n+1}, z = t - t^{-1}, delta = u_n.
inline SkeinParams<PowerSeries> series_params(int n, int order, Normalization norm = Normalization::Unit) {
  if (order < 0) throw std::invalid_argument("series order must be non-negative");
  if (norm == Normalization::Prop42) {
    throw std::invalid_argument("the prop42 normalization needs z^{-1} and exists only over the Laurent ring");
  }
  SkeinParams<PowerSeries> p{ring::t_power(n + 1, order),
                             ring::t_power(-(n + 1), order),
                             ring::t_power(1, order) - ring::t_power(-1, order),
                             ring::u_n_series(n, order),
                             PowerSeries::one(order),
                             PowerSeries::one(order),
                             "series(n=" + std::to_string(n) + ", order=" + std::to_string(order) + ")"};
  if (norm == Normalization::Delta) p.unknot_value = p.delta;
  return p;
}

struct LaurentRing {};
struct SeriesRing {
  int n = 0;
  int order = 8;
};

inline SkeinParams<LaurentPoly> default_params(LaurentRing) { return laurent_params(); }
inline SkeinParams<PowerSeries> default_params(SeriesRing r) { return series_params(r.n, r.order); }

/// alpha - alpha^{-1} == z (delta - 1), exactly.
template <class V>
bool consistency_identity_holds(const SkeinParams<V>& p) {
  return p.alpha - p.alpha_inv == p.z * (p.delta - p.one) && p.alpha * p.alpha_inv == p.one;
}

template <class V>
V power(const SkeinParams<V>& p, const V& base, const V& inv, int k) {
  V out = p.one;
  for (int j = 0; j < (k < 0 ? -k : k); ++j) out = out * (k < 0 ? inv : base);
  return out;
}

template <class V>
V alpha_power(const SkeinParams<V>& p, int k) {
  return power(p, p.alpha, p.alpha_inv, k);
}

template <class V>
V delta_power(const SkeinParams<V>& p, int k) {
  if (k < 0) throw std::invalid_argument("negative loop power");
  return power(p, p.delta, p.delta, k);
}

}  // namespace skeinlab::skein
