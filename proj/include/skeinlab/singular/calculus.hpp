#pragma once

// Singular-link calculus on diagrams with flat crossings: signed resolution sums,
// the integrability and one-term relations, kink-point detection and framing
// bookkeeping.

#include "skeinlab/diagram/canonical.hpp"
#include "skeinlab/diagram/diagram.hpp"
#include "skeinlab/diagram/reduce.hpp"
#include "skeinlab/skein/evaluator.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace skeinlab::singular {

using diagram::Diagram;

template <class V>
using Invariant = std::function<V(const Diagram&)>;

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Resolves every flat crossing; bit j of `mask` set means '-' at the j-th flat crossing.
inline Diagram resolve_all(const Diagram& sd, unsigned mask) {
  Diagram out = sd;
  const auto flats = sd.flat_crossings();
  for (std::size_t j = 0; j < flats.size(); ++j) out = diagram::resolve_flat(out, flats[j], (mask >> j & 1) ? -1 : 1);
  return out;
}

inline int pattern_sign(unsigned mask) { return (std::popcount(mask) % 2 == 0) ? 1 : -1; }

template <class V>
struct DerivedValue {
  std::vector<V> table;  // indexed by sign mask, see resolve_all
  V value;               // sum of pattern_sign(mask) * table[mask]
};

/// f(L_x) = F(L_+) - F(L_-), extended to k flat points as the signed sum over all 2^k resolutions.
template <class V>
DerivedValue<V> derived_invariant(const Invariant<V>& F, const Diagram& sd) {
  const int k = sd.flat_count();
  if (k < 1) throw ShapeError("derived invariant needs at least one flat crossing");
  if (k > 16) throw ShapeError("too many flat crossings for a full resolution table");
  DerivedValue<V> out;
  for (unsigned mask = 0; mask < (1u << k); ++mask) out.table.push_back(F(resolve_all(sd, mask)));
  out.value = out.table[0];
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    out.value = pattern_sign(mask) > 0 ? out.value + out.table[mask] : out.value - out.table[mask];
  }
  return out;
}

/// Values of the four resolutions of a 2-flat diagram, reached along both orders:
/// resolve the first point then the second, and the second then the first.
/// Entries are indexed [sign of first point][sign of second point], 0 = '+'.
template <class V>
struct IntegrabilityTable {
  V first_then_second[2][2];
  V second_then_first[2][2];
};

template <class V>
IntegrabilityTable<V> integrability_table(const Invariant<V>& F, const Diagram& sd) {
  const auto flats = sd.flat_crossings();
  if (flats.size() != 2) throw ShapeError("integrability check needs exactly two flat crossings");
  IntegrabilityTable<V> t;
  for (int i = 0; i < 2; ++i) {
    const Diagram once_first = diagram::resolve_flat(sd, flats[0], i == 0 ? 1 : -1);
    const Diagram once_second = diagram::resolve_flat(sd, flats[1], i == 0 ? 1 : -1);
    for (int j = 0; j < 2; ++j) {
      t.first_then_second[i][j] = F(diagram::resolve_flat(once_first, flats[1], j == 0 ? 1 : -1));
      t.second_then_first[j][i] = F(diagram::resolve_flat(once_second, flats[0], j == 0 ? 1 : -1));
    }
  }
  return t;
}

/// f(L_{x+}) - f(L_{x-}) == f(L_{+x}) - f(L_{-x}), the left side read from the
/// first-then-second table and the right side from the other.
template <class V>
bool check_integrability(const IntegrabilityTable<V>& t) {
  const auto& p = t.first_then_second;
  const auto& q = t.second_then_first;
  // f(L_{x,s}) with the second point resolved to s: F(+,s) - F(-,s)
  const V lhs = (p[0][0] - p[1][0]) - (p[0][1] - p[1][1]);
  // f(L_{s,x}) with the first point resolved to s: F(s,+) - F(s,-)
  const V rhs = (q[0][0] - q[0][1]) - (q[1][0] - q[1][1]);
  return lhs == rhs;
}

template <class V>
bool check_integrability(const Invariant<V>& F, const Diagram& sd) {
  return check_integrability(integrability_table(F, sd));
}

/// Slot s with the arc leaving (c, s) returning at once to (c, s+1), or -1.
inline int curl_slot(const Diagram& d, int c) {
  for (int s = 0; s < 4; ++s) {
    if (d.mate(diagram::half_edge(c, s)) == diagram::half_edge(c, s + 1)) return s;
  }
  return -1;
}

enum class Admissibility { Inadmissible, Undetermined };

inline const char* admissibility_name(Admissibility a) {
  return a == Admissibility::Inadmissible ? "inadmissible" : "undetermined";
}

/// Inadmissible when the flat point closes an empty 1-gon (a visible kink point).
/// Other double points may bound an embedded disc too; the diagram alone does not say.
inline Admissibility is_admissible_in_diagram(const Diagram& sd, int flat_point) {
  if (flat_point < 0 || flat_point >= sd.crossing_count() || !sd.crossing(flat_point).flat) {
    throw ShapeError("crossing " + std::to_string(flat_point) + " is not a flat point");
  }
  return curl_slot(sd, flat_point) >= 0 ? Admissibility::Inadmissible : Admissibility::Undetermined;
}

/// Per-component framing of L_+ minus that of L_- at one flat point (other flat points stay flat).
inline std::vector<int> writhe_jump(const Diagram& sd, int flat_point) {
  if (flat_point < 0 || flat_point >= sd.crossing_count() || !sd.crossing(flat_point).flat) {
    throw ShapeError("crossing " + std::to_string(flat_point) + " is not a flat point");
  }
  const auto plus = diagram::resolve_flat(sd, flat_point, 1).framing();
  const auto minus = diagram::resolve_flat(sd, flat_point, -1).framing();
  std::vector<int> out(plus.size());
  for (std::size_t k = 0; k < plus.size(); ++k) out[k] = plus[k] - minus[k];
  return out;
}

/// One crossing change passing through a double point on component `component`
/// (numbered from 1), with sign `sign` and framing jump 0 or 2.
struct FramingEvent {
  int component;
  int sign;
  int jump;

  FramingEvent(int component_, int sign_, int jump_) : component(component_), sign(sign_), jump(jump_) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("framing event sign must be +1 or -1");
    if (jump != 0 && jump != 2) throw std::invalid_argument("framing jump must be 0 or 2");
  }
};

/// Componentwise signed sum of the jumps; all zero means framing preserving.
inline std::vector<int> total_framing(const std::vector<FramingEvent>& events, int m) {
  if (m < 0) throw std::out_of_range("negative component count");
  std::vector<int> out(static_cast<std::size_t>(m), 0);
  for (const auto& e : events) {
    if (e.component < 1 || e.component > m) {
      throw std::out_of_range("framing event on component " + std::to_string(e.component) + " of " +
                              std::to_string(m));
    }
    out[e.component - 1] += e.sign * e.jump;
  }
  return out;
}

inline bool framing_preserving(const std::vector<int>& total) {
  return std::all_of(total.begin(), total.end(), [](int v) { return v == 0; });
}

/// Removes every non-flat curl; returns the result and the summed kink signs.
inline std::pair<Diagram, int> strip_kinks(Diagram d) {
  int sign = 0;
  while (auto k = diagram::find_r1(d)) {
    auto red = diagram::apply_reduction(d, *k);
    sign += red.bookkeeping.kink_sign;
    d = std::move(red.diagram);
  }
  return {std::move(d), sign};
}

template <class V>
struct OneTermReport {
  bool certificate = false;  // L_{x r} ~ L_{r x} and L_{x l} ~ L_{l x} shown by kink stripping
  bool values_equal = false;
  V signed_sum{};  // f(L_{x r}) - f(L_{x l}) - f(L_{r x}) + f(L_{l x})
  bool holds() const { return certificate && values_equal; }
};

/// Sign of the kink produced by resolving the flat curl at c with resolution `sign`.
inline int kink_sign_after(const Diagram& d, int c, int sign) {
  const int slot = curl_slot(d, c);
  if (slot < 0 || !d.crossing(c).flat) throw ShapeError("crossing " + std::to_string(c) + " is not a kink point");
  const int over = d.crossing(c).over ^ (sign < 0 ? 1 : 0);
  return (slot & 1) == over ? 1 : -1;
}

inline Diagram resolve_to_kink(const Diagram& d, int c, int kink_sign) {
  return diagram::resolve_flat(d, c, kink_sign_after(d, c, 1) == kink_sign ? 1 : -1);
}

/// f at a single flat kink point, with L_+ the resolution carrying the positive kink.
template <class V>
V kink_point_value(const Invariant<V>& F, const Diagram& d, int c) {
  return F(resolve_to_kink(d, c, 1)) - F(resolve_to_kink(d, c, -1));
}

namespace detail {

inline bool adjacent_along_strand(const Diagram& d, int c1, int c2) {
  const int s1 = curl_slot(d, c1), s2 = curl_slot(d, c2);
  for (int a : {s1 + 2, s1 + 3}) {
    for (int b : {s2 + 2, s2 + 3}) {
      if (d.mate(diagram::half_edge(c1, a)) == diagram::half_edge(c2, b)) return true;
    }
  }
  return false;
}

}  // namespace detail

/// Two flat kink points next to each other on one arc. Resolving the second point
/// gives L_{x r}, L_{x l}; resolving the first gives L_{r x}, L_{l x}. Pairs carrying
/// the same kink are equivalent, so f agrees on them and the signed sum vanishes.
template <class V>
OneTermReport<V> one_term_report(const Invariant<V>& F, const Diagram& sd) {
  const auto flats = sd.flat_crossings();
  if (flats.size() != 2) throw ShapeError("one-term relation needs exactly two flat crossings");
  for (int c : flats) {
    if (curl_slot(sd, c) < 0) throw ShapeError("flat crossing " + std::to_string(c) + " is not a kink point");
  }
  if (!detail::adjacent_along_strand(sd, flats[0], flats[1])) {
    throw ShapeError("the two kink points are not adjacent on one arc");
  }
  const int first = flats[0], second = flats[1];
  OneTermReport<V> r;
  r.certificate = true;
  r.values_equal = true;
  V f_x[2], f_y[2];  // index 0: r (positive kink), 1: l
  for (int i = 0; i < 2; ++i) {
    const int kappa = i == 0 ? 1 : -1;
    const Diagram x = resolve_to_kink(sd, second, kappa);  // L_{x kappa}
    const Diagram y = resolve_to_kink(sd, first, kappa);   // L_{kappa x}
    for (int tau : {1, -1}) {
      auto [a, ka] = strip_kinks(resolve_to_kink(x, first, tau));
      auto [b, kb] = strip_kinks(resolve_to_kink(y, second, tau));
      if (ka != kb || diagram::canonical_code(a) != diagram::canonical_code(b)) r.certificate = false;
    }
    f_x[i] = kink_point_value(F, x, first);
    f_y[i] = kink_point_value(F, y, second);
    if (!(f_x[i] == f_y[i])) r.values_equal = false;
  }
  r.signed_sum = f_x[0] - f_x[1] - f_y[0] + f_y[1];
  return r;
}

template <class V>
bool one_term_relation_check(const Invariant<V>& F, const Diagram& sd) {
  return one_term_report(F, sd).holds();
}

/// Two flat kink points on the arc leaving half-edge h (h = -1 on a free loop).
/// `signs` picks the stored resolution so each '+' gives the kink of that sign.
inline Diagram double_kink_point(const Diagram& base, int h, std::array<int, 2> signs = {1, 1}) {
  Diagram d = diagram::add_kink(base, h, signs[0]);
  const int first = d.crossing_count() - 1;
  d = diagram::add_kink(d, diagram::half_edge(first, 3), signs[1]);
  return diagram::make_flat(diagram::make_flat(d, first), first + 1);
}

/// Signed sum over all resolutions of n-th series values truncated at x^m.
inline skein::PowerSeries alternating_series_sum(const Diagram& sd, int n, int m,
                                                 const skein::EvalOptions& options = {}) {
  skein::Evaluator<skein::PowerSeries> ev(skein::series_params(n, m), options);
  Invariant<skein::PowerSeries> F = [&ev](const Diagram& d) { return ev.evaluate(d); };
  return derived_invariant(F, sd).value;
}

/// The signed resolution sum vanishes through x^m whenever m < k.
inline bool finite_type_vanishing(int n, int m, const Diagram& sd, const skein::EvalOptions& options = {}) {
  const int k = sd.flat_count();
  if (k < 1) throw ShapeError("finite-type check needs at least one flat crossing");
  if (m >= k) throw ShapeError("vanishing is only claimed below the number of flat points");
  if (m < 0) throw ShapeError("negative order");
  return alternating_series_sum(sd, n, m, options).is_zero();
}

}  // namespace skeinlab::singular
