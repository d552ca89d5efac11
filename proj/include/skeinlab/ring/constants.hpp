#pragma once

#include "skeinlab/ring/bi_series.hpp"
#include "skeinlab/ring/laurent_poly.hpp"
#include "skeinlab/ring/laurent_series.hpp"
#include "skeinlab/ring/power_series.hpp"

#include <algorithm>
#include <map>

namespace skeinlab::ring {

/// t^k with t = e^x.
inline PowerSeries t_power(int k, int order) { return series_exp(GaussRational(k), order); }

struct CompletedConstants {
  PowerSeries t;  // e^x
  BiSeries a;     // i e^y
  BiSeries z;     // i e^x + i e^{-x} = it - (it)^{-1}
};

inline CompletedConstants completed_constants(int order) {
  CompletedConstants k{series_exp(1, order), BiSeries(order), BiSeries(order)};
  const auto i = GaussRational::i();
  for (int d = 0; d <= order; ++d) {
    auto inv_fact = factorial_inverse(static_cast<unsigned>(d));
    k.a.set(0, d, i * inv_fact);
    if (d % 2 == 0) k.z.set(d, 0, i * inv_fact * GaussRational(2));
  }
  return k;
}

/// (t^{n+1} - t^{-(n+1)}) / (t - t^{-1}) + 1, with the quotient expanded as the
/// finite sum t^n + t^{n-2} + ... + t^{-n} (negated and mirrored for n+1 < 0).
inline PowerSeries u_n_series(int n, int order) {
  PowerSeries acc = PowerSeries::one(order);
  const int k = n + 1;
  const int m = k >= 0 ? k : -k;
  PowerSeries quotient(order);
  for (int j = 0; j < m; ++j) quotient += t_power(m - 1 - 2 * j, order);
  if (k < 0) quotient = -quotient;
  return acc + quotient;
}

/// Ring homomorphism Q(i)[a^{+-1}, z^{+-1}] -> Laurent series, a |-> a_val, z |-> z_val.
/// Both images must be units.
inline LaurentSeries laurent_substitute(const LaurentPoly& p, const LaurentSeries& a_val,
                                        const LaurentSeries& z_val) {
  std::map<int, LaurentSeries> a_pows, z_pows;
  auto power = [](std::map<int, LaurentSeries>& cache, const LaurentSeries& base, int k) {
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    LaurentSeries v = base.pow(k);
    cache.emplace(k, v);
    return v;
  };
  int order = std::min(a_val.order(), z_val.order());
  LaurentSeries sum(0, order, {});
  for (const auto& [e, c] : p.terms()) {
    LaurentSeries term = power(a_pows, a_val, e.first) * power(z_pows, z_val, e.second);
    std::vector<GaussRational> v;
    for (int k = term.min_deg(); k <= term.order(); ++k) v.push_back(term.coeff(k) * c);
    sum = sum + LaurentSeries(term.min_deg(), term.order(), std::move(v));
  }
  return sum;
}

/// Evaluate a Laurent value at a = t^{n+1}, z = t - t^{-1}, truncated at `order`.
/// Poles coming from negative z-powers must cancel; otherwise RingError.
inline PowerSeries substitute_t(const LaurentPoly& p, int n, int order) {
  const int pole = std::max(0, -p.min_deg_z());
  const int work = order + 1 + pole;
  auto a_val = LaurentSeries::from(t_power(n + 1, work));
  auto z_val = LaurentSeries::from(t_power(1, work) - t_power(-1, work));
  return laurent_substitute(p, a_val, z_val).to_power_series(order);
}

}  // namespace skeinlab::ring
