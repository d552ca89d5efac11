#pragma once

#include "skeinlab/ring/power_series.hpp"

#include <algorithm>
#include <vector>

namespace skeinlab::ring {

/// Laurent series with finite principal part: sum_{k=min_deg}^{order} c_k x^k + O(x^{order+1}).
/// Precision is absolute and is propagated through products and inverses, so a
/// product of two series is only as precise as the data actually determines.
class LaurentSeries {
 public:
  LaurentSeries() = default;
  LaurentSeries(int min_deg, int order, std::vector<GaussRational> coeffs)
      : min_deg_(min_deg), order_(order), coeffs_(std::move(coeffs)) {
    coeffs_.resize(static_cast<std::size_t>(std::max(0, order_ - min_deg_ + 1)));
    normalize();
  }

  static LaurentSeries from(const PowerSeries& s) { return {0, s.order(), s.coeffs()}; }
  static LaurentSeries monomial(int deg, const GaussRational& c, int order) {
    std::vector<GaussRational> v{c};
    return {deg, order, v};
  }

  int min_deg() const { return min_deg_; }
  int order() const { return order_; }

  GaussRational coeff(int k) const {
    if (k < min_deg_ || k > order_) return {};
    return coeffs_[static_cast<std::size_t>(k - min_deg_)];
  }

  /// Valuation of the known part, or order+1 when every known coefficient vanishes.
  int valuation() const { return min_deg_; }

  bool has_principal_part() const {
    for (int k = min_deg_; k < 0 && k <= order_; ++k) {
      if (!coeff(k).is_zero()) return true;
    }
    return false;
  }

  /// Reporting boundary: only series without poles convert back.
  PowerSeries to_power_series(int order) const {
    if (has_principal_part()) throw RingError("series has a nonzero principal part");
    if (order > order_) throw OrderMismatch(order, order_);
    PowerSeries s(order);
    for (int k = 0; k <= order; ++k) s.set(k, coeff(k));
    return s;
  }

  LaurentSeries operator-() const {
    LaurentSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    int lo = std::min(a.min_deg_, b.min_deg_);
    int hi = std::min(a.order_, b.order_);
    std::vector<GaussRational> v(static_cast<std::size_t>(std::max(0, hi - lo + 1)));
    for (int k = lo; k <= hi; ++k) v[k - lo] = a.coeff(k) + b.coeff(k);
    return {lo, hi, std::move(v)};
  }
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    int lo = a.min_deg_ + b.min_deg_;
    int hi = std::min(a.order_ + b.min_deg_, b.order_ + a.min_deg_);
    std::vector<GaussRational> v(static_cast<std::size_t>(std::max(0, hi - lo + 1)));
    for (int i = a.min_deg_; i <= a.order_; ++i) {
      const auto& ca = a.coeff(i);
      if (ca.is_zero()) continue;
      for (int j = b.min_deg_; i + j <= hi && j <= b.order_; ++j) {
        const auto& cb = b.coeff(j);
        if (!cb.is_zero()) v[i + j - lo] += ca * cb;
      }
    }
    return {lo, hi, std::move(v)};
  }

  LaurentSeries inverse() const {
    if (min_deg_ > order_ || coeffs_.empty() || coeffs_.front().is_zero()) throw NotAUnit();
    const int rel = order_ - min_deg_;
    PowerSeries unit(rel, coeffs_);
    PowerSeries inv = unit.inverse();
    return {-min_deg_, -min_deg_ + rel, inv.coeffs()};
  }

  LaurentSeries pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    // x^0 is only known to the precision of the base's unit part
    if (k == 0) return monomial(0, 1, order_ - min_deg_);
    LaurentSeries result = *this;
    for (int j = 1; j < k; ++j) result = result * *this;
    return result;
  }

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.min_deg_ == b.min_deg_ && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      min_deg_ += static_cast<int>(lead);
    }
  }

  int min_deg_ = 0;
  int order_ = 0;
  std::vector<GaussRational> coeffs_;
};

}  // namespace skeinlab::ring
