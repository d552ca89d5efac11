#pragma once

#include "skeinlab/ring/gauss_rational.hpp"

#include <vector>

namespace skeinlab::ring {

/// Bivariate series sum c_{jk} x^j y^k truncated at total degree N.
class BiSeries {
 public:
  explicit BiSeries(int order) : order_(order), coeffs_(index(order + 1, 0)) {
    if (order < 0) throw RingError("negative series order");
  }

  static BiSeries one(int order) {
    BiSeries s(order);
    s.set(0, 0, 1);
    return s;
  }

  int order() const { return order_; }

  const GaussRational& coeff(int j, int k) const { return coeffs_.at(index(j, k)); }
  void set(int j, int k, GaussRational c) {
    if (j < 0 || k < 0 || j + k > order_) throw RingError("BiSeries index out of range");
    coeffs_[index(j, k)] = std::move(c);
  }

  BiSeries operator-() const {
    BiSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend BiSeries operator+(BiSeries a, const BiSeries& b) {
    a.same_order(b);
    for (std::size_t n = 0; n < a.coeffs_.size(); ++n) a.coeffs_[n] += b.coeffs_[n];
    return a;
  }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a + (-b); }
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    a.same_order(b);
    const int n = a.order_;
    BiSeries r(n);
    for (int d1 = 0; d1 <= n; ++d1) {
      for (int j1 = 0; j1 <= d1; ++j1) {
        const auto& ca = a.coeff(j1, d1 - j1);
        if (ca.is_zero()) continue;
        for (int d2 = 0; d1 + d2 <= n; ++d2) {
          for (int j2 = 0; j2 <= d2; ++j2) {
            const auto& cb = b.coeff(j2, d2 - j2);
            if (!cb.is_zero()) r.coeffs_[index(j1 + j2, d1 - j1 + d2 - j2)] += ca * cb;
          }
        }
      }
    }
    return r;
  }
  friend bool operator==(const BiSeries& a, const BiSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  /// Two-sided inverse; solved degree by degree from the constant term.
  BiSeries inverse() const {
    const auto& c0 = coeff(0, 0);
    if (c0.is_zero()) throw NotAUnit();
    GaussRational c0_inv = c0.inverse();
    BiSeries r(order_);
    r.set(0, 0, c0_inv);
    for (int d = 1; d <= order_; ++d) {
      for (int j = 0; j <= d; ++j) {
        const int k = d - j;
        GaussRational acc;
        for (int j1 = 0; j1 <= j; ++j1) {
          for (int k1 = 0; k1 <= k; ++k1) {
            if (j1 == 0 && k1 == 0) continue;
            const auto& c = coeff(j1, k1);
            if (!c.is_zero()) acc += c * r.coeff(j - j1, k - k1);
          }
        }
        r.set(j, k, -(acc * c0_inv));
      }
    }
    return r;
  }

 private:
  // triangular layout: all coefficients of total degree d are contiguous
  static std::size_t index(int j, int k) {
    const int d = j + k;
    return static_cast<std::size_t>(d * (d + 1) / 2 + j);
  }
  void same_order(const BiSeries& o) const {
    if (o.order_ != order_) throw OrderMismatch(order_, o.order_);
  }

  int order_;
  std::vector<GaussRational> coeffs_;
};

inline BiSeries series_invert(const BiSeries& s) { return s.inverse(); }

}  // namespace skeinlab::ring
