#pragma once

#include "skeinlab/ring/gauss_rational.hpp"

#include <string>
#include <vector>

namespace skeinlab::ring {

/// Truncated power series c_0 + c_1 x + ... + c_N x^N, computed mod x^{N+1}.
class PowerSeries {
 public:
  PowerSeries() : PowerSeries(0) {}
  explicit PowerSeries(int order) : coeffs_(static_cast<std::size_t>(checked(order)) + 1) {}
  PowerSeries(int order, const GaussRational& constant) : PowerSeries(order) { coeffs_[0] = constant; }
  PowerSeries(int order, std::vector<GaussRational> coeffs) : PowerSeries(order) {
    for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k) coeffs_[k] = std::move(coeffs[k]);
  }

  static PowerSeries one(int order) { return {order, GaussRational(1)}; }
  static PowerSeries x(int order) {
    PowerSeries s(order);
    if (order >= 1) s.coeffs_[1] = 1;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<GaussRational>& coeffs() const { return coeffs_; }
  const GaussRational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  void set(int k, GaussRational c) { coeffs_.at(static_cast<std::size_t>(k)) = std::move(c); }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }

  PowerSeries truncated(int order) const {
    if (order > this->order()) throw OrderMismatch(order, this->order());
    PowerSeries r(order);
    for (int k = 0; k <= order; ++k) r.coeffs_[k] = coeffs_[k];
    return r;
  }

  PowerSeries operator-() const {
    PowerSeries r(order());
    for (std::size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = -coeffs_[k];
    return r;
  }

  PowerSeries& operator+=(const PowerSeries& o) {
    same_order(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  PowerSeries& operator-=(const PowerSeries& o) {
    same_order(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    a.same_order(b);
    const int n = a.order();
    PowerSeries r(n);
    for (int i = 0; i <= n; ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (int j = 0; i + j <= n; ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return r;
  }
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  PowerSeries scaled(const GaussRational& c) const {
    PowerSeries r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
  }

  /// Multiplicative inverse at the same order; the constant term must be nonzero.
  PowerSeries inverse() const {
    if (coeffs_[0].is_zero()) throw NotAUnit();
    const int n = order();
    PowerSeries r(n);
    GaussRational c0_inv = coeffs_[0].inverse();
    r.coeffs_[0] = c0_inv;
    for (int k = 1; k <= n; ++k) {
      GaussRational acc;
      for (int j = 1; j <= k; ++j) {
        if (!coeffs_[j].is_zero()) acc += coeffs_[j] * r.coeffs_[k - j];
      }
      r.coeffs_[k] = -(acc * c0_inv);
    }
    return r;
  }

  PowerSeries pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    PowerSeries result = one(order()), base = *this;
    while (k > 0) {
      if (k & 1) result *= base;
      base *= base;
      k >>= 1;
    }
    return result;
  }

  /// "2 + 4*x^2 + O(x^9)".
  std::string str() const { return truncated_str() + " + O(x^" + std::to_string(order() + 1) + ")"; }

  /// The retained terms only: "2 + 4*x^2".
  std::string truncated_str() const {
    std::string out;
    for (int k = 0; k <= order(); ++k) {
      const auto& c = coeffs_[k];
      if (c.is_zero()) continue;
      bool negative = c.is_real() && c.re() < 0;
      GaussRational mag = negative ? -c : c;
      std::string mono = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
      std::string term = mono.empty() ? mag.pretty()
                         : mag == GaussRational(1) ? mono
                                                   : mag.pretty() + "*" + mono;
      if (out.empty()) {
        out = negative ? "-" + term : term;
      } else {
        out += negative ? " - " + term : " + " + term;
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  static int checked(int order) {
    if (order < 0) throw RingError("negative series order");
    return order;
  }
  void same_order(const PowerSeries& o) const {
    if (o.order() != order()) throw OrderMismatch(order(), o.order());
  }

  std::vector<GaussRational> coeffs_;
};

/// e^{c x} truncated at the given order.
inline PowerSeries series_exp(const GaussRational& c, int order) {
  PowerSeries s(order);
  GaussRational power(1);
  for (int k = 0; k <= order; ++k) {
    s.set(k, power * factorial_inverse(static_cast<unsigned>(k)));
    power *= c;
  }
  return s;
}

inline PowerSeries series_invert(const PowerSeries& s) { return s.inverse(); }

}  // namespace skeinlab::ring
