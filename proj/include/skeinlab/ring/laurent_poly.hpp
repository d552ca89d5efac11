#pragma once

#include "skeinlab/ring/gauss_rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace skeinlab::ring {

/// Sparse Laurent polynomial in a and z with Q(i) coefficients.
/// Terms are kept sorted by (deg_a, deg_z); zero coefficients are never stored.
class LaurentPoly {
 public:
  using Exponent = std::pair<int, int>;  // (deg_a, deg_z)
  using Terms = std::map<Exponent, GaussRational>;

  LaurentPoly() = default;
  LaurentPoly(long long c) { add_term(0, 0, GaussRational(c)); }  // NOLINT(implicit)
  LaurentPoly(const GaussRational& c) { add_term(0, 0, c); }      // NOLINT(implicit)

  static LaurentPoly monomial(int deg_a, int deg_z, GaussRational c = 1) {
    LaurentPoly p;
    p.add_term(deg_a, deg_z, std::move(c));
    return p;
  }
  static LaurentPoly a(int power = 1) { return monomial(power, 0); }
  static LaurentPoly z(int power = 1) { return monomial(0, power); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  GaussRational coeff(int deg_a, int deg_z) const {
    auto it = terms_.find({deg_a, deg_z});
    return it == terms_.end() ? GaussRational() : it->second;
  }

  void add_term(int deg_a, int deg_z, const GaussRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({deg_a, deg_z}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int min_deg_z() const {
    int m = 0;
    for (const auto& [e, c] : terms_) m = std::min(m, e.second);
    return m;
  }

  /// Only monomials are units in this ring.
  bool is_monomial() const { return terms_.size() == 1; }

  LaurentPoly inverse() const {
    if (!is_monomial()) throw NotAUnit();
    const auto& [e, c] = *terms_.begin();
    return monomial(-e.first, -e.second, c.inverse());
  }

  LaurentPoly operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  LaurentPoly& operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
  }
  LaurentPoly& operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
  }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
  friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
  friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly r;
    for (const auto& [ex, cx] : x.terms_) {
      for (const auto& [ey, cy] : y.terms_) {
        r.add_term(ex.first + ey.first, ex.second + ey.second, cx * cy);
      }
    }
    return r;
  }
  friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) { return x.terms_ == y.terms_; }

  LaurentPoly pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    LaurentPoly result(1), base = *this;
    while (k > 0) {
      if (k & 1) result *= base;
      base *= base;
      k >>= 1;
    }
    return result;
  }

  /// Human form with terms in (deg_a, deg_z) order, e.g. "1 + a*z^-1 - a^-1*z^-1".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      GaussRational coef = c;
      bool negative = c.is_real() && c.re() < 0;
      if (negative) coef = -c;
      std::string mono;
      auto var = [&mono](const char* name, int d) {
        if (d == 0) return;
        if (!mono.empty()) mono += "*";
        mono += name;
        if (d != 1) mono += "^" + std::to_string(d);
      };
      var("a", e.first);
      var("z", e.second);
      std::string term;
      if (mono.empty()) {
        term = coef.pretty();
      } else if (coef == GaussRational(1)) {
        term = mono;
      } else {
        term = coef.pretty() + "*" + mono;
      }
      if (first) {
        out += negative ? "-" + term : term;
      } else {
        out += negative ? " - " + term : " + " + term;
      }
      first = false;
    }
    return out;
  }

 private:
  Terms terms_;
};

}  // namespace skeinlab::ring
