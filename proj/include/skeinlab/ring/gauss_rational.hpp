#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace skeinlab::ring {

using Rational = mpq_class;
using Integer = mpz_class;

/// n/d in lowest terms with positive denominator.
inline Rational make_rational(const Integer& n, const Integer& d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}
inline Rational make_rational(long n, long d = 1) { return make_rational(Integer(n), Integer(d)); }

struct RingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotAUnit : RingError {
  NotAUnit() : RingError("not a unit") {}
};

struct OrderMismatch : RingError {
  OrderMismatch(long lhs, long rhs)
      : RingError("series order mismatch: " + std::to_string(lhs) + " vs " +
                  std::to_string(rhs)) {}
};

/// Element re + im*i of Q(i). Exact; boost keeps rationals in lowest terms.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long long re) : re_(static_cast<long>(re)) {}  // NOLINT(implicit)
  GaussRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return {0, 1}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussRational conj() const { return {re_, -im_}; }

  GaussRational operator-() const { return {-re_, -im_}; }

  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    if (im_ == 0 && o.im_ == 0) {
      re_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }

  GaussRational inverse() const {
    if (is_zero()) throw NotAUnit();
    Rational norm = re_ * re_ + im_ * im_;
    return {re_ / norm, -im_ / norm};
  }

  GaussRational& operator/=(const GaussRational& o) { return *this *= o.inverse(); }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text "re+im*i" (or "re-im*i"); rationals as "p" or "p/q".
  std::string str() const {
    std::string out = rational_str(re_);
    if (im_ < 0) {
      out += "-" + rational_str(-im_);
    } else {
      out += "+" + rational_str(im_);
    }
    out += "*i";
    return out;
  }

  /// Short human form used by pretty printers: "3", "-1/2", "2*i", "(1+2*i)".
  std::string pretty() const {
    if (im_ == 0) return rational_str(re_);
    if (re_ == 0) return rational_str(im_) + "*i";
    return "(" + str() + ")";
  }

  static std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
  }

  static Rational parse_rational(std::string_view text) {
    if (text.empty()) throw RingError("empty rational");
    auto slash = text.find('/');
    auto parse_int = [](std::string_view s) {
      if (s.empty()) throw RingError("malformed rational");
      std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
      if (start == s.size()) throw RingError("malformed rational");
      for (std::size_t k = start; k < s.size(); ++k) {
        if (s[k] < '0' || s[k] > '9') throw RingError("malformed rational '" + std::string(s) + "'");
      }
      return Integer(std::string(s[0] == '+' ? s.substr(1) : s), 10);
    };
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Integer num = parse_int(text.substr(0, slash));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw RingError("zero denominator");
    return make_rational(num, den);
  }

  /// Inverse of str().
  static GaussRational parse(std::string_view text) {
    if (text.size() < 3 || text.substr(text.size() - 2) != "*i") {
      throw RingError("malformed Gaussian rational '" + std::string(text) + "'");
    }
    std::string_view body = text.substr(0, text.size() - 2);
    // split at the sign that starts the imaginary part (never position 0)
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
      if (body[k] == '+' || body[k] == '-') {
        split = k;
        break;
      }
    }
    if (split == std::string_view::npos) {
      throw RingError("malformed Gaussian rational '" + std::string(text) + "'");
    }
    return {parse_rational(body.substr(0, split)), parse_rational(body.substr(split))};
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussRational& g) {
    return os << g.pretty();
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline GaussRational factorial_inverse(unsigned k) {
  Integer f = 1;
  for (unsigned j = 2; j <= k; ++j) f *= j;
  return GaussRational(make_rational(Integer(1), f));
}

}  // namespace skeinlab::ring
