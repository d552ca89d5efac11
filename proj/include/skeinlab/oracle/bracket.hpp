#pragma once

// Kauffman bracket by exhaustive state sum: an evaluation path that shares only
// the A/B smoothing rule with the skein engine.

#include "skeinlab/diagram/diagram.hpp"
#include "skeinlab/ring/laurent_poly.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace skeinlab::oracle {

using ring::GaussRational;
using ring::Integer;
using ring::LaurentPoly;

/// Laurent polynomial in one variable A with integer coefficients.
class BracketPoly {
 public:
  BracketPoly() = default;
  static BracketPoly monomial(int deg, Integer c = 1) {
    BracketPoly p;
    p.add(deg, c);
    return p;
  }

  const std::map<int, Integer>& terms() const { return terms_; }
  Integer coeff(int deg) const {
    auto it = terms_.find(deg);
    return it == terms_.end() ? Integer(0) : it->second;
  }

  void add(int deg, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(deg, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend BracketPoly operator+(BracketPoly x, const BracketPoly& y) {
    for (const auto& [d, c] : y.terms_) x.add(d, c);
    return x;
  }
  friend BracketPoly operator-(BracketPoly x, const BracketPoly& y) {
    for (const auto& [d, c] : y.terms_) x.add(d, -c);
    return x;
  }
  friend BracketPoly operator*(const BracketPoly& x, const BracketPoly& y) {
    BracketPoly r;
    for (const auto& [dx, cx] : x.terms_) {
      for (const auto& [dy, cy] : y.terms_) r.add(dx + dy, cx * cy);
    }
    return r;
  }
  friend bool operator==(const BracketPoly& x, const BracketPoly& y) { return x.terms_ == y.terms_; }

  BracketPoly pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power of a bracket polynomial");
    BracketPoly r = monomial(0);
    for (int j = 0; j < k; ++j) r = r * *this;
    return r;
  }

  /// "-A^4 - A^-4" style, highest degree first.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [d, c] = *it;
      Integer mag = c < 0 ? Integer(-c) : c;
      std::string mono = d == 0 ? "" : (d == 1 ? "A" : "A^" + std::to_string(d));
      std::string term = mono.empty() ? mag.get_str() : (mag == 1 ? mono : mag.get_str() + "*" + mono);
      if (out.empty()) {
        out = c < 0 ? "-" + term : term;
      } else {
        out += c < 0 ? " - " + term : " + " + term;
      }
    }
    return out;
  }

 private:
  std::map<int, Integer> terms_;
};

struct OracleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxStateSumCrossings = 20;

namespace detail {

inline int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace detail

/// Sum over all A/B states of A^{#A - #B} (-A^2 - A^-2)^{loops - 1}.
inline BracketPoly bracket_statesum(const diagram::Diagram& d, int max_crossings = kMaxStateSumCrossings) {
  using namespace diagram;
  const int n = d.crossing_count();
  if (n > max_crossings) {
    throw OracleError("state sum limited to " + std::to_string(max_crossings) + " crossings, diagram has " +
                      std::to_string(n));
  }
  if (d.flat_count() > 0) throw OracleError("state sum needs a diagram without flat crossings");
  if (n == 0 && d.free_loops() == 0) throw OracleError("empty diagram has no bracket");

  // (A-count minus B-count, loops) -> number of states
  std::map<std::pair<int, int>, long long> tally;
  std::vector<int> parent(static_cast<std::size_t>(4 * n));
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
    std::iota(parent.begin(), parent.end(), 0);
    int classes = 4 * n;
    auto join = [&](int x, int y) {
      x = detail::find_root(parent, x);
      y = detail::find_root(parent, y);
      if (x != y) {
        parent[x] = y;
        --classes;
      }
    };
    for (int h = 0; h < 4 * n; ++h) join(h, d.mate(h));
    int balance = 0;
    for (int c = 0; c < n; ++c) {
      const bool a = (state >> c & 1) == 0;
      balance += a ? 1 : -1;
      const int o = d.crossing(c).over;
      // A joins (o, o+1),(o+2, o+3); B joins (o, o+3),(o+1, o+2)
      if (a) {
        join(half_edge(c, o), half_edge(c, o + 1));
        join(half_edge(c, o + 2), half_edge(c, o + 3));
      } else {
        join(half_edge(c, o), half_edge(c, o + 3));
        join(half_edge(c, o + 1), half_edge(c, o + 2));
      }
    }
    ++tally[{balance, classes + d.free_loops()}];
  }

  const BracketPoly loop = BracketPoly::monomial(2, -1) + BracketPoly::monomial(-2, -1);
  std::map<int, BracketPoly> loop_pows;
  BracketPoly sum;
  for (const auto& [key, count] : tally) {
    auto [balance, loops] = key;
    auto it = loop_pows.find(loops);
    if (it == loop_pows.end()) it = loop_pows.emplace(loops, loop.pow(loops - 1)).first;
    sum = sum + BracketPoly::monomial(balance, Integer(static_cast<long>(count))) * it->second;
  }
  return sum;
}

namespace detail {

using OneVar = std::map<int, GaussRational>;

inline void add_to(OneVar& p, int deg, const GaussRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.try_emplace(deg, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

inline OneVar mul(const OneVar& x, const OneVar& y) {
  OneVar r;
  for (const auto& [dx, cx] : x) {
    for (const auto& [dy, cy] : y) add_to(r, dx + dy, cx * cy);
  }
  return r;
}

}  // namespace detail

/// Compares a Laurent value at a = -A^3, z = A - A^-1 with a bracket, clearing
/// negative z powers by multiplying both sides by (A - A^-1)^k.
inline bool specialization_matches(const LaurentPoly& value, const BracketPoly& bracket, int* shift_out = nullptr) {
  using detail::OneVar;
  const int k = std::max(0, -value.min_deg_z());
  const OneVar zeta{{1, GaussRational(1)}, {-1, GaussRational(-1)}};
  std::map<int, OneVar> zeta_pows;
  auto zeta_pow = [&](int e) {
    auto it = zeta_pows.find(e);
    if (it != zeta_pows.end()) return it->second;
    OneVar r{{0, GaussRational(1)}};
    for (int j = 0; j < e; ++j) r = detail::mul(r, zeta);
    zeta_pows.emplace(e, r);
    return r;
  };
  OneVar lhs;
  for (const auto& [e, c] : value.terms()) {
    const auto [da, dz] = e;
    // (-A^3)^da
    GaussRational sign = (da % 2 == 0) ? GaussRational(1) : GaussRational(-1);
    OneVar term = detail::mul(OneVar{{3 * da, sign * c}}, zeta_pow(dz + k));
    for (const auto& [deg, cc] : term) detail::add_to(lhs, deg, cc);
  }
  OneVar br;
  for (const auto& [deg, c] : bracket.terms()) {
    detail::add_to(br, deg, GaussRational(ring::Rational(c)));
  }
  OneVar rhs = detail::mul(br, zeta_pow(k));
  if (shift_out) *shift_out = k;
  return lhs == rhs;
}

}  // namespace skeinlab::oracle
