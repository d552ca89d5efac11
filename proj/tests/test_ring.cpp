#include "skeinlab/ring/constants.hpp"
#include "skeinlab/ring/serialize.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace skeinlab::ring;

namespace {

GaussRational q(long long p, long long r = 1) { return GaussRational(make_rational(p, r)); }
GaussRational qi(long long p, long long r = 1) { return GaussRational(0, make_rational(p, r)); }

PowerSeries series(int order, std::vector<GaussRational> c) { return PowerSeries(order, std::move(c)); }

LaurentPoly hopf_value() {
  auto a = LaurentPoly::a(), ai = LaurentPoly::a(-1), z = LaurentPoly::z(), zi = LaurentPoly::z(-1);
  return LaurentPoly(1) + zi * (a - ai) + z * (a - ai);
}

template <class Rng>
GaussRational random_coeff(Rng& rng) {
  std::uniform_int_distribution<int> d(-4, 4), den(1, 3);
  return GaussRational(make_rational(d(rng), den(rng)), make_rational(d(rng), den(rng)));
}

template <class Rng>
LaurentPoly random_poly(Rng& rng, int terms) {
  std::uniform_int_distribution<int> e(-3, 3);
  LaurentPoly p;
  for (int k = 0; k < terms; ++k) p.add_term(e(rng), e(rng), random_coeff(rng));
  return p;
}

template <class Rng>
PowerSeries random_series(Rng& rng, int order) {
  PowerSeries s(order);
  for (int k = 0; k <= order; ++k) s.set(k, random_coeff(rng));
  return s;
}

}  // namespace

TEST(GaussRationalArith, Basics) {
  GaussRational one_plus_i(1, 1), one_minus_i(1, -1);
  EXPECT_EQ(one_plus_i * one_minus_i, GaussRational(2));
  EXPECT_EQ(GaussRational::i() * GaussRational::i(), GaussRational(-1));
  EXPECT_EQ(one_plus_i * one_plus_i.inverse(), GaussRational(1));
  EXPECT_THROW(GaussRational().inverse(), NotAUnit);
  EXPECT_EQ(q(2, 4), q(1, 2));
  EXPECT_EQ(q(3, -6).re(), make_rational(-1, 2));
}

TEST(GaussRationalArith, TextRoundTrip) {
  for (auto g : {q(0), q(-3, 7), qi(5, 2), GaussRational(make_rational(1, 3), make_rational(-2, 9))}) {
    EXPECT_EQ(GaussRational::parse(g.str()), g);
  }
  EXPECT_EQ(q(-1, 2).str(), "-1/2+0*i");
  EXPECT_EQ(qi(1).str(), "0+1*i");
  EXPECT_THROW(GaussRational::parse("1+2"), RingError);
  EXPECT_THROW(GaussRational::parse("1/0+2*i"), RingError);
}

TEST(LaurentPolyArith, IdentitiesAndPrinting) {
  auto p = LaurentPoly::a() * LaurentPoly::z(-1);
  EXPECT_EQ(p + LaurentPoly(), p);
  EXPECT_EQ(p.str(), "a*z^-1");
  EXPECT_EQ(hopf_value().str(), "-a^-1*z^-1 - a^-1*z + 1 + a*z^-1 + a*z");
  EXPECT_EQ(LaurentPoly::a().pow(-2), LaurentPoly::a(-2));
  EXPECT_THROW(hopf_value().inverse(), NotAUnit);
  EXPECT_EQ((LaurentPoly::a() - LaurentPoly::a()).size(), 0u);
}

TEST(LaurentPolyArith, RingAxiomsRandom) {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 60; ++k) {
    auto x = random_poly(rng, 4), y = random_poly(rng, 4), w = random_poly(rng, 3);
    EXPECT_EQ((x * y) * w, x * (y * w));
    EXPECT_EQ(x * (y + w), x * y + x * w);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x - x, LaurentPoly());
    EXPECT_EQ(x * LaurentPoly(1), x);
    const auto prod = x * y;
    for (const auto& [e, c] : prod.terms()) EXPECT_FALSE(c.is_zero());
  }
}

TEST(PowerSeriesArith, Examples) {
  auto one_plus = series(4, {1, 1}), one_minus = series(4, {1, -1});
  EXPECT_EQ(one_plus * one_minus, series(4, {1, 0, -1}));
  EXPECT_EQ(series_invert(series(3, {1, 1})), series(3, {1, -1, 1, -1}));
  EXPECT_THROW(series_invert(series(3, {0, 1, 1})), NotAUnit);
  EXPECT_THROW(series(3, {1}) + series(4, {1}), OrderMismatch);
  EXPECT_EQ(series_exp(1, 4), series(4, {1, 1, q(1, 2), q(1, 6), q(1, 24)}));
  EXPECT_EQ(series_exp(0, 3), PowerSeries::one(3));
  EXPECT_EQ(series_exp(-1, 2), series(2, {1, -1, q(1, 2)}));
  EXPECT_EQ(series(2, {2, 0, 4}).str(), "2 + 4*x^2 + O(x^3)");
}

TEST(PowerSeriesArith, TruncationCommutesWithProduct) {
  std::mt19937_64 rng(2);
  for (int k = 0; k < 30; ++k) {
    auto x = random_series(rng, 8), y = random_series(rng, 8);
    EXPECT_EQ((x * y).truncated(5), x.truncated(5) * y.truncated(5));
  }
}

TEST(PowerSeriesArith, RandomUnitsInvert) {
  std::mt19937_64 rng(3);
  int tested = 0;
  while (tested < 1000) {
    auto s = random_series(rng, 6);
    if (s[0].is_zero()) continue;
    EXPECT_EQ(s * series_invert(s), PowerSeries::one(6));
    ++tested;
  }
}

TEST(PowerSeriesArith, RingAxiomsRandom) {
  std::mt19937_64 rng(4);
  for (int k = 0; k < 40; ++k) {
    auto x = random_series(rng, 5), y = random_series(rng, 5), w = random_series(rng, 5);
    EXPECT_EQ((x * y) * w, x * (y * w));
    EXPECT_EQ(x * (y + w), x * y + x * w);
    EXPECT_EQ(x * y, y * x);
  }
}

TEST(BiSeriesArith, ConstantsAndUnits) {
  auto k = completed_constants(8);
  EXPECT_EQ(k.z.coeff(0, 0), qi(2));
  EXPECT_EQ(k.z.coeff(2, 0), qi(1));
  EXPECT_EQ(k.z.coeff(4, 0), qi(1, 12));
  EXPECT_EQ(k.z.coeff(1, 0), q(0));
  EXPECT_EQ(k.z.coeff(0, 1), q(0));
  EXPECT_EQ(k.a.coeff(0, 0), qi(1));
  EXPECT_EQ(k.a.coeff(0, 1), qi(1));
  EXPECT_EQ(k.a.coeff(0, 2), qi(1, 2));
  EXPECT_EQ(k.a.coeff(1, 0), q(0));
  EXPECT_EQ(k.a * series_invert(k.a), BiSeries::one(8));
  EXPECT_EQ(k.z * series_invert(k.z), BiSeries::one(8));
  EXPECT_EQ(series_invert(k.z).coeff(0, 0), qi(-1, 2));
  EXPECT_EQ(k.t, series_exp(1, 8));
  EXPECT_THROW(series_invert(BiSeries(3)), NotAUnit);
}

TEST(BiSeriesArith, ZMatchesDefinition) {
  // z = it - (it)^{-1} with t = e^x
  auto t = series_exp(1, 6);
  auto it = t.scaled(GaussRational::i());
  auto z = it - series_invert(it);
  auto k = completed_constants(6);
  for (int j = 0; j <= 6; ++j) EXPECT_EQ(z[j], k.z.coeff(j, 0));
}

TEST(LoopSeries, Examples) {
  EXPECT_EQ(u_n_series(0, 4), series(4, {2}));
  EXPECT_EQ(u_n_series(1, 4), series(4, {3, 0, 1, 0, q(1, 12)}));
  for (int n = -5; n <= 5; ++n) EXPECT_EQ(u_n_series(n, 6)[0], GaussRational(n + 2)) << n;
}

TEST(LoopSeries, AgreesWithQuotientWhereDefined) {
  // (t - t^{-1}) (u_n - 1) = t^{n+1} - t^{-(n+1)}
  for (int n = -4; n <= 4; ++n) {
    auto lhs = (t_power(1, 8) - t_power(-1, 8)) * (u_n_series(n, 8) - PowerSeries::one(8));
    EXPECT_EQ(lhs, t_power(n + 1, 8) - t_power(-(n + 1), 8)) << n;
  }
}

TEST(Substitution, Examples) {
  auto a = LaurentPoly::a(), ai = LaurentPoly::a(-1), zi = LaurentPoly::z(-1);
  EXPECT_EQ(substitute_t(zi * (a - ai) + LaurentPoly(1), 0, 4), series(4, {2}));
  EXPECT_EQ(substitute_t(hopf_value(), 0, 2), series(2, {2, 0, 4}));
  EXPECT_THROW(substitute_t(zi, 0, 4), RingError);
  // monomial substitution into a one-variable Laurent ring: a |-> -A^3
  auto minus_a3 = LaurentSeries::monomial(3, -1, 10);
  auto img = laurent_substitute(a, minus_a3, LaurentSeries::monomial(0, 1, 10));
  EXPECT_EQ(img.coeff(3), GaussRational(-1));
  EXPECT_EQ(img.min_deg(), 3);
}

TEST(Substitution, Homomorphism) {
  std::mt19937_64 rng(5);
  const int order = 6;
  auto a_val = LaurentSeries::from(t_power(2, 14));
  auto z_val = LaurentSeries::from(t_power(1, 14) - t_power(-1, 14));
  for (int k = 0; k < 25; ++k) {
    auto p = random_poly(rng, 3), r = random_poly(rng, 3);
    auto lhs = laurent_substitute(p * r, a_val, z_val);
    auto rhs = laurent_substitute(p, a_val, z_val) * laurent_substitute(r, a_val, z_val);
    const int lo = std::min(lhs.min_deg(), rhs.min_deg());
    for (int d = lo; d <= order; ++d) EXPECT_EQ(lhs.coeff(d), rhs.coeff(d));
  }
}

TEST(LaurentSeriesArith, InverseAndPrecision) {
  auto z = LaurentSeries::from(t_power(1, 10) - t_power(-1, 10));
  auto zi = z.inverse();
  EXPECT_EQ(zi.min_deg(), -1);
  EXPECT_EQ(zi.coeff(-1), q(1, 2));
  auto prod = z * zi;
  EXPECT_FALSE(prod.has_principal_part());
  EXPECT_EQ(prod.to_power_series(6), PowerSeries::one(6));
}

TEST(Json, RoundTrip) {
  auto p = hopf_value() * GaussRational(make_rational(1, 3), make_rational(-2, 5));
  EXPECT_EQ(laurent_from_json(nlohmann::json::parse(to_json(p).dump())), p);
  auto j = to_json(LaurentPoly::a(2) * LaurentPoly::z(-1));
  EXPECT_EQ(j.dump(), R"([{"deg_a":2,"deg_z":-1,"im":"0","re":"1"}])");
  auto s = u_n_series(1, 4);
  EXPECT_EQ(series_from_json(nlohmann::json::parse(to_json(s).dump())), s);
  EXPECT_EQ(to_json(s)["coeffs"][4], "1/12+0*i");
  EXPECT_THROW(series_from_json(nlohmann::json::parse(R"({"order":2,"coeffs":["1+0*i"]})")), RingError);
}
