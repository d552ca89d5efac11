#include "skeinlab/diagram/perturb.hpp"
#include "skeinlab/oracle/bracket.hpp"
#include "skeinlab/ring/constants.hpp"
#include "skeinlab/singular/calculus.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace skeinlab;
using namespace skeinlab::singular;
using diagram::Diagram;
using oracle::BracketPoly;
using ring::GaussRational;
using ring::LaurentPoly;
using ring::make_rational;
using ring::PowerSeries;
using testing_support::braid;
using testing_support::hopf;
using testing_support::pd;
using testing_support::trefoil;
using testing_support::unknot;

namespace {

Invariant<LaurentPoly> laurent_F() {
  return [](const Diagram& d) { return skein::evaluate_laurent(d); };
}

Invariant<PowerSeries> series_F(int n, int order) {
  return [n, order](const Diagram& d) { return skein::evaluate_series(d, n, order); };
}

Diagram flat_kink() { return pd("F[1,2,2,1]"); }

BracketPoly mono(int deg, long c = 1) { return BracketPoly::monomial(deg, ring::Integer(c)); }

}  // namespace

TEST(Bracket, Examples) {
  EXPECT_EQ(oracle::bracket_statesum(unknot()), mono(0));
  EXPECT_EQ(oracle::bracket_statesum(pd(testing_support::kPositiveKink)), mono(3, -1));
  EXPECT_EQ(oracle::bracket_statesum(pd(testing_support::kNegativeKink)), mono(-3, -1));
  EXPECT_EQ(oracle::bracket_statesum(hopf()), mono(4, -1) + mono(-4, -1));
  EXPECT_EQ(oracle::bracket_statesum(Diagram::unlink(2)), mono(2, -1) + mono(-2, -1));
  EXPECT_EQ((mono(4, -1) + mono(-4, -1)).str(), "-A^4 - A^-4");
}

TEST(Bracket, CrossingLimitAndFlats) {
  Diagram d = unknot();
  for (int k = 0; k < 21; ++k) d = diagram::add_kink(d, k == 0 ? -1 : diagram::half_edge(k - 1, 3), 1);
  EXPECT_THROW(oracle::bracket_statesum(d), oracle::OracleError);
  EXPECT_THROW(oracle::bracket_statesum(flat_kink()), oracle::OracleError);
}

TEST(Bracket, InvariantUnderR2R3) {
  std::mt19937_64 rng(11);
  for (const char* w : {"s1 s1 s1", "s1 s2^-1 s1 s2^-1", "s1 s1 s2 s1^-1 s2"}) {
    const Diagram d = braid(w);
    const auto b = oracle::bracket_statesum(d);
    for (int k = 0; k < 5; ++k) {
      Diagram p = diagram::random_perturbation(d, rng);
      p = diagram::random_perturbation(p, rng);
      EXPECT_EQ(oracle::bracket_statesum(p), b) << w;
    }
  }
}

TEST(Specialization, Examples) {
  for (const auto& d : {unknot(), pd(testing_support::kPositiveKink), hopf(), trefoil()}) {
    EXPECT_TRUE(oracle::specialization_matches(skein::evaluate_laurent(d), oracle::bracket_statesum(d)));
  }
  // a value off by one term must be rejected
  auto wrong = skein::evaluate_laurent(hopf()) + LaurentPoly::z();
  EXPECT_FALSE(oracle::specialization_matches(wrong, oracle::bracket_statesum(hopf())));
}

TEST(Derived, FlatKink) {
  auto a = LaurentPoly::a(), ai = LaurentPoly::a(-1);
  EXPECT_EQ(derived_invariant(laurent_F(), flat_kink()).value, a - ai);
  auto s = derived_invariant(series_F(0, 5), flat_kink()).value;
  EXPECT_EQ(s, ring::t_power(1, 5) - ring::t_power(-1, 5));
  EXPECT_EQ(s[1], GaussRational(2));
  EXPECT_EQ(s[3], GaussRational(make_rational(1, 3)));
}

TEST(Derived, Antisymmetric) {
  for (const auto& sd : {flat_kink(), diagram::make_flat(trefoil(), 1), diagram::make_flat(hopf(), 0)}) {
    const int c = sd.flat_crossings().front();
    // same flat point with the opposite stored resolution picture
    const Diagram flipped = diagram::make_flat(diagram::switch_crossing(diagram::resolve_flat(sd, c, 1), c), c);
    EXPECT_EQ(derived_invariant(laurent_F(), flipped).value, LaurentPoly() - derived_invariant(laurent_F(), sd).value);
  }
}

TEST(Derived, InsensitiveInvariantGivesZero) {
  // no flat point of a framed diagram has framed-isotopic resolutions (framing or
  // linking number moves), so use an invariant blind to the change: v_n^0
  for (const auto& sd : {flat_kink(), diagram::make_flat(hopf(), 0), diagram::make_flat(trefoil(), 2)}) {
    EXPECT_TRUE(derived_invariant(series_F(1, 0), sd).value.is_zero());
  }
}

TEST(Integrability, TwoFlatDiagrams) {
  const std::vector<Diagram> cases{
      diagram::make_flat(diagram::make_flat(trefoil(), 0), 2),
      diagram::make_flat(diagram::make_flat(braid("s1 s2^-1 s1 s2^-1"), 1), 3),
      diagram::make_flat(diagram::make_flat(hopf(), 0), 1),
      double_kink_point(trefoil(), 0),
  };
  for (const auto& sd : cases) {
    EXPECT_TRUE(check_integrability(laurent_F(), sd));
    EXPECT_TRUE(check_integrability(series_F(1, 4), sd));
  }
}

TEST(Integrability, CorruptedTableDetected) {
  const Diagram sd = diagram::make_flat(diagram::make_flat(trefoil(), 0), 2);
  auto t = integrability_table(laurent_F(), sd);
  ASSERT_TRUE(check_integrability(t));
  std::swap(t.second_then_first[0][1], t.second_then_first[1][1]);
  ASSERT_FALSE(t.second_then_first[0][1] == t.second_then_first[1][1]);
  EXPECT_FALSE(check_integrability(t));
}

TEST(OneTerm, Configurations) {
  for (const auto& base : {unknot(), trefoil(), braid("s1 s2^-1 s1 s2^-1")}) {
    for (std::array<int, 2> signs : {std::array{1, 1}, std::array{1, -1}, std::array{-1, 1}, std::array{-1, -1}}) {
      const Diagram sd = double_kink_point(base, base.crossing_count() == 0 ? -1 : 0, signs);
      auto r = one_term_report(laurent_F(), sd);
      EXPECT_TRUE(r.certificate);
      EXPECT_TRUE(r.values_equal);
      EXPECT_TRUE(r.signed_sum.is_zero());
      EXPECT_TRUE(one_term_relation_check(series_F(1, 4), sd));
    }
  }
}

TEST(OneTerm, ShapeMismatch) {
  EXPECT_THROW(one_term_report(laurent_F(), flat_kink()), ShapeError);
  EXPECT_THROW(one_term_report(laurent_F(), diagram::make_flat(diagram::make_flat(trefoil(), 0), 1)), ShapeError);
}

TEST(Admissibility, Examples) {
  EXPECT_EQ(is_admissible_in_diagram(flat_kink(), 0), Admissibility::Inadmissible);
  EXPECT_EQ(is_admissible_in_diagram(diagram::make_flat(hopf(), 0), 0), Admissibility::Undetermined);
  EXPECT_EQ(is_admissible_in_diagram(diagram::make_flat(trefoil(), 1), 1), Admissibility::Undetermined);
  EXPECT_THROW(is_admissible_in_diagram(trefoil(), 0), ShapeError);
}

TEST(WritheJump, Examples) {
  EXPECT_EQ(writhe_jump(flat_kink(), 0), (std::vector<int>{2}));
  EXPECT_EQ(writhe_jump(pd("F[1,1,2,2]"), 0), (std::vector<int>{-2}));
  EXPECT_EQ(writhe_jump(diagram::make_flat(hopf(), 0), 0), (std::vector<int>{0, 0}));
  for (int c = 0; c < 3; ++c) {
    auto j = writhe_jump(diagram::make_flat(trefoil(), c), c);
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(std::abs(j[0]), 2);
  }
  // self point on one component of a two-component link: the jump sits on that component only
  const Diagram link = diagram::disjoint_union(trefoil(), unknot());
  auto j = writhe_jump(diagram::make_flat(link, 0), 0);
  EXPECT_EQ(std::abs(j[0]) + std::abs(j[1]), 2);
}

TEST(TotalFraming, Examples) {
  EXPECT_EQ(total_framing({{1, 1, 2}}, 2), (std::vector<int>{2, 0}));
  EXPECT_EQ(total_framing({}, 3), (std::vector<int>{0, 0, 0}));
  EXPECT_EQ(total_framing({{1, 1, 2}, {1, -1, 2}}, 2), (std::vector<int>{0, 0}));
  EXPECT_TRUE(framing_preserving(total_framing({{1, 1, 2}, {1, -1, 2}}, 2)));
  EXPECT_THROW(total_framing({{3, 1, 2}}, 2), std::out_of_range);
  EXPECT_THROW(FramingEvent(1, 1, 1), std::invalid_argument);
}

TEST(TotalFraming, AdditiveAndOdd) {
  std::mt19937_64 rng(5);
  auto random_events = [&rng](int m, int count) {
    std::vector<FramingEvent> ev;
    for (int k = 0; k < count; ++k) {
      ev.emplace_back(static_cast<int>(rng() % m) + 1, rng() % 2 ? 1 : -1, rng() % 2 ? 2 : 0);
    }
    return ev;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 4);
    auto e1 = random_events(m, static_cast<int>(rng() % 6)), e2 = random_events(m, static_cast<int>(rng() % 6));
    auto both = e1;
    both.insert(both.end(), e2.begin(), e2.end());
    auto t1 = total_framing(e1, m), t2 = total_framing(e2, m), t = total_framing(both, m);
    auto reversed = e1;
    for (auto& e : reversed) e.sign = -e.sign;
    auto tr = total_framing(reversed, m);
    for (int i = 0; i < m; ++i) {
      EXPECT_EQ(t[i], t1[i] + t2[i]);
      EXPECT_EQ(tr[i], -t1[i]);
    }
  }
}

TEST(FiniteType, Vanishing) {
  EXPECT_TRUE(finite_type_vanishing(0, 0, flat_kink()));
  EXPECT_FALSE(alternating_series_sum(flat_kink(), 0, 1).is_zero());
  const Diagram two = diagram::make_flat(diagram::make_flat(trefoil(), 0), 2);
  for (int n : {0, 1}) {
    EXPECT_TRUE(finite_type_vanishing(n, 0, two));
    EXPECT_TRUE(finite_type_vanishing(n, 1, two));
  }
  Diagram three = diagram::make_flat(braid("s1 s2^-1 s1 s2^-1 s1"), 0);
  three = diagram::make_flat(diagram::make_flat(three, 2), 3);
  for (int m = 0; m < 3; ++m) EXPECT_TRUE(finite_type_vanishing(1, m, three));
  EXPECT_THROW(finite_type_vanishing(0, 1, flat_kink()), ShapeError);
}
