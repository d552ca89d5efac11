// Acceptance run: every criterion is an exact equality check with a wall-clock limit.
// Prints one PASS/FAIL line per criterion; exits non-zero if any fails.

#include "skeinlab/corpus/generate.hpp"
#include "skeinlab/diagram/perturb.hpp"
#include "skeinlab/oracle/bracket.hpp"
#include "skeinlab/ring/constants.hpp"
#include "skeinlab/singular/calculus.hpp"
#include "skeinlab/skein/evaluator.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace skeinlab;
using diagram::Diagram;
using ring::GaussRational;
using ring::LaurentPoly;
using ring::PowerSeries;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

std::vector<corpus::CorpusItem> g_corpus;

std::vector<const corpus::CorpusItem*> framed() {
  std::vector<const corpus::CorpusItem*> out;
  for (const auto& item : g_corpus) {
    if (item.diagram.flat_count() == 0) out.push_back(&item);
  }
  return out;
}

std::vector<const corpus::CorpusItem*> singular_items() {
  std::vector<const corpus::CorpusItem*> out;
  for (const auto& item : g_corpus) {
    if (item.diagram.flat_count() > 0) out.push_back(&item);
  }
  return out;
}

Outcome normalization_and_kinks() {
  Outcome o;
  const Diagram u = Diagram::unlink(1);
  const Diagram kp = diagram::add_kink(u, -1, 1), kn = diagram::add_kink(u, -1, -1);
  o.require(skein::evaluate_laurent(u) == LaurentPoly(1), "laurent unknot != 1");
  o.require(skein::evaluate_laurent(kp) == LaurentPoly::a(), "laurent + kink != a");
  o.require(skein::evaluate_laurent(kn) == LaurentPoly::a(-1), "laurent - kink != a^-1");
  for (int n : {0, 1, 2}) {
    auto p = skein::series_params(n, 8);
    o.require(skein::evaluate(u, p) == p.one, "series unknot != 1 at n=" + std::to_string(n));
    o.require(skein::evaluate(kp, p) == p.alpha, "series + kink != t^(n+1) at n=" + std::to_string(n));
    o.require(skein::evaluate(kn, p) == p.alpha_inv, "series - kink != t^-(n+1) at n=" + std::to_string(n));
  }
  o.detail = "laurent and series n = 0, 1, 2";
  return o;
}

Outcome disjoint_union() {
  Outcome o;
  auto lp = skein::laurent_params();
  auto sp = skein::series_params(1, 8);
  int checks = 0;
  for (const auto* item : framed()) {
    skein::Evaluator<LaurentPoly> le(lp);
    skein::Evaluator<PowerSeries> se(sp);
    const auto v = le.evaluate(item->diagram);
    const auto s = se.evaluate(item->diagram);
    for (int k = 1; k <= 3; ++k) {
      const auto dk = diagram::with_free_loops(item->diagram, item->diagram.free_loops() + k);
      o.require(le.evaluate(dk) == skein::delta_power(lp, k) * v, item->id + " laurent k=" + std::to_string(k));
      o.require(se.evaluate(dk) == skein::delta_power(sp, k) * s, item->id + " series k=" + std::to_string(k));
      checks += 2;
    }
  }
  o.detail = std::to_string(checks) + " equalities, delta = u_1 in the series ring";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto items = framed();
  o.require(items.size() >= 50, "fewer than 50 framed corpus diagrams");
  int max_c = 0;
  for (const auto* item : items) {
    max_c = std::max(max_c, item->diagram.crossing_count());
    const auto b = oracle::bracket_statesum(item->diagram);
    o.require(oracle::specialization_matches(skein::evaluate_laurent(item->diagram), b), item->id);
  }
  o.detail = std::to_string(items.size()) + " diagrams, up to " + std::to_string(max_c) + " crossings";
  return o;
}

Outcome regular_isotopy() {
  Outcome o;
  const auto items = framed();
  std::vector<const corpus::CorpusItem*> usable;
  for (const auto* item : items) {
    if (item->diagram.crossing_count() > 0) usable.push_back(item);
  }
  std::mt19937_64 rng(2024);
  int r3 = 0;
  for (int pair = 0; pair < 200; ++pair) {
    const auto* item = usable[static_cast<std::size_t>(pair) % usable.size()];
    const Diagram& d = item->diagram;
    Diagram p = d;
    const int moves = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < moves; ++k) {
      const int before = p.crossing_count();
      p = diagram::random_perturbation(p, rng);
      if (p.crossing_count() == before) ++r3;
    }
    o.require(skein::evaluate_laurent(p) == skein::evaluate_laurent(d), item->id + " laurent");
    o.require(skein::evaluate_series(p, 1, 8) == skein::evaluate_series(d, 1, 8), item->id + " series");
  }
  o.require(r3 > 0, "no R3 move was exercised");
  o.detail = "200 pairs, " + std::to_string(r3) + " R3 moves among the perturbations";
  return o;
}

Outcome cross_ring() {
  Outcome o;
  int checks = 0;
  for (const auto* item : framed()) {
    const auto v = skein::evaluate_laurent(item->diagram);
    const int pole = std::max(0, -v.min_deg_z());
    for (int n : {0, 1, 2}) {
      const int work = 8 + 1 + pole;
      auto a_val = ring::LaurentSeries::from(ring::t_power(n + 1, work));
      auto z_val = ring::LaurentSeries::from(ring::t_power(1, work) - ring::t_power(-1, work));
      const auto sub = ring::laurent_substitute(v, a_val, z_val);
      o.require(!sub.has_principal_part(), item->id + " principal part at n=" + std::to_string(n));
      if (sub.has_principal_part()) continue;
      o.require(sub.to_power_series(8) == skein::evaluate_series(item->diagram, n, 8),
                item->id + " mismatch at n=" + std::to_string(n));
      ++checks;
    }
  }
  o.detail = std::to_string(checks) + " comparisons at order 8";
  return o;
}

Outcome constant_term() {
  Outcome o;
  int checks = 0;
  for (const auto* item : framed()) {
    const int m = item->diagram.component_count();
    for (int n = 0; n <= 4; ++n) {
      const auto s = skein::evaluate_series(item->diagram, n, 0);
      long long expect = 1;
      for (int k = 1; k < m; ++k) expect *= n + 2;
      o.require(s[0] == GaussRational(expect), item->id + " n=" + std::to_string(n));
      ++checks;
    }
  }
  o.detail = std::to_string(checks) + " checks over n = 0..4";
  return o;
}

Outcome finite_type() {
  Outcome o;
  int sums = 0;
  for (const auto* item : singular_items()) {
    const int k = item->diagram.flat_count();
    if (k > 4) continue;
    for (int n : {0, 1, 2}) {
      // one evaluation at order k-1 covers every m < k
      const auto s = singular::alternating_series_sum(item->diagram, n, k - 1);
      o.require(s.is_zero(), item->id + " n=" + std::to_string(n) + " sum " + s.str());
      sums += k;
    }
  }
  o.detail = std::to_string(singular_items().size()) + " singular diagrams, " + std::to_string(sums) +
             " (n, m) vanishing checks";
  return o;
}

Outcome singular_calculus() {
  Outcome o;
  using singular::Invariant;
  Invariant<LaurentPoly> F = [](const Diagram& d) { return skein::evaluate_laurent(d); };
  Invariant<PowerSeries> G = [](const Diagram& d) { return skein::evaluate_series(d, 1, 6); };
  int configs = 0, two_flat = 0, jumps = 0;
  const auto bases = framed();
  for (std::size_t b = 0; b < bases.size(); b += 3) {
    const Diagram& base = bases[b]->diagram;
    if (base.free_loops() > 0 && base.crossing_count() > 0) continue;
    for (std::array<int, 2> signs : {std::array{1, 1}, std::array{1, -1}, std::array{-1, -1}}) {
      const Diagram sd = singular::double_kink_point(base, base.crossing_count() == 0 ? -1 : 0, signs);
      auto r = singular::one_term_report(F, sd);
      o.require(r.holds() && r.signed_sum.is_zero(), bases[b]->id + " one-term relation");
      ++configs;
    }
  }
  for (const auto* item : singular_items()) {
    const Diagram& sd = item->diagram;
    if (sd.flat_count() == 2) {
      o.require(singular::check_integrability(F, sd), item->id + " four-term identity (laurent)");
      o.require(singular::check_integrability(G, sd), item->id + " four-term identity (series)");
      ++two_flat;
    }
    const auto comp_of = sd.component_index();
    for (int c : sd.flat_crossings()) {
      const auto j = singular::writhe_jump(sd, c);
      const bool self = comp_of[diagram::half_edge(c, 0)] == comp_of[diagram::half_edge(c, 1)];
      int nonzero = 0, total = 0;
      for (int v : j) {
        nonzero += v != 0;
        total += v;
      }
      if (self) {
        o.require(nonzero == 1 && (total == 2 || total == -2), item->id + " self jump");
      } else {
        o.require(nonzero == 0, item->id + " mixed jump");
      }
      ++jumps;
    }
  }
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 4);
    auto events = [&](int count) {
      std::vector<singular::FramingEvent> ev;
      for (int k = 0; k < count; ++k) {
        ev.emplace_back(1 + static_cast<int>(rng() % m), rng() % 2 ? 1 : -1, rng() % 2 ? 2 : 0);
      }
      return ev;
    };
    auto e1 = events(static_cast<int>(rng() % 5)), e2 = events(static_cast<int>(rng() % 5));
    auto joined = e1;
    joined.insert(joined.end(), e2.begin(), e2.end());
    auto cancel = e1;
    for (const auto& e : e1) cancel.emplace_back(e.component, -e.sign, e.jump);
    const auto t1 = singular::total_framing(e1, m), t2 = singular::total_framing(e2, m);
    const auto tj = singular::total_framing(joined, m);
    for (int i = 0; i < m; ++i) o.require(tj[i] == t1[i] + t2[i], "total framing additivity");
    o.require(singular::framing_preserving(singular::total_framing(cancel, m)), "total framing cancellation");
  }
  o.require(two_flat > 0 && configs > 0 && jumps > 0, "empty singular workload");
  o.detail = std::to_string(configs) + " one-term configurations, " + std::to_string(two_flat) +
             " two-point diagrams, " + std::to_string(jumps) + " writhe jumps, 500 framing event lists";
  return o;
}

Outcome completed_constants() {
  Outcome o;
  const int N = 8;
  const auto k = ring::completed_constants(N);
  const auto i = GaussRational::i();
  // displayed prefixes
  o.require(k.z.coeff(0, 0) == GaussRational(0, 2), "z constant term");
  o.require(k.z.coeff(2, 0) == i, "z x^2 coefficient");
  o.require(k.z.coeff(4, 0) == i * GaussRational(ring::make_rational(1, 12)), "z x^4 coefficient");
  o.require(k.a.coeff(0, 0) == i && k.a.coeff(0, 1) == i, "a prefix i + iy");
  o.require(k.a.coeff(0, 2) == i * GaussRational(ring::make_rational(1, 2)), "a y^2 coefficient");
  // independent route: z = it - (it)^{-1} with t = e^x, a = i e^y, by series arithmetic
  ring::BiSeries it(N), ey(N);
  const auto ex = ring::series_exp(1, N), ey1 = ring::series_exp(1, N);
  for (int d = 0; d <= N; ++d) {
    it.set(d, 0, i * ex[d]);
    ey.set(0, d, i * ey1[d]);
  }
  o.require(it - it.inverse() == k.z, "z != it - (it)^-1 at order 8");
  o.require(ey == k.a, "a != i e^y at order 8");
  o.require(k.a * k.a.inverse() == ring::BiSeries::one(N), "a * a^-1 != 1");
  o.require(k.z * k.z.inverse() == ring::BiSeries::one(N), "z * z^-1 != 1");
  o.detail = "order 8 in x, y";
  return o;
}

Outcome termination() {
  Outcome o;
  skein::EvalOptions opt;
  opt.trace = true;
  skein::Evaluator<LaurentPoly> ev(skein::laurent_params(), opt);
  std::mt19937_64 rng(10);
  int diagrams = 0;
  while (ev.nodes_visited() < 1000 && diagrams < 500) {
    std::string w;
    for (int j = 0; j < 12; ++j) {
      w += (j ? " s" : "s") + std::to_string(1 + rng() % 3) + (rng() % 2 ? "^-1" : "");
    }
    ev.evaluate(diagram::parse_braid(w));
    ++diagrams;
  }
  o.require(ev.nodes_visited() >= 1000, "evaluation visited only " + std::to_string(ev.nodes_visited()) + " nodes");
  std::size_t edges = 0;
  for (const auto& e : ev.trace()) {
    const auto pu = ev.u_bound_of(e.parent);
    const auto cu = e.child.bytes.empty() ? std::optional<int>(0) : ev.u_bound_of(e.child);
    o.require(pu && cu, "trace references an unfinished node");
    if (!pu || !cu) continue;
    const skein::Complexity parent{*pu, e.parent_crossings}, child{*cu, e.child_crossings};
    std::ostringstream what;
    what << skein::edge_kind_name(e.kind) << " edge (" << parent.u_bound << "," << parent.c << ") -> (" << child.u_bound
         << "," << child.c << ")";
    o.require(child < parent, what.str());
    ++edges;
  }
  o.detail = std::to_string(diagrams) + " diagrams, " + std::to_string(ev.nodes_visited()) + " nodes, " + std::to_string(edges) + " trace edges";
  return o;
}

struct Criterion {
  int number;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  try {
    g_corpus = corpus::load_corpus(SKEINLAB_CORPUS_DIR);
  } catch (const std::exception& e) {
    std::cout << "cannot load corpus: " << e.what() << "\n";
    return 1;
  }
  const std::vector<Criterion> criteria{
      {1, "normalization and kink laws", 1, normalization_and_kinks},
      {2, "disjoint-union law", 30, disjoint_union},
      {3, "oracle equivalence", 120, oracle_equivalence},
      {4, "regular-isotopy invariance", 120, regular_isotopy},
      {5, "cross-ring consistency", 120, cross_ring},
      {6, "constant-term law", 60, constant_term},
      {7, "finite-type vanishing", 120, finite_type},
      {8, "singular calculus", 30, singular_calculus},
      {9, "completed-ring constants", 1, completed_constants},
      {10, "termination and complexity", 60, termination},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = s <= c.limit_s;
    const bool pass = o.pass && in_time;
    failed += !pass;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s of %.0f s", s, c.limit_s);
    std::cout << (pass ? "PASS" : "FAIL") << "  [" << c.number << "] " << c.name << "  (" << timing << ")  "
              << o.detail << "\n";
    if (!in_time) std::cout << "      over the time limit\n";
    for (const auto& f : o.failures) std::cout << "      " << f << "\n";
  }
  std::cout << (failed == 0 ? "all 10 criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
