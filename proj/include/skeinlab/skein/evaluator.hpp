#pragma once

// Memoized skein recursion. Each node is a loop-free diagram in canonical form;
// free loops are stripped on entry (one delta each). At a node we apply, in
// order: a disjoint split, an R1 or R2 reduction, the closed form for a
// descending diagram (a stacked unlink with framings = self-writhes), or the
// rewrite D(cur) = D(switched) + z [D(A) - D(B)] at a bad crossing.

#include "skeinlab/diagram/canonical.hpp"
#include "skeinlab/diagram/reduce.hpp"
#include "skeinlab/skein/params.hpp"
#include "skeinlab/skein/strategy.hpp"

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace skeinlab::skein {

using diagram::DiagramCode;

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(std::uint64_t budget)
      : std::runtime_error("budget: skein recursion exceeded the node budget of " + std::to_string(budget)) {}
};

struct MemoConflict : std::logic_error {
  MemoConflict() : std::logic_error("memo table single-valuedness violated") {}
};

struct EvaluationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

/// SKEIN_NODE_BUDGET if set and valid, else `fallback`.
inline std::uint64_t node_budget_from_env(std::uint64_t fallback = kDefaultNodeBudget) {
  const char* env = std::getenv("SKEIN_NODE_BUDGET");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0') return fallback;
  return v;
}

struct EvalOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  /// When set, bad crossings are chosen at random and the reduction priority is shuffled.
  std::optional<std::uint64_t> random_seed;
  diagram::ReductionPriority priority = diagram::kDefaultPriority;
  bool trace = false;
};

/// (u_bound, c), ordered lexicographically. u_bound is the largest number of
/// crossing switches on any path of the evaluator's recursion tree below the
/// diagram; c is the crossing count.
struct Complexity {
  int u_bound = 0;
  int c = 0;
  friend auto operator<=>(const Complexity&, const Complexity&) = default;
};

enum class EdgeKind { Split, Kink, Pair, Switch, SmoothA, SmoothB };

inline const char* edge_kind_name(EdgeKind k) {
  switch (k) {
    case EdgeKind::Split:
      return "split";
    case EdgeKind::Kink:
      return "kink";
    case EdgeKind::Pair:
      return "pair";
    case EdgeKind::Switch:
      return "switch";
    case EdgeKind::SmoothA:
      return "smooth-A";
    case EdgeKind::SmoothB:
      return "smooth-B";
  }
  return "?";
}

struct TraceEdge {
  DiagramCode parent;
  DiagramCode child;
  int parent_crossings;
  int child_crossings;
  EdgeKind kind;
};

template <class V>
class Evaluator {
 public:
  explicit Evaluator(SkeinParams<V> params, EvalOptions options = {})
      : params_(std::move(params)), options_(options) {
    if (options_.random_seed) {
      rng_.seed(*options_.random_seed);
      std::shuffle(options_.priority.begin(), options_.priority.end(), rng_);
    }
  }

  const SkeinParams<V>& params() const { return params_; }

  /// Invariant with the configured unknot value.
  V evaluate(const diagram::Diagram& d) { return params_.unknot_value * normalized(d); }

  /// Invariant normalized so that the unknot evaluates to 1.
  V normalized(const diagram::Diagram& d) { return eval(d).value; }

  Complexity complexity(const diagram::Diagram& d) { return {eval(d).u, d.crossing_count()}; }

  /// u_bound of an already evaluated canonical node (0 for crossingless codes).
  std::optional<int> u_bound_of(const DiagramCode& code) const {
    auto it = memo_.find(code);
    if (it == memo_.end() || !it->second.done) return std::nullopt;
    return it->second.u;
  }

  const std::vector<TraceEdge>& trace() const { return trace_; }
  std::uint64_t nodes_visited() const { return nodes_; }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct Result {
    V value;
    int u;
    DiagramCode code;  // of the loop-free node (empty for crossingless diagrams)
  };
  struct Entry {
    V value;
    int u = 0;
    bool done = false;
  };

  Result eval(const diagram::Diagram& d) {
    if (d.flat_count() > 0) throw EvaluationError("diagram has flat crossings; resolve them before evaluating");
    if (d.crossing_count() == 0) {
      if (d.free_loops() == 0) throw EvaluationError("empty diagram has no value");
      return {delta_power(params_, d.free_loops() - 1), 0, {}};
    }
    if (d.free_loops() > 0) {
      auto r = eval(diagram::with_free_loops(d, 0));
      r.value = delta_power(params_, d.free_loops()) * r.value;
      return r;
    }
    auto form = diagram::canonical_form(d);
    auto it = memo_.find(form.code);
    if (it != memo_.end()) {
      if (!it->second.done) throw std::logic_error("skein recursion revisited a diagram in progress");
      return {it->second.value, it->second.u, form.code};
    }
    if (++nodes_ > options_.node_budget) throw BudgetExceeded(options_.node_budget);
    memo_.emplace(form.code, Entry{params_.one, 0, false});
    auto [value, u] = expand(form.diagram, form.code);
    store(form.code, value, u);
    return {std::move(value), u, std::move(form.code)};
  }

  void store(const DiagramCode& code, const V& value, int u) {
    auto& e = memo_.at(code);
    if (e.done && !(e.value == value)) throw MemoConflict();
    e.value = value;
    e.u = u;
    e.done = true;
  }

  Result child(const DiagramCode& parent, int parent_crossings, const diagram::Diagram& d, EdgeKind kind) {
    auto r = eval(d);
    if (options_.trace) trace_.push_back({parent, r.code, parent_crossings, d.crossing_count(), kind});
    return r;
  }

  std::pair<V, int> expand(const diagram::Diagram& d, const DiagramCode& code) {
    using namespace diagram;
    const int c = d.crossing_count();
    if (auto move = detect_reduction(d, options_.priority)) {
      auto red = apply_reduction(d, *move);
      if (red.split_off) {
        auto r1 = child(code, c, red.diagram, EdgeKind::Split);
        auto r2 = child(code, c, *red.split_off, EdgeKind::Split);
        return {delta_power(params_, red.bookkeeping.delta_count) * r1.value * r2.value, std::max(r1.u, r2.u)};
      }
      const bool kink = std::holds_alternative<R1Kink>(*move);
      auto r = child(code, c, red.diagram, kink ? EdgeKind::Kink : EdgeKind::Pair);
      V value = alpha_power(params_, red.bookkeeping.kink_sign) * r.value;
      if (red.bookkeeping.delta_count > 0) value = delta_power(params_, red.bookkeeping.delta_count) * value;
      return {value, r.u};
    }
    auto plan = optimal_traversal(d);
    if (plan.bad.empty()) {
      int tau = 0;
      const int m = static_cast<int>(d.components().size());
      for (int k = 0; k < m; ++k) tau += d.self_writhe(k);
      return {alpha_power(params_, tau) * delta_power(params_, m - 1), 0};
    }
    int x = plan.bad.front();
    if (options_.random_seed) {
      x = plan.bad[std::uniform_int_distribution<std::size_t>(0, plan.bad.size() - 1)(rng_)];
    }
    auto sw = child(code, c, switch_crossing(d, x), EdgeKind::Switch);
    auto a = child(code, c, smooth(d, x, Smoothing::A), EdgeKind::SmoothA);
    auto b = child(code, c, smooth(d, x, Smoothing::B), EdgeKind::SmoothB);
    return {sw.value + params_.z * (a.value - b.value), std::max({sw.u + 1, a.u, b.u})};
  }

  SkeinParams<V> params_;
  EvalOptions options_;
  std::mt19937_64 rng_;
  std::unordered_map<DiagramCode, Entry, diagram::DiagramCodeHash> memo_;
  std::vector<TraceEdge> trace_;
  std::uint64_t nodes_ = 0;
};

template <class V>
V evaluate(const diagram::Diagram& d, const SkeinParams<V>& params, const EvalOptions& options = {}) {
  return Evaluator<V>(params, options).evaluate(d);
}

inline LaurentPoly evaluate_laurent(const diagram::Diagram& d, const EvalOptions& options = {}) {
  return evaluate(d, laurent_params(), options);
}

/// x-expansion of the invariant at t = e^x; coefficient m is v_n^m.
inline PowerSeries evaluate_series(const diagram::Diagram& d, int n, int order, const EvalOptions& options = {}) {
  return evaluate(d, series_params(n, order), options);
}

namespace detail {

// Value type carrying no information, for walking the recursion tree alone.
struct Shape {
  friend Shape operator+(Shape, Shape) { return {}; }
  friend Shape operator-(Shape, Shape) { return {}; }
  friend Shape operator*(Shape, Shape) { return {}; }
  friend bool operator==(Shape, Shape) { return true; }
};

}  // namespace detail

inline Complexity complexity_bound(const diagram::Diagram& d, const EvalOptions& options = {}) {
  using detail::Shape;
  Evaluator<Shape> ev(SkeinParams<Shape>{{}, {}, {}, {}, {}, {}, "shape"}, options);
  return ev.complexity(d);
}

}  // namespace skeinlab::skein
