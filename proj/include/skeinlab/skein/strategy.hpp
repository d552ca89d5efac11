#pragma once

// Descending-diagram strategy. A traversal fixes an order of the crossing
// components and a base point and direction on each; a crossing is "bad" when
// the traversal first reaches it along the under-strand. With no bad crossings
// the diagram is a stacked (split) union of unknots. We use a traversal with the
// fewest bad crossings, which depends only on the diagram up to relabeling, so
// switching a bad crossing strictly lowers the count on every later visit.

#include "skeinlab/diagram/diagram.hpp"
#include "skeinlab/diagram/reduce.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace skeinlab::skein {

using diagram::Diagram;

struct Traversal {
  std::vector<int> order;      // component indices (as in Diagram::components()) in traversal order
  std::vector<int> start;      // per component: the entry half-edge the walk begins with
  std::vector<bool> reversed;  // per component: walked against its stored direction
};

struct TraversalPlan {
  Traversal traversal;
  std::vector<int> bad;  // bad crossings in the order the traversal meets them
};

namespace detail {

inline std::vector<int> walk_entries(const diagram::Component& comp, bool reversed) {
  if (!reversed) return comp.entries;
  std::vector<int> out;
  for (auto it = comp.entries.rbegin(); it != comp.entries.rend(); ++it) out.push_back(diagram::opposite(*it));
  return out;
}

}  // namespace detail

/// Traversal minimizing the number of bad crossings; ties broken by smallest
/// component order, then forward direction, then earliest base point.
inline TraversalPlan optimal_traversal(const Diagram& d) {
  using namespace diagram;
  const auto comps = d.components();
  const int m = static_cast<int>(comps.size());
  const auto comp_of = d.component_index();
  Traversal tr;
  tr.start.resize(static_cast<std::size_t>(m));
  tr.reversed.resize(static_cast<std::size_t>(m));

  // self crossings: best base point and direction per component
  for (int k = 0; k < m; ++k) {
    int best = std::numeric_limits<int>::max();
    for (bool rev : {false, true}) {
      const auto entries = detail::walk_entries(comps[k], rev);
      const int len = static_cast<int>(entries.size());
      for (int b = 0; b < len; ++b) {
        std::vector<char> seen(static_cast<std::size_t>(d.crossing_count()), 0);
        int bad = 0;
        for (int j = 0; j < len; ++j) {
          const int e = entries[(b + j) % len];
          const int c = crossing_of(e);
          if (comp_of[half_edge(c, 0)] != comp_of[half_edge(c, 1)]) continue;
          if (!seen[c]) {
            seen[c] = 1;
            if (!d.is_over(e)) ++bad;
          }
        }
        if (bad < best) {
          best = bad;
          tr.start[k] = entries[b];
          tr.reversed[k] = rev;
        }
      }
    }
  }

  // mixed crossings: cost[i][j] counts crossings under-strand i / over-strand j,
  // which are bad when i precedes j
  std::vector<std::vector<int>> cost(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int over_comp = comp_of[half_edge(c, d.crossing(c).over)];
    const int under_comp = comp_of[half_edge(c, d.crossing(c).over + 1)];
    if (over_comp != under_comp) ++cost[under_comp][over_comp];
  }
  if (m > 20) throw std::runtime_error("too many link components for the ordering search");
  const std::size_t full = (std::size_t{1} << m) - 1;
  // rest[S]: least cost of ordering the complement of S after S
  std::vector<int> rest(full + 1, 0);
  auto cross = [&](std::size_t placed, int j) {
    int s = 0;
    for (int i = 0; i < m; ++i) {
      if (placed >> i & 1) s += cost[i][j];
    }
    return s;
  };
  for (std::size_t s = full; s-- > 0;) {
    int best = std::numeric_limits<int>::max();
    for (int j = 0; j < m; ++j) {
      if (s >> j & 1) continue;
      best = std::min(best, cross(s, j) + rest[s | (std::size_t{1} << j)]);
    }
    rest[s] = best;
  }
  std::size_t placed = 0;
  for (int step = 0; step < m; ++step) {
    for (int j = 0; j < m; ++j) {
      if (placed >> j & 1) continue;
      if (cross(placed, j) + rest[placed | (std::size_t{1} << j)] == rest[placed]) {
        tr.order.push_back(j);
        placed |= std::size_t{1} << j;
        break;
      }
    }
  }

  TraversalPlan plan{tr, {}};
  std::vector<char> seen(static_cast<std::size_t>(d.crossing_count()), 0);
  for (int k : tr.order) {
    const auto entries = detail::walk_entries(comps[k], tr.reversed[k]);
    const auto it = std::find(entries.begin(), entries.end(), tr.start[k]);
    const int b = static_cast<int>(it - entries.begin());
    const int len = static_cast<int>(entries.size());
    for (int j = 0; j < len; ++j) {
      const int e = entries[(b + j) % len];
      const int c = crossing_of(e);
      if (seen[c]) continue;
      seen[c] = 1;
      if (!d.is_over(e)) plan.bad.push_back(c);
    }
  }
  return plan;
}

/// Least number of bad crossings over all traversals.
inline int bad_crossing_count(const Diagram& d) { return static_cast<int>(optimal_traversal(d).bad.size()); }

inline bool is_descending(const Diagram& d) { return bad_crossing_count(d) == 0; }

struct StrategyError : std::logic_error {
  using std::logic_error::logic_error;
};

struct SelectedCrossing {
  int crossing;
  TraversalPlan witness;  // switching `crossing` leaves witness.bad.size() - 1 bad crossings
};

/// The first crossing the optimal traversal meets along its under-strand.
inline SelectedCrossing select_crossing(const Diagram& d) {
  if (d.flat_count() > 0) throw StrategyError("select_crossing: diagram has flat crossings");
  if (d.crossing_count() == 0 || diagram::detect_reduction(d)) {
    throw StrategyError("select_crossing: diagram is reducible or resolved");
  }
  auto plan = optimal_traversal(d);
  if (plan.bad.empty()) throw StrategyError("select_crossing: diagram is reducible or resolved (descending)");
  return {plan.bad.front(), std::move(plan)};
}

}  // namespace skeinlab::skein
