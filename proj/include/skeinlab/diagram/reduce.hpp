#pragma once

#include "skeinlab/diagram/diagram.hpp"

#include <array>
#include <optional>
#include <utility>
#include <variant>

namespace skeinlab::diagram {

struct FreeLoop {
  friend bool operator==(const FreeLoop&, const FreeLoop&) = default;
};
struct DisjointSplit {
  std::vector<int> first_piece;
  friend bool operator==(const DisjointSplit&, const DisjointSplit&) = default;
};
struct R1Kink {
  int crossing;
  int loop_slot;  // the curl joins slots loop_slot and loop_slot+1
  int sign;
  friend bool operator==(const R1Kink&, const R1Kink&) = default;
};
struct R2Pair {
  int c1, c2;
  int dart;  // a dart of the bigon face, leaving c1 along the strand that is over at both
  friend bool operator==(const R2Pair&, const R2Pair&) = default;
};

using Reduction = std::variant<FreeLoop, DisjointSplit, R1Kink, R2Pair>;

enum class ReductionKind { FreeLoop, DisjointSplit, R1Kink, R2Pair };

using ReductionPriority = std::array<ReductionKind, 4>;
inline constexpr ReductionPriority kDefaultPriority{ReductionKind::FreeLoop, ReductionKind::DisjointSplit,
                                                    ReductionKind::R1Kink, ReductionKind::R2Pair};

/// Factor the evaluator must apply after a reduction.
struct Bookkeeping {
  int kink_sign = 0;    // multiply by alpha^kink_sign
  int delta_count = 0;  // multiply by delta^delta_count
};

inline std::optional<R1Kink> find_r1(const Diagram& d) {
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& x = d.crossing(c);
    if (x.flat) continue;
    for (int s = 0; s < 4; ++s) {
      if (d.mate(half_edge(c, s)) == half_edge(c, s + 1)) {
        // the curl is split off by A exactly when (s, s+1) is an A pair
        const int sign = (s & 1) == x.over ? 1 : -1;
        return R1Kink{c, s, sign};
      }
    }
  }
  return std::nullopt;
}

inline std::optional<R2Pair> find_r2(const Diagram& d) {
  for (int h = 0; h < d.half_edge_count(); ++h) {
    const int m1 = d.mate(h);
    const int h2 = ccw_next(m1);
    const int m2 = d.mate(h2);
    if (ccw_next(m2) != h) continue;  // not a bigon face
    const int c1 = crossing_of(h), c2 = crossing_of(m1);
    if (c1 == c2 || crossing_of(m2) != c1) continue;
    if (d.crossing(c1).flat || d.crossing(c2).flat) continue;
    if (!d.is_over(h) || !d.is_over(m1)) continue;
    return R2Pair{c1, c2, h};
  }
  return std::nullopt;
}

/// Highest-priority crossing-reducing move, if any.
inline std::optional<Reduction> detect_reduction(const Diagram& d,
                                                 const ReductionPriority& priority = kDefaultPriority) {
  for (auto kind : priority) {
    switch (kind) {
      case ReductionKind::FreeLoop:
        if (d.free_loops() >= 1 && (d.crossing_count() > 0 || d.free_loops() >= 2)) return FreeLoop{};
        break;
      case ReductionKind::DisjointSplit: {
        auto ps = d.pieces();
        if (ps.size() >= 2) return DisjointSplit{ps.front()};
        break;
      }
      case ReductionKind::R1Kink:
        if (auto k = find_r1(d)) return *k;
        break;
      case ReductionKind::R2Pair:
        if (auto r = find_r2(d)) return *r;
        break;
    }
  }
  return std::nullopt;
}

struct Reduced {
  Diagram diagram;
  std::optional<Diagram> split_off;  // second factor of a DisjointSplit
  Bookkeeping bookkeeping;
};

inline Reduced apply_reduction(const Diagram& d, const Reduction& move) {
  auto stale = [] { return DiagramError("stale reduction move"); };
  return std::visit(
      [&](const auto& mv) -> Reduced {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, FreeLoop>) {
          if (d.free_loops() < 1) throw stale();
          return {with_free_loops(d, d.free_loops() - 1), std::nullopt, {0, 1}};
        } else if constexpr (std::is_same_v<T, DisjointSplit>) {
          std::vector<char> in_first(static_cast<std::size_t>(d.crossing_count()), 0);
          for (int c : mv.first_piece) {
            if (c < 0 || c >= d.crossing_count()) throw stale();
            in_first[c] = 1;
          }
          std::vector<int> rest;
          for (int c = 0; c < d.crossing_count(); ++c) {
            if (!in_first[c]) rest.push_back(c);
          }
          if (rest.empty() && d.free_loops() == 0) throw stale();
          Diagram first = restrict_to(d, mv.first_piece, 0);
          Diagram second = restrict_to(d, rest, d.free_loops());
          return {std::move(first), std::move(second), {0, 1}};
        } else if constexpr (std::is_same_v<T, R1Kink>) {
          const int c = mv.crossing, s = mv.loop_slot;
          if (c >= d.crossing_count() || d.mate(half_edge(c, s)) != half_edge(c, s + 1)) throw stale();
          // pair the curl's two slots and the two strand ends, then drop the curl circle
          const bool even = (s & 1) == 0;  // pairs (0,1),(2,3) or (1,2),(3,0)
          Diagram out = splice(d, {c}, [even](int h) {
            const int sl = slot_of(h);
            const int partner = ((sl & 1) == 0) == even ? sl + 1 : sl + 3;
            return half_edge(crossing_of(h), partner);
          });
          return {with_free_loops(out, out.free_loops() - 1), std::nullopt, {mv.sign, 0}};
        } else {
          const int h = mv.dart;
          if (h >= d.half_edge_count() || crossing_of(h) != mv.c1 || crossing_of(d.mate(h)) != mv.c2) {
            throw stale();
          }
          Diagram out = splice(d, {mv.c1, mv.c2}, [](int x) { return opposite(x); });
          return {std::move(out), std::nullopt, {0, 0}};
        }
      },
      move);
}

}  // namespace skeinlab::diagram
