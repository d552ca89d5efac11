#pragma once

#include "skeinlab/diagram/diagram.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace skeinlab::diagram {

/// Relabeling-invariant byte code of a diagram; the memoization key.
struct DiagramCode {
  std::string bytes;
  friend bool operator==(const DiagramCode&, const DiagramCode&) = default;
  friend auto operator<=>(const DiagramCode&, const DiagramCode&) = default;
};

struct DiagramCodeHash {
  std::size_t operator()(const DiagramCode& c) const { return std::hash<std::string>{}(c.bytes); }
};

namespace detail {

struct Rooting {
  std::vector<int> order;  // crossings in discovery order
  std::vector<int> base;   // slot of each crossing that becomes local slot 0
  std::vector<int> code;
};

// Breadth-first walk of one connected piece from a root half-edge, using the
// counterclockwise rotation at each crossing. The emitted sequence determines the
// rooted map with its crossing data, so its minimum over roots is canonical.
inline Rooting root_at(const Diagram& d, int root, const std::vector<int>& best, bool& worse) {
  Rooting r;
  const int n = d.crossing_count();
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  r.base.assign(static_cast<std::size_t>(n), 0);
  label[crossing_of(root)] = 0;
  r.base[crossing_of(root)] = slot_of(root);
  r.order.push_back(crossing_of(root));
  worse = false;
  bool tie = !best.empty();
  auto emit = [&](int v) {
    if (tie) {
      const std::size_t pos = r.code.size();
      if (v > best[pos]) {
        worse = true;
      } else if (v < best[pos]) {
        tie = false;
      }
    }
    r.code.push_back(v);
  };
  for (std::size_t idx = 0; idx < r.order.size() && !worse; ++idx) {
    const int c = r.order[idx];
    const auto& x = d.crossing(c);
    emit((x.flat ? 2 : 0) + ((x.over ^ (r.base[c] & 1)) & 1));
    for (int i = 0; i < 4 && !worse; ++i) {
      const int m = d.mate(half_edge(c, r.base[c] + i));
      const int c2 = crossing_of(m);
      if (label[c2] < 0) {
        label[c2] = static_cast<int>(r.order.size());
        r.base[c2] = slot_of(m);
        r.order.push_back(c2);
      }
      emit(label[c2]);
      emit((slot_of(m) - r.base[c2]) & 3);
    }
  }
  return r;
}

inline void append_int(std::string& out, int v) {
  // variable-length, order-preserving for the small values used here
  if (v < 0xF0) {
    out.push_back(static_cast<char>(v));
  } else {
    out.push_back(static_cast<char>(0xF0 + (v >> 16)));
    out.push_back(static_cast<char>((v >> 8) & 0xFF));
    out.push_back(static_cast<char>(v & 0xFF));
  }
}

}  // namespace detail

struct CanonicalForm {
  DiagramCode code;
  Diagram diagram;  // relabeled representative: pieces in code order, crossings in walk order
};

inline CanonicalForm canonical_form(const Diagram& d) {
  struct Piece {
    std::string bytes;
    detail::Rooting rooting;
  };
  std::vector<Piece> pieces;
  for (const auto& piece : d.pieces()) {
    detail::Rooting best;
    for (int c : piece) {
      for (int s = 0; s < 4; ++s) {
        bool worse = false;
        auto r = detail::root_at(d, half_edge(c, s), best.code, worse);
        if (!worse && (best.code.empty() || r.code < best.code)) best = std::move(r);
      }
    }
    std::string bytes;
    detail::append_int(bytes, static_cast<int>(best.order.size()));
    for (int v : best.code) detail::append_int(bytes, v);
    pieces.push_back({std::move(bytes), std::move(best)});
  }
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const Piece& a, const Piece& b) { return a.bytes < b.bytes; });

  DiagramCode code;
  std::vector<int> new_label(static_cast<std::size_t>(d.crossing_count()), -1);
  std::vector<int> base(static_cast<std::size_t>(d.crossing_count()), 0);
  int next = 0;
  for (const auto& p : pieces) {
    code.bytes += 'P';
    code.bytes += p.bytes;
    for (int c : p.rooting.order) {
      new_label[c] = next++;
      base[c] = p.rooting.base[c];
    }
  }
  code.bytes += 'L';
  detail::append_int(code.bytes, d.free_loops());

  std::vector<Crossing> crossings(static_cast<std::size_t>(d.crossing_count()));
  std::vector<int> mate(static_cast<std::size_t>(d.half_edge_count()));
  for (int c = 0; c < d.crossing_count(); ++c) {
    Crossing x = d.crossing(c);
    x.over = static_cast<std::uint8_t>((x.over ^ (base[c] & 1)) & 1);
    crossings[new_label[c]] = x;
    for (int s = 0; s < 4; ++s) {
      const int h = half_edge(c, s);
      const int m = d.mate(h);
      mate[half_edge(new_label[c], s - base[c])] =
          half_edge(new_label[crossing_of(m)], slot_of(m) - base[crossing_of(m)]);
    }
  }
  return {std::move(code), Diagram(std::move(crossings), std::move(mate), d.free_loops())};
}

inline DiagramCode canonical_code(const Diagram& d) { return canonical_form(d).code; }

}  // namespace skeinlab::diagram
