#pragma once

// Combinatorial link diagrams on S^2 with blackboard framing.
//
// A crossing owns four half-edge slots numbered 0..3 counterclockwise; half-edge
// h lives at crossing h/4, slot h%4. Arcs are a perfect matching `mate` on
// half-edges. A strand passes straight through a crossing from slot s to slot
// s+2. The over-strand of crossing c occupies slots (over, over+2), over in {0,1}.
// A flat crossing is a double point; its `over` field records which pair is over
// in the "+" resolution.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace skeinlab::diagram {

struct DiagramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Crossing {
  std::uint8_t over = 0;
  bool flat = false;
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

constexpr int crossing_of(int h) { return h >> 2; }
constexpr int slot_of(int h) { return h & 3; }
constexpr int half_edge(int c, int s) { return 4 * c + (s & 3); }
constexpr int opposite(int h) { return half_edge(crossing_of(h), slot_of(h) + 2); }
constexpr int ccw_next(int h) { return half_edge(crossing_of(h), slot_of(h) + 1); }

enum class Smoothing { A, B };

/// A closed strand through crossings; `entries` are the half-edges through which
/// the strand enters successive crossings, starting at the component's least half-edge.
struct Component {
  std::vector<int> entries;
  int least_half_edge() const { return entries.front(); }
};

class Diagram {
 public:
  Diagram() = default;
  Diagram(std::vector<Crossing> crossings, std::vector<int> mate, int free_loops)
      : crossings_(std::move(crossings)), mate_(std::move(mate)), free_loops_(free_loops) {
    validate();
  }

  static Diagram unlink(int loops) { return Diagram({}, {}, loops); }

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int half_edge_count() const { return static_cast<int>(mate_.size()); }
  const Crossing& crossing(int c) const { return crossings_.at(static_cast<std::size_t>(c)); }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  int mate(int h) const { return mate_.at(static_cast<std::size_t>(h)); }
  const std::vector<int>& mates() const { return mate_; }
  int free_loops() const { return free_loops_; }

  int flat_count() const {
    return static_cast<int>(std::count_if(crossings_.begin(), crossings_.end(),
                                          [](const Crossing& x) { return x.flat; }));
  }
  std::vector<int> flat_crossings() const {
    std::vector<int> out;
    for (int c = 0; c < crossing_count(); ++c) {
      if (crossings_[c].flat) out.push_back(c);
    }
    return out;
  }
  bool is_framed() const { return flat_count() == 0; }

  bool is_over(int h) const { return (slot_of(h) & 1) == crossing(crossing_of(h)).over; }

  /// Crossing components ordered by least half-edge (free loops are not listed).
  std::vector<Component> components() const {
    std::vector<Component> out;
    std::vector<char> seen(mate_.size(), 0);
    for (int h = 0; h < half_edge_count(); ++h) {
      if (seen[h]) continue;
      Component comp;
      int e = h;
      do {
        comp.entries.push_back(e);
        seen[e] = 1;
        seen[opposite(e)] = 1;
        e = mate(opposite(e));
      } while (e != h);
      out.push_back(std::move(comp));
    }
    return out;
  }

  /// Component index per half-edge, matching the order of components().
  std::vector<int> component_index() const {
    std::vector<int> idx(mate_.size(), -1);
    int k = 0;
    for (const auto& comp : components()) {
      for (int e : comp.entries) idx[e] = idx[opposite(e)] = k;
      ++k;
    }
    return idx;
  }

  /// Link components including free loops.
  int component_count() const { return static_cast<int>(components().size()) + free_loops_; }

  /// Faces as cycles of darts; dart h runs from h to mate(h) with the face on its right.
  std::vector<std::vector<int>> faces() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(mate_.size(), 0);
    for (int h = 0; h < half_edge_count(); ++h) {
      if (seen[h]) continue;
      std::vector<int> face;
      int d = h;
      do {
        face.push_back(d);
        seen[d] = 1;
        d = face_next(d);
      } while (d != h);
      out.push_back(std::move(face));
    }
    return out;
  }

  int face_next(int dart) const { return ccw_next(mate(dart)); }

  /// Connected pieces of the crossing graph, each a sorted list of crossings,
  /// ordered by least crossing.
  std::vector<std::vector<int>> pieces() const {
    const int n = crossing_count();
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int c = 0; c < n; ++c) {
      if (label[c] >= 0) continue;
      const int id = static_cast<int>(out.size());
      std::vector<int> piece{c}, stack{c};
      label[c] = id;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int s = 0; s < 4; ++s) {
          int y = crossing_of(mate(half_edge(x, s)));
          if (label[y] < 0) {
            label[y] = id;
            piece.push_back(y);
            stack.push_back(y);
          }
        }
      }
      std::sort(piece.begin(), piece.end());
      out.push_back(std::move(piece));
    }
    return out;
  }

  /// Sign of a non-flat crossing when the strand entering through over_in is
  /// the over-strand and the one entering through under_in the under-strand.
  /// +1 exactly for the crossing type whose A-smoothing splits a kink loop off.
  static int crossing_sign(int over_in, int under_in) {
    return slot_of(over_in) == ((slot_of(under_in) + 1) & 3) ? 1 : -1;
  }

  /// Blackboard framing of one crossing component: signed count of its self-crossings.
  int self_writhe(int component) const {
    auto comps = components();
    if (component < 0) throw DiagramError("unknown component " + std::to_string(component));
    if (component >= static_cast<int>(comps.size())) {
      if (component < static_cast<int>(comps.size()) + free_loops_) return 0;
      throw DiagramError("unknown component " + std::to_string(component));
    }
    std::vector<int> entry_of_crossing_over(crossings_.size(), -1), entry_of_crossing_under(crossings_.size(), -1);
    for (int e : comps[component].entries) {
      int c = crossing_of(e);
      if (is_over(e)) {
        entry_of_crossing_over[c] = e;
      } else {
        entry_of_crossing_under[c] = e;
      }
    }
    int w = 0;
    for (int c = 0; c < crossing_count(); ++c) {
      if (crossings_[c].flat) continue;
      if (entry_of_crossing_over[c] >= 0 && entry_of_crossing_under[c] >= 0) {
        w += crossing_sign(entry_of_crossing_over[c], entry_of_crossing_under[c]);
      }
    }
    return w;
  }

  /// Self-writhe of every component (crossing components, then free loops).
  std::vector<int> framing() const {
    std::vector<int> out;
    for (int k = 0; k < component_count(); ++k) out.push_back(self_writhe(k));
    return out;
  }

  void validate() const {
    if (free_loops_ < 0) throw DiagramError("negative free loop count");
    if (mate_.size() != 4 * crossings_.size()) throw DiagramError("odd half-edge count");
    for (int h = 0; h < half_edge_count(); ++h) {
      int m = mate_[h];
      if (m < 0 || m >= half_edge_count() || m == h || mate_[m] != h) {
        throw DiagramError("arcs do not form a perfect matching");
      }
    }
    for (const auto& x : crossings_) {
      if (x.over > 1) throw DiagramError("bad over-strand flag");
    }
    if (!planar()) throw DiagramError("diagram is not planar (Euler characteristic check failed)");
  }

  /// V - E + F = 2 on every connected piece.
  bool planar() const {
    auto ps = pieces();
    std::vector<int> piece_of(crossings_.size(), -1);
    for (std::size_t k = 0; k < ps.size(); ++k) {
      for (int c : ps[k]) piece_of[c] = static_cast<int>(k);
    }
    std::vector<int> face_count(ps.size(), 0);
    for (const auto& f : faces()) ++face_count[piece_of[crossing_of(f.front())]];
    for (std::size_t k = 0; k < ps.size(); ++k) {
      const int v = static_cast<int>(ps[k].size());
      if (v - 2 * v + face_count[k] != 2) return false;
    }
    return true;
  }

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  std::vector<Crossing> crossings_;
  std::vector<int> mate_;
  int free_loops_ = 0;
};

/// Removes `removed` crossings and reconnects strands. `partner` maps each slot
/// (0..3) of a removed crossing to the slot it joins inside that crossing, or,
/// when partner_half_edge is used, any half-edge of the removed set. Closed
/// circles that no longer meet any crossing become free loops.
template <class Partner>
Diagram splice(const Diagram& d, const std::vector<int>& removed, Partner partner) {
  const int n = d.crossing_count();
  std::vector<char> gone(static_cast<std::size_t>(n), 0);
  for (int c : removed) gone.at(static_cast<std::size_t>(c)) = 1;
  auto in_set = [&](int h) { return gone[crossing_of(h)] != 0; };

  std::vector<int> new_index(static_cast<std::size_t>(n), -1);
  std::vector<Crossing> crossings;
  for (int c = 0; c < n; ++c) {
    if (!gone[c]) {
      new_index[c] = static_cast<int>(crossings.size());
      crossings.push_back(d.crossing(c));
    }
  }
  auto renum = [&](int h) { return half_edge(new_index[crossing_of(h)], slot_of(h)); };

  std::vector<int> mate(4 * crossings.size(), -1);
  for (int h = 0; h < d.half_edge_count(); ++h) {
    if (!in_set(h) && !in_set(d.mate(h))) mate[renum(h)] = renum(d.mate(h));
  }

  std::vector<char> visited(static_cast<std::size_t>(d.half_edge_count()), 0);
  for (int c : removed) {
    for (int s = 0; s < 4; ++s) {
      int start = half_edge(c, s);
      if (visited[start] || in_set(d.mate(start))) continue;
      visited[start] = 1;
      int t = partner(start);
      visited[t] = 1;
      while (in_set(d.mate(t))) {
        int m = d.mate(t);
        visited[m] = 1;
        t = partner(m);
        visited[t] = 1;
      }
      int x = renum(d.mate(start)), y = renum(d.mate(t));
      mate[x] = y;
      mate[y] = x;
    }
  }
  int loops = d.free_loops();
  for (int c : removed) {
    for (int s = 0; s < 4; ++s) {
      int start = half_edge(c, s);
      if (visited[start]) continue;
      int t = start;
      do {
        visited[t] = 1;
        int u = partner(t);
        visited[u] = 1;
        t = d.mate(u);
      } while (t != start);
      ++loops;
    }
  }
  return Diagram(std::move(crossings), std::move(mate), loops);
}

inline Diagram switch_crossing(const Diagram& d, int c) {
  if (c < 0 || c >= d.crossing_count()) throw DiagramError("no such crossing");
  if (d.crossing(c).flat) throw DiagramError("cannot switch a flat crossing");
  auto crossings = d.crossings();
  crossings[c].over ^= 1;
  return Diagram(std::move(crossings), d.mates(), d.free_loops());
}

/// Slots joined by a smoothing: with the over-strand on (o, o+2), A joins
/// (o, o+1),(o+2, o+3) and B joins (o, o+3),(o+1, o+2).
inline int smoothing_partner_slot(int over, Smoothing kind, int slot) {
  const bool from_over = (slot & 1) == over;
  if (kind == Smoothing::A) return from_over ? ((slot + 1) & 3) : ((slot + 3) & 3);
  return from_over ? ((slot + 3) & 3) : ((slot + 1) & 3);
}

inline Diagram smooth(const Diagram& d, int c, Smoothing kind) {
  if (c < 0 || c >= d.crossing_count()) throw DiagramError("no such crossing");
  const int over = d.crossing(c).over;
  return splice(d, {c}, [&](int h) {
    return half_edge(crossing_of(h), smoothing_partner_slot(over, kind, slot_of(h)));
  });
}

/// Assigns over/under at a flat crossing: '+' keeps the stored over pair, '-' takes the other.
inline Diagram resolve_flat(const Diagram& d, int c, int sign) {
  if (c < 0 || c >= d.crossing_count()) throw DiagramError("no such crossing");
  if (!d.crossing(c).flat) throw DiagramError("crossing " + std::to_string(c) + " is already resolved");
  auto crossings = d.crossings();
  crossings[c].flat = false;
  if (sign < 0) crossings[c].over ^= 1;
  return Diagram(std::move(crossings), d.mates(), d.free_loops());
}

inline Diagram make_flat(const Diagram& d, int c) {
  auto crossings = d.crossings();
  crossings.at(static_cast<std::size_t>(c)).flat = true;
  return Diagram(std::move(crossings), d.mates(), d.free_loops());
}

inline Diagram with_free_loops(const Diagram& d, int loops) {
  return Diagram(d.crossings(), d.mates(), loops);
}

inline Diagram disjoint_union(const Diagram& x, const Diagram& y) {
  auto crossings = x.crossings();
  crossings.insert(crossings.end(), y.crossings().begin(), y.crossings().end());
  auto mate = x.mates();
  const int shift = x.half_edge_count();
  for (int m : y.mates()) mate.push_back(m + shift);
  return Diagram(std::move(crossings), std::move(mate), x.free_loops() + y.free_loops());
}

/// Sub-diagram on a set of crossings closed under arcs (a union of pieces).
inline Diagram restrict_to(const Diagram& d, const std::vector<int>& keep, int free_loops) {
  std::vector<int> index(static_cast<std::size_t>(d.crossing_count()), -1);
  std::vector<Crossing> crossings;
  for (int c : keep) {
    index[c] = static_cast<int>(crossings.size());
    crossings.push_back(d.crossing(c));
  }
  std::vector<int> mate(4 * crossings.size());
  for (int c : keep) {
    for (int s = 0; s < 4; ++s) {
      int m = d.mate(half_edge(c, s));
      if (index[crossing_of(m)] < 0) throw DiagramError("crossing set is not closed under arcs");
      mate[half_edge(index[c], s)] = half_edge(index[crossing_of(m)], slot_of(m));
    }
  }
  return Diagram(std::move(crossings), std::move(mate), free_loops);
}

/// Inserts a one-crossing curl on the arc leaving half-edge h. sign=+1 gives the
/// curl whose A-smoothing splits off a circle. On a crossingless diagram (h=-1)
/// one free loop is replaced by a curled loop.
inline Diagram add_kink(const Diagram& d, int h, int sign) {
  auto crossings = d.crossings();
  auto mate = d.mates();
  const int k = d.crossing_count();
  crossings.push_back(Crossing{static_cast<std::uint8_t>(sign > 0 ? 0 : 1), false});
  mate.resize(mate.size() + 4);
  // loop on slots (0,1); strand runs 2 -> 0 -> loop -> 1 -> 3
  mate[half_edge(k, 0)] = half_edge(k, 1);
  mate[half_edge(k, 1)] = half_edge(k, 0);
  int loops = d.free_loops();
  if (h < 0) {
    if (loops < 1) throw DiagramError("no free loop to curl");
    --loops;
    mate[half_edge(k, 2)] = half_edge(k, 3);
    mate[half_edge(k, 3)] = half_edge(k, 2);
  } else {
    int m = d.mate(h);
    mate[h] = half_edge(k, 2);
    mate[half_edge(k, 2)] = h;
    mate[m] = half_edge(k, 3);
    mate[half_edge(k, 3)] = m;
  }
  return Diagram(std::move(crossings), std::move(mate), loops);
}

/// Connected sum along the arcs at half-edges hx of x and hy of y.
inline Diagram connected_sum(const Diagram& x, int hx, const Diagram& y, int hy) {
  Diagram u = disjoint_union(x, y);
  auto mate = u.mates();
  const int p1 = hx, q1 = x.mate(hx);
  const int shift = x.half_edge_count();
  const int p2 = hy + shift, q2 = y.mate(hy) + shift;
  mate[p1] = q2;
  mate[q2] = p1;
  mate[q1] = p2;
  mate[p2] = q1;
  return Diagram(u.crossings(), std::move(mate), u.free_loops());
}

}  // namespace skeinlab::diagram
