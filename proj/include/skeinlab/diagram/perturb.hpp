#pragma once

// Crossing-creating regular isotopy moves, used to perturb diagrams in tests and
// corpus checks: R2 (push one arc over another across a face) and R3 (slide a
// strand across a non-alternating triangle).

#include "skeinlab/diagram/canonical.hpp"
#include "skeinlab/diagram/diagram.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <random>

namespace skeinlab::diagram {

/// Pushes the arc of dart `over_dart` across the arc of dart `under_dart`, both
/// bounding the same face, creating a bigon whose two crossings have the first
/// arc on top.
inline Diagram add_r2(const Diagram& d, int over_dart, int under_dart) {
  const int p1 = over_dart, q1 = d.mate(over_dart);
  const int p2 = under_dart, q2 = d.mate(under_dart);
  if (p2 == p1 || p2 == q1) throw DiagramError("R2 needs two distinct arcs");
  bool shared = false;
  for (int h = d.face_next(p1); h != p1; h = d.face_next(h)) shared |= h == p2;
  if (!shared) throw DiagramError("R2 darts do not bound a common face");

  auto crossings = d.crossings();
  auto mate = d.mates();
  const int x = d.crossing_count(), y = x + 1;
  crossings.push_back(Crossing{1, false});
  crossings.push_back(Crossing{1, false});
  mate.resize(mate.size() + 8);
  auto link = [&](int a, int b) {
    mate[a] = b;
    mate[b] = a;
  };
  // slots as compass points E=0 N=1 W=2 S=3 at both new crossings
  link(p1, half_edge(x, 1));
  link(half_edge(x, 3), half_edge(y, 3));
  link(half_edge(y, 1), q1);
  link(p2, half_edge(y, 0));
  link(half_edge(y, 2), half_edge(x, 0));
  link(half_edge(x, 2), q2);
  return Diagram(std::move(crossings), std::move(mate), d.free_loops());
}

/// A triangle face on which an R3 move applies.
struct R3Triangle {
  std::array<int, 3> darts;  // consecutive darts of the face
};

namespace detail {

inline bool r3_shape(const Diagram& d, const std::vector<int>& face) {
  if (face.size() != 3) return false;
  std::array<int, 3> cs{};
  for (int k = 0; k < 3; ++k) {
    cs[k] = crossing_of(face[k]);
    if (d.crossing(cs[k]).flat) return false;
  }
  if (cs[0] == cs[1] || cs[1] == cs[2] || cs[0] == cs[2]) return false;
  // alternating triangles have every edge over at one end and under at the other
  for (int h : face) {
    if (d.is_over(h) == d.is_over(d.mate(h))) return true;
  }
  return false;
}

struct Point {
  double x, y;
};

// Three pairwise crossing chords; chord k joins boundary points k and k+3 (placed
// counterclockwise on the unit circle). `shift` picks one of the two triangle
// arrangements. Returns the new crossings and the slot of each boundary end.
inline Diagram build_r3(const Diagram& d, const std::array<int, 3>& removed, const std::array<int, 6>& boundary,
                        const std::array<std::array<int, 3>, 3>& over_of, double shift) {
  const double pi = std::acos(-1.0);
  std::array<Point, 6> b{};
  for (int k = 0; k < 6; ++k) b[k] = {std::cos(pi * k / 3), std::sin(pi * k / 3)};
  // chord 0 is moved off the common center; chords 1 and 2 pass through it
  const Point off{0.0, shift};
  auto start = [&](int k) { return k == 0 ? Point{b[0].x + off.x, b[0].y + off.y} : b[k]; };
  auto end = [&](int k) { return k == 0 ? Point{b[3].x + off.x, b[3].y + off.y} : b[k + 3]; };
  auto intersect = [&](int i, int j, double& ti) {
    Point p = start(i), r{end(i).x - p.x, end(i).y - p.y};
    Point q = start(j), s{end(j).x - q.x, end(j).y - q.y};
    double den = r.x * s.y - r.y * s.x;
    ti = ((q.x - p.x) * s.y - (q.y - p.y) * s.x) / den;
    return Point{p.x + ti * r.x, p.y + ti * r.y};
  };
  // crossing index for the pair {i,j}: 0 for {0,1}, 1 for {1,2}, 2 for {0,2}
  auto pair_index = [](int i, int j) { return (i + j == 1) ? 0 : (i + j == 3 ? 1 : 2); };
  std::array<Point, 3> pos{};
  std::array<std::vector<std::pair<double, int>>, 3> along;  // chord -> (param, crossing)
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      double t = 0;
      Point p = intersect(i, j, t);
      pos[pair_index(i, j)] = p;
      along[i].emplace_back(t, pair_index(i, j));
    }
    std::sort(along[i].begin(), along[i].end());
  }

  const int base = d.crossing_count() - 3;
  std::vector<int> new_index(static_cast<std::size_t>(d.crossing_count()), -1);
  std::vector<Crossing> crossings;
  for (int c = 0; c < d.crossing_count(); ++c) {
    if (c != removed[0] && c != removed[1] && c != removed[2]) {
      new_index[c] = static_cast<int>(crossings.size());
      crossings.push_back(d.crossing(c));
    }
  }
  crossings.resize(static_cast<std::size_t>(base + 3));

  // slot of each direction at each new crossing, by angle
  struct Dir {
    double angle;
    int chord;
    bool forward;
  };
  std::array<std::array<int, 3>, 3> slot_fwd{}, slot_back{};  // [crossing][chord]
  for (int x = 0; x < 3; ++x) {
    std::vector<Dir> dirs;
    for (int i = 0; i < 3; ++i) {
      auto& seq = along[i];
      for (std::size_t k = 0; k < seq.size(); ++k) {
        if (seq[k].second != x) continue;
        Point prev = k == 0 ? start(i) : pos[seq[k - 1].second];
        Point next = k + 1 == seq.size() ? end(i) : pos[seq[k + 1].second];
        dirs.push_back({std::atan2(prev.y - pos[x].y, prev.x - pos[x].x), i, false});
        dirs.push_back({std::atan2(next.y - pos[x].y, next.x - pos[x].x), i, true});
      }
    }
    std::sort(dirs.begin(), dirs.end(), [](const Dir& a, const Dir& b) { return a.angle < b.angle; });
    int over_chord = -1;
    for (int s = 0; s < 4; ++s) {
      (dirs[s].forward ? slot_fwd : slot_back)[x][dirs[s].chord] = s;
    }
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i != j && pair_index(i, j) == x) over_chord = over_of[i][j] ? i : j;
      }
    }
    crossings[base + x] = Crossing{static_cast<std::uint8_t>(slot_fwd[x][over_chord] & 1), false};
  }

  std::vector<int> mate(4 * crossings.size(), -1);
  auto renum = [&](int h) { return half_edge(new_index[crossing_of(h)], slot_of(h)); };
  for (int h = 0; h < d.half_edge_count(); ++h) {
    if (new_index[crossing_of(h)] >= 0 && new_index[crossing_of(d.mate(h))] >= 0) mate[renum(h)] = renum(d.mate(h));
  }
  std::array<int, 6> end_slot{};
  for (int i = 0; i < 3; ++i) {
    const auto& seq = along[i];
    end_slot[i] = half_edge(base + seq.front().second, slot_back[seq.front().second][i]);
    end_slot[i + 3] = half_edge(base + seq.back().second, slot_fwd[seq.back().second][i]);
    for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
      const int a = half_edge(base + seq[k].second, slot_fwd[seq[k].second][i]);
      const int c = half_edge(base + seq[k + 1].second, slot_back[seq[k + 1].second][i]);
      mate[a] = c;
      mate[c] = a;
    }
  }
  for (int k = 0; k < 6; ++k) {
    const int outside = d.mate(boundary[k]);
    int target = -1;
    for (int j = 0; j < 6; ++j) {
      if (boundary[j] == outside) target = end_slot[j];
    }
    if (target < 0) target = renum(outside);
    mate[end_slot[k]] = target;
    mate[target] = end_slot[k];
  }
  return Diagram(std::move(crossings), std::move(mate), d.free_loops());
}

}  // namespace detail

inline std::vector<R3Triangle> find_r3(const Diagram& d) {
  std::vector<R3Triangle> out;
  for (const auto& f : d.faces()) {
    if (detail::r3_shape(d, f)) out.push_back({{f[0], f[1], f[2]}});
  }
  return out;
}

inline Diagram apply_r3(const Diagram& d, const R3Triangle& tri) {
  std::vector<int> face(tri.darts.begin(), tri.darts.end());
  if (!detail::r3_shape(d, face)) throw DiagramError("not an R3 triangle");
  // c[k] receives dart k-1 at slot m[k]; its outward slots m+2, m+3 lie on the
  // boundary of a disc around the triangle
  std::array<int, 3> c{}, m{};
  for (int k = 0; k < 3; ++k) {
    const int arrive = d.mate(tri.darts[(k + 2) % 3]);
    c[k] = crossing_of(arrive);
    m[k] = slot_of(arrive);
  }
  auto chord_of_end = [&](const std::array<int, 6>& bnd, int h) {
    for (int k = 0; k < 6; ++k) {
      if (bnd[k] == h) return k % 3;
    }
    return -1;
  };
  const Diagram moved_first = [&] {
    // try both boundary orientations; the arrangement reproducing d is the
    // current one and the other is the result
    const auto code = canonical_code(d);
    for (int orient = 0; orient < 2; ++orient) {
      std::array<int, 6> bnd{};
      int idx = 0;
      for (int k : {1, 0, 2}) {
        std::array<int, 2> ends{half_edge(c[k], m[k] + 2), half_edge(c[k], m[k] + 3)};
        if (orient == 1) std::swap(ends[0], ends[1]);
        bnd[idx++] = ends[0];
        bnd[idx++] = ends[1];
      }
      if (orient == 1) std::reverse(bnd.begin(), bnd.end());
      // every strand through the triangle must join antipodal boundary points
      bool antipodal = true;
      for (int k = 0; k < 3; ++k) {
        int h = opposite(bnd[k]);
        h = opposite(d.mate(h));
        if (h != bnd[k + 3]) antipodal = false;
      }
      if (!antipodal) continue;
      std::array<std::array<int, 3>, 3> over_of{};
      for (int k = 0; k < 3; ++k) {
        for (int s = 0; s < 4; ++s) {
          const int h = half_edge(c[k], s);
          if (!d.is_over(h)) continue;
          // chord passing through slot s: find its boundary end
          int e = h;
          while (chord_of_end(bnd, e) < 0) e = opposite(d.mate(e));
          const int over_chord = chord_of_end(bnd, e);
          int f = half_edge(c[k], s + 1);
          while (chord_of_end(bnd, f) < 0) f = opposite(d.mate(f));
          const int under_chord = chord_of_end(bnd, f);
          over_of[over_chord][under_chord] = 1;
          over_of[under_chord][over_chord] = 0;
        }
      }
      std::array<int, 3> removed{c[0], c[1], c[2]};
      std::optional<Diagram> up, down;
      try {
        up = detail::build_r3(d, removed, bnd, over_of, 0.2);
        down = detail::build_r3(d, removed, bnd, over_of, -0.2);
      } catch (const DiagramError&) {
        continue;
      }
      if (canonical_code(*up) == code) return *down;
      if (canonical_code(*down) == code) return *up;
    }
    throw DiagramError("R3 rebuild failed to reproduce the input triangle");
  }();
  return moved_first;
}

/// One random crossing-creating move: R3 when available and chosen, else R2.
template <class Rng>
Diagram random_perturbation(const Diagram& d, Rng& rng) {
  if (d.crossing_count() == 0) return d;
  auto tris = find_r3(d);
  if (!tris.empty() && std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
    return apply_r3(d, tris[std::uniform_int_distribution<std::size_t>(0, tris.size() - 1)(rng)]);
  }
  auto faces = d.faces();
  std::vector<std::pair<int, int>> choices;
  for (const auto& f : faces) {
    for (int a : f) {
      for (int b : f) {
        if (a != b && b != d.mate(a)) choices.emplace_back(a, b);
      }
    }
  }
  if (choices.empty()) return d;
  auto [a, b] = choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
  return add_r2(d, a, b);
}

}  // namespace skeinlab::diagram
