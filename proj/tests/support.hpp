#pragma once

#include "skeinlab/diagram/diagram.hpp"
#include "skeinlab/diagram/parse.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

namespace testing_support {

using skeinlab::diagram::Diagram;

inline const char* kTrefoil = "X[1,5,2,4]\nX[3,1,4,6]\nX[5,3,6,2]\n";
inline const char* kPositiveKink = "X[1,2,2,1]";
inline const char* kNegativeKink = "X[1,1,2,2]";

inline Diagram pd(const std::string& text) { return skeinlab::diagram::parse_pd(text); }
inline Diagram braid(const std::string& text) { return skeinlab::diagram::parse_braid(text); }
inline Diagram trefoil() { return pd(kTrefoil); }
inline Diagram hopf() { return braid("s1 s1"); }
inline Diagram unknot() { return Diagram::unlink(1); }

/// Same diagram with crossings permuted and slot numbering rotated per crossing.
template <class Rng>
Diagram relabel(const Diagram& d, Rng& rng) {
  using namespace skeinlab::diagram;
  const int n = d.crossing_count();
  std::vector<int> perm(static_cast<std::size_t>(n)), rot(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& r : rot) r = std::uniform_int_distribution<int>(0, 3)(rng);
  std::vector<Crossing> crossings(static_cast<std::size_t>(n));
  std::vector<int> mate(static_cast<std::size_t>(4 * n));
  auto map = [&](int h) { return half_edge(perm[crossing_of(h)], slot_of(h) + rot[crossing_of(h)]); };
  for (int c = 0; c < n; ++c) {
    Crossing x = d.crossing(c);
    x.over = static_cast<std::uint8_t>((x.over + rot[c]) & 1);
    crossings[perm[c]] = x;
    for (int s = 0; s < 4; ++s) mate[map(half_edge(c, s))] = map(d.mate(half_edge(c, s)));
  }
  return Diagram(std::move(crossings), std::move(mate), d.free_loops());
}

struct CorpusEntry {
  std::string id;
  Diagram diagram;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace testing_support
