#pragma once

// Text formats:
//   pd    : X[i,j,k,l] per crossing, labels counterclockwise from the incoming
//           under-strand; F[i,j,k,l] for a flat double point (read as X for its
//           "+" resolution); a bare O is a crossingless circle. Optional PD[...] wrapper.
//   gauss : one component per line (or ';'-separated): tokens O<n><+|-> / U<n><+|->.
//   braid : s<i> or s<i>^-1 tokens, closed up.

#include "skeinlab/diagram/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

namespace skeinlab::diagram {

enum class Format { Pd, Gauss, Braid };

inline Format parse_format(std::string_view name) {
  if (name == "pd") return Format::Pd;
  if (name == "gauss") return Format::Gauss;
  if (name == "braid") return Format::Braid;
  throw DiagramError("unknown format '" + std::string(name) + "'");
}

struct ParseError : DiagramError {
  ParseError(std::size_t pos, const std::string& what)
      : DiagramError("parse error at offset " + std::to_string(pos) + ": " + what), position(pos) {}
  std::size_t position;
};

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space(bool newlines = true) {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (ch == ' ' || ch == '\t' || ch == '\r' || ch == ',' || (newlines && ch == '\n')) {
        ++pos_;
      } else {
        break;
      }
    }
  }
  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t pos() const { return pos_; }
  char take() { return text_[pos_++]; }

  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  long long integer() {
    std::size_t start = pos_;
    bool neg = false;
    if (peek() == '-' || peek() == '+') neg = take() == '-';
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer", start);
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (take() - '0');
      if (v > 1'000'000'000) fail("integer too large", start);
    }
    return neg ? -v : v;
  }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(at, what); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline void inline_space(Cursor& cur) {
  while (!cur.done() && (cur.peek() == ' ' || cur.peek() == '\t')) cur.take();
}

}  // namespace detail

inline Diagram parse_pd(std::string_view text) {
  detail::Cursor cur(text);
  std::vector<Crossing> crossings;
  std::vector<long long> labels;
  std::vector<std::size_t> label_pos;
  int loops = 0;
  bool wrapped = false;
  cur.skip_space();
  if (text.substr(cur.pos()).starts_with("PD[")) {
    cur.take();
    cur.take();
    cur.take();
    wrapped = true;
  }
  while (true) {
    cur.skip_space();
    if (cur.done()) break;
    if (wrapped && cur.peek() == ']') {
      cur.take();
      cur.skip_space();
      if (!cur.done()) cur.fail("trailing input after PD[...]");
      wrapped = false;
      break;
    }
    const std::size_t start = cur.pos();
    char kind = cur.take();
    if (kind == 'O') {
      ++loops;
      continue;
    }
    if (kind != 'X' && kind != 'F') cur.fail("expected X[...], F[...] or O", start);
    cur.expect('[');
    for (int s = 0; s < 4; ++s) {
      cur.skip_space();
      label_pos.push_back(cur.pos());
      labels.push_back(cur.integer());
      cur.skip_space();
    }
    cur.expect(']');
    crossings.push_back(Crossing{1, kind == 'F'});
  }
  if (wrapped) cur.fail("unterminated PD[");

  std::map<long long, std::vector<int>> where;
  for (std::size_t k = 0; k < labels.size(); ++k) where[labels[k]].push_back(static_cast<int>(k));
  std::vector<int> mate(labels.size(), -1);
  for (const auto& [label, hs] : where) {
    if (hs.size() != 2) {
      throw ParseError(label_pos[hs.front()], "edge label " + std::to_string(label) + " appears " +
                                                  std::to_string(hs.size()) + " time(s); expected 2");
    }
    mate[hs[0]] = hs[1];
    mate[hs[1]] = hs[0];
  }
  return Diagram(std::move(crossings), std::move(mate), loops);
}

inline Diagram parse_gauss(std::string_view text) {
  struct Pass {
    int in = -1, out = -1;
  };
  struct Seen {
    bool over = false, under = false;
    int sign = 0;
    std::size_t pos = 0;
  };
  detail::Cursor cur(text);
  std::vector<std::vector<std::pair<long long, bool>>> comps;  // (crossing id, over?)
  std::map<long long, Seen> seen;
  std::vector<std::pair<long long, bool>> current;
  auto flush = [&] {
    if (!current.empty()) comps.push_back(std::move(current));
    current.clear();
  };
  while (true) {
    detail::inline_space(cur);
    if (cur.done()) break;
    char ch = cur.peek();
    if (ch == '\n' || ch == ';') {
      cur.take();
      flush();
      continue;
    }
    if (ch == '#' || ch == ',' || ch == '\r') {
      cur.skip_space(false);
      continue;
    }
    const std::size_t start = cur.pos();
    char ou = cur.take();
    if (ou != 'O' && ou != 'U') cur.fail("expected O<n><sign> or U<n><sign>", start);
    long long id = cur.integer();
    char sg = cur.done() ? '\0' : cur.take();
    if (sg != '+' && sg != '-') cur.fail("expected crossing sign '+' or '-'");
    const int sign = sg == '+' ? 1 : -1;
    auto& s = seen[id];
    if (s.sign != 0 && s.sign != sign) cur.fail("inconsistent sign for crossing " + std::to_string(id), start);
    s.sign = sign;
    s.pos = start;
    bool& flag = ou == 'O' ? s.over : s.under;
    if (flag) cur.fail("crossing " + std::to_string(id) + " visited twice as the same strand", start);
    flag = true;
    current.emplace_back(id, ou == 'O');
  }
  flush();
  std::map<long long, int> index;
  std::vector<Crossing> crossings;
  for (const auto& [id, s] : seen) {
    if (!s.over || !s.under) throw ParseError(s.pos, "crossing " + std::to_string(id) + " needs one O and one U visit");
    index[id] = static_cast<int>(crossings.size());
    crossings.push_back(Crossing{1, false});
  }
  // under strand 0 -> 2; over strand 1 -> 3 when positive, 3 -> 1 when negative
  std::vector<int> mate(4 * crossings.size(), -1);
  for (const auto& comp : comps) {
    std::vector<Pass> passes;
    for (const auto& [id, over] : comp) {
      const int c = index[id];
      const int sign = seen[id].sign;
      if (over) {
        passes.push_back(sign > 0 ? Pass{half_edge(c, 1), half_edge(c, 3)} : Pass{half_edge(c, 3), half_edge(c, 1)});
      } else {
        passes.push_back({half_edge(c, 0), half_edge(c, 2)});
      }
    }
    for (std::size_t k = 0; k < passes.size(); ++k) {
      const int a = passes[k].out, b = passes[(k + 1) % passes.size()].in;
      mate[a] = b;
      mate[b] = a;
    }
  }
  try {
    return Diagram(std::move(crossings), std::move(mate), 0);
  } catch (const DiagramError& e) {
    throw ParseError(0, std::string("Gauss code has no planar realization: ") + e.what());
  }
}

inline Diagram parse_braid(std::string_view text) {
  detail::Cursor cur(text);
  std::vector<std::pair<int, int>> gens;  // (position, sign)
  while (true) {
    cur.skip_space();
    if (cur.done()) break;
    const std::size_t start = cur.pos();
    if (cur.take() != 's') cur.fail("expected generator s<i>", start);
    long long i = cur.integer();
    if (i < 1) cur.fail("generator index must be >= 1", start);
    int sign = 1;
    if (cur.peek() == '^') {
      cur.take();
      long long e = cur.integer();
      if (e != 1 && e != -1) cur.fail("exponent must be 1 or -1", start);
      sign = static_cast<int>(e);
    }
    gens.emplace_back(static_cast<int>(i) - 1, sign);
  }
  if (gens.empty()) cur.fail("empty braid word");
  int strands = 0;
  for (auto [p, s] : gens) strands = std::max(strands, p + 2);
  std::vector<Crossing> crossings;
  std::vector<int> mate(4 * gens.size(), -1);
  std::vector<int> first(static_cast<std::size_t>(strands), -1), dangling(static_cast<std::size_t>(strands), -1);
  auto attach = [&](int pos, int h) {
    if (dangling[pos] < 0) {
      first[pos] = h;
    } else {
      mate[dangling[pos]] = h;
      mate[h] = dangling[pos];
    }
  };
  // slots: 0 bottom-left, 1 bottom-right, 2 top-right, 3 top-left
  for (auto [p, sign] : gens) {
    const int c = static_cast<int>(crossings.size());
    crossings.push_back(Crossing{static_cast<std::uint8_t>(sign > 0 ? 1 : 0), false});
    attach(p, half_edge(c, 0));
    attach(p + 1, half_edge(c, 1));
    dangling[p] = half_edge(c, 3);
    dangling[p + 1] = half_edge(c, 2);
  }
  int loops = 0;
  for (int pos = 0; pos < strands; ++pos) {
    if (first[pos] < 0) {
      ++loops;
      continue;
    }
    mate[dangling[pos]] = first[pos];
    mate[first[pos]] = dangling[pos];
  }
  return Diagram(std::move(crossings), std::move(mate), loops);
}

inline Diagram parse_diagram(std::string_view text, Format format) {
  switch (format) {
    case Format::Pd:
      return parse_pd(text);
    case Format::Gauss:
      return parse_gauss(text);
    case Format::Braid:
      return parse_braid(text);
  }
  throw DiagramError("unknown format");
}

/// PD text, one entry per line; labels run consecutively along each component.
/// Reparsing the output and writing it again reproduces it exactly.
inline std::string to_pd(const Diagram& d) {
  const int nh = d.half_edge_count();
  const auto comps = d.components();
  const auto comp_of = d.component_index();
  // orientation per component: +1 keeps components() direction, -1 reverses it
  std::vector<int> dir(comps.size(), 0);
  std::vector<char> entry_fwd(static_cast<std::size_t>(nh), 0);
  for (const auto& comp : comps) {
    for (int e : comp.entries) entry_fwd[e] = 1;
  }
  auto is_entry = [&](int h) { return (entry_fwd[h] != 0) == (dir[comp_of[h]] > 0); };
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int low_under = half_edge(c, d.crossing(c).over ? 0 : 1);
    int& k = dir[comp_of[low_under]];
    if (k == 0) k = entry_fwd[low_under] ? 1 : -1;
  }
  std::vector<int> start(static_cast<std::size_t>(d.crossing_count()));
  for (int c = 0; c < d.crossing_count(); ++c) {
    const int under = half_edge(c, d.crossing(c).over + 1);
    start[c] = is_entry(under) ? slot_of(under) : slot_of(under) + 2;
  }
  auto wpos = [&](int h) { return 4 * crossing_of(h) + ((slot_of(h) - start[crossing_of(h)]) & 3); };
  std::vector<int> first(comps.size(), nh);
  for (int h = 0; h < nh; ++h) first[comp_of[h]] = std::min(first[comp_of[h]], wpos(h));
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (dir[k] != 0) continue;
    int best = -1;
    for (int e : comps[k].entries) {
      for (int h : {e, opposite(e)}) {
        if (best < 0 || wpos(h) < wpos(best)) best = h;
      }
    }
    dir[k] = entry_fwd[best] ? 1 : -1;
  }
  std::vector<std::size_t> order(comps.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return first[x] < first[y]; });

  std::vector<int> label(static_cast<std::size_t>(nh), 0);
  int next = 1;
  for (std::size_t k : order) {
    int h0 = -1;
    for (int e : comps[k].entries) {
      const int in = dir[k] > 0 ? e : opposite(e);
      if (h0 < 0 || wpos(in) < wpos(h0)) h0 = in;
    }
    int e = h0;
    do {
      label[e] = next;
      label[d.mate(e)] = next;
      ++next;
      e = d.mate(opposite(e));
    } while (e != h0);
  }
  std::ostringstream out;
  for (int c = 0; c < d.crossing_count(); ++c) {
    out << (d.crossing(c).flat ? 'F' : 'X') << '[';
    for (int i = 0; i < 4; ++i) out << label[half_edge(c, start[c] + i)] << (i < 3 ? "," : "]\n");
  }
  for (int k = 0; k < d.free_loops(); ++k) out << "O\n";
  return out.str();
}

}  // namespace skeinlab::diagram
