#pragma once

// Deterministic diagram corpus: torus closures, kink sums, random braid closures
// and flat-point variants, written as PD files plus a JSON manifest.

#include "skeinlab/diagram/diagram.hpp"
#include "skeinlab/diagram/parse.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace skeinlab::corpus {

using diagram::Diagram;

struct CorpusItem {
  std::string id;
  std::string family;  // torus | kinks | braid | link | flat
  std::string source;  // braid word or construction note
  Diagram diagram;
};

struct CorpusError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// std distributions are implementation-defined; the corpus bytes must not be.
inline int below(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

inline std::string power_word(int k) {
  std::string w;
  const int m = k < 0 ? -k : k;
  for (int j = 0; j < m; ++j) w += (j ? " " : "") + std::string(k < 0 ? "s1^-1" : "s1");
  return w;
}

inline Diagram kink_chain(const std::vector<int>& signs) {
  Diagram d = Diagram::unlink(1);
  for (std::size_t j = 0; j < signs.size(); ++j) {
    d = diagram::add_kink(d, j == 0 ? -1 : diagram::half_edge(static_cast<int>(j) - 1, 3), signs[j]);
  }
  return d;
}

inline std::string sign_text(const std::vector<int>& signs) {
  std::string s;
  for (int v : signs) s += v > 0 ? '+' : '-';
  return s;
}

}  // namespace detail

/// Diagrams with at most `max_crossings` crossings; identical output for identical arguments.
inline std::vector<CorpusItem> generate_corpus(std::uint64_t seed = 42, int max_crossings = 8) {
  std::vector<CorpusItem> out;
  std::set<std::string> seen;
  auto push = [&](std::string id, std::string family, std::string source, Diagram d) {
    if (d.crossing_count() > max_crossings) return;
    if (!seen.insert(id).second) throw CorpusError("duplicate corpus id " + id);
    out.push_back({std::move(id), std::move(family), std::move(source), std::move(d)});
  };

  push("unknot", "link", "O", Diagram::unlink(1));
  push("unlink2", "link", "O O", Diagram::unlink(2));
  push("unlink3", "link", "O O O", Diagram::unlink(3));

  for (int k = 1; k <= 6; ++k) {
    for (int sign : {1, -1}) {
      const std::string w = detail::power_word(sign * k);
      push("torus2_" + std::string(sign > 0 ? "p" : "m") + std::to_string(k), "torus", w, diagram::parse_braid(w));
    }
  }

  for (int len = 1; len <= 4; ++len) {
    for (int mask = 0; mask < (1 << len); ++mask) {
      // one representative per multiset of signs keeps the family small
      std::vector<int> signs;
      for (int j = 0; j < len; ++j) signs.push_back((mask >> j & 1) ? -1 : 1);
      if (!std::is_sorted(signs.rbegin(), signs.rend())) continue;
      push("kinks_" + detail::sign_text(signs), "kinks", detail::sign_text(signs), detail::kink_chain(signs));
    }
  }
  const Diagram trefoil = diagram::parse_braid("s1 s1 s1");
  push("trefoil_kink_p", "kinks", "s1 s1 s1 + kink", diagram::add_kink(trefoil, 0, 1));
  push("trefoil_kink_m", "kinks", "s1 s1 s1 - kink", diagram::add_kink(trefoil, 0, -1));
  push("trefoil_sum_trefoil", "kinks", "s1 s1 s1 # s1 s1 s1", diagram::connected_sum(trefoil, 0, trefoil, 0));
  push("figure8", "braid", "s1 s2^-1 s1 s2^-1", diagram::parse_braid("s1 s2^-1 s1 s2^-1"));
  push("hopf_plus_loop", "link", "s1 s1 O", diagram::with_free_loops(diagram::parse_braid("s1 s1"), 1));

  std::mt19937_64 rng(seed);
  int made = 0;
  for (int attempt = 0; made < 40 && attempt < 4000; ++attempt) {
    const int strands = 2 + detail::below(rng, 3);
    const int len = 2 + detail::below(rng, std::max(1, max_crossings - 1));
    std::string w;
    for (int j = 0; j < len; ++j) {
      const int g = 1 + detail::below(rng, strands - 1);
      w += (j ? " " : "") + std::string("s") + std::to_string(g) + (detail::below(rng, 2) ? "^-1" : "");
    }
    Diagram d = diagram::parse_braid(w);
    if (d.crossing_count() > max_crossings) continue;
    std::ostringstream id;
    id << "braid_" << strands << "_" << (made < 10 ? "0" : "") << made;
    push(id.str(), "braid", w, std::move(d));
    ++made;
  }

  // flat-point variants with k = 1..4 flat crossings
  std::vector<const CorpusItem*> bases;
  for (const auto& item : out) {
    if (item.diagram.crossing_count() >= 2 && item.family != "kinks") bases.push_back(&item);
  }
  std::vector<CorpusItem> flats;
  for (int k = 1; k <= 4; ++k) {
    int made_k = 0;
    for (int attempt = 0; made_k < 6 && attempt < 200; ++attempt) {
      const CorpusItem& base = *bases[static_cast<std::size_t>(detail::below(rng, static_cast<int>(bases.size())))];
      const int n = base.diagram.crossing_count();
      if (n < k) continue;
      std::vector<int> pick(static_cast<std::size_t>(n));
      for (int c = 0; c < n; ++c) pick[c] = c;
      for (int j = n - 1; j > 0; --j) std::swap(pick[j], pick[detail::below(rng, j + 1)]);
      pick.resize(static_cast<std::size_t>(k));
      std::sort(pick.begin(), pick.end());
      Diagram d = base.diagram;
      std::string note = base.id + " flat at";
      for (int c : pick) {
        d = diagram::make_flat(d, c);
        note += " " + std::to_string(c);
      }
      flats.push_back({"flat" + std::to_string(k) + "_" + std::to_string(made_k), "flat", note, std::move(d)});
      ++made_k;
    }
  }
  Diagram fk = diagram::make_flat(detail::kink_chain({1}), 0);
  flats.push_back({"flat1_kink", "flat", "flat kink point on the unknot", fk});
  for (auto& f : flats) push(f.id, f.family, f.source, std::move(f.diagram));
  return out;
}

/// Writes <dir>/<id>.pd for each item and <dir>/manifest.json.
inline void write_corpus(const std::vector<CorpusItem>& items, const std::filesystem::path& dir, std::uint64_t seed,
                         int max_crossings) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw CorpusError("cannot create " + dir.string() + ": " + ec.message());
  nlohmann::ordered_json manifest;
  manifest["seed"] = seed;
  manifest["max_crossings"] = max_crossings;
  manifest["diagrams"] = nlohmann::ordered_json::array();
  for (const auto& item : items) {
    const std::string file = item.id + ".pd";
    std::ofstream f(dir / file, std::ios::binary);
    f << diagram::to_pd(item.diagram);
    if (!f) throw CorpusError("cannot write " + (dir / file).string());
    manifest["diagrams"].push_back({{"id", item.id},
                                    {"file", file},
                                    {"family", item.family},
                                    {"source", item.source},
                                    {"crossings", item.diagram.crossing_count()},
                                    {"flat", item.diagram.flat_count()},
                                    {"components", item.diagram.component_count()}});
  }
  std::ofstream m(dir / "manifest.json", std::ios::binary);
  m << manifest.dump(2) << "\n";
  if (!m) throw CorpusError("cannot write manifest in " + dir.string());
}

/// Reads a corpus written by write_corpus, in manifest order.
inline std::vector<CorpusItem> load_corpus(const std::filesystem::path& dir) {
  std::ifstream m(dir / "manifest.json");
  if (!m) throw CorpusError("corpus manifest not found in " + dir.string());
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(m);
  } catch (const nlohmann::json::exception& e) {
    throw CorpusError(std::string("bad corpus manifest: ") + e.what());
  }
  std::vector<CorpusItem> out;
  for (const auto& entry : manifest.at("diagrams")) {
    const auto path = dir / entry.at("file").get<std::string>();
    std::ifstream f(path);
    if (!f) throw CorpusError("missing corpus file " + path.string());
    std::stringstream ss;
    ss << f.rdbuf();
    out.push_back({entry.at("id").get<std::string>(), entry.at("family").get<std::string>(),
                   entry.value("source", std::string()), diagram::parse_pd(ss.str())});
  }
  return out;
}

}  // namespace skeinlab::corpus
