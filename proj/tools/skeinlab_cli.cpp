// skeinlab: evaluate framed skein invariants, series coefficients and brackets of
// link diagrams; run the verification suites; generate the diagram corpus.
//
// Exit codes: 0 success, 1 verification failure, 2 parse or usage error,
// 3 node budget exceeded, 4 file or directory error.

#include "skeinlab/corpus/generate.hpp"
#include "skeinlab/diagram/parse.hpp"
#include "skeinlab/diagram/perturb.hpp"
#include "skeinlab/oracle/bracket.hpp"
#include "skeinlab/ring/constants.hpp"
#include "skeinlab/ring/serialize.hpp"
#include "skeinlab/singular/calculus.hpp"
#include "skeinlab/skein/audit.hpp"
#include "skeinlab/skein/evaluator.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

namespace {

using namespace skeinlab;
using nlohmann::ordered_json;

enum Exit { kOk = 0, kFailed = 1, kParse = 2, kBudget = 3, kIo = 4 };

struct RunConfig {
  std::string input;
  std::string text;
  std::string format = "pd";
  std::string ring = "laurent";
  int n = 0;
  int order = 8;
  std::string normalization = "unit";
  std::uint64_t seed = 42;
  std::optional<std::uint64_t> node_budget;
  std::string output = "text";
  std::string suite;
  std::string corpus_dir;
  std::string out_dir = "corpus";
  int max_crossings = 8;
  bool randomized = false;
  bool timing = true;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t budget(const RunConfig& cfg) {
  return skein::node_budget_from_env(cfg.node_budget.value_or(skein::kDefaultNodeBudget));
}

skein::EvalOptions eval_options(const RunConfig& cfg) {
  skein::EvalOptions opt;
  opt.node_budget = budget(cfg);
  if (cfg.randomized) opt.random_seed = cfg.seed;
  return opt;
}

diagram::Diagram read_input(const RunConfig& cfg) {
  std::string text = cfg.text;
  if (!cfg.input.empty()) {
    std::ifstream in(cfg.input);
    if (!in) throw IoError("cannot read " + cfg.input);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  if (cfg.input.empty() && cfg.text.empty()) throw IoError("no input: pass --in FILE or --text TEXT");
  return diagram::parse_diagram(text, diagram::parse_format(cfg.format));
}

void emit(const RunConfig& cfg, const ordered_json& j, const std::string& text) {
  if (cfg.output == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

ordered_json complexity_json(const diagram::Diagram& d, const RunConfig& cfg) {
  auto c = skein::complexity_bound(d, eval_options(cfg));
  return {{"u_bound", c.u_bound}, {"c", c.c}};
}

int cmd_eval(const RunConfig& cfg) {
  const auto d = read_input(cfg);
  const auto norm = skein::parse_normalization(cfg.normalization);
  ordered_json j{{"command", "eval"}, {"crossings", d.crossing_count()}, {"components", d.component_count()}};
  std::string text;
  if (cfg.ring == "laurent") {
    const auto v = skein::evaluate(d, skein::laurent_params(norm), eval_options(cfg));
    j["ring"] = "laurent";
    j["value"] = ring::to_json(v);
    j["text"] = v.str();
    text = v.str() + "\n";
  } else if (cfg.ring == "series") {
    const auto v = skein::evaluate(d, skein::series_params(cfg.n, cfg.order, norm), eval_options(cfg));
    j["ring"] = "series";
    j["n"] = cfg.n;
    j["value"] = ring::to_json(v);
    j["order"] = cfg.order;
    j["text"] = v.truncated_str();
    text = v.truncated_str() + "\n";
  } else {
    throw CLI::ValidationError("--ring", "expected laurent or series");
  }
  j["normalization"] = cfg.normalization;
  j["complexity"] = complexity_json(d, cfg);
  emit(cfg, j, text);
  return kOk;
}

int cmd_series(const RunConfig& cfg) {
  const auto d = read_input(cfg);
  const auto norm = skein::parse_normalization(cfg.normalization);
  const auto v = skein::evaluate(d, skein::series_params(cfg.n, cfg.order, norm), eval_options(cfg));
  ordered_json j{{"command", "series"}, {"n", cfg.n}, {"order", cfg.order}, {"value", ring::to_json(v)}};
  ordered_json coeffs = ordered_json::array();
  std::string text;
  for (int m = 0; m <= cfg.order; ++m) {
    const std::string label = "v_" + std::to_string(cfg.n) + "^" + std::to_string(m);
    const std::string c = v[m].pretty();
    coeffs.push_back({{"label", label}, {"m", m}, {"coeff", v[m].str()}});
    text += label + " = " + c + "\n";
  }
  j["coefficients"] = coeffs;
  emit(cfg, j, text);
  return kOk;
}

int cmd_bracket(const RunConfig& cfg) {
  const auto d = read_input(cfg);
  const auto b = oracle::bracket_statesum(d);
  ordered_json terms = ordered_json::array();
  for (const auto& [deg, c] : b.terms()) terms.push_back({{"deg_A", deg}, {"coeff", c.get_str()}});
  emit(cfg, {{"command", "bracket"}, {"terms", terms}, {"text", b.str()}}, b.str() + "\n");
  return kOk;
}

// ---- verification suites ----

struct Case {
  std::string id;
  bool pass;
  std::string detail;
  long long ms;
};

using CaseFn = std::function<std::pair<bool, std::string>()>;

Case run_case(const std::string& id, const CaseFn& fn, bool timing) {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    std::tie(pass, detail) = fn();
  } catch (const skein::BudgetExceeded& e) {
    detail = e.what();
  } catch (const std::exception& e) {
    detail = std::string("error: ") + e.what();
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  return {id, pass, detail, timing ? static_cast<long long>(ms) : 0};
}

std::vector<corpus::CorpusItem> load(const RunConfig& cfg) {
  std::filesystem::path dir = cfg.corpus_dir;
  if (dir.empty()) {
#ifdef SKEINLAB_CORPUS_DIR
    dir = SKEINLAB_CORPUS_DIR;
#else
    dir = "corpus";
#endif
  }
  if (!std::filesystem::is_directory(dir)) throw IoError("corpus directory not found: " + dir.string());
  try {
    return corpus::load_corpus(dir);
  } catch (const corpus::CorpusError& e) {
    throw IoError(e.what());
  }
}

std::vector<Case> suite_cases(const RunConfig& cfg) {
  std::vector<Case> cases;
  const auto opt = eval_options(cfg);
  if (cfg.suite == "conventions") {
    const auto norm = skein::parse_normalization(cfg.normalization);
    auto report = [](const auto& r) {
      std::string detail;
      for (const auto& f : r.failures) detail += (detail.empty() ? "" : "; ") + f;
      if (r.pass) detail = std::to_string(r.checks.size()) + " checks passed";
      return std::pair{r.pass, detail};
    };
    cases.push_back(run_case("laurent/" + cfg.normalization,
                             [&] { return report(skein::convention_audit(skein::laurent_params(norm))); },
                             cfg.timing));
    if (norm != skein::Normalization::Prop42) {
      for (int n : {0, 1, 2}) {
        cases.push_back(run_case("series/n=" + std::to_string(n) + "/" + cfg.normalization,
                                 [&] { return report(skein::convention_audit(skein::series_params(n, cfg.order, norm))); },
                                 cfg.timing));
      }
    }
    return cases;
  }

  const auto items = load(cfg);
  std::mt19937_64 rng(cfg.seed);
  for (const auto& item : items) {
    const auto& d = item.diagram;
    const bool flat = d.flat_count() > 0;
    if (cfg.suite == "invariance") {
      if (flat) continue;
      std::vector<diagram::Diagram> moved;
      for (int k = 0; k < 3; ++k) {
        diagram::Diagram p = d;
        if (p.crossing_count() > 0) p = diagram::random_perturbation(p, rng);
        moved.push_back(p);
      }
      cases.push_back(run_case(item.id, [&] {
        const auto v = skein::evaluate_laurent(d, opt);
        const auto s = skein::evaluate_series(d, cfg.n, cfg.order, opt);
        for (const auto& p : moved) {
          if (!(skein::evaluate_laurent(p, opt) == v)) return std::pair{false, std::string("laurent value changed")};
          if (!(skein::evaluate_series(p, cfg.n, cfg.order, opt) == s)) {
            return std::pair{false, std::string("series value changed")};
          }
        }
        return std::pair{true, std::string("3 perturbations agree")};
      }, cfg.timing));
    } else if (cfg.suite == "oracle") {
      if (flat) continue;
      cases.push_back(run_case(item.id, [&] {
        const auto b = oracle::bracket_statesum(d);
        const bool ok = oracle::specialization_matches(skein::evaluate_laurent(d, opt), b);
        return std::pair{ok, "bracket " + b.str()};
      }, cfg.timing));
    } else if (cfg.suite == "finite-type") {
      if (!flat) continue;
      cases.push_back(run_case(item.id, [&] {
        const int k = d.flat_count();
        const int m = std::min(cfg.order, k - 1);
        const bool ok = singular::finite_type_vanishing(cfg.n, m, d, opt);
        return std::pair{ok, "k=" + std::to_string(k) + ", vanishes through x^" + std::to_string(m)};
      }, cfg.timing));
    } else if (cfg.suite == "cross-ring") {
      if (flat) continue;
      cases.push_back(run_case(item.id, [&] {
        const auto v = skein::evaluate_laurent(d, opt);
        for (int n : {0, 1, 2}) {
          if (!(ring::substitute_t(v, n, cfg.order) == skein::evaluate_series(d, n, cfg.order, opt))) {
            return std::pair{false, "mismatch at n=" + std::to_string(n)};
          }
        }
        return std::pair{true, std::string("n = 0, 1, 2 agree")};
      }, cfg.timing));
    } else {
      throw CLI::ValidationError("--suite", "unknown suite '" + cfg.suite + "'");
    }
  }
  return cases;
}

int cmd_verify(const RunConfig& cfg) {
  const auto cases = suite_cases(cfg);
  bool all = true;
  ordered_json jc = ordered_json::array();
  std::string text;
  for (const auto& c : cases) {
    all = all && c.pass;
    jc.push_back({{"id", c.id}, {"pass", c.pass}, {"detail", c.detail}, {"ms", c.ms}});
    text += std::string(c.pass ? "PASS " : "FAIL ") + c.id + "  " + c.detail + "\n";
  }
  text += std::string(all ? "suite " : "suite ") + cfg.suite + ": " + (all ? "pass" : "FAIL") + " (" +
          std::to_string(cases.size()) + " cases)\n";
  emit(cfg, {{"suite", cfg.suite}, {"cases", jc}, {"pass", all}}, text);
  return all ? kOk : kFailed;
}

int cmd_corpus(const RunConfig& cfg) {
  const auto items = corpus::generate_corpus(cfg.seed, cfg.max_crossings);
  try {
    corpus::write_corpus(items, cfg.out_dir, cfg.seed, cfg.max_crossings);
  } catch (const corpus::CorpusError& e) {
    throw IoError(e.what());
  }
  emit(cfg, {{"command", "corpus"}, {"dir", cfg.out_dir}, {"count", items.size()}},
       "wrote " + std::to_string(items.size()) + " diagrams to " + cfg.out_dir + "\n");
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skeinlab: framed skein invariants of link diagrams"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto input_opts = [&cfg](CLI::App* sub) {
    sub->add_option("--in", cfg.input, "diagram file");
    sub->add_option("--text", cfg.text, "diagram given inline");
    sub->add_option("--format", cfg.format, "pd | gauss | braid")->check(CLI::IsMember({"pd", "gauss", "braid"}));
  };
  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "series index n");
    sub->add_option("--order", cfg.order, "series truncation order")->check(CLI::NonNegativeNumber);
    sub->add_option("--normalization", cfg.normalization, "unit | delta | prop42")
        ->check(CLI::IsMember({"unit", "delta", "prop42"}));
    sub->add_option("--seed", cfg.seed, "seed for randomized choices");
    sub->add_option("--node-budget", cfg.node_budget, "skein tree node limit (SKEIN_NODE_BUDGET overrides)");
    sub->add_option("--output", cfg.output, "text | json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--randomized", cfg.randomized, "random crossing choice and reduction order (uses --seed)");
  };

  auto* eval = app.add_subcommand("eval", "evaluate the invariant of a diagram");
  input_opts(eval);
  common(eval);
  eval->add_option("--ring", cfg.ring, "laurent | series")->check(CLI::IsMember({"laurent", "series"}));
  auto* series = app.add_subcommand("series", "print v_n^0 .. v_n^order");
  input_opts(series);
  common(series);
  auto* bracket = app.add_subcommand("bracket", "Kauffman bracket by state sum");
  input_opts(bracket);
  bracket->add_option("--output", cfg.output, "text | json")->check(CLI::IsMember({"text", "json"}));
  auto* verify = app.add_subcommand("verify", "run a verification suite over the corpus");
  common(verify);
  verify->add_option("--suite", cfg.suite, "invariance | oracle | finite-type | conventions | cross-ring")
      ->required()
      ->check(CLI::IsMember({"invariance", "oracle", "finite-type", "conventions", "cross-ring"}));
  verify->add_option("--corpus", cfg.corpus_dir, "corpus directory");
  verify->add_flag("!--no-timing", cfg.timing, "report ms = 0 for byte-stable output");
  auto* gen = app.add_subcommand("corpus", "generate the diagram corpus");
  gen->add_option("--out", cfg.out_dir, "output directory");
  gen->add_option("--seed", cfg.seed, "generator seed");
  gen->add_option("--max-crossings", cfg.max_crossings, "crossing limit")->check(CLI::PositiveNumber);
  gen->add_option("--output", cfg.output, "text | json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  const std::string stage = app.get_subcommands().front()->get_name();
  try {
    if (eval->parsed()) return cmd_eval(cfg);
    if (series->parsed()) return cmd_series(cfg);
    if (bracket->parsed()) return cmd_bracket(cfg);
    if (verify->parsed()) return cmd_verify(cfg);
    return cmd_corpus(cfg);
  } catch (const diagram::ParseError& e) {
    std::cerr << stage << ": " << e.what() << "\n";
    return kParse;
  } catch (const diagram::DiagramError& e) {
    std::cerr << stage << ": invalid diagram: " << e.what() << "\n";
    return kParse;
  } catch (const CLI::ValidationError& e) {
    std::cerr << stage << ": " << e.what() << "\n";
    return kParse;
  } catch (const skein::BudgetExceeded& e) {
    std::cerr << stage << ": evaluation: " << e.what() << "\n";
    return kBudget;
  } catch (const IoError& e) {
    std::cerr << stage << ": io: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << stage << ": " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << stage << ": evaluation: " << e.what() << "\n";
    return kFailed;
  }
}
