#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "symgame/acceptance.hpp"
#include "symgame/ef_solver.hpp"
#include "symgame/fo/formula.hpp"
#include "symgame/game.hpp"
#include "symgame/serialize.hpp"
#include "symgame/solver.hpp"
#include "symgame/strategies/breaker_cycle.hpp"
#include "symgame/strategies/breaker_path.hpp"
#include "symgame/strategies/catalog.hpp"

using nlohmann::json;
using namespace symgame;

namespace {

json load_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--config", "cannot read " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw CLI::ValidationError("--config", path + " is not a flat JSON object");
  return j;
}

// flags given on the command line win; otherwise the config value is used
template <typename T>
void cfg(const CLI::App* cmd, const json& j, const std::string& key, T& var) {
  const CLI::Option* opt = cmd->get_option_no_throw("--" + key);
  if (opt && opt->count() > 0) return;
  if (j.contains(key)) var = j.at(key).get<T>();
}

std::string fmt4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

Variant parse_variant(const std::string& s) {
  if (s == "sym") return Variant::sym;
  if (s == "sym+" || s == "sym_plus") return Variant::sym_plus;
  throw CLI::ValidationError("--variant", "expected sym or sym+");
}

int run_solve(const std::string& graph_spec, const std::string& variant_s,
              const std::string& order_s, const std::string& reduction_s,
              bool as_json) {
  Graph g = parse_graph_spec(graph_spec);
  Variant variant = parse_variant(variant_s);
  Reduction red = reduction_s == "off" ? Reduction::none : Reduction::automorphism;
  json out;
  out["graph"] = json::parse(graph_to_json(g));
  out["variant"] = variant_name(variant);
  out["reduction"] = red == Reduction::none ? "off" : "auto";
  std::optional<int> maxmin, minmax;
  if (order_s == "maxmin" || order_s == "both")
    maxmin = solve_sym(g, variant, SolveOrder::maxmin, red).value.rounds;
  if (order_s == "minmax" || (order_s == "both" && variant == Variant::sym))
    minmax = solve_sym(g, variant, SolveOrder::minmax, red).value.rounds;
  if (maxmin) out["maxmin"] = *maxmin;
  if (minmax) out["minmax"] = *minmax;
  out["value"] = maxmin ? *maxmin : *minmax;
  if (maxmin && minmax) out["orders_agree"] = (*maxmin == *minmax);
  if (as_json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "value = " << out["value"].get<int>();
    if (maxmin && minmax)
      std::cout << " (maxmin " << *maxmin << ", minmax " << *minmax << ")";
    std::cout << "\n";
  }
  return 0;
}

int run_play(const std::string& graph_spec, const std::string& a_name,
             const std::string& b_name, const std::string& variant_s,
             uint64_t seed, int limit, const std::string& transcript_path,
             const std::string& human, bool ledger, bool as_json) {
  Graph g = parse_graph_spec(graph_spec);
  Variant variant = parse_variant(variant_s);
  std::optional<int> round_limit;
  if (limit > 0) round_limit = limit;

  if (!human.empty()) {
    if (human != "A" && human != "B")
      throw CLI::ValidationError("--human", "expected A or B");
    Player human_side = human == "A" ? Player::A : Player::B;
    std::string machine_name = human_side == Player::A ? b_name : a_name;
    auto machine = make_strategy(machine_name, g,
                                 human_side == Player::A ? Player::B : Player::A,
                                 variant);
    Outcome out = interactive_play(g, human_side, *machine, variant, std::cin,
                                   std::cout, seed);
    std::cout << "winner " << player_name(out.winner) << " after "
              << out.survived_rounds << " rounds (" << reason_name(out.reason)
              << ")\n";
    return 0;
  }

  auto a = make_strategy(a_name, g, Player::A, variant);
  auto b = make_strategy(b_name, g, Player::B, variant);
  Transcript t;
  Outcome out = play_sym(g, *a, *b, variant, round_limit, seed, &t);
  if (!transcript_path.empty()) {
    std::ofstream f(transcript_path);
    f << transcript_to_json(t, 2) << "\n";
  }
  json rep;
  rep["a_strategy"] = a_name;
  rep["b_strategy"] = b_name;
  rep["variant"] = variant_name(variant);
  rep["seed"] = seed;
  rep["rounds"] = out.survived_rounds;
  rep["winner"] = player_name(out.winner);
  rep["reason"] = reason_name(out.reason);
  if (ledger) {
    if (auto* bp = dynamic_cast<BreakerPathStrategy*>(a.get()))
      rep["ledger"] = json::parse(bp->ledger().to_json());
    else if (auto* bc = dynamic_cast<BreakerCycleStrategy*>(a.get()))
      rep["ledger"] = json::parse(bc->ledger().to_json());
  }
  if (as_json)
    std::cout << rep.dump(2) << "\n";
  else
    std::cout << "winner " << player_name(out.winner) << " after "
              << out.survived_rounds << " rounds (" << reason_name(out.reason)
              << ")\n";
  return 0;
}

int run_ef(const std::string& g0_spec, const std::string& g1_spec, int limit,
           int budget, bool as_json) {
  Graph g0 = parse_graph_spec(g0_spec);
  Graph g1 = parse_graph_spec(g1_spec);
  std::optional<int> round_limit;
  if (limit > 0) round_limit = limit;
  EFSolveReport rep = solve_ef(g0, g1, round_limit, budget);
  if (as_json) {
    json out;
    out["g0"] = json::parse(graph_to_json(g0));
    out["g1"] = json::parse(graph_to_json(g1));
    out["value"] = rep.value.rounds;
    out["isomorphic"] = rep.isomorphic;
    out["states_expanded"] = rep.states_expanded;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "value = " << rep.value.rounds
              << (rep.isomorphic ? " (graphs isomorphic; limited by round cap)"
                                 : "")
              << "\n";
  }
  return 0;
}

struct BoundsRow {
  int n = 0;
  uint64_t seed = 0;
  int rounds = 0;
  long long elapsed_ms = 0;
};

int run_bounds(const std::string& family_s, bool odd, const std::string& range,
               int step, const std::string& a_name, const std::string& b_name,
               const std::string& variant_s, uint64_t seed,
               const std::string& out_path, int jobs) {
  if (family_s != "path" && family_s != "cycle")
    throw CLI::ValidationError("--family", "expected path or cycle");
  bool cycle = family_s == "cycle";
  Variant variant = parse_variant(variant_s);
  size_t dots = range.find("..");
  if (dots == std::string::npos)
    throw CLI::ValidationError("--n", "expected a range like 9..201");
  int lo = std::stoi(range.substr(0, dots));
  int hi = std::stoi(range.substr(dots + 2));
  if (step <= 0) step = odd ? 2 : 1;
  std::vector<BoundsRow> rows;
  for (int n = lo; n <= hi; n += step) {
    if (odd && n % 2 == 0) continue;
    rows.push_back({n, seed, 0, 0});
  }

  auto work = [&](BoundsRow& row) {
    Graph g = cycle ? make_cycle(row.n) : make_path(row.n);
    auto a = make_strategy(a_name, g, Player::A, variant);
    auto b = make_strategy(b_name, g, Player::B, variant);
    auto start = std::chrono::steady_clock::now();
    Outcome out = play_sym(g, *a, *b, variant, std::nullopt, row.seed);
    row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    row.rounds = out.survived_rounds;
  };

  if (jobs <= 0)
    jobs = static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(rows.size())));
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w)
    pool.emplace_back([&] {
      for (size_t i = next++; i < rows.size(); i = next++) work(rows[i]);
    });
  for (std::thread& th : pool) th.join();

  std::ostringstream csv;
  csv << "n,family,variant,a_strategy,b_strategy,seed,rounds,lower_bound,"
         "upper_bound,pass,elapsed_ms\n";
  for (const BoundsRow& row : rows) {
    double l = std::log2(row.n);
    double lower = cycle ? 0.5 * l - 0.5 : 0.5 * std::log2(row.n - 1) - 1;
    double upper = 3.5 * l * l + 40 * l;
    bool pass = row.rounds > lower && row.rounds < upper;
    csv << row.n << "," << family_s << "," << variant_name(variant) << ","
        << a_name << "," << b_name << "," << row.seed << "," << row.rounds
        << "," << fmt4(lower) << "," << fmt4(upper) << ","
        << (pass ? "true" : "false") << "," << row.elapsed_ms << "\n";
  }
  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream f(out_path);
    f << csv.str();
  }
  return 0;
}

int run_eval(const std::string& formula_text, const std::string& graph_spec) {
  Graph g = parse_graph_spec(graph_spec);
  fo::FormulaPtr f = fo::parse_formula(formula_text);
  std::cout << (fo::evaluate(f, g) ? "true" : "false") << "\n";
  return 0;
}

int run_verify() {
  std::string first_fail;
  run_acceptance([&](const CriterionResult& r) {
    std::printf("criterion %2d [%s] %s - %s (%.1fs)\n", r.index,
                r.pass ? "pass" : "FAIL", r.name.c_str(), r.detail.c_str(),
                r.elapsed_seconds);
    std::fflush(stdout);
    if (!r.pass && first_fail.empty()) first_fail = r.name;
  });
  if (!first_fail.empty()) {
    std::printf("suite failed, first failing criterion: %s\n",
                first_fail.c_str());
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry game toolkit: exact solving, strategy play, EF "
               "games, bound experiments"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "flat JSON config; explicit flags override its fields");

  // solve
  auto* solve = app.add_subcommand("solve", "exact game value of a graph");
  std::string s_graph, s_variant = "sym", s_order = "both", s_reduction = "auto";
  bool s_json = false;
  solve->add_option("--graph", s_graph, "graph spec (P5, C6, K4, K3,3, JSON)");
  solve->add_option("--variant", s_variant)->check(CLI::IsMember({"sym", "sym+"}));
  solve->add_option("--order", s_order)
      ->check(CLI::IsMember({"maxmin", "minmax", "both"}));
  solve->add_option("--reduction", s_reduction)
      ->check(CLI::IsMember({"auto", "off"}));
  solve->add_flag("--json", s_json, "emit a JSON report");

  // play
  auto* play = app.add_subcommand("play", "run one game between strategies");
  std::string p_graph, p_a = "random", p_b = "random", p_variant = "sym";
  std::string p_transcript, p_human;
  uint64_t p_seed = 0;
  int p_limit = 0;
  bool p_json = false, p_ledger = false;
  play->add_option("--graph", p_graph, "graph spec");
  play->add_option("--a", p_a, "first-player strategy name");
  play->add_option("--b", p_b, "second-player strategy name");
  play->add_option("--variant", p_variant)->check(CLI::IsMember({"sym", "sym+"}));
  play->add_option("--seed", p_seed);
  play->add_option("--limit", p_limit, "round limit (0 = none)");
  play->add_option("--transcript", p_transcript, "write the transcript JSON here");
  play->add_option("--human", p_human, "play interactively as this side (A or B)");
  play->add_flag("--ledger", p_ledger, "include the breaker series ledger");
  play->add_flag("--json", p_json);

  // ef
  auto* ef = app.add_subcommand("ef", "exact Ehrenfeucht-Fraisse value");
  std::string e_g0, e_g1;
  int e_limit = 0, e_budget = 18;
  bool e_json = false;
  ef->add_option("--g0", e_g0, "first graph spec");
  ef->add_option("--g1", e_g1, "second graph spec");
  ef->add_option("--limit", e_limit, "round limit (0 = default)");
  ef->add_option("--budget", e_budget, "total vertex budget");
  ef->add_flag("--json", e_json);

  // bounds
  auto* bounds = app.add_subcommand(
      "bounds", "measured rounds vs the half-log lower and 3.5 log^2 upper "
                "bound, as CSV");
  std::string b_family = "path", b_range = "9..201", b_a = "breaker-path";
  std::string b_b = "translated", b_variant = "sym", b_out;
  bool b_odd = false;
  int b_step = 0, b_jobs = 0;
  uint64_t b_seed = 0;
  bounds->add_option("--family", b_family)->check(CLI::IsMember({"path", "cycle"}));
  bounds->add_flag("--odd", b_odd, "odd sizes only");
  bounds->add_option("--n", b_range, "size range, e.g. 9..201");
  bounds->add_option("--step", b_step, "size increment (default 2 with --odd)");
  bounds->add_option("--a", b_a);
  bounds->add_option("--b", b_b);
  bounds->add_option("--variant", b_variant)->check(CLI::IsMember({"sym", "sym+"}));
  bounds->add_option("--seed", b_seed);
  bounds->add_option("--out", b_out, "CSV output path (default stdout)");
  bounds->add_option("--jobs", b_jobs, "worker threads (default hardware)");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a prefix-form sentence on a graph");
  std::string v_formula, v_graph;
  eval->add_option("--formula", v_formula, "e.g. (exists x (exists y (E x y)))");
  eval->add_option("--graph", v_graph, "graph spec");

  // verify
  app.add_subcommand("verify", "run the acceptance suite");

  CLI11_PARSE(app, argc, argv);

  try {
    json conf = load_config(config_path);
    if (solve->parsed()) {
      cfg(solve, conf, "graph", s_graph);
      cfg(solve, conf, "variant", s_variant);
      cfg(solve, conf, "order", s_order);
      cfg(solve, conf, "reduction", s_reduction);
      if (s_graph.empty())
        throw CLI::ValidationError("--graph", "a graph spec is required");
      return run_solve(s_graph, s_variant, s_order, s_reduction, s_json);
    }
    if (play->parsed()) {
      cfg(play, conf, "graph", p_graph);
      cfg(play, conf, "a", p_a);
      cfg(play, conf, "b", p_b);
      cfg(play, conf, "variant", p_variant);
      cfg(play, conf, "seed", p_seed);
      cfg(play, conf, "limit", p_limit);
      cfg(play, conf, "transcript", p_transcript);
      if (p_graph.empty())
        throw CLI::ValidationError("--graph", "a graph spec is required");
      return run_play(p_graph, p_a, p_b, p_variant, p_seed, p_limit,
                      p_transcript, p_human, p_ledger, p_json);
    }
    if (ef->parsed()) {
      cfg(ef, conf, "g0", e_g0);
      cfg(ef, conf, "g1", e_g1);
      cfg(ef, conf, "limit", e_limit);
      cfg(ef, conf, "budget", e_budget);
      if (e_g0.empty() || e_g1.empty())
        throw CLI::ValidationError("--g0", "two graph specs are required");
      return run_ef(e_g0, e_g1, e_limit, e_budget, e_json);
    }
    if (bounds->parsed()) {
      cfg(bounds, conf, "family", b_family);
      cfg(bounds, conf, "odd", b_odd);
      cfg(bounds, conf, "n", b_range);
      cfg(bounds, conf, "step", b_step);
      cfg(bounds, conf, "a", b_a);
      cfg(bounds, conf, "b", b_b);
      cfg(bounds, conf, "variant", b_variant);
      cfg(bounds, conf, "seed", b_seed);
      cfg(bounds, conf, "out", b_out);
      cfg(bounds, conf, "jobs", b_jobs);
      return run_bounds(b_family, b_odd, b_range, b_step, b_a, b_b, b_variant,
                        b_seed, b_out, b_jobs);
    }
    if (eval->parsed()) {
      cfg(eval, conf, "formula", v_formula);
      cfg(eval, conf, "graph", v_graph);
      return run_eval(v_formula, v_graph);
    }
    return run_verify();
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
