#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "distinguo/distinguishing.hpp"
#include "distinguo/errors.hpp"
#include "distinguo/game.hpp"
#include "distinguo/harness.hpp"
#include "distinguo/involutive.hpp"
#include "distinguo/io.hpp"
#include "distinguo/verify.hpp"

using namespace distinguo;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kResource = 3 };

struct Config {
  std::string family;
  std::string graph6;
  int d = 0;
  int d_max = 0;
  std::string first;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1000;
  int threads = 1;
  std::string format = "json";
  std::size_t memo_budget = 0;
  std::uint64_t node_budget = 0;
  std::string strategy;
  std::string mode = "exhaustive";
  std::uint64_t leaf_budget = kDefaultLeafBudget;
  std::string moves;
  std::vector<int> primes;
  std::vector<std::string> candidates;
};

Graph load_graph(const Config& c) {
  if (c.family.empty() == c.graph6.empty()) throw InvalidArgument("give exactly one of --family and --graph6");
  if (!c.family.empty()) return graph_from_family_spec(c.family);
  return parse_graph6(c.graph6).renamed(c.graph6);
}

std::optional<Graph> maybe_graph(const Config& c) {
  if (c.family.empty() && c.graph6.empty()) return std::nullopt;
  return load_graph(c);
}

SolveOptions solve_options(const Config& c) {
  SolveOptions o;
  if (c.memo_budget > 0) o.memo_budget = c.memo_budget;
  o.node_budget = c.node_budget;
  o.threads = c.threads;
  return o;
}

Player first_player(const Config& c, Player fallback) {
  return c.first.empty() ? fallback : parse_player(c.first);
}

void emit(const Config& c, const Json& j, const std::string& text) {
  if (c.format == "text") {
    std::cout << text << '\n';
  } else {
    std::cout << j.dump(2) << '\n';
  }
}

int cmd_gen(const Config& c) {
  const Graph g = load_graph(c);
  Json j{{"schema", schema_tag("graph")}};
  j.update(to_json(g));
  j["graph6"] = emit_graph6(g);
  emit(c, j, emit_graph6(g));
  return kOk;
}

int cmd_aut(const Config& c) {
  const Graph g = load_graph(c);
  const AutGroup aut = automorphism_group(g);
  Json j{{"schema", schema_tag("aut")}, {"graph", g.name()}};
  j.update(to_json(aut));
  emit(c, j, "order " + std::to_string(aut.order()));
  return kOk;
}

int cmd_dnum(const Config& c) {
  const Graph g = load_graph(c);
  const int d_max = c.d_max > 0 ? c.d_max : 8;
  const auto r = distinguishing_number(g, d_max);
  Json j{{"schema", schema_tag("dnum")}, {"graph", g.name()}, {"d_max", d_max}};
  j["value"] = r.value ? Json(*r.value) : Json(nullptr);
  j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  emit(c, j, r.value ? std::to_string(*r.value) : "none within " + std::to_string(d_max));
  return kOk;
}

int cmd_solve(const Config& c) {
  const Graph g = load_graph(c);
  const Player first = first_player(c, Player::Gentle);
  if ((c.d > 0) == (c.d_max > 0)) throw InvalidArgument("solve needs exactly one of --d and --dmax");
  Json j{{"schema", schema_tag("solve")}, {"graph", g.name()}, {"first_player", to_string(first)}};
  if (c.d > 0) {
    const SolveResult r = solve(g, c.d, first, solve_options(c));
    j["d"] = c.d;
    j["value"] = to_string(r.winner);
    j["nodes_expanded"] = r.stats.nodes_expanded;
    j["memo_hits"] = r.stats.memo_hits;
    emit(c, j, std::string(to_string(r.winner)));
    return kOk;
  }
  const GameResult r = game_distinguishing_number(g, first, c.d_max, solve_options(c));
  j["d_max"] = c.d_max;
  std::string text;
  switch (r.kind) {
    case GameResult::Kind::Finite:
      j["value"] = r.value;
      text = std::to_string(r.value);
      break;
    case GameResult::Kind::InfiniteCertified:
      j["certificate"] = to_json(*r.certificate);
      text = infinity_label(*r.certificate);
      break;
    case GameResult::Kind::UnknownAtLeast:
      j["unknown_at_least"] = r.value;
      text = "unknown, at least " + std::to_string(r.value);
      break;
  }
  j["nodes_expanded"] = r.stats.nodes_expanded;
  j["memo_hits"] = r.stats.memo_hits;
  emit(c, j, text);
  return kOk;
}

int cmd_verify(const Config& c) {
  const auto setup = strategy_setup(c.strategy, maybe_graph(c));
  const Graph& g = setup.strategy.graph();
  const int d = c.d > 0 ? c.d : setup.budget;
  const Player first = first_player(c, setup.first);
  VerificationReport r;
  if (c.mode == "exhaustive") {
    r = verify_strategy_exhaustive(g, setup.strategy, d, first, c.leaf_budget);
  } else if (c.mode == "random") {
    r = verify_strategy_random(g, setup.strategy, d, first, c.trials, c.seed);
  } else {
    throw InvalidArgument("--mode must be exhaustive or random");
  }
  std::ostringstream text;
  text << (r.verified() ? "verified" : "FAILED") << ", " << r.games_played
       << (r.mode == VerifyMode::Exhaustive ? " leaves" : " games");
  if (!r.verified()) text << ", " << r.failure_count << " lost, first " << moves_to_json(r.failures.front()).dump();
  emit(c, to_json(r), text.str());
  return r.verified() ? kOk : kMismatch;
}

int cmd_reproduce(const Config& c) {
  const ReproReport r = reproduce(solve_options(c));
  emit(c, to_json(r), to_text(r));
  return r.any_mismatch() ? kMismatch : kOk;
}

int cmd_probe(const Config& c) {
  ProbeReport r;
  const int d = c.d > 0 ? c.d : 2;
  if (!c.primes.empty()) r = probe_prime_cycles(c.primes, d, solve_options(c));
  if (!c.candidates.empty()) {
    std::vector<Graph> graphs;
    for (const auto& s : c.candidates) {
      graphs.push_back(s.find(':') != std::string::npos || s == "k4k2" || s == "z3" ? graph_from_family_spec(s)
                                                                                   : parse_graph6(s).renamed(s));
    }
    const auto more = probe_no_involution(graphs, c.d_max > 0 ? c.d_max : 4, solve_options(c));
    r.entries.insert(r.entries.end(), more.entries.begin(), more.entries.end());
  }
  std::ostringstream text;
  text << "evidence only, not proof\n";
  for (const auto& e : r.entries) {
    text << e.graph << ' ' << e.question << ' ' << to_string(e.first) << ' ' << e.outcome;
    if (e.value) text << ' ' << *e.value;
    text << '\n';
  }
  emit(c, to_json(r), text.str());
  return kOk;
}

int cmd_replay(const Config& c) {
  const Graph g = load_graph(c);
  if (c.d < 1) throw InvalidArgument("replay needs --d");
  const auto moves = parse_moves(c.moves);
  const GameState s = GameState::replay(g.order(), c.d, first_player(c, Player::Gentle), moves);
  const AutGroup aut = automorphism_group(g);
  Json j{{"schema", schema_tag("replay")},
         {"graph", g.name()},
         {"d", c.d},
         {"first_player", to_string(s.first_player())},
         {"moves", moves_to_json(moves)},
         {"coloring", to_json(s.coloring())},
         {"complete", s.terminal()}};
  std::string text = "incomplete, " + std::to_string(s.uncolored_count()) + " uncolored";
  if (s.terminal()) {
    const AutGroup kept = color_preserving_subgroup(aut, s.coloring());
    Json fixers = Json::array();
    for (std::size_t i = 1; i < kept.order(); ++i) fixers.push_back(to_json(kept.elements()[i]));
    j["winner"] = to_string(winner(s, aut));
    j["preserving_automorphisms"] = std::move(fixers);
    text = std::string(to_string(winner(s, aut))) + " wins, " + std::to_string(kept.order() - 1) +
           " nontrivial automorphisms preserve the coloring";
  }
  emit(c, j, text);
  return kOk;
}

int cmd_residues(const Config& c) {
  if (c.d < 2) throw InvalidArgument("residues needs --d >= 2");
  const ResidueTable t = residue_table(c.d);
  Json j{{"schema", schema_tag("residues")}};
  j.update(to_json(t));
  std::ostringstream text;
  text << "k = " << t.k << '\n';
  for (int i = 1; i <= t.d; ++i) {
    for (int jj = 1; jj <= t.d; ++jj) text << (jj > 1 ? " " : "") << t.at(i, jj);
    text << '\n';
  }
  emit(c, j, text.str());
  return kOk;
}

int cmd_bar(const Config& c) {
  const Graph g = load_graph(c);
  const auto bar = find_bar(g);
  Json j{{"schema", schema_tag("bar")}, {"graph", g.name()}};
  j["bar"] = bar ? to_json(*bar) : Json(nullptr);
  emit(c, j, bar ? to_json(*bar).dump() : "none");
  return kOk;
}

void error_json(const std::string& kind, const std::string& message) {
  Json j{{"schema", schema_tag("error")}, {"error", kind}, {"message", message}};
  std::cout << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for the distinguishing game"};
  app.require_subcommand(1);
  Config c;
  if (const char* env = std::getenv("DISTINGUO_MEMO_BUDGET")) c.memo_budget = std::strtoull(env, nullptr, 10);

  auto graph_flags = [&](CLI::App* sub) {
    sub->add_option("--family", c.family, "NAME:PARAM, e.g. cycle:9, hypercube:3, k4k2");
    sub->add_option("--graph6", c.graph6, "graph6 string");
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  auto solver_flags = [&](CLI::App* sub) {
    sub->add_option("--threads", c.threads, "solver threads")->check(CLI::Range(1, 256));
    sub->add_option("--memo-budget", c.memo_budget, "memo entry cap (also DISTINGUO_MEMO_BUDGET)");
    sub->add_option("--node-budget", c.node_budget, "node cap per solve, 0 = none");
  };

  auto* gen = app.add_subcommand("gen", "emit a graph");
  auto* aut = app.add_subcommand("aut", "automorphism group");
  auto* dnum = app.add_subcommand("dnum", "distinguishing number");
  auto* solve_cmd = app.add_subcommand("solve", "game value at --d, or game number up to --dmax");
  auto* verify = app.add_subcommand("verify", "verify a strategy");
  auto* repro = app.add_subcommand("reproduce", "recompute the table of known values");
  auto* probe = app.add_subcommand("probe", "exact solves on open cases (evidence only)");
  auto* replay = app.add_subcommand("replay", "replay a move list");
  auto* residues = app.add_subcommand("residues", "residue table for d colors");
  auto* bar = app.add_subcommand("bar", "find a Bar involution");

  for (auto* sub : {gen, aut, dnum, solve_cmd, verify, probe, replay, bar}) graph_flags(sub);
  for (auto* sub : {gen, aut, dnum, solve_cmd, verify, repro, probe, replay, residues, bar}) common(sub);
  for (auto* sub : {solve_cmd, repro, probe}) solver_flags(sub);
  dnum->add_option("--dmax", c.d_max, "largest color count tried")->check(CLI::Range(1, 64));
  solve_cmd->add_option("--d", c.d, "color budget")->check(CLI::Range(1, kMaxSolverBudget));
  solve_cmd->add_option("--dmax", c.d_max, "scan budgets 1..dmax")->check(CLI::Range(1, 64));
  solve_cmd->add_option("--first", c.first, "gentle or rascal");
  verify->add_option("--strategy", c.strategy, "strategy name")->required();
  verify->add_option("--mode", c.mode, "exhaustive or random")->check(CLI::IsMember({"exhaustive", "random"}));
  verify->add_option("--d", c.d, "color budget (default: the strategy's)")->check(CLI::Range(1, kMaxSolverBudget));
  verify->add_option("--first", c.first, "opener (default: the strategy's)");
  verify->add_option("--trials", c.trials, "games in random mode")->check(CLI::PositiveNumber);
  verify->add_option("--seed", c.seed, "seed in random mode");
  verify->add_option("--leaf-budget", c.leaf_budget, "leaf cap in exhaustive mode");
  probe->add_option("--primes", c.primes, "primes p for C_p")->delimiter(',');
  probe->add_option("--candidates", c.candidates, "graphs (family spec or graph6) for the no-involution probe")
      ->delimiter(',');
  probe->add_option("--d", c.d, "budget for the prime probe")->check(CLI::Range(1, kMaxSolverBudget));
  probe->add_option("--dmax", c.d_max, "largest budget for the no-involution probe")->check(CLI::Range(1, 64));
  replay->add_option("--d", c.d, "color budget")->required()->check(CLI::Range(1, kMaxSolverBudget));
  replay->add_option("--first", c.first, "gentle or rascal");
  replay->add_option("--moves", c.moves, "[[v,c],...] or v:c,v:c")->required();
  residues->add_option("--d", c.d, "colors")->required()->check(CLI::Range(2, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_gen(c);
    if (*aut) return cmd_aut(c);
    if (*dnum) return cmd_dnum(c);
    if (*solve_cmd) return cmd_solve(c);
    if (*verify) return cmd_verify(c);
    if (*repro) return cmd_reproduce(c);
    if (*probe) return cmd_probe(c);
    if (*replay) return cmd_replay(c);
    if (*residues) return cmd_residues(c);
    if (*bar) return cmd_bar(c);
  } catch (const ResourceError& e) {
    error_json("resource_bounded", e.what());
    return kResource;
  } catch (const ParseError& e) {
    error_json("usage", e.what());
    return kUsage;
  } catch (const InvalidArgument& e) {
    error_json("usage", e.what());
    return kUsage;
  }
  return kUsage;
}
