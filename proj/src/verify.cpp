#include "distinguo/verify.hpp"

#include <random>
#include <string>

#include "distinguo/errors.hpp"

namespace distinguo {

namespace {

void check_inputs(const Graph& g, const Strategy& strategy, int budget) {
  if (!(g == strategy.graph())) throw InvalidArgument(strategy.info().name + ": graph does not match");
  if (budget < 1) throw InvalidArgument("budget must be >= 1");
}

void record(VerificationReport& report, const GameState& s) {
  ++report.failure_count;
  if (report.failures.size() < kMaxStoredFailures) report.failures.push_back(s.history());
}

}  // namespace

double exhaustive_leaf_estimate(int n, int budget, Player first, Player role) {
  double leaves = 1;
  Player mover = first;
  for (int uncolored = n; uncolored > 0; --uncolored) {
    if (mover != role) leaves *= static_cast<double>(uncolored) * budget;
    mover = opponent(mover);
  }
  return leaves;
}

VerificationReport verify_strategy_exhaustive(const Graph& g, const Strategy& strategy, int budget,
                                              Player first, std::uint64_t leaf_budget) {
  check_inputs(g, strategy, budget);
  const Player role = strategy.info().role;
  const double estimate = exhaustive_leaf_estimate(g.order(), budget, first, role);
  if (estimate > static_cast<double>(leaf_budget)) {
    throw ResourceError("exhaustive verification needs " + std::to_string(estimate) +
                        " leaves, over the budget of " + std::to_string(leaf_budget));
  }
  const AutGroup aut = automorphism_group(g);
  VerificationReport report;
  report.mode = VerifyMode::Exhaustive;
  report.strategy = strategy.info().name;
  report.role = role;
  report.budget = budget;
  report.first = first;

  auto dfs = [&](auto&& self, const GameState& s) -> void {
    if (s.terminal()) {
      ++report.leaf_count;
      if (winner(s, aut) != role) record(report, s);
      return;
    }
    if (s.to_move() == role) {
      self(self, s.after(strategy(g, s)));
      return;
    }
    for (const Move& m : legal_moves(s)) self(self, s.after(m));
  };
  dfs(dfs, GameState(g.order(), budget, first));
  report.games_played = report.leaf_count;
  return report;
}

VerificationReport verify_strategy_random(const Graph& g, const Strategy& strategy, int budget,
                                          Player first, std::uint64_t trials, std::uint64_t seed) {
  check_inputs(g, strategy, budget);
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
  const AutGroup aut = automorphism_group(g);
  const int n = g.order();
  const auto un = static_cast<std::size_t>(n);
  const auto packed = aut.packed();
  const auto inverse = aut.packed_inverse();
  const Player role = strategy.info().role;

  VerificationReport report;
  report.mode = VerifyMode::Randomized;
  report.strategy = strategy.info().name;
  report.role = role;
  report.budget = budget;
  report.first = first;
  report.seed = seed;

  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> alive;
  std::vector<Move> best;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const bool greedy = t % 2 == 1;
    GameState s(n, budget, first);
    alive.clear();
    for (std::size_t e = 1; e < aut.order(); ++e) alive.push_back(static_cast<std::uint32_t>(e));

    auto kills = [&](Move m) {
      std::size_t k = 0;
      const auto col = s.coloring().raw();
      for (const auto e : alive) {
        const int a = col[packed[e * un + m.vertex]];
        const int b = col[inverse[e * un + m.vertex]];
        if ((a != 0 && a != m.color) || (b != 0 && b != m.color)) ++k;
      }
      return k;
    };

    while (!s.terminal()) {
      Move m;
      if (s.to_move() == role) {
        m = strategy(g, s, seed + t);
      } else if (!greedy) {
        std::vector<int> open;
        for (int v = 0; v < n; ++v)
          if (!s.coloring().is_colored(v)) open.push_back(v);
        std::uniform_int_distribution<std::size_t> pick_v(0, open.size() - 1);
        std::uniform_int_distribution<int> pick_c(1, budget);
        m = {open[pick_v(rng)], pick_c(rng)};
      } else {
        // A Rascal opponent keeps automorphisms alive, a Gentle one kills them.
        best.clear();
        std::size_t best_score = 0;
        for (const Move& cand : legal_moves(s)) {
          const std::size_t k = kills(cand);
          const std::size_t score = role == Player::Gentle ? alive.size() - k : k;
          if (best.empty() || score > best_score) {
            best.assign(1, cand);
            best_score = score;
          } else if (score == best_score) {
            best.push_back(cand);
          }
        }
        std::uniform_int_distribution<std::size_t> pick(0, best.size() - 1);
        m = best[pick(rng)];
      }
      std::erase_if(alive, [&](std::uint32_t e) {
        const auto col = s.coloring().raw();
        const int a = col[packed[e * un + m.vertex]];
        const int b = col[inverse[e * un + m.vertex]];
        return (a != 0 && a != m.color) || (b != 0 && b != m.color);
      });
      s.play(m);
    }
    ++report.games_played;
    if (winner(s, aut) != role) record(report, s);
  }
  return report;
}

}  // namespace distinguo
