#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "distinguo/game.hpp"
#include "distinguo/graph.hpp"
#include "distinguo/strategies.hpp"

namespace distinguo {

enum class VerifyMode { Exhaustive, Randomized };

inline constexpr std::size_t kMaxStoredFailures = 64;
inline constexpr std::uint64_t kDefaultLeafBudget = 20'000'000;

/// A failure is a finished game the strategy's side lost, kept as its full
/// move history. Only the first kMaxStoredFailures histories are stored.
struct VerificationReport {
  VerifyMode mode = VerifyMode::Exhaustive;
  std::string strategy;
  Player role = Player::Gentle;
  int budget = 0;
  Player first = Player::Gentle;
  std::uint64_t games_played = 0;
  std::uint64_t leaf_count = 0;  ///< exhaustive mode; equals games_played
  std::uint64_t failure_count = 0;
  std::vector<std::vector<Move>> failures;
  std::uint64_t seed = 0;  ///< randomized mode

  bool verified() const noexcept { return failure_count == 0; }
};

/// Every line of the opponent against the strategy's deterministic replies.
/// The leaf count is the product of the opponent's branching factors; if it
/// exceeds leaf_budget a ResourceError is thrown before any play.
VerificationReport verify_strategy_exhaustive(const Graph& g, const Strategy& strategy, int budget,
                                              Player first,
                                              std::uint64_t leaf_budget = kDefaultLeafBudget);

/// Number of leaves verify_strategy_exhaustive would visit.
double exhaustive_leaf_estimate(int n, int budget, Player first, Player role);

/// `trials` games from std::mt19937_64(seed). Even-numbered trials use a
/// uniform opponent; odd-numbered trials use a greedy opponent steering the
/// count of automorphisms that survive the partial coloring (up for a
/// Rascal opponent, down for a Gentle one), ties broken at random.
VerificationReport verify_strategy_random(const Graph& g, const Strategy& strategy, int budget,
                                          Player first, std::uint64_t trials, std::uint64_t seed);

}  // namespace distinguo
