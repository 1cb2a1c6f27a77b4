#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "distinguo/game.hpp"
#include "distinguo/graph.hpp"
#include "distinguo/io.hpp"
#include "distinguo/strategies.hpp"

namespace distinguo {

/// "NAME:PARAM" for the make_family families, plus "k4k2" (K4 x K2) and
/// "z3" (a 9-vertex graph whose automorphism group is cyclic of order 3).
Graph graph_from_family_spec(std::string_view spec);

/// The 9-vertex test graph behind "z3".
Graph z3_graph();

/// A strategy with the budget and opener it is written for.
struct StrategySetup {
  Strategy strategy;
  int budget = 0;
  Player first = Player::Gentle;
};

/// Strategy by registry name, e.g. "c8", "c9-literal", "prime-cycle:7",
/// "k2-union:3". Names that work on an arbitrary graph ("mirror",
/// "prime-cyclic", "involutive") take it from `graph`.
StrategySetup strategy_setup(std::string_view spec, const std::optional<Graph>& graph = std::nullopt);
std::vector<std::string> strategy_names();

enum class RowStatus { Match, Mismatch, Skipped };
std::string_view to_string(RowStatus s) noexcept;

struct ReproRow {
  std::string graph;
  std::string quantity;  ///< "D", "D_G" or "D_R"
  std::string claimed;
  std::string computed;
  std::string method;    ///< "solver", "certificate", "enumeration"
  RowStatus status = RowStatus::Skipped;
  std::string note;
};

struct ReproReport {
  std::vector<ReproRow> rows;
  bool any_mismatch() const;
};

inline constexpr std::uint64_t kReproduceNodeBudget = 2'000'000;

/// Every desk-scale value of the table, recomputed. Budget failures become
/// Skipped rows. Deterministic for threads == 1.
ReproReport reproduce(const SolveOptions& options);
Json to_json(const ReproReport& r);
std::string to_text(const ReproReport& r);

struct ProbeEntry {
  std::string graph;
  std::string question;  ///< "prime_cycle" or "no_involution"
  Player first = Player::Gentle;
  int d = 0;             ///< budget (prime_cycle) or d_max (no_involution)
  std::string outcome;   ///< "Gentle", "Rascal", "finite", "unknown_at_least", "has_involution", "resource_bounded"
  std::optional<int> value;
  std::string detail;
};

struct ProbeReport {
  std::vector<ProbeEntry> entries;
};

/// Exact solve of C_p with `d` colors, Gentle first, per prime. Outcomes are
/// evidence only.
ProbeReport probe_prime_cycles(const std::vector<int>& primes, int d, const SolveOptions& options);
/// Game numbers up to d_max for graphs without an order-2 automorphism.
ProbeReport probe_no_involution(const std::vector<Graph>& graphs, int d_max, const SolveOptions& options);
Json to_json(const ProbeReport& r);

}  // namespace distinguo
