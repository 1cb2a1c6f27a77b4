#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "distinguo/distinguishing.hpp"
#include "distinguo/game.hpp"
#include "distinguo/graph.hpp"
#include "distinguo/involutive.hpp"
#include "distinguo/symmetry.hpp"

namespace distinguo {

struct StrategyInfo {
  std::string name;
  Player role = Player::Gentle;
  /// Budget the strategy is written for; 0 means any budget.
  int required_d = 0;
  /// When false, budgets below required_d are rejected at move time.
  bool best_effort = false;
  std::string summary;
};

using MoveRule = std::function<Move(const Graph&, const GameState&, std::uint64_t seed)>;

/// A deterministic move rule bound to one graph. Calling it checks that the
/// graph matches, that the strategy's side is to move and that the returned
/// move is legal. Budgets above required_d are handled by playing the base
/// rule on a copy of the position where every color above required_d reads
/// as color 1.
class Strategy {
 public:
  Strategy(StrategyInfo info, Graph graph, MoveRule rule);

  const StrategyInfo& info() const noexcept { return info_; }
  const Graph& graph() const noexcept { return graph_; }

  Move operator()(const Graph& g, const GameState& s, std::uint64_t seed = 0) const;
  Move operator()(const GameState& s, std::uint64_t seed = 0) const { return (*this)(graph_, s, seed); }

 private:
  StrategyInfo info_;
  Graph graph_;
  MoveRule rule_;
};

/// The position seen by a strategy written for `base_d` colors.
GameState lift_position(const GameState& s, int base_d);

/// Rascal copies each Gentle move through sigma (order 2); moves on fixed
/// points are answered on another fixed point.
Strategy rascal_mirror(const Graph& g, const Permutation& sigma);

/// Gentle keeps one Aut-orbit of size p non-monochromatic. Requires |Aut(g)|
/// to be an odd prime.
Strategy gentle_prime_cyclic(const Graph& g);

/// nK2, Rascal first: complete the Rascal's block with a color pair not
/// seen on any completed block and never monochromatic. Written for n + 1
/// colors; with fewer it plays on and loses where it must.
Strategy gentle_k2_union(int n);

/// nK2: put color 1 into every block. Rejects budgets above n.
Strategy rascal_k2_union(int n);

/// Rascal first. Gentle answers u with ū, offset by the residue of the
/// (c(u), c(ū)) cell modulo d^2 + d - 2. `c` must be distinguishing.
Strategy gentle_involutive(const Graph& g, const BarMap& bar, const PartialColoring& c);

/// Rascal first, budget 2d - 2. Requires Bar to be the only nontrivial
/// automorphism preserving `c`; the offset on V_ii is i - 1.
Strategy gentle_involutive_bar(const Graph& g, const BarMap& bar, const PartialColoring& c);

/// Bitwise complement on Q_n.
BarMap hypercube_bar(int dimension);
/// Antipodal map on C_n, n even.
BarMap cycle_bar(int n);

/// Literal keeps a construction exactly as stated. Repaired replaces the
/// three pieces that fail: the C10 pair that uses the vertex the Gentle
/// already took, the C9 case-3 pairs (they can end on a coloring fixed by a
/// reflection), and the Q5 word c1 = 01001, which touches the complement of
/// f and leaves a color preserving group of order 16. Repaired uses 00101.
enum class Construction { Repaired, Literal };

/// Q_n, n >= 5: color 1 on v_0..v_{n-1}, f, c1, c2 and their complements,
/// color 2 elsewhere.
PartialColoring hypercube_s_coloring(int dimension, Construction variant = Construction::Repaired);

/// Q4, three colors, Rascal first.
Strategy gentle_q4();

/// C_{2n}, n >= 6: color 1 on {0, 1, 3} and their opposites, color 2 elsewhere.
PartialColoring even_cycle_coloring(int order);

/// K4 x K2 with the cartesian_product labeling, three colors, Rascal first.
Strategy gentle_k4k2();

/// C8 or C10, two colors, Rascal first.
Strategy gentle_c8_c10(int n, Construction variant = Construction::Repaired);

/// C_n with n odd, composite and > 9; two colors, Gentle first.
Strategy gentle_odd_composite_cycle(int n);

/// C9, two colors, Gentle first.
Strategy gentle_c9(Construction variant = Construction::Repaired);

/// C_p with p > 5 prime; three colors, Gentle first.
Strategy gentle_prime_cycle(int p);

}  // namespace distinguo
