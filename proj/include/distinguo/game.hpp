#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "distinguo/distinguishing.hpp"
#include "distinguo/graph.hpp"
#include "distinguo/symmetry.hpp"

namespace distinguo {

enum class Player : std::uint8_t { Gentle, Rascal };

constexpr Player opponent(Player p) noexcept {
  return p == Player::Gentle ? Player::Rascal : Player::Gentle;
}
std::string_view to_string(Player p) noexcept;
/// Accepts "gentle"/"rascal" in any case.
Player parse_player(std::string_view text);

struct Move {
  int vertex = 0;
  int color = 0;
  friend bool operator==(const Move&, const Move&) = default;
};

/// Position in the distinguishing game: a partial coloring with a color
/// budget, who opened, and the move history that produced it. The player
/// to move follows from the opener and the number of colored vertices.
class GameState {
 public:
  GameState(int n, int budget, Player first);

  /// Replays `moves` from the empty position, validating each one.
  static GameState replay(int n, int budget, Player first, std::span<const Move> moves);
  /// Position with the given coloring and no recorded history.
  static GameState from_coloring(PartialColoring coloring, Player first);

  const PartialColoring& coloring() const noexcept { return coloring_; }
  int budget() const noexcept { return coloring_.budget(); }
  int order() const noexcept { return coloring_.size(); }
  Player first_player() const noexcept { return first_; }
  Player to_move() const noexcept {
    return coloring_.colored_count() % 2 == 0 ? first_ : opponent(first_);
  }
  bool terminal() const noexcept { return coloring_.complete(); }
  int uncolored_count() const noexcept { return order() - coloring_.colored_count(); }
  const std::vector<Move>& history() const noexcept { return history_; }

  bool is_legal(Move m) const noexcept;
  /// Throws InvalidArgument on an illegal move.
  void play(Move m);
  GameState after(Move m) const;

 private:
  PartialColoring coloring_;
  Player first_;
  std::vector<Move> history_;
};

/// Every (uncolored vertex, color) pair, vertex-major ascending.
std::vector<Move> legal_moves(const GameState& s);

/// Gentle iff the final coloring is distinguishing. Rejects non-terminal states.
Player winner(const GameState& s, const Graph& g);
Player winner(const GameState& s, const AutGroup& aut);

/// Symmetry-reduced identity of a position: the coloring word minimized over
/// all automorphisms, each candidate word renamed by first occurrence of its
/// colors, plus the side to move. Colors are packed four bits per vertex.
struct StateKey {
  std::array<std::uint64_t, 4> words{};
  std::uint8_t to_move = 0;
  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept;
};

inline constexpr int kMaxSolverBudget = 15;

/// Requires `aut` to be Aut(g) (or a subgroup, which gives a finer key).
StateKey canonical_key(const GameState& s, const AutGroup& aut);

inline constexpr std::size_t kDefaultMemoBudget = 4'000'000;

/// DISTINGUO_MEMO_BUDGET when set to a positive integer, else kDefaultMemoBudget.
std::size_t default_memo_budget();

struct SolveOptions {
  bool memoize = true;
  std::size_t memo_budget = default_memo_budget();
  std::uint64_t node_budget = 0;  ///< 0 = unlimited
  int threads = 1;
};

struct SolveStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t memo_hits = 0;
  std::size_t memo_entries = 0;
};

struct SolveResult {
  Player winner = Player::Rascal;
  SolveStats stats;
};

/// Exact value of the game from the empty position under optimal play.
/// Throws ResourceError when a budget is exhausted; never guesses.
SolveResult solve(const Graph& g, int budget, Player first, const SolveOptions& options = {});
SolveResult solve(const Graph& g, const AutGroup& aut, int budget, Player first,
                  const SolveOptions& options = {});
/// Same, from an arbitrary position.
SolveResult solve_from(const Graph& g, const AutGroup& aut, const GameState& start,
                       const SolveOptions& options = {});

enum class CertificateKind {
  /// An involutive automorphism with the right parity of fixed points: the
  /// Rascal mirrors the Gentle through it whatever the budget.
  Involution,
  /// The Rascal wins with as many colors as vertices. No play uses more
  /// distinct colors than there are vertices, so larger budgets are the
  /// same game up to renaming colors.
  ColorSaturation,
};

struct InfinityCertificate {
  CertificateKind kind = CertificateKind::Involution;
  Player first_player = Player::Gentle;
  std::optional<Permutation> witness;  ///< Involution only
  std::vector<int> fixed;              ///< Involution only: fixed points of witness
  int saturation_budget = 0;           ///< ColorSaturation only
};

/// Order-2 automorphism certificate: Gentle first needs |V| even, Rascal
/// first needs |V| odd. Returns the lexicographically first involution.
std::optional<InfinityCertificate> infinity_certificate(const Graph& g, Player first);
std::optional<InfinityCertificate> infinity_certificate(const Graph& g, const AutGroup& aut,
                                                        Player first);

/// Re-checks an involution certificate against g from scratch.
bool check_certificate(const Graph& g, const InfinityCertificate& cert);

struct GameResult {
  enum class Kind { Finite, InfiniteCertified, UnknownAtLeast };
  Kind kind = Kind::UnknownAtLeast;
  int value = 0;  ///< Finite: the game distinguishing number; UnknownAtLeast: lower bound
  std::optional<InfinityCertificate> certificate;
  SolveStats stats;  ///< summed over every solve performed
};

/// D_G (first = Gentle) or D_R (first = Rascal), scanning d = 1..d_max.
/// Monotonicity in d makes the first Gentle win the answer. A color
/// saturation certificate is attempted only when d_max >= |V|.
GameResult game_distinguishing_number(const Graph& g, Player first, int d_max,
                                      const SolveOptions& options = {});

}  // namespace distinguo
