#include "distinguo/game.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <string>

#include "distinguo/errors.hpp"
#include "solver_detail.hpp"

namespace distinguo {

std::string_view to_string(Player p) noexcept { return p == Player::Gentle ? "Gentle" : "Rascal"; }

Player parse_player(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "gentle" || lower == "g") return Player::Gentle;
  if (lower == "rascal" || lower == "r") return Player::Rascal;
  throw InvalidArgument("unknown player '" + std::string(text) + "' (expected gentle|rascal)");
}

GameState::GameState(int n, int budget, Player first) : coloring_(n, budget), first_(first) {}

GameState GameState::replay(int n, int budget, Player first, std::span<const Move> moves) {
  GameState s(n, budget, first);
  for (const Move& m : moves) s.play(m);
  return s;
}

GameState GameState::from_coloring(PartialColoring coloring, Player first) {
  GameState s(coloring.size(), coloring.budget(), first);
  s.coloring_ = std::move(coloring);
  return s;
}

bool GameState::is_legal(Move m) const noexcept {
  return m.vertex >= 0 && m.vertex < order() && !coloring_.is_colored(m.vertex) && m.color >= 1 &&
         m.color <= budget();
}

void GameState::play(Move m) {
  if (!is_legal(m)) {
    throw InvalidArgument("illegal move (" + std::to_string(m.vertex) + ", " +
                          std::to_string(m.color) + ")");
  }
  coloring_.set(m.vertex, m.color);
  history_.push_back(m);
}

GameState GameState::after(Move m) const {
  GameState next = *this;
  next.play(m);
  return next;
}

std::vector<Move> legal_moves(const GameState& s) {
  std::vector<Move> moves;
  if (s.terminal()) return moves;
  moves.reserve(static_cast<std::size_t>(s.uncolored_count() * s.budget()));
  for (int v = 0; v < s.order(); ++v) {
    if (s.coloring().is_colored(v)) continue;
    for (int c = 1; c <= s.budget(); ++c) moves.push_back({v, c});
  }
  return moves;
}

Player winner(const GameState& s, const Graph& g) {
  if (!s.terminal()) throw InvalidArgument("winner: the game is not over");
  return is_distinguishing(g, s.coloring()) ? Player::Gentle : Player::Rascal;
}

Player winner(const GameState& s, const AutGroup& aut) {
  if (!s.terminal()) throw InvalidArgument("winner: the game is not over");
  return is_distinguishing(aut, s.coloring()) ? Player::Gentle : Player::Rascal;
}

std::size_t StateKeyHash::operator()(const StateKey& k) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ k.to_move;
  for (auto w : k.words) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= h >> 31;
    h *= 0xbf58476d1ce4e5b9ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

StateKey canonical_key(const GameState& s, const AutGroup& aut) {
  if (aut.degree() != s.order()) throw InvalidArgument("group degree differs from the position size");
  if (s.budget() > kMaxSolverBudget) {
    throw InvalidArgument("canonical keys support at most " + std::to_string(kMaxSolverBudget) +
                          " colors");
  }
  return detail::canonical_key(s.coloring().raw().data(), s.order(), aut.packed().data(),
                               aut.order(), static_cast<std::uint8_t>(s.to_move()));
}

std::size_t default_memo_budget() {
  if (const char* env = std::getenv("DISTINGUO_MEMO_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultMemoBudget;
}

}  // namespace distinguo
