#pragma once

#include <optional>

#include "distinguo/game.hpp"

namespace distinguo::detail {

/// Lowest uncolored vertex with color 1.
inline Move lowest_legal(const GameState& s) {
  for (int v = 0; v < s.order(); ++v)
    if (!s.coloring().is_colored(v)) return {v, 1};
  return {-1, 0};
}

/// History covers every colored vertex (the position was reached by play).
inline bool full_history(const GameState& s) {
  return static_cast<int>(s.history().size()) == s.coloring().colored_count();
}

inline std::optional<Move> last_move(const GameState& s) {
  if (s.history().empty() || !full_history(s)) return std::nullopt;
  return s.history().back();
}

/// The other of two colors.
inline int other_color(int c) { return c == 1 ? 2 : 1; }

inline int mod(int a, int n) { return ((a % n) + n) % n; }

}  // namespace distinguo::detail
