#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "distinguo/errors.hpp"
#include "distinguo/strategies.hpp"
#include "strategy_util.hpp"

namespace distinguo {

using detail::last_move;
using detail::lowest_legal;
using detail::mod;
using detail::other_color;

namespace {

/// Dihedral relabeling of C_n: frame vertex f sits at sign * f + shift.
struct CycleFrame {
  int n = 0;
  int shift = 0;
  int sign = 1;
  int actual(int f) const { return mod(sign * f + shift, n); }
  int frame(int v) const { return mod(sign * (v - shift), n); }
};

using Pair = std::pair<int, int>;

/// Partner of f among `pairs`, or -1.
int partner(const std::vector<Pair>& pairs, int f) {
  for (const auto& [a, b] : pairs) {
    if (a == f) return b;
    if (b == f) return a;
  }
  return -1;
}

/// Answers the Rascal's move at frame vertex f with color x on its partner:
/// the same color on `same` pairs, the other color on `opposite` pairs.
std::optional<Move> pair_reply(const GameState& s, const CycleFrame& frame, const std::vector<Pair>& same,
                               const std::vector<Pair>& opposite, Move last) {
  const int f = frame.frame(last.vertex);
  int w = partner(same, f);
  int color = last.color;
  if (w < 0) {
    w = partner(opposite, f);
    color = other_color(last.color);
  }
  if (w < 0) return std::nullopt;
  const int v = frame.actual(w);
  if (s.coloring().is_colored(v)) return std::nullopt;
  return Move{v, color};
}

Move c8_rule(const GameState& s) {
  const auto& h = s.history();
  if (!detail::full_history(s) || h.empty()) return lowest_legal(s);
  const CycleFrame frame{8, h[0].vertex, 1};
  const int a = h[0].color;
  if (h.size() == 1) return {frame.actual(4), a};
  static const std::vector<Pair> pairs{{1, 3}, {5, 7}, {2, 6}};
  if (auto m = pair_reply(s, frame, {}, pairs, h.back())) return *m;
  return lowest_legal(s);
}

Move c10_rule(const GameState& s, Construction variant) {
  const auto& h = s.history();
  if (!detail::full_history(s) || h.empty()) return lowest_legal(s);
  CycleFrame frame{10, h[0].vertex, 1};
  const int a = h[0].color;
  if (h.size() == 1) return {frame.actual(5), a};
  if (h[1] != Move{frame.actual(5), a}) return lowest_legal(s);

  // Symmetries of the frame fixing {0, 5}: bring the Rascal's second move
  // to frame vertex 1 or 2.
  const Move r2 = h[2];
  const int f2 = frame.frame(r2.vertex);
  static const std::array<std::pair<int, int>, 4> syms{{{1, 0}, {-1, 0}, {1, 5}, {-1, 5}}};
  CycleFrame sym = frame;
  int target = -1;
  for (const auto& [sg, sh] : syms) {
    const int g = mod(sg * f2 + sh, 10);
    if (g == 1 || g == 2) {
      // frame' f -> frame(sg * f + sh), which is its own inverse.
      sym.sign = frame.sign * sg;
      sym.shift = frame.actual(sh);
      target = g;
      break;
    }
  }
  if (target < 0) return lowest_legal(s);

  const bool same_color = r2.color == a;
  int g2 = 0;
  int g2_color = 0;
  std::vector<Pair> same;
  std::vector<Pair> opposite;
  if (same_color) {
    g2_color = a;
    if (target == 1) {
      g2 = 6;
      // Frame 6 is already taken, so frame 3 is paired with frame 8, the
      // only vertex left unpaired.
      opposite = {{2, 4}, {7, 9}, {3, variant == Construction::Literal ? 6 : 8}};
    } else {
      g2 = 3;
      opposite = {{1, 4}, {6, 8}, {7, 9}};
    }
  } else {
    g2_color = r2.color;
    g2 = target == 1 ? 2 : 1;
    same = {{3, 4}, {8, 9}};
    opposite = {{6, 7}};
  }
  if (h.size() == 3) return {sym.actual(g2), g2_color};
  if (h[3] != Move{sym.actual(g2), g2_color}) return lowest_legal(s);
  if (auto m = pair_reply(s, sym, same, opposite, h.back())) return *m;
  return lowest_legal(s);
}

/// Composite odd cycle scheme in frame coordinates. `col` holds the frame
/// coloring; `last` is the Rascal's last move in the frame.
std::optional<Move> composite_reply(int n, int p, int k, const std::vector<int>& col,
                                    std::optional<Move> last) {
  bool any = false;
  for (int x : col) any = any || x != 0;
  if (!any) return Move{0, 1};
  if (!last) return std::nullopt;
  const int x = last->vertex;
  const int r = x % k;
  if (r == 0) {
    const int y = mod(-x, n);
    if (col[y] != 0) return std::nullopt;
    return Move{y, other_color(last->color)};
  }

  std::vector<int> open;
  int ones = 0;
  for (int l = 0; l < p; ++l) {
    const int v = r + l * k;
    if (col[v] == 0) open.push_back(v);
    if (col[v] == 1) ++ones;
  }
  if (open.size() == 1) {
    const int avoid = (1 + (p - 1) / 2) % 2;
    const int color = (ones + 1) % 2 != avoid ? 1 : 2;
    return Move{open.front(), color};
  }

  const int rt = mod(k - r, k);
  std::vector<int> target;
  for (int l = 0; l < p; ++l)
    if (col[rt + l * k] == 0) target.push_back(rt + l * k);
  if (target.empty()) return std::nullopt;

  for (int i = 2; i <= p; ++i) {
    const int axis = (i - 1) * k;
    auto reflect = [&](int v) { return mod(2 * axis - v, n); };
    bool broken = false;
    for (int v = 0; v < n && !broken; ++v)
      broken = col[v] != 0 && col[reflect(v)] != 0 && col[v] != col[reflect(v)];
    if (broken) continue;
    std::optional<int> best;
    for (int l = 0; l < p; ++l) {
      const int y = r + l * k;
      if (col[y] == 0) continue;
      const int u = reflect(y);
      if (col[u] == 0 && (!best || u < *best)) best = u;
    }
    if (best) return Move{*best, other_color(col[reflect(*best)])};
    break;
  }
  return Move{target.front(), 1};
}

std::optional<Move> composite_in_frame(const GameState& s, const CycleFrame& frame, int p, int k) {
  const int n = s.order();
  std::vector<int> col(static_cast<std::size_t>(n), 0);
  for (int f = 0; f < n; ++f) col[f] = s.coloring()[frame.actual(f)];
  std::optional<Move> last = last_move(s);
  if (last) last->vertex = frame.frame(last->vertex);
  auto m = composite_reply(n, p, k, col, last);
  if (!m) return std::nullopt;
  m->vertex = frame.actual(m->vertex);
  if (s.coloring().is_colored(m->vertex)) return std::nullopt;
  return m;
}

int least_prime_divisor(int n) {
  for (int q = 2; q * q <= n; ++q)
    if (n % q == 0) return q;
  return n;
}

struct C9Case {
  int id = 0;
  int m = 0;         ///< frame vertex of the Rascal's first move
  int g2 = 0;        ///< frame vertex of the Gentle's second move
  int g2_color = 0;
};

std::optional<C9Case> c9_case(int a, int delta) {
  if (a == 1) {
    switch (delta) {
      case 1: return C9Case{2, 1, 5, 2};
      case 2: return C9Case{3, 2, 1, 2};
      case 3: return C9Case{1, 3, 6, 2};
      case 4: return C9Case{4, 4, 2, 2};
    }
  } else {
    switch (delta) {
      case 3: return C9Case{1, 6, 3, 1};
      case 4: return C9Case{2, 5, 1, 1};
      case 1: return C9Case{3, 1, 2, 1};
      case 2: return C9Case{4, 2, 4, 1};
    }
  }
  return std::nullopt;
}

Move c9_rule(const GameState& s, Construction variant) {
  const auto& h = s.history();
  if (!detail::full_history(s)) return lowest_legal(s);
  if (h.empty()) return {0, 1};
  if (h[0] != Move{0, 1} || h.size() < 2) return lowest_legal(s);
  const Move r1 = h[1];
  const int delta = std::min(r1.vertex, 9 - r1.vertex);
  const auto cs = c9_case(r1.color, delta);
  if (!cs) return lowest_legal(s);
  const CycleFrame frame{9, 0, r1.vertex == cs->m ? 1 : -1};
  const Move g2{frame.actual(cs->g2), cs->g2_color};
  if (h.size() == 2) return g2;
  if (h[2] != g2) return lowest_legal(s);

  if (cs->id == 1) {
    if (auto m = composite_in_frame(s, frame, 3, 3)) return *m;
    return lowest_legal(s);
  }
  std::vector<Pair> same;
  std::vector<Pair> opposite;
  switch (cs->id) {
    case 2:
      opposite = {{2, 8}, {4, 6}};
      same = {{3, 7}};
      break;
    case 3:
      if (variant == Construction::Literal) {
        // Can end on a coloring fixed by i -> 8 - i.
        same = {{3, 5}};
        opposite = {{4, 7}, {6, 8}};
      } else {
        opposite = {{3, 8}, {4, 7}};
        same = {{5, 6}};
      }
      break;
    default:
      same = {{1, 3}};
      opposite = {{5, 8}, {6, 7}};
      break;
  }
  if (auto m = pair_reply(s, frame, same, opposite, h.back())) return *m;
  return lowest_legal(s);
}

Move prime_cycle_rule(const GameState& s, int p) {
  const auto& h = s.history();
  if (!detail::full_history(s)) return lowest_legal(s);
  const Move next = lowest_legal(s);

  // The Rascal deviates when his color differs from the Gentle's just before.
  int deviation = -1;
  for (std::size_t i = 1; i < h.size(); i += 2) {
    if (h[i].color != h[i - 1].color) {
      deviation = static_cast<int>(i);
      break;
    }
  }
  if (deviation >= 0) {
    if (deviation + 1 == static_cast<int>(h.size())) {
      std::array<int, 4> count{};
      for (int v = 0; v < s.order(); ++v) ++count[s.coloring()[v]];
      for (int c = 1; c <= 3; ++c)
        if (count[c] % 2 == 0) return {next.vertex, c};
      return next;
    }
    return {next.vertex, h.back().color};
  }

  const int turn = static_cast<int>(h.size()) / 2 + 1;
  if (turn == 1) return {next.vertex, 1};
  if (turn == 2) return {next.vertex, 2};
  if (turn == 3) {
    std::vector<int> twos;
    for (int v = 0; v < p; ++v)
      if (s.coloring()[v] == 2) twos.push_back(v);
    if (twos.size() == 2) {
      const int axis = mod((twos[0] + twos[1]) * ((p + 1) / 2), p);
      if (!s.coloring().is_colored(axis)) return {axis, 1};
    }
    return {next.vertex, 1};
  }
  return {next.vertex, s.uncolored_count() == 1 ? 3 : 1};
}

}  // namespace

Strategy gentle_c8_c10(int n, Construction variant) {
  if (n != 8 && n != 10) throw InvalidArgument("gentle_c8_c10: n must be 8 or 10");
  const bool literal = n == 10 && variant == Construction::Literal;
  StrategyInfo info{literal ? "gentle_c8_c10_literal" : "gentle_c8_c10", Player::Gentle, 2, false,
                    n == 8 ? "mirror the opening, then one move per pair with the other color"
                           : "mirror the opening, split on the Rascal's second color, then pairs"};
  return Strategy(std::move(info), make_family(Family::Cycle, n),
                  [n, variant](const Graph&, const GameState& s, std::uint64_t) {
                    return n == 8 ? c8_rule(s) : c10_rule(s, variant);
                  });
}

Strategy gentle_odd_composite_cycle(int n) {
  if (n % 2 == 0 || n <= 9 || n > kMaxVertices || least_prime_divisor(n) == n) {
    throw InvalidArgument("gentle_odd_composite_cycle: n must be odd, composite and > 9");
  }
  const int p = least_prime_divisor(n);
  const int k = n / p;
  StrategyInfo info{"gentle_odd_composite_cycle", Player::Gentle, 2, false,
                    "open on a reflection axis, fix the parity of 1s per residue class, break the other axes"};
  return Strategy(std::move(info), make_family(Family::Cycle, n),
                  [n, p, k](const Graph&, const GameState& s, std::uint64_t) {
                    if (auto m = composite_in_frame(s, CycleFrame{n, 0, 1}, p, k)) return *m;
                    return lowest_legal(s);
                  });
}

Strategy gentle_c9(Construction variant) {
  StrategyInfo info{variant == Construction::Literal ? "gentle_c9_literal" : "gentle_c9", Player::Gentle, 2, false,
                    "reach one of four openings, then the residue scheme or three answered pairs"};
  return Strategy(std::move(info), make_family(Family::Cycle, 9),
                  [variant](const Graph&, const GameState& s, std::uint64_t) { return c9_rule(s, variant); });
}

Strategy gentle_prime_cycle(int p) {
  if (p <= 5 || p > kMaxVertices || least_prime_divisor(p) != p) {
    throw InvalidArgument("gentle_prime_cycle: p must be a prime > 5");
  }
  StrategyInfo info{"gentle_prime_cycle", Player::Gentle, 3, false,
                    "punish a color change by fixing all parities odd, else two 2s and one 3 off the axis"};
  return Strategy(std::move(info), make_family(Family::Cycle, p),
                  [p](const Graph&, const GameState& s, std::uint64_t) { return prime_cycle_rule(s, p); });
}

}  // namespace distinguo
