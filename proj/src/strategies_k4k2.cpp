#include <algorithm>
#include <array>
#include <memory>
#include <optional>
#include <set>
#include <utility>

#include "distinguo/strategies.hpp"
#include "strategy_util.hpp"

namespace distinguo {

using detail::lowest_legal;

namespace {

/// Relabeling of K4 x K2 (vertex 2 * fiber + side): frame fiber f is actual
/// fiber fiber[f], frame side x is actual side x ^ flip, frame color c is
/// actual color color[c].
struct Frame {
  std::array<int, 4> fiber{};
  int flip = 0;
  std::array<int, 4> color{};

  int vertex(int f, int side) const { return 2 * fiber[f] + (side ^ flip); }
  std::pair<int, int> locate(int v) const {
    const int f = static_cast<int>(std::find(fiber.begin(), fiber.end(), v / 2) - fiber.begin());
    return {f, (v % 2) ^ flip};
  }
  int frame_color(int actual) const {
    if (actual == 0) return 0;
    return static_cast<int>(std::find(color.begin() + 1, color.end(), actual) - color.begin());
  }
  Move move(int f, int side, int c) const { return {vertex(f, side), color[c]}; }
};

using Fibers = std::array<std::array<int, 2>, 4>;

Fibers frame_coloring(const GameState& s, const Frame& fr) {
  Fibers out{};
  for (int f = 0; f < 4; ++f)
    for (int x = 0; x < 2; ++x) out[f][x] = fr.frame_color(s.coloring()[fr.vertex(f, x)]);
  return out;
}

std::pair<int, int> as_set(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

/// Distinct ordered fiber pairs, and no side swap maps the set of pairs to
/// itself.
bool fibers_distinguish(const Fibers& fc) {
  std::set<std::pair<int, int>> pairs;
  for (const auto& f : fc) pairs.emplace(f[0], f[1]);
  if (pairs.size() != 4) return false;
  for (const auto& [l, r] : pairs)
    if (!pairs.count({r, l})) return true;
  return false;
}

/// Within the pairing, can the Gentle still force a distinguishing end?
bool pairing_wins(Fibers& fc, const std::array<std::pair<int, int>, 8>& partner_of) {
  bool full = true;
  for (int f = 0; f < 4; ++f)
    for (int x = 0; x < 2; ++x) full = full && fc[f][x] != 0;
  if (full) return fibers_distinguish(fc);
  for (int f = 0; f < 4; ++f) {
    for (int x = 0; x < 2; ++x) {
      if (fc[f][x] != 0) continue;
      const auto [pf, px] = partner_of[2 * f + x];
      if (pf < 0 || fc[pf][px] != 0) return false;
      for (int a = 1; a <= 3; ++a) {
        fc[f][x] = a;
        bool answered = false;
        for (int b = 1; b <= 3 && !answered; ++b) {
          fc[pf][px] = b;
          answered = pairing_wins(fc, partner_of);
          fc[pf][px] = 0;
        }
        fc[f][x] = 0;
        if (!answered) return false;
      }
    }
  }
  return true;
}

/// First move after which the Gentle still wins under optimal play.
Move search_reply(const Graph& g, const AutGroup& aut, const GameState& s) {
  for (const Move& m : legal_moves(s)) {
    const GameState next = s.after(m);
    if (next.terminal() ? winner(next, aut) == Player::Gentle
                        : solve_from(g, aut, next).winner == Player::Gentle)
      return m;
  }
  return lowest_legal(s);
}

Move k4k2_rule(const Graph& g, const AutGroup& aut, const GameState& s) {
  const auto& h = s.history();
  if (!detail::full_history(s) || h.size() % 2 == 0) return lowest_legal(s);

  Frame fr;
  const Move r1 = h[0];
  fr.fiber[0] = r1.vertex / 2;
  fr.flip = r1.vertex % 2;
  for (int f = 0, i = 1; f < 4; ++f)
    if (f != fr.fiber[0]) fr.fiber[i++] = f;
  fr.color[1] = r1.color;
  for (int c = 1, i = 2; c <= 3; ++c)
    if (c != r1.color) fr.color[i++] = c;

  const Move g1 = fr.move(1, 0, 2);
  if (h.size() == 1) return g1;
  if (h[1] != g1) return lowest_legal(s);

  const Move r2 = h[2];
  auto [f2, x2] = fr.locate(r2.vertex);
  enum class Line { Same, Opposite, Cross } line;
  Move g2;
  if (f2 <= 1) {
    if (f2 == 1) {
      std::swap(fr.fiber[0], fr.fiber[1]);
      std::swap(fr.color[1], fr.color[2]);
    }
    const int delta = fr.frame_color(r2.color);
    line = delta == 2 ? Line::Opposite : Line::Same;
    g2 = fr.move(1, 1, delta == 2 ? 1 : 2);
  } else {
    if (f2 == 3) std::swap(fr.fiber[2], fr.fiber[3]);
    const int gamma = fr.frame_color(r2.color);
    line = Line::Cross;
    if (gamma == 2) {
      std::swap(fr.fiber[0], fr.fiber[1]);
      std::swap(fr.color[1], fr.color[2]);
    }
    g2 = fr.move(3, x2, gamma == 3 ? 1 : 3);
    if (gamma == 3) std::swap(fr.fiber[2], fr.fiber[3]);
  }
  if (h.size() == 3) return g2;
  if (h[3] != g2) return lowest_legal(s);

  Fibers fc = frame_coloring(s, fr);
  const auto [f, x] = fr.locate(h.back().vertex);
  const int a = fc[f][x];

  // No pairing of the four open vertices wins when the Rascal opened the
  // second fiber pair on side r, so the rest is searched.
  if (line == Line::Cross && x2 == 1) return search_reply(g, aut, s);

  if (line == Line::Cross) {
    std::array<std::pair<int, int>, 8> partner_of;
    partner_of.fill({-1, -1});
    // Pairs (0,r)-(2,y) and (1,r)-(3,y) where y is the side still open.
    const int y = 1 - x2;
    auto link = [&](int fa, int xa, int fb, int xb) {
      partner_of[2 * fa + xa] = {fb, xb};
      partner_of[2 * fb + xb] = {fa, xa};
    };
    link(0, 1, 2, y);
    link(1, 1, 3, y);
    const auto [pf, px] = partner_of[2 * f + x];
    if (pf < 0 || fc[pf][px] != 0) return lowest_legal(s);
    for (int b = 1; b <= 3; ++b) {
      fc[pf][px] = b;
      if (pairing_wins(fc, partner_of)) return fr.move(pf, px, b);
    }
    return fr.move(pf, px, 1);
  }

  // Case 1: answer in the Rascal's fiber.
  if (f < 2 || fc[f][1 - x] != 0) return lowest_legal(s);
  const int other = 5 - f;
  const bool other_done = fc[other][0] != 0 && fc[other][1] != 0;
  for (int b = 1; b <= 3; ++b) {
    const auto mine = as_set(a, b);
    if (!other_done && a == b) continue;
    if (other_done && mine == as_set(fc[other][0], fc[other][1])) continue;
    if (line == Line::Same) {
      if (mine == as_set(fc[0][0], fc[0][1]) || mine == as_set(fc[1][0], fc[1][1])) continue;
    } else if (mine == std::pair{1, 2}) {
      continue;
    }
    return fr.move(f, 1 - x, b);
  }
  return fr.move(f, 1 - x, a == 1 ? 2 : 1);
}

}  // namespace

Strategy gentle_k4k2() {
  const Graph g = cartesian_product(make_family(Family::Complete, 4), make_family(Family::Complete, 2));
  StrategyInfo info{"gentle_k4k2", Player::Gentle, 3, false,
                    "two opening cases, then fiber replies, cross pairs, or a search of the last four moves"};
  auto aut = std::make_shared<const AutGroup>(automorphism_group(g));
  return Strategy(std::move(info), g, [aut](const Graph& graph, const GameState& s, std::uint64_t) {
    return k4k2_rule(graph, *aut, s);
  });
}

}  // namespace distinguo
