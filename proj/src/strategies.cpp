#include "distinguo/strategies.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "distinguo/errors.hpp"
#include "strategy_util.hpp"

namespace distinguo {

using detail::last_move;
using detail::lowest_legal;

Strategy::Strategy(StrategyInfo info, Graph graph, MoveRule rule)
    : info_(std::move(info)), graph_(std::move(graph)), rule_(std::move(rule)) {}

Move Strategy::operator()(const Graph& g, const GameState& s, std::uint64_t seed) const {
  if (!(g == graph_)) throw InvalidArgument(info_.name + ": graph does not match the strategy's graph");
  if (s.order() != g.order()) throw InvalidArgument(info_.name + ": position size differs from graph");
  if (s.terminal()) throw InvalidArgument(info_.name + ": the game is over");
  if (s.to_move() != info_.role) {
    throw InvalidArgument(info_.name + ": it is not the " + std::string(to_string(info_.role)) +
                          "'s turn");
  }
  Move m;
  if (info_.required_d > 0 && s.budget() > info_.required_d) {
    m = rule_(g, lift_position(s, info_.required_d), seed);
  } else {
    if (info_.required_d > 0 && s.budget() < info_.required_d && !info_.best_effort) {
      throw InvalidArgument(info_.name + " needs at least " + std::to_string(info_.required_d) +
                            " colors");
    }
    m = rule_(g, s, seed);
  }
  if (!s.is_legal(m)) {
    throw std::logic_error(info_.name + " produced an illegal move (" + std::to_string(m.vertex) +
                           ", " + std::to_string(m.color) + ")");
  }
  return m;
}

GameState lift_position(const GameState& s, int base_d) {
  auto fold = [&](int c) { return c > base_d ? 1 : c; };
  if (detail::full_history(s)) {
    std::vector<Move> moves = s.history();
    for (auto& m : moves) m.color = fold(m.color);
    return GameState::replay(s.order(), base_d, s.first_player(), moves);
  }
  PartialColoring c(s.order(), base_d);
  for (int v = 0; v < s.order(); ++v)
    if (s.coloring().is_colored(v)) c.set(v, fold(s.coloring()[v]));
  return GameState::from_coloring(std::move(c), s.first_player());
}

namespace {

void require_automorphism(const Graph& g, const Permutation& p, const std::string& who) {
  if (p.size() != g.order()) throw InvalidArgument(who + ": permutation size differs from graph");
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) != g.adjacent(p(u), p(v))) {
        throw InvalidArgument(who + ": permutation is not an automorphism");
      }
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

/// A colored vertex whose opposite is still uncolored: the last move if it
/// qualifies, else the lowest such vertex.
std::optional<int> pending_block(const GameState& s, const BarMap& bar) {
  const auto& c = s.coloring();
  if (auto last = last_move(s); last && !c.is_colored(bar(last->vertex))) return last->vertex;
  for (int u = 0; u < s.order(); ++u)
    if (c.is_colored(u) && !c.is_colored(bar(u))) return u;
  return std::nullopt;
}

}  // namespace

Strategy rascal_mirror(const Graph& g, const Permutation& sigma) {
  require_automorphism(g, sigma, "rascal_mirror");
  if (element_order(sigma) != 2) throw InvalidArgument("rascal_mirror: sigma must have order 2");
  const std::vector<int> fixed = fixed_points(sigma);
  StrategyInfo info{"rascal_mirror", Player::Rascal, 0, false,
                    "copy the Gentle through an involution; fixed points answer fixed points"};
  return Strategy(std::move(info), g, [sigma, fixed](const Graph&, const GameState& s, std::uint64_t) {
    const auto& c = s.coloring();
    for (int v = 0; v < s.order(); ++v) {
      if (c.is_colored(v) && sigma(v) != v && !c.is_colored(sigma(v))) return Move{sigma(v), c[v]};
    }
    for (int v : fixed)
      if (!c.is_colored(v)) return Move{v, 1};
    return lowest_legal(s);
  });
}

Strategy gentle_prime_cyclic(const Graph& g) {
  const AutGroup aut = automorphism_group(g);
  const int p = static_cast<int>(aut.order());
  if (p < 3 || !is_prime(p)) {
    throw InvalidArgument("gentle_prime_cyclic: |Aut| = " + std::to_string(p) +
                          " is not an odd prime");
  }
  std::vector<int> orbit;
  for (auto& cell : orbits(aut)) {
    if (static_cast<int>(cell.size()) == p) {
      orbit = cell;
      break;
    }
  }
  StrategyInfo info{"gentle_prime_cyclic", Player::Gentle, 2, false,
                    "keep one orbit of prime size bichromatic"};
  return Strategy(std::move(info), g, [orbit](const Graph&, const GameState& s, std::uint64_t) {
    const auto& c = s.coloring();
    int seen = 0;
    bool mixed = false;
    std::optional<int> free;
    for (int v : orbit) {
      if (!c.is_colored(v)) {
        if (!free) free = v;
      } else if (seen == 0) {
        seen = c[v];
      } else if (c[v] != seen) {
        mixed = true;
      }
    }
    if (mixed || !free) return lowest_legal(s);
    return Move{*free, seen == 0 ? 1 : detail::other_color(seen)};
  });
}

Strategy gentle_k2_union(int n) {
  if (n < 1) throw InvalidArgument("gentle_k2_union: n must be >= 1");
  StrategyInfo info{"gentle_k2_union", Player::Gentle, n + 1, true,
                    "complete the Rascal's block with a new unordered color pair"};
  return Strategy(std::move(info), make_family(Family::DisjointK2, n),
                  [](const Graph&, const GameState& s, std::uint64_t) {
                    const auto& c = s.coloring();
                    auto half = [&](int b) { return c.is_colored(2 * b) != c.is_colored(2 * b + 1); };
                    const int blocks = s.order() / 2;
                    int block = -1;
                    if (auto last = last_move(s); last && half(last->vertex / 2)) block = last->vertex / 2;
                    for (int b = 0; b < blocks && block < 0; ++b)
                      if (half(b)) block = b;
                    if (block < 0) return lowest_legal(s);
                    const int u = c.is_colored(2 * block) ? 2 * block : 2 * block + 1;
                    const int w = u ^ 1;
                    const int a = c[u];
                    std::set<std::pair<int, int>> used;
                    for (int b = 0; b < blocks; ++b) {
                      if (c.is_colored(2 * b) && c.is_colored(2 * b + 1)) {
                        used.emplace(std::min(c[2 * b], c[2 * b + 1]), std::max(c[2 * b], c[2 * b + 1]));
                      }
                    }
                    int fallback = 1;
                    for (int x = s.budget(); x >= 1; --x)
                      if (x != a) fallback = x;
                    for (int x = 1; x <= s.budget(); ++x) {
                      if (x != a && !used.count({std::min(a, x), std::max(a, x)})) return Move{w, x};
                    }
                    return Move{w, fallback};
                  });
}

Strategy rascal_k2_union(int n) {
  if (n < 1) throw InvalidArgument("rascal_k2_union: n must be >= 1");
  StrategyInfo info{"rascal_k2_union", Player::Rascal, 0, false, "put color 1 into every block"};
  return Strategy(std::move(info), make_family(Family::DisjointK2, n),
                  [n](const Graph&, const GameState& s, std::uint64_t) {
                    if (s.budget() > n) {
                      throw InvalidArgument("rascal_k2_union: budget " + std::to_string(s.budget()) +
                                            " exceeds n = " + std::to_string(n));
                    }
                    const auto& c = s.coloring();
                    for (int b = 0; b < n; ++b) {
                      const int x = 2 * b;
                      const int y = x + 1;
                      if (c.is_colored(x) && !c.is_colored(y) && c[x] != 1) return Move{y, 1};
                      if (c.is_colored(y) && !c.is_colored(x) && c[y] != 1) return Move{x, 1};
                    }
                    for (int b = 0; b < n; ++b)
                      if (!c.is_colored(2 * b) && !c.is_colored(2 * b + 1)) return Move{2 * b, 1};
                    return lowest_legal(s);
                  });
}

namespace {

void require_base_coloring(const Graph& g, const PartialColoring& c, const std::string& who) {
  if (c.size() != g.order()) throw InvalidArgument(who + ": coloring size differs from graph");
  if (!c.complete()) throw InvalidArgument(who + ": base coloring must be complete");
  if (c.budget() < 2) throw InvalidArgument(who + ": base coloring needs d >= 2");
}

}  // namespace

Strategy gentle_involutive(const Graph& g, const BarMap& bar, const PartialColoring& c) {
  require_base_coloring(g, c, "gentle_involutive");
  const AutGroup aut = automorphism_group(g);
  if (!is_valid_bar(aut, bar)) throw InvalidArgument("gentle_involutive: bar does not commute with Aut(g)");
  if (!is_distinguishing(aut, c)) throw InvalidArgument("gentle_involutive: base coloring is not distinguishing");
  const ResidueTable table = residue_table(c.budget());
  StrategyInfo info{"gentle_involutive", Player::Gentle, table.k, false,
                    "answer u on its opposite with the residue of its (c(u), c(opposite)) cell"};
  return Strategy(std::move(info), g, [bar, c, table](const Graph&, const GameState& s, std::uint64_t) {
    const auto u = pending_block(s, bar);
    if (!u) return lowest_legal(s);
    const int x = s.coloring()[*u];
    const int r = table.at(c[*u], c[bar(*u)]);
    return Move{bar(*u), detail::mod(x - 1 + r, table.k) + 1};
  });
}

Strategy gentle_involutive_bar(const Graph& g, const BarMap& bar, const PartialColoring& c) {
  require_base_coloring(g, c, "gentle_involutive_bar");
  if (!is_valid_bar(g, bar)) throw InvalidArgument("gentle_involutive_bar: bar does not commute with Aut(g)");
  std::string why;
  if (!only_bar_preserving(g, bar, c, &why)) {
    throw InvalidArgument("gentle_involutive_bar: hypothesis fails: " + why);
  }
  const int k = 2 * c.budget() - 2;
  StrategyInfo info{"gentle_involutive_bar", Player::Gentle, k, false,
                    "answer u on its opposite with offset c(u) - 1"};
  return Strategy(std::move(info), g, [bar, c, k](const Graph&, const GameState& s, std::uint64_t) {
    const auto u = pending_block(s, bar);
    if (!u) return lowest_legal(s);
    const int x = s.coloring()[*u];
    return Move{bar(*u), detail::mod(x - 1 + c[*u] - 1, k) + 1};
  });
}

BarMap hypercube_bar(int dimension) {
  if (dimension < 1 || dimension > 6) throw InvalidArgument("hypercube dimension must lie in 1..6");
  const int n = 1 << dimension;
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) image[v] = v ^ (n - 1);
  return BarMap(std::move(image));
}

BarMap cycle_bar(int n) {
  if (n < 4 || n % 2 != 0 || n > kMaxVertices) throw InvalidArgument("cycle_bar needs an even cycle");
  std::vector<int> image(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) image[v] = (v + n / 2) % n;
  return BarMap(std::move(image));
}

PartialColoring hypercube_s_coloring(int dimension, Construction variant) {
  if (dimension < 5) throw InvalidArgument("hypercube_s_coloring needs n >= 5");
  if (dimension > 6) throw InvalidArgument("hypercube_s_coloring: Q_n exceeds the vertex limit");
  const int n = 1 << dimension;
  const int top = dimension - 1;
  std::vector<int> words;
  for (int i = 0; i < dimension; ++i) words.push_back((1 << i) - 1);
  words.push_back((1 << 0) | (1 << 3));
  const bool repair = dimension == 5 && variant == Construction::Repaired;
  words.push_back((1 << (repair ? 2 : 1)) | (1 << top));
  words.push_back((1 << 0) | (1 << 1) | (1 << top));
  std::vector<int> colors(static_cast<std::size_t>(n), 2);
  for (int w : words) {
    colors[w] = 1;
    colors[w ^ (n - 1)] = 1;
  }
  return PartialColoring(colors, 2);
}

Strategy gentle_q4() {
  const BarMap bar = hypercube_bar(4);
  const std::set<int> s_set{0b0000, 0b0001, 0b0011, 0b0111, 0b1101};
  StrategyInfo info{"gentle_q4", Player::Gentle, 3, false,
                    "answer on the complement with offset +1 on S, -1 on its complement, 0 elsewhere"};
  return Strategy(std::move(info), make_family(Family::Hypercube, 4),
                  [bar, s_set](const Graph&, const GameState& s, std::uint64_t) {
                    const auto u = pending_block(s, bar);
                    if (!u) return lowest_legal(s);
                    int offset = 0;
                    if (s_set.count(*u)) offset = 1;
                    if (s_set.count(bar(*u))) offset = -1;
                    const int x = s.coloring()[*u];
                    return Move{bar(*u), detail::mod(x - 1 + offset, 3) + 1};
                  });
}

PartialColoring even_cycle_coloring(int order) {
  if (order % 2 != 0) throw InvalidArgument("even_cycle_coloring needs an even cycle");
  const int n = order / 2;
  if (n < 6) throw InvalidArgument("even_cycle_coloring needs C_2n with n >= 6");
  if (order > kMaxVertices) throw InvalidArgument("even_cycle_coloring: cycle exceeds the vertex limit");
  std::vector<int> colors(static_cast<std::size_t>(order), 2);
  for (int v : {0, 1, 3}) {
    colors[v] = 1;
    colors[v + n] = 1;
  }
  return PartialColoring(colors, 2);
}

}  // namespace distinguo
