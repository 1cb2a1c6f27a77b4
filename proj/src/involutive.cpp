#include "distinguo/involutive.hpp"

#include <deque>
#include <stdexcept>
#include <string>

#include "distinguo/errors.hpp"

namespace distinguo {

BarMap::BarMap(std::vector<int> image) : image_(std::move(image)) {
  const int n = size();
  for (int u = 0; u < n; ++u) {
    const int v = image_[u];
    if (v < 0 || v >= n) throw InvalidArgument("bar image out of range");
    if (v == u) throw InvalidArgument("bar has a fixed point at " + std::to_string(u));
    if (image_[v] != u) throw InvalidArgument("bar is not an involution at " + std::to_string(u));
  }
}

std::vector<std::pair<int, int>> BarMap::blocks() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < size(); ++u)
    if (u < image_[u]) out.emplace_back(u, image_[u]);
  return out;
}

bool is_valid_bar(const AutGroup& aut, const BarMap& bar) {
  if (aut.degree() != bar.size()) return false;
  for (const auto& s : aut.elements()) {
    for (int u = 0; u < bar.size(); ++u)
      if (s(bar(u)) != bar(s(u))) return false;
  }
  return true;
}

bool is_valid_bar(const Graph& g, const BarMap& bar) {
  return is_valid_bar(automorphism_group(g), bar);
}

std::optional<BarMap> find_bar(const Graph& g, const AutGroup& aut) {
  const int n = g.order();
  if (aut.degree() != n) throw InvalidArgument("group degree differs from graph order");
  if (n % 2 != 0) return std::nullopt;
  const auto& gens = aut.generators();

  // Sets bar(a) = b and closes under the generators; false on conflict.
  auto extend = [&](std::vector<int>& bar, int a, int b) {
    std::deque<std::pair<int, int>> queue{{a, b}};
    while (!queue.empty()) {
      const auto [x, y] = queue.front();
      queue.pop_front();
      if (x == y) return false;
      if (bar[x] >= 0 || bar[y] >= 0) {
        if (bar[x] != y || bar[y] != x) return false;
        continue;
      }
      bar[x] = y;
      bar[y] = x;
      for (const auto& s : gens) queue.emplace_back(s(x), s(y));
    }
    return true;
  };

  std::optional<BarMap> found;
  auto dfs = [&](auto&& self, const std::vector<int>& bar) -> bool {
    int u = 0;
    while (u < n && bar[u] >= 0) ++u;
    if (u == n) {
      BarMap candidate(bar);
      if (!is_valid_bar(aut, candidate)) return false;
      found = std::move(candidate);
      return true;
    }
    for (int w = 0; w < n; ++w) {
      if (w == u || bar[w] >= 0) continue;
      std::vector<int> next = bar;
      if (extend(next, u, w) && self(self, next)) return true;
    }
    return false;
  };
  dfs(dfs, std::vector<int>(static_cast<std::size_t>(n), -1));
  return found;
}

std::optional<BarMap> find_bar(const Graph& g) { return find_bar(g, automorphism_group(g)); }

Graph quotient_prime(const Graph& g, const BarMap& bar) {
  if (bar.size() != g.order()) throw InvalidArgument("bar and graph differ in size");
  std::vector<Edge> edges;
  for (const auto& [u, v] : bar.blocks()) edges.emplace_back(u, v);
  return Graph(g.order(), edges, g.name() + "'");
}

std::map<std::pair<int, int>, std::vector<int>> partition_Vij(const Graph& g, const BarMap& bar,
                                                             const PartialColoring& c) {
  if (bar.size() != g.order() || c.size() != g.order()) {
    throw InvalidArgument("graph, bar and coloring differ in size");
  }
  if (!c.complete()) throw InvalidArgument("coloring is incomplete");
  std::map<std::pair<int, int>, std::vector<int>> cells;
  for (int u = 0; u < g.order(); ++u) cells[{c[u], c[bar(u)]}].push_back(u);
  return cells;
}

bool residues_distinct(const ResidueTable& t) {
  std::vector<bool> seen(static_cast<std::size_t>(t.k), false);
  for (int i = 1; i <= t.d; ++i) {
    for (int j = 1; j <= t.d; ++j) {
      const int r = ((t.at(i, j) % t.k) + t.k) % t.k;
      if (seen[r]) return false;
      seen[r] = true;
    }
  }
  return true;
}

bool residues_antisymmetric(const ResidueTable& t) {
  for (int i = 1; i <= t.d; ++i)
    for (int j = 1; j <= t.d; ++j)
      if (i != j && (t.at(i, j) + t.at(j, i)) % t.k != 0) return false;
  return true;
}

bool diagonal_not_opposed(const ResidueTable& t) {
  for (int i = 1; i <= t.d; ++i)
    for (int j = 1; j <= t.d; ++j)
      if (i != j && (t.at(i, i) + t.at(j, j)) % t.k == 0) return false;
  return true;
}

ResidueTable residue_table(int d) {
  if (d < 2) throw InvalidArgument("residue_table needs d >= 2");
  ResidueTable t;
  t.d = d;
  t.k = d * d + d - 2;
  const auto size = static_cast<std::size_t>(d + 1);
  t.r.assign(size, std::vector<int>(size, 0));
  t.delta.assign(size, std::vector<int>(size, 0));
  int rank = 0;
  for (int i = 1; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j) t.delta[i][j] = ++rank;
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d; ++j) {
      if (i < j) {
        t.r[i][j] = t.delta[i][j];
      } else if (i > j) {
        t.r[i][j] = t.k - t.delta[j][i];
      } else {
        t.r[i][j] = i < d ? d * (d - 1) / 2 + i : 0;
      }
    }
  }
  if (!residues_distinct(t) || !residues_antisymmetric(t) || !diagonal_not_opposed(t)) {
    throw std::logic_error("residue table properties fail for d = " + std::to_string(d));
  }
  return t;
}

bool only_bar_preserving(const Graph& g, const BarMap& bar, const PartialColoring& c,
                         std::string* diagnostic) {
  auto fail = [&](std::string why) {
    if (diagnostic) *diagnostic = std::move(why);
    return false;
  };
  if (bar.size() != g.order() || c.size() != g.order()) {
    return fail("graph, bar and coloring differ in size");
  }
  if (!c.complete()) return fail("coloring is incomplete");
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v) != g.adjacent(bar(u), bar(v))) {
        return fail("bar is not an automorphism: {" + std::to_string(u) + "," + std::to_string(v) +
                    "} is not mapped to an edge relation of the same kind");
      }
    }
  }
  for (int u = 0; u < g.order(); ++u) {
    if (c[u] != c[bar(u)]) return fail("bar does not preserve the coloring at " + std::to_string(u));
  }
  const AutGroup kept = color_preserving_subgroup(g, c);
  if (kept.order() != 2) {
    return fail("color preserving group has order " + std::to_string(kept.order()));
  }
  if (diagnostic) diagnostic->clear();
  return true;
}

}  // namespace distinguo
