#pragma once

// Independent reference implementations for tests. Nothing here calls the
// library's symmetry, distinguishing or solver code.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "distinguo/graph.hpp"

namespace oracle {

using Perm = std::vector<int>;

/// Every adjacency-preserving permutation, by trying all n! of them.
inline std::vector<Perm> brute_automorphisms(const distinguo::Graph& g) {
  const int n = g.order();
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) ok = g.adjacent(u, v) == g.adjacent(p[u], p[v]);
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline bool distinguishes(const std::vector<Perm>& auts, const std::vector<int>& colors) {
  for (const Perm& p : auts) {
    bool identity = true;
    bool kept = true;
    for (std::size_t v = 0; v < p.size(); ++v) {
      identity = identity && p[v] == static_cast<int>(v);
      kept = kept && colors[static_cast<std::size_t>(p[v])] == colors[v];
    }
    if (!identity && kept) return false;
  }
  return true;
}

/// Least d <= d_max with a distinguishing d-coloring, by plain enumeration;
/// 0 when none.
inline int brute_distinguishing_number(const distinguo::Graph& g, int d_max) {
  const auto auts = brute_automorphisms(g);
  const int n = g.order();
  for (int d = 1; d <= d_max; ++d) {
    std::vector<int> c(static_cast<std::size_t>(n), 1);
    while (true) {
      if (distinguishes(auts, c)) return d;
      int i = 0;
      while (i < n && c[static_cast<std::size_t>(i)] == d) c[static_cast<std::size_t>(i++)] = 1;
      if (i == n) break;
      ++c[static_cast<std::size_t>(i)];
    }
  }
  return 0;
}

/// Game value by minimax over raw colorings, memoized on the exact coloring
/// (no symmetry reduction). Returns true when the Gentle wins.
class GameOracle {
 public:
  GameOracle(const distinguo::Graph& g, int d) : auts_(brute_automorphisms(g)), n_(g.order()), d_(d) {}

  bool gentle_wins(bool gentle_first) {
    memo_.clear();
    std::vector<int> c(static_cast<std::size_t>(n_), 0);
    return value(c, 0, gentle_first);
  }

 private:
  bool value(std::vector<int>& c, int colored, bool gentle_first) {
    if (colored == n_) return distinguishes(auts_, c);
    std::uint64_t key = 0;
    for (int x : c) key = key * static_cast<std::uint64_t>(d_ + 1) + static_cast<std::uint64_t>(x);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const bool gentle_moves = (colored % 2 == 0) == gentle_first;
    bool result = !gentle_moves;
    for (int v = 0; v < n_ && result != gentle_moves; ++v) {
      if (c[static_cast<std::size_t>(v)] != 0) continue;
      for (int col = 1; col <= d_; ++col) {
        c[static_cast<std::size_t>(v)] = col;
        const bool w = value(c, colored + 1, gentle_first);
        c[static_cast<std::size_t>(v)] = 0;
        if (w == gentle_moves) {
          result = gentle_moves;
          break;
        }
      }
    }
    memo_.emplace(key, result);
    return result;
  }

  std::vector<Perm> auts_;
  int n_;
  int d_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

inline std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(line);
  return out;
}

}  // namespace oracle
