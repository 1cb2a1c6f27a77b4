#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace distinguo {

/// Hard upper bound on vertex count; adjacency rows are single 64-bit words.
inline constexpr int kMaxVertices = 64;

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is a symmetric bit matrix, one 64-bit row per vertex. Family
/// generators fix a canonical labeling (see make_family) that the strategy
/// code relies on.
class Graph {
 public:
  /// Builds the graph from an edge list. Rejects self-loops, out-of-range
  /// endpoints, n < 1 and n > kMaxVertices. Duplicate edges are merged.
  Graph(int n, std::span<const Edge> edges, std::string name = {});
  Graph(int n, std::initializer_list<Edge> edges, std::string name = {});

  int order() const noexcept { return n_; }
  bool adjacent(int u, int v) const { return (adj_[check(u)] >> check(v)) & 1U; }
  std::uint64_t neighbors(int v) const { return adj_[check(v)]; }
  int degree(int v) const;
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;

  const std::string& name() const noexcept { return name_; }
  Graph renamed(std::string name) const;

  /// Equality of the labeled adjacency relation; names are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  Graph() = default;
  int check(int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
  std::string name_;

  friend Graph complement(const Graph& g);
  friend Graph relabel(const Graph& g, std::span<const int> image);
};

enum class Family { Cycle, Path, Complete, Hypercube, DisjointK2 };

Family parse_family(std::string_view name);
std::string_view family_name(Family kind);

/// Standard graph families with fixed labelings:
///   cycle n      vertices 0..n-1, edges {i, i+1 mod n}          (n >= 3)
///   path n       edges {i, i+1}
///   complete n   all pairs
///   hypercube n  vertex u is the binary word whose letter i is bit i of u
///   disjoint_k2 n  2n vertices, edges {2i, 2i+1}
Graph make_family(Family kind, int param);

/// Cartesian product; vertex (u, x) is labeled u * h.order() + x.
Graph cartesian_product(const Graph& g, const Graph& h);

Graph complement(const Graph& g);

/// Copy of `g` with vertex v renamed image[v]. `image` must be a bijection.
Graph relabel(const Graph& g, std::span<const int> image);

/// BFS edge distance, nullopt when u and v lie in different components.
std::optional<int> distance(const Graph& g, int u, int v);

/// All-pairs BFS distances; unreachable pairs hold -1.
std::vector<std::vector<int>> distance_matrix(const Graph& g);

/// graph6 codec (n <= kMaxVertices). Parsing tolerates one trailing
/// newline and an optional ">>graph6<<" header; anything else malformed
/// raises ParseError with the offending byte offset.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

}  // namespace distinguo
