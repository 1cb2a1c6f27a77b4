#include "distinguo/graph.hpp"

#include <bit>
#include <deque>
#include <string>

#include "distinguo/errors.hpp"

namespace distinguo {

Graph::Graph(int n, std::span<const Edge> edges, std::string name)
    : n_(n), name_(std::move(name)) {
  if (n < 1 || n > kMaxVertices) {
    throw InvalidArgument("graph order must lie in 1.." + std::to_string(kMaxVertices) +
                          ", got " + std::to_string(n));
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : edges) {
    check(u);
    check(v);
    if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
  }
}

Graph::Graph(int n, std::initializer_list<Edge> edges, std::string name)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(name)) {}

int Graph::check(int v) const {
  if (v < 0 || v >= n_) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " +
                          std::to_string(n_));
  }
  return v;
}

int Graph::degree(int v) const { return std::popcount(adj_[check(v)]); }

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (auto row : adj_) twice += static_cast<std::size_t>(std::popcount(row));
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if ((adj_[u] >> v) & 1U) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::renamed(std::string name) const {
  Graph g = *this;
  g.name_ = std::move(name);
  return g;
}

Family parse_family(std::string_view name) {
  if (name == "cycle") return Family::Cycle;
  if (name == "path") return Family::Path;
  if (name == "complete") return Family::Complete;
  if (name == "hypercube") return Family::Hypercube;
  if (name == "disjoint_k2") return Family::DisjointK2;
  throw InvalidArgument("unknown graph family '" + std::string(name) + "'");
}

std::string_view family_name(Family kind) {
  switch (kind) {
    case Family::Cycle: return "cycle";
    case Family::Path: return "path";
    case Family::Complete: return "complete";
    case Family::Hypercube: return "hypercube";
    case Family::DisjointK2: return "disjoint_k2";
  }
  return "?";
}

Graph make_family(Family kind, int param) {
  if (param < 1) throw InvalidArgument("family parameter must be >= 1");
  std::vector<Edge> edges;
  switch (kind) {
    case Family::Cycle: {
      if (param < 3) throw InvalidArgument("cycle needs at least 3 vertices");
      for (int i = 0; i < param; ++i) edges.emplace_back(i, (i + 1) % param);
      return Graph(param, edges, "C" + std::to_string(param));
    }
    case Family::Path: {
      for (int i = 0; i + 1 < param; ++i) edges.emplace_back(i, i + 1);
      return Graph(param, edges, "P" + std::to_string(param));
    }
    case Family::Complete: {
      for (int i = 0; i < param; ++i)
        for (int j = i + 1; j < param; ++j) edges.emplace_back(i, j);
      return Graph(param, edges, "K" + std::to_string(param));
    }
    case Family::Hypercube: {
      if (param > 6) throw InvalidArgument("hypercube dimension must be <= 6");
      const int n = 1 << param;
      for (int u = 0; u < n; ++u)
        for (int i = 0; i < param; ++i) {
          const int v = u ^ (1 << i);
          if (u < v) edges.emplace_back(u, v);
        }
      return Graph(n, edges, "Q" + std::to_string(param));
    }
    case Family::DisjointK2: {
      for (int i = 0; i < param; ++i) edges.emplace_back(2 * i, 2 * i + 1);
      return Graph(2 * param, edges, std::to_string(param) + "K2");
    }
  }
  throw InvalidArgument("unknown graph family");
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const int ng = g.order();
  const int nh = h.order();
  if (ng * nh > kMaxVertices) throw InvalidArgument("product exceeds the vertex limit");
  std::vector<Edge> edges;
  for (int u = 0; u < ng; ++u)
    for (int x = 0; x < nh; ++x)
      for (int y = x + 1; y < nh; ++y)
        if (h.adjacent(x, y)) edges.emplace_back(u * nh + x, u * nh + y);
  for (int x = 0; x < nh; ++x)
    for (int u = 0; u < ng; ++u)
      for (int v = u + 1; v < ng; ++v)
        if (g.adjacent(u, v)) edges.emplace_back(u * nh + x, v * nh + x);
  return Graph(ng * nh, edges, g.name() + "x" + h.name());
}

Graph complement(const Graph& g) {
  Graph out;
  out.n_ = g.n_;
  out.name_ = "co-" + g.name_;
  const std::uint64_t all = g.n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n_) - 1;
  out.adj_.resize(g.adj_.size());
  for (int v = 0; v < g.n_; ++v) out.adj_[v] = ~g.adj_[v] & all & ~(std::uint64_t{1} << v);
  return out;
}

Graph relabel(const Graph& g, std::span<const int> image) {
  const int n = g.order();
  if (static_cast<int>(image.size()) != n) throw InvalidArgument("relabel: size mismatch");
  std::uint64_t seen = 0;
  for (int v : image) {
    if (v < 0 || v >= n || ((seen >> v) & 1U)) throw InvalidArgument("relabel: not a bijection");
    seen |= std::uint64_t{1} << v;
  }
  Graph out;
  out.n_ = n;
  out.name_ = g.name_;
  out.adj_.assign(static_cast<std::size_t>(n), 0);
  for (const auto& [u, v] : g.edges()) {
    out.adj_[image[u]] |= std::uint64_t{1} << image[v];
    out.adj_[image[v]] |= std::uint64_t{1} << image[u];
  }
  return out;
}

namespace {

std::vector<int> bfs(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (std::uint64_t nb = g.neighbors(u); nb != 0; nb &= nb - 1) {
      const int v = std::countr_zero(nb);
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

std::optional<int> distance(const Graph& g, int u, int v) {
  g.degree(u);
  g.degree(v);
  const int d = bfs(g, u)[v];
  if (d < 0) return std::nullopt;
  return d;
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (int u = 0; u < g.order(); ++u) out.push_back(bfs(g, u));
  return out;
}

}  // namespace distinguo
