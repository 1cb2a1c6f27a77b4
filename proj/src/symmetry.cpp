#include "distinguo/symmetry.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <set>
#include <string>

#include "distinguo/errors.hpp"

namespace distinguo {

Permutation::Permutation(std::span<const int> image) {
  if (image.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw InvalidArgument("permutation degree exceeds vertex limit");
  }
  const int n = static_cast<int>(image.size());
  std::uint64_t seen = 0;
  image_.reserve(image.size());
  for (int v : image) {
    if (v < 0 || v >= n || ((seen >> v) & 1U)) {
      throw InvalidArgument("permutation image is not a bijection");
    }
    seen |= std::uint64_t{1} << v;
    image_.push_back(static_cast<std::uint8_t>(v));
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  return Permutation(image);
}

std::vector<int> Permutation::to_vector() const { return {image_.begin(), image_.end()}; }

Permutation Permutation::inverse() const {
  Permutation out = *this;
  for (std::size_t v = 0; v < image_.size(); ++v) out.image_[image_[v]] = static_cast<std::uint8_t>(v);
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t v = 0; v < image_.size(); ++v)
    if (image_[v] != v) return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InvalidArgument("composing permutations of different degree");
  Permutation out = b;
  for (auto& x : out.image_) x = a.image_[x];
  return out;
}

int element_order(const Permutation& p) {
  const int n = p.size();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  long long order = 1;
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    int len = 0;
    for (int u = v; !seen[u]; u = p(u)) {
      seen[u] = true;
      ++len;
    }
    order = std::lcm(order, static_cast<long long>(len));
  }
  return static_cast<int>(order);
}

std::vector<int> fixed_points(const Permutation& p) {
  std::vector<int> out;
  for (int v = 0; v < p.size(); ++v)
    if (p(v) == v) out.push_back(v);
  return out;
}

AutGroup::AutGroup(int degree, std::vector<Permutation> elements)
    : degree_(degree), elements_(std::move(elements)) {
  for (const auto& p : elements_) {
    if (p.size() != degree_) throw InvalidArgument("group element has wrong degree");
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  if (elements_.empty() || !elements_.front().is_identity()) {
    throw InvalidArgument("group must contain the identity");
  }

  // One element per (first moved point, its image): transversals of the
  // pointwise stabilizer chain, hence a generating set.
  std::set<std::pair<int, int>> seen;
  for (const auto& p : elements_) {
    int i = 0;
    while (i < degree_ && p(i) == i) ++i;
    if (i == degree_) continue;
    if (seen.emplace(i, p(i)).second) generators_.push_back(p);
  }

  packed_.reserve(elements_.size() * static_cast<std::size_t>(degree_));
  packed_inverse_.reserve(packed_.capacity());
  for (const auto& p : elements_) {
    packed_.insert(packed_.end(), p.image().begin(), p.image().end());
    const auto inv = p.inverse();
    packed_inverse_.insert(packed_inverse_.end(), inv.image().begin(), inv.image().end());
  }
}

AutGroup AutGroup::generated_by(int degree, std::span<const Permutation> generators,
                                std::size_t cap) {
  std::set<Permutation> members{Permutation::identity(degree)};
  std::deque<Permutation> queue{Permutation::identity(degree)};
  while (!queue.empty()) {
    const Permutation e = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation x = g * e;
      if (members.insert(x).second) {
        if (members.size() > cap) throw ResourceError("group too large (cap " + std::to_string(cap) + ")");
        queue.push_back(std::move(x));
      }
    }
  }
  return AutGroup(degree, {members.begin(), members.end()});
}

bool AutGroup::contains(const Permutation& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

namespace {

std::vector<std::vector<int>> signatures(const Graph& g) {
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    auto& s = sig[v];
    for (std::uint64_t nb = g.neighbors(v); nb != 0; nb &= nb - 1) {
      s.push_back(g.degree(std::countr_zero(nb)));
    }
    std::sort(s.begin(), s.end());
    s.insert(s.begin(), g.degree(v));
  }
  return sig;
}

}  // namespace

MappingSearch::MappingSearch(const Graph& source, const Graph& target)
    : n_(source.order()), same_(&source == &target || source == target) {
  candidates_.assign(static_cast<std::size_t>(n_), 0);
  if (source.order() != target.order() || source.edge_count() != target.edge_count()) {
    n_ = -1;
    return;
  }
  dist_source_ = distance_matrix(source);
  dist_target_ = same_ ? dist_source_ : distance_matrix(target);
  const auto sig_s = signatures(source);
  const auto sig_t = same_ ? sig_s : signatures(target);
  for (int v = 0; v < n_; ++v)
    for (int w = 0; w < n_; ++w)
      if (sig_s[v] == sig_t[w]) candidates_[v] |= std::uint64_t{1} << w;
}

template <class Visit>
void MappingSearch::run(std::span<const std::uint8_t> colors, Visit&& visit) const {
  if (n_ < 0) return;
  if (!colors.empty() && static_cast<int>(colors.size()) != n_) {
    throw InvalidArgument("vertex color vector has wrong length");
  }
  std::vector<int> image(static_cast<std::size_t>(n_), -1);
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(n_), 0);
  std::uint64_t used = 0;
  int pos = 0;
  bool fresh = true;
  // Iterative DFS: masks[pos] holds untried candidates for vertex pos.
  while (pos >= 0) {
    if (fresh) {
      std::uint64_t cand = candidates_[pos] & ~used;
      if (!colors.empty()) {
        std::uint64_t same_color = 0;
        for (std::uint64_t m = cand; m != 0; m &= m - 1) {
          const int w = std::countr_zero(m);
          if (colors[w] == colors[pos]) same_color |= std::uint64_t{1} << w;
        }
        cand = same_color;
      }
      masks[pos] = cand;
      fresh = false;
    }
    if (image[pos] >= 0) {
      used &= ~(std::uint64_t{1} << image[pos]);
      image[pos] = -1;
    }
    bool placed = false;
    while (masks[pos] != 0) {
      const int w = std::countr_zero(masks[pos]);
      masks[pos] &= masks[pos] - 1;
      bool ok = true;
      const auto& ds = dist_source_[pos];
      for (int u = 0; u < pos && ok; ++u) ok = ds[u] == dist_target_[image[u]][w];
      if (ok) {
        image[pos] = w;
        used |= std::uint64_t{1} << w;
        placed = true;
        break;
      }
    }
    if (!placed) {
      --pos;
      continue;
    }
    if (pos + 1 == n_) {
      if (!visit(image)) return;
      continue;
    }
    ++pos;
    fresh = true;
  }
}

std::vector<Permutation> MappingSearch::enumerate(std::span<const std::uint8_t> colors,
                                                  std::size_t cap) const {
  std::vector<Permutation> out;
  run(colors, [&](const std::vector<int>& image) {
    if (out.size() >= cap) throw ResourceError("group too large (cap " + std::to_string(cap) + ")");
    out.emplace_back(image);
    return true;
  });
  return out;
}

std::optional<Permutation> MappingSearch::first_nontrivial(std::span<const std::uint8_t> colors) const {
  std::optional<Permutation> found;
  run(colors, [&](const std::vector<int>& image) {
    if (same_) {
      bool identity = true;
      for (int v = 0; v < n_ && identity; ++v) identity = image[v] == v;
      if (identity) return true;
    }
    found.emplace(image);
    return false;
  });
  return found;
}

AutGroup automorphism_group(const Graph& g, std::size_t cap) {
  return AutGroup(g.order(), MappingSearch(g).enumerate({}, cap));
}

std::vector<std::vector<int>> orbits(const AutGroup& group) {
  const int n = group.degree();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& p : group.generators()) {
    for (int v = 0; v < n; ++v) {
      const int a = find(v);
      const int b = find(p(v));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> cells;
  std::vector<int> cell_of(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    const int r = find(v);
    if (cell_of[r] < 0) {
      cell_of[r] = static_cast<int>(cells.size());
      cells.emplace_back();
    }
    cells[cell_of[r]].push_back(v);
  }
  return cells;
}

std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (a == b) return Permutation::identity(a.order());
  return MappingSearch(a, b).first_nontrivial();
}

bool is_determining_set(const AutGroup& aut, std::span<const int> s) {
  for (const auto& p : aut.elements()) {
    if (p.is_identity()) continue;
    if (std::all_of(s.begin(), s.end(), [&](int v) { return p(v) == v; })) return false;
  }
  return true;
}

bool is_determining_set(const Graph& g, std::span<const int> s) {
  for (int v : s) g.degree(v);
  return is_determining_set(automorphism_group(g), s);
}

bool hypercube_determining_condition(int dimension, std::span<const int> s) {
  if (dimension < 1 || dimension > 6) throw InvalidArgument("hypercube dimension must lie in 1..6");
  const int n = 1 << dimension;
  for (int v : s)
    if (v < 0 || v >= n) throw InvalidArgument("word out of range for the hypercube");
  std::uint64_t present = 0;
  for (int v : s) present |= std::uint64_t{1} << v;
  for (int i = 0; i < dimension; ++i) {
    bool found = false;
    for (int v : s) {
      if ((present >> (v ^ (1 << i))) & 1U) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace distinguo
