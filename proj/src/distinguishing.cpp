#include "distinguo/distinguishing.hpp"

#include <string>

#include "distinguo/errors.hpp"

namespace distinguo {

PartialColoring::PartialColoring(int n, int budget)
    : colors_(static_cast<std::size_t>(n), 0), budget_(budget) {
  if (n < 0 || n > kMaxVertices) throw InvalidArgument("coloring size out of range");
  if (budget < 1) throw InvalidArgument("color budget must be >= 1");
}

PartialColoring::PartialColoring(std::span<const int> colors, int budget)
    : PartialColoring(static_cast<int>(colors.size()), budget) {
  for (int v = 0; v < size(); ++v) {
    if (colors[v] != 0) set(v, colors[v]);
  }
}

void PartialColoring::set(int v, int color) {
  if (v < 0 || v >= size()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  if (color < 1 || color > budget_) {
    throw InvalidArgument("color " + std::to_string(color) + " outside 1.." + std::to_string(budget_));
  }
  if (colors_[v] == 0) ++colored_;
  colors_[v] = static_cast<std::uint8_t>(color);
}

void PartialColoring::clear(int v) {
  if (v < 0 || v >= size()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  if (colors_[v] != 0) --colored_;
  colors_[v] = 0;
}

namespace {

void require_complete(const PartialColoring& c) {
  if (!c.complete()) throw InvalidArgument("coloring is incomplete");
}

bool preserves_raw(std::span<const std::uint8_t> perm, std::span<const std::uint8_t> colors) {
  for (std::size_t v = 0; v < colors.size(); ++v)
    if (colors[perm[v]] != colors[v]) return false;
  return true;
}

}  // namespace

bool preserves(const Permutation& p, const PartialColoring& c) {
  require_complete(c);
  if (p.size() != c.size()) throw InvalidArgument("permutation and coloring differ in size");
  return preserves_raw(p.image(), c.raw());
}

AutGroup color_preserving_subgroup(const Graph& g, const PartialColoring& c) {
  require_complete(c);
  if (c.size() != g.order()) throw InvalidArgument("coloring and graph differ in size");
  return AutGroup(g.order(), MappingSearch(g).enumerate(c.raw()));
}

AutGroup color_preserving_subgroup(const AutGroup& aut, const PartialColoring& c) {
  require_complete(c);
  std::vector<Permutation> kept;
  for (const auto& p : aut.elements())
    if (preserves_raw(p.image(), c.raw())) kept.push_back(p);
  return AutGroup(aut.degree(), std::move(kept));
}

bool is_distinguishing(const Graph& g, const PartialColoring& c) {
  require_complete(c);
  if (c.size() != g.order()) throw InvalidArgument("coloring and graph differ in size");
  return !MappingSearch(g).first_nontrivial(c.raw()).has_value();
}

bool is_distinguishing(const AutGroup& aut, const PartialColoring& c) {
  require_complete(c);
  const auto n = static_cast<std::size_t>(aut.degree());
  const auto packed = aut.packed();
  for (std::size_t e = 1; e < aut.order(); ++e) {
    if (preserves_raw(packed.subspan(e * n, n), c.raw())) return false;
  }
  return true;
}

DistinguishingNumber distinguishing_number(const Graph& g, int d_max) {
  if (d_max < 1) throw InvalidArgument("d_max must be >= 1");
  const int n = g.order();
  const MappingSearch search(g);

  // Small groups are cheaper to filter explicitly than to search.
  std::optional<AutGroup> aut;
  try {
    aut.emplace(automorphism_group(g, 4096));
  } catch (const ResourceError&) {
  }
  if (aut && aut->order() == 1) {
    return {1, PartialColoring(std::vector<int>(static_cast<std::size_t>(n), 1), 1)};
  }

  for (int d = 1; d <= d_max; ++d) {
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    std::vector<std::uint8_t> raw(static_cast<std::size_t>(n), 0);
    std::optional<PartialColoring> found;

    // used = number of distinct colors among vertices 0..pos-1.
    auto dfs = [&](auto&& self, int pos, int used) -> bool {
      if (used + (n - pos) < d) return false;
      if (pos == n) {
        if (used != d) return false;  // fewer colors were ruled out at d - 1
        bool distinguishing = false;
        if (aut) {
          distinguishing = true;
          const auto un = static_cast<std::size_t>(n);
          for (std::size_t e = 1; e < aut->order() && distinguishing; ++e)
            distinguishing = !preserves_raw(aut->packed().subspan(e * un, un), raw);
        } else {
          distinguishing = !search.first_nontrivial(raw).has_value();
        }
        if (distinguishing) found.emplace(colors, d);
        return distinguishing;
      }
      const int limit = std::min(d, used + 1);
      for (int color = 1; color <= limit; ++color) {
        colors[pos] = color;
        raw[pos] = static_cast<std::uint8_t>(color);
        if (self(self, pos + 1, std::max(used, color))) return true;
      }
      return false;
    };
    if (dfs(dfs, 0, 0)) return {d, std::move(found)};
  }
  return {};
}

}  // namespace distinguo
