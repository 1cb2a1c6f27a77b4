#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "distinguo/graph.hpp"
#include "distinguo/symmetry.hpp"

namespace distinguo {

/// Vertex colors over {0 = uncolored} ∪ {1..budget}.
class PartialColoring {
 public:
  PartialColoring(int n, int budget);
  /// Throws InvalidArgument if any entry lies outside 0..budget.
  PartialColoring(std::span<const int> colors, int budget);
  PartialColoring(std::initializer_list<int> colors, int budget)
      : PartialColoring(std::span<const int>(colors.begin(), colors.size()), budget) {}

  int size() const noexcept { return static_cast<int>(colors_.size()); }
  int budget() const noexcept { return budget_; }
  int operator[](int v) const { return colors_[static_cast<std::size_t>(v)]; }
  bool is_colored(int v) const { return (*this)[v] != 0; }

  void set(int v, int color);
  void clear(int v);

  int colored_count() const noexcept { return colored_; }
  bool complete() const noexcept { return colored_ == size(); }

  std::span<const std::uint8_t> raw() const noexcept { return colors_; }
  std::vector<int> to_vector() const { return {colors_.begin(), colors_.end()}; }

  friend bool operator==(const PartialColoring&, const PartialColoring&) = default;

 private:
  std::vector<std::uint8_t> colors_;
  int budget_;
  int colored_ = 0;
};

/// c ∘ p == c. Requires a complete coloring.
bool preserves(const Permutation& p, const PartialColoring& c);

/// Aut_c(g) by color-constrained enumeration.
AutGroup color_preserving_subgroup(const Graph& g, const PartialColoring& c);
/// Aut_c restricted to an already enumerated group.
AutGroup color_preserving_subgroup(const AutGroup& aut, const PartialColoring& c);

/// Aut_c(g) is trivial. Requires a complete coloring.
bool is_distinguishing(const Graph& g, const PartialColoring& c);
bool is_distinguishing(const AutGroup& aut, const PartialColoring& c);

struct DistinguishingNumber {
  std::optional<int> value;  ///< nullopt: no distinguishing coloring with <= d_max colors
  std::optional<PartialColoring> witness;
};

/// Least d <= d_max admitting a distinguishing d-coloring. Colorings are
/// enumerated in lexicographic order with first-use color canonicalization
/// (color k+1 appears only after color k), so the first witness found is
/// lexicographically least among canonical colorings.
DistinguishingNumber distinguishing_number(const Graph& g, int d_max);

}  // namespace distinguo
