#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "distinguo/distinguishing.hpp"
#include "distinguo/graph.hpp"
#include "distinguo/symmetry.hpp"

namespace distinguo {

/// Fixed-point-free involution u -> ū on the vertex set. Construction only
/// checks the involution axioms; commuting with Aut(g) is checked by
/// is_valid_bar.
class BarMap {
 public:
  explicit BarMap(std::vector<int> image);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int u) const { return image_.at(static_cast<std::size_t>(u)); }
  const std::vector<int>& image() const noexcept { return image_; }
  /// Pairs {u, ū} with u < ū, ascending in u.
  std::vector<std::pair<int, int>> blocks() const;
  Permutation as_permutation() const { return Permutation(image_); }

  friend bool operator==(const BarMap&, const BarMap&) = default;

 private:
  std::vector<int> image_;
};

/// Bar commutes with every element of `aut`.
bool is_valid_bar(const AutGroup& aut, const BarMap& bar);
bool is_valid_bar(const Graph& g, const BarMap& bar);

/// Lexicographically least fixed-point-free involution commuting with
/// Aut(g), or nullopt. The result is audited against every group element.
std::optional<BarMap> find_bar(const Graph& g);
std::optional<BarMap> find_bar(const Graph& g, const AutGroup& aut);

/// The perfect matching {u, ū}: n/2 disjoint K2 on the same vertices.
Graph quotient_prime(const Graph& g, const BarMap& bar);

/// V_ij = {u : c(u) = i, c(ū) = j}; only nonempty cells are listed.
std::map<std::pair<int, int>, std::vector<int>> partition_Vij(const Graph& g, const BarMap& bar,
                                                             const PartialColoring& c);

struct ResidueTable {
  int d = 0;
  int k = 0;
  /// r[i][j] for 1 <= i, j <= d; row and column 0 unused.
  std::vector<std::vector<int>> r;
  /// delta[i][j] for i < j, else 0.
  std::vector<std::vector<int>> delta;

  int at(int i, int j) const { return r.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j)); }
};

/// Residues modulo k = d^2 + d - 2. Throws std::logic_error if the
/// distinctness or antisymmetry properties fail.
ResidueTable residue_table(int d);

/// Property checks used by residue_table, exposed for tests.
bool residues_distinct(const ResidueTable& t);
bool residues_antisymmetric(const ResidueTable& t);
bool diagonal_not_opposed(const ResidueTable& t);

/// Aut_c(g) = {id, Bar}. Returns false with a diagnostic when Bar is not an
/// automorphism of g or does not preserve c.
bool only_bar_preserving(const Graph& g, const BarMap& bar, const PartialColoring& c,
                         std::string* diagnostic = nullptr);

}  // namespace distinguo
