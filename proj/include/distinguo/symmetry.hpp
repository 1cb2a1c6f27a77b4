#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "distinguo/graph.hpp"

namespace distinguo {

/// Bijection on 0..n-1, stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless `image` is a bijection on 0..size-1.
  explicit Permutation(std::span<const int> image);
  explicit Permutation(std::initializer_list<int> image)
      : Permutation(std::span<const int>(image.begin(), image.size())) {}

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int v) const { return image_[static_cast<std::size_t>(v)]; }
  std::span<const std::uint8_t> image() const noexcept { return image_; }
  std::vector<int> to_vector() const;

  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// (a * b)(v) = a(b(v)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint8_t> image_;
};

/// Least k >= 1 with p^k = id.
int element_order(const Permutation& p);
std::vector<int> fixed_points(const Permutation& p);

inline constexpr std::size_t kDefaultGroupCap = 10'000'000;

/// Explicit permutation group: every element plus a generating sublist.
///
/// Elements are kept in lexicographic order of their image arrays, so the
/// identity is always elements()[0].
class AutGroup {
 public:
  /// `elements` must already form a group on `degree` points; only cheap
  /// structural checks (sizes, presence of the identity) are made here.
  AutGroup(int degree, std::vector<Permutation> elements);

  /// Closure of `generators` under composition. Throws ResourceError past `cap`.
  static AutGroup generated_by(int degree, std::span<const Permutation> generators,
                               std::size_t cap = kDefaultGroupCap);

  int degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  bool contains(const Permutation& p) const;

  /// Elements packed row-major (order() x degree()); used by hot loops.
  std::span<const std::uint8_t> packed() const noexcept { return packed_; }
  std::span<const std::uint8_t> packed_inverse() const noexcept { return packed_inverse_; }

 private:
  int degree_;
  std::vector<Permutation> elements_;
  std::vector<Permutation> generators_;
  std::vector<std::uint8_t> packed_;
  std::vector<std::uint8_t> packed_inverse_;
};

/// Backtracking search for vertex maps between two graphs that preserve
/// distances (hence adjacency) and optional vertex colors. Candidate images
/// are pruned by (color, degree, sorted neighbour degrees) and by distances
/// to every already-mapped vertex. Vertices are mapped in increasing label
/// order and candidates tried in increasing order, so output is
/// lexicographic.
class MappingSearch {
 public:
  MappingSearch(const Graph& source, const Graph& target);
  explicit MappingSearch(const Graph& g) : MappingSearch(g, g) {}

  /// All color-preserving isomorphisms source -> target. `colors` (when
  /// non-empty) has one entry per vertex and applies to both sides.
  std::vector<Permutation> enumerate(std::span<const std::uint8_t> colors = {},
                                     std::size_t cap = kDefaultGroupCap) const;

  /// First color-preserving map that is not the identity (first map at all
  /// when source and target differ).
  std::optional<Permutation> first_nontrivial(std::span<const std::uint8_t> colors = {}) const;

 private:
  template <class Visit>
  void run(std::span<const std::uint8_t> colors, Visit&& visit) const;

  int n_;
  bool same_;
  std::vector<std::vector<int>> dist_source_;
  std::vector<std::vector<int>> dist_target_;
  std::vector<std::uint64_t> candidates_;
};

/// Full automorphism group by exhaustive enumeration.
AutGroup automorphism_group(const Graph& g, std::size_t cap = kDefaultGroupCap);

/// Orbit partition of {0..degree-1}; cells sorted, ordered by least member.
std::vector<std::vector<int>> orbits(const AutGroup& group);

/// Desk-scale isomorphism test.
std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b);

/// True iff the pointwise stabilizer of `s` in Aut(g) is trivial.
bool is_determining_set(const Graph& g, std::span<const int> s);
bool is_determining_set(const AutGroup& aut, std::span<const int> s);

/// Sufficient hypercube condition: for each coordinate i some pair of words
/// in `s` differs exactly in letter i.
bool hypercube_determining_condition(int dimension, std::span<const int> s);

}  // namespace distinguo
