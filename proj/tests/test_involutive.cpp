#include <doctest.h>

#include <cmath>
#include <set>

#include "distinguo/errors.hpp"
#include "distinguo/game.hpp"
#include "distinguo/harness.hpp"
#include "distinguo/involutive.hpp"
#include "distinguo/strategies.hpp"
#include "oracle.hpp"

using namespace distinguo;

TEST_CASE("Bar maps") {
  CHECK_THROWS_AS(BarMap({0, 1}), InvalidArgument);
  CHECK_THROWS_AS(BarMap({1, 2, 0}), InvalidArgument);
  const BarMap cube = hypercube_bar(3);
  CHECK(cube(0) == 7);
  CHECK(cube(5) == 2);
  CHECK(is_valid_bar(make_family(Family::Hypercube, 3), cube));
  CHECK(cube.blocks().size() == 4);
  const BarMap c8 = cycle_bar(8);
  CHECK(c8(1) == 5);
  CHECK(is_valid_bar(make_family(Family::Cycle, 8), c8));
  // Pairing consecutive vertices of C6 does not commute with rotation.
  CHECK_FALSE(is_valid_bar(make_family(Family::Cycle, 6), BarMap({1, 0, 3, 2, 5, 4})));
}

TEST_CASE("find_bar") {
  const auto q3 = find_bar(make_family(Family::Hypercube, 3));
  REQUIRE(q3.has_value());
  CHECK(is_valid_bar(make_family(Family::Hypercube, 3), *q3));
  CHECK(find_bar(make_family(Family::DisjointK2, 3)).has_value());
  CHECK_FALSE(find_bar(make_family(Family::Cycle, 5)).has_value());
  CHECK_FALSE(find_bar(z3_graph()).has_value());
  const auto c6 = find_bar(make_family(Family::Cycle, 6));
  REQUIRE(c6.has_value());
  CHECK(is_valid_bar(automorphism_group(make_family(Family::Cycle, 6)), *c6));
}

TEST_CASE("quotient and V_ij cells") {
  const Graph q3 = make_family(Family::Hypercube, 3);
  const BarMap bar = hypercube_bar(3);
  const Graph gp = quotient_prime(q3, bar);
  CHECK(gp.edge_count() == 4);
  for (const auto& [u, v] : bar.blocks()) CHECK(gp.adjacent(u, v));
  const PartialColoring c({1, 2, 1, 1, 2, 2, 1, 2}, 2);
  const auto cells = partition_Vij(q3, bar, c);
  std::size_t total = 0;
  for (const auto& [ij, vs] : cells) {
    total += vs.size();
    for (int u : vs) {
      CHECK(c[u] == ij.first);
      CHECK(c[bar(u)] == ij.second);
    }
  }
  CHECK(total == 8);
}

TEST_CASE("residue table properties for 2 <= d <= 8") {
  for (int d = 2; d <= 8; ++d) {
    const ResidueTable t = residue_table(d);
    CAPTURE(d);
    CHECK(t.k == d * d + d - 2);
    CHECK(residues_distinct(t));
    CHECK(residues_antisymmetric(t));
    CHECK(diagonal_not_opposed(t));
    // Independent restatement of the three properties.
    std::set<int> seen;
    for (int i = 1; i <= d; ++i) {
      for (int j = 1; j <= d; ++j) {
        const int r = t.at(i, j);
        CHECK(r >= 0);
        CHECK(r < t.k);
        seen.insert(r);
        if (i != j) CHECK((r + t.at(j, i)) % t.k == 0);
      }
    }
    CHECK(seen.size() == static_cast<std::size_t>(d * d));
    for (int i = 1; i <= d; ++i)
      for (int j = 1; j <= d; ++j)
        if (i != j) CHECK((t.at(i, i) + t.at(j, j)) % t.k != 0);
  }
  CHECK_THROWS_AS(residue_table(1), InvalidArgument);
}

TEST_CASE("only_bar_preserving on the constructed colorings") {
  for (int order : {12, 14, 16}) {
    std::string why;
    CHECK(only_bar_preserving(make_family(Family::Cycle, order), cycle_bar(order), even_cycle_coloring(order), &why));
    CHECK(why.empty());
  }
  const Graph q5 = make_family(Family::Hypercube, 5);
  std::string why;
  CHECK(only_bar_preserving(q5, hypercube_bar(5), hypercube_s_coloring(5), &why));
  CHECK_FALSE(only_bar_preserving(q5, hypercube_bar(5), hypercube_s_coloring(5, Construction::Literal), &why));
  CHECK(why.find("16") != std::string::npos);
  CHECK(only_bar_preserving(make_family(Family::Hypercube, 6), hypercube_bar(6),
                            hypercube_s_coloring(6, Construction::Literal)));
  // A coloring fixed by more than Bar.
  const Graph c12 = make_family(Family::Cycle, 12);
  CHECK_FALSE(only_bar_preserving(c12, cycle_bar(12), PartialColoring(std::vector<int>(12, 1), 2), &why));
}

TEST_CASE("involutive graphs on the corpus satisfy the generic bounds") {
  for (const auto& line : oracle::read_lines(DISTINGUO_TEST_DATA "/graphs_upto6.g6")) {
    const Graph g = parse_graph6(line);
    const auto bar = find_bar(g);
    if (!bar) continue;
    CAPTURE(line);
    const int n = g.order();
    const auto d = distinguishing_number(g, 6);
    REQUIRE(d.value.has_value());
    CHECK(*d.value <= static_cast<int>(std::ceil((1 + std::sqrt(4.0 * n + 1)) / 2)));
    const int bound = n / 2 + 1;
    CHECK(solve(g, bound, Player::Rascal).winner == Player::Gentle);
  }
}
