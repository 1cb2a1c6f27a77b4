#include <doctest.h>

#include <random>

#include "distinguo/errors.hpp"
#include "distinguo/graph.hpp"
#include "oracle.hpp"

using namespace distinguo;

TEST_CASE("graph6 decodes a hand-checked star") {
  // 'D' -> n = 5; '?' -> 000000, '{' -> 111100: the four pairs (i, 4) are set.
  const Graph g = parse_graph6("D?{");
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 4);
  for (int v = 0; v < 4; ++v) CHECK(g.adjacent(v, 4));
  CHECK(g.degree(4) == 4);
}

TEST_CASE("graph6 of the 5-cycle") {
  const Graph c5 = make_family(Family::Cycle, 5);
  CHECK(emit_graph6(c5) == "Dhc");
  CHECK(parse_graph6("Dhc") == c5);
  CHECK(parse_graph6("Dhc\n") == c5);
  CHECK(parse_graph6(">>graph6<<Dhc") == c5);
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 62);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) edges.emplace_back(u, v);
    const Graph g(n, edges);
    CHECK(parse_graph6(emit_graph6(g)) == g);
  }
  for (const auto& line : oracle::read_lines(DISTINGUO_TEST_DATA "/graphs_upto6.g6")) {
    CHECK(emit_graph6(parse_graph6(line)) == line);
  }
}

TEST_CASE("graph6 errors carry the byte offset") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  try {
    parse_graph6("D?");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  try {
    parse_graph6("D?\x7f");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
}

TEST_CASE("family labelings") {
  const Graph q = make_family(Family::Hypercube, 4);
  for (int u = 0; u < 16; ++u)
    for (int v = 0; v < 16; ++v) CHECK(q.adjacent(u, v) == (__builtin_popcount(u ^ v) == 1));

  const Graph k = make_family(Family::DisjointK2, 3);
  CHECK(k.order() == 6);
  CHECK(k.edges() == std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}});

  const Graph p = make_family(Family::Path, 4);
  CHECK(p.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});

  const Graph prism = cartesian_product(make_family(Family::Complete, 4), make_family(Family::Complete, 2));
  CHECK(prism.order() == 8);
  CHECK(prism.edge_count() == 16);
  CHECK(prism.adjacent(0, 1));  // (0,l)-(0,r)
  CHECK(prism.adjacent(0, 6));  // (0,l)-(3,l)
  CHECK_FALSE(prism.adjacent(0, 3));
}

TEST_CASE("complement and distances") {
  const Graph c5 = make_family(Family::Cycle, 5);
  CHECK(complement(c5).edge_count() == 5);
  CHECK(complement(complement(c5)) == c5);
  CHECK(distance(c5, 0, 2) == 2);
  const Graph k2 = make_family(Family::DisjointK2, 2);
  CHECK_FALSE(distance(k2, 0, 2).has_value());
  CHECK(distance_matrix(make_family(Family::Hypercube, 3))[0][7] == 3);
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidArgument);
  CHECK_THROWS_AS(Graph(0, {}), InvalidArgument);
  CHECK_THROWS_AS(Graph(65, {}), InvalidArgument);
  CHECK_THROWS_AS(make_family(Family::Cycle, 2), InvalidArgument);
  CHECK_THROWS_AS(parse_family("torus"), InvalidArgument);
  CHECK(Graph(3, {{0, 1}, {1, 0}}).edge_count() == 1);
}
