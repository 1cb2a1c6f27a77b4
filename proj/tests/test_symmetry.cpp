#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "distinguo/errors.hpp"
#include "distinguo/harness.hpp"
#include "distinguo/symmetry.hpp"
#include "oracle.hpp"

using namespace distinguo;

namespace {

std::set<std::vector<int>> as_set(const AutGroup& g) {
  std::set<std::vector<int>> out;
  for (const auto& p : g.elements()) out.insert(p.to_vector());
  return out;
}

std::set<std::vector<int>> as_set(const std::vector<oracle::Perm>& ps) { return {ps.begin(), ps.end()}; }

}  // namespace

TEST_CASE("Aut(Q3) against brute force") {
  const Graph q3 = make_family(Family::Hypercube, 3);
  const AutGroup aut = automorphism_group(q3);
  CHECK(aut.order() == 48);
  CHECK(as_set(aut) == as_set(oracle::brute_automorphisms(q3)));
  CHECK(aut.elements()[0].is_identity());
}

TEST_CASE("automorphism groups of the whole corpus match brute force") {
  for (const auto& line : oracle::read_lines(DISTINGUO_TEST_DATA "/graphs_upto6.g6")) {
    const Graph g = parse_graph6(line);
    CAPTURE(line);
    CHECK(as_set(automorphism_group(g)) == as_set(oracle::brute_automorphisms(g)));
  }
}

TEST_CASE("group orders of the named graphs") {
  CHECK(automorphism_group(make_family(Family::Cycle, 9)).order() == 18);
  CHECK(automorphism_group(graph_from_family_spec("k4k2")).order() == 48);
  CHECK(automorphism_group(make_family(Family::DisjointK2, 3)).order() == 48);
  CHECK(automorphism_group(make_family(Family::Hypercube, 4)).order() == 384);
  CHECK(automorphism_group(make_family(Family::Hypercube, 5)).order() == 3840);
  const Graph z3 = z3_graph();
  CHECK(as_set(automorphism_group(z3)) == as_set(oracle::brute_automorphisms(z3)));
  CHECK(automorphism_group(z3).order() == 3);
}

TEST_CASE("generators generate the group") {
  for (const Graph& g : {make_family(Family::Hypercube, 3), graph_from_family_spec("k4k2"),
                         make_family(Family::Cycle, 10)}) {
    const AutGroup aut = automorphism_group(g);
    const AutGroup closure = AutGroup::generated_by(g.order(), aut.generators());
    CHECK(as_set(closure) == as_set(aut));
  }
}

TEST_CASE("orbits") {
  const auto c6 = orbits(automorphism_group(make_family(Family::Cycle, 6)));
  CHECK(c6.size() == 1);
  const auto p4 = orbits(automorphism_group(make_family(Family::Path, 4)));
  CHECK(p4 == std::vector<std::vector<int>>{{0, 3}, {1, 2}});
  CHECK(orbits(automorphism_group(z3_graph())).size() == 3);
}

TEST_CASE("permutation basics") {
  const Permutation p{1, 0, 3, 4, 2};
  CHECK(element_order(p) == 6);
  CHECK(fixed_points(p).empty());
  CHECK((p * p.inverse()).is_identity());
  CHECK(element_order(Permutation::identity(4)) == 1);
  CHECK(fixed_points(Permutation{0, 2, 1}) == std::vector<int>{0});
  CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidArgument);
  const Permutation a{1, 2, 0};
  const Permutation b{0, 2, 1};
  CHECK((a * b)(1) == a(b(1)));
}

TEST_CASE("group cap raises ResourceError") {
  CHECK_THROWS_AS(automorphism_group(make_family(Family::Complete, 9), 1000), ResourceError);
}

TEST_CASE("isomorphism search") {
  const Graph c5 = make_family(Family::Cycle, 5);
  std::vector<int> image{2, 4, 1, 0, 3};
  const Graph r = relabel(c5, image);
  const auto iso = find_isomorphism(c5, r);
  REQUIRE(iso.has_value());
  for (const auto& [u, v] : c5.edges()) CHECK(r.adjacent((*iso)(u), (*iso)(v)));
  CHECK_FALSE(find_isomorphism(c5, make_family(Family::Path, 5)).has_value());
}

TEST_CASE("hypercube determining-set condition is sound on random subsets") {
  std::mt19937_64 rng(2024);
  int fired = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = trial % 2 == 0 ? 3 : 4;
    const int n = 1 << dim;
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (rng() % 2 == 0) s.push_back(v);
    if (hypercube_determining_condition(dim, s)) {
      ++fired;
      CHECK(is_determining_set(make_family(Family::Hypercube, dim), s));
    }
  }
  CHECK(fired > 20);
}
