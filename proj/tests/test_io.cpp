#include <doctest.h>

#include "distinguo/errors.hpp"
#include "distinguo/harness.hpp"
#include "distinguo/io.hpp"

using namespace distinguo;

TEST_CASE("graph JSON round trip") {
  const Graph g = graph_from_family_spec("k4k2");
  const Json j = to_json(g);
  CHECK(j["n"] == 8);
  CHECK(j["edges"].size() == 16);
  CHECK(graph_from_json(j) == g);
  CHECK_THROWS_AS(graph_from_json(Json{{"n", 3}}), InvalidArgument);
}

TEST_CASE("Bar and residue JSON") {
  const BarMap bar = hypercube_bar(3);
  CHECK(bar_from_json(to_json(bar)) == bar);
  CHECK_THROWS_AS(bar_from_json(Json::array({0, 1})), InvalidArgument);
  const Json t = to_json(residue_table(3));
  CHECK(t["d"] == 3);
  CHECK(t["k"] == 10);
  CHECK(t["entries"].size() == 9);
  CHECK(t["entries"][1] == Json{{"i", 1}, {"j", 2}, {"r", 1}});
}

TEST_CASE("move lists") {
  const std::vector<Move> moves{{0, 1}, {4, 2}, {3, 1}};
  CHECK(moves_from_json(moves_to_json(moves)) == moves);
  CHECK(parse_moves("[[0,1],[4,2],[3,1]]") == moves);
  CHECK(parse_moves("0:1,4:2,3:1") == moves);
  CHECK(parse_moves("").empty());
  CHECK_THROWS_AS(parse_moves("0-1"), ParseError);
  CHECK_THROWS_AS(parse_moves("0:x"), ParseError);
  CHECK_THROWS_AS(parse_moves("[[0,1"), ParseError);
}

TEST_CASE("certificates and reports serialize") {
  const auto cert = infinity_certificate(make_family(Family::Cycle, 5), Player::Rascal);
  REQUIRE(cert.has_value());
  const Json j = to_json(*cert);
  CHECK(j["kind"] == "involution");
  CHECK(j["element_order"] == 2);
  CHECK(j["fixed"].size() % 2 == 1);
  CHECK(infinity_label(*cert) == "inf(order2-certificate)");

  VerificationReport r;
  r.strategy = "x";
  r.failures.push_back({{0, 1}});
  r.failure_count = 1;
  const Json rj = to_json(r);
  CHECK(rj["schema"] == "distinguo.verify/1");
  CHECK(rj["verified"] == false);
  CHECK(rj["failures"][0] == Json::array({Json::array({0, 1})}));
}

TEST_CASE("family specs") {
  CHECK(graph_from_family_spec("cycle:7").order() == 7);
  CHECK(graph_from_family_spec("disjoint_k2:3").order() == 6);
  CHECK(graph_from_family_spec("z3").order() == 9);
  CHECK_THROWS_AS(graph_from_family_spec("cycle"), InvalidArgument);
  CHECK_THROWS_AS(graph_from_family_spec("cycle:x"), InvalidArgument);
  CHECK_THROWS_AS(graph_from_family_spec("moebius:8"), InvalidArgument);
}

TEST_CASE("probes report outcomes, not values") {
  SolveOptions tight;
  tight.node_budget = 100;
  const ProbeReport r = probe_prime_cycles({11}, 2, tight);
  REQUIRE(r.entries.size() == 1);
  CHECK(r.entries[0].outcome == "resource_bounded");
  CHECK(probe_prime_cycles({}, 2, {}).entries.empty());
  const ProbeReport seven = probe_prime_cycles({7}, 2, {});
  CHECK(seven.entries[0].outcome == "Rascal");
  CHECK_THROWS_AS(probe_prime_cycles({9}, 2, {}), InvalidArgument);
  const ProbeReport z = probe_no_involution({z3_graph(), make_family(Family::Cycle, 5)}, 3, {});
  REQUIRE(z.entries.size() == 4);
  CHECK(z.entries[0].outcome == "finite");
  CHECK(z.entries[0].value == 2);
  CHECK(z.entries[2].outcome == "has_involution");
  CHECK(to_json(z)["evidence_only"] == true);
}
