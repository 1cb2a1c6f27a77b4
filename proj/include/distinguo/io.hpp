#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "distinguo/distinguishing.hpp"
#include "distinguo/game.hpp"
#include "distinguo/graph.hpp"
#include "distinguo/involutive.hpp"
#include "distinguo/symmetry.hpp"
#include "distinguo/verify.hpp"

namespace distinguo {

using Json = nlohmann::ordered_json;

/// Every top-level document carries "schema": "distinguo.<kind>/<version>".
inline constexpr int kSchemaVersion = 1;
std::string schema_tag(const std::string& kind);

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json to_json(const PartialColoring& c);
Json to_json(const Permutation& p);
/// Order, generators as image arrays and the orbit partition.
Json to_json(const AutGroup& aut);

Json to_json(const BarMap& bar);
BarMap bar_from_json(const Json& j);

/// {d, k, entries: [{i, j, r}]} over all 1 <= i, j <= d.
Json to_json(const ResidueTable& t);

/// Moves as [vertex, color] pairs.
Json moves_to_json(const std::vector<Move>& moves);
std::vector<Move> moves_from_json(const Json& j);
/// Accepts a JSON move list or "v:c,v:c,...".
std::vector<Move> parse_moves(const std::string& text);

Json to_json(const InfinityCertificate& cert);

/// Text rendering of a certified infinite value.
std::string infinity_label(const InfinityCertificate& cert);

Json to_json(const VerificationReport& r);

}  // namespace distinguo
