#include "distinguo/io.hpp"

#include <cctype>

#include "distinguo/errors.hpp"

namespace distinguo {

std::string schema_tag(const std::string& kind) {
  return "distinguo." + kind + "/" + std::to_string(kSchemaVersion);
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  return {{"name", g.name()}, {"n", g.order()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph(j.at("n").get<int>(), edges, j.value("name", std::string{}));
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("graph JSON: ") + e.what());
  }
}

Json to_json(const PartialColoring& c) { return c.to_vector(); }

Json to_json(const Permutation& p) { return p.to_vector(); }

Json to_json(const AutGroup& aut) {
  Json gens = Json::array();
  for (const auto& g : aut.generators()) gens.push_back(to_json(g));
  return {{"order", aut.order()}, {"generators", std::move(gens)}, {"orbits", orbits(aut)}};
}

Json to_json(const BarMap& bar) { return bar.image(); }

BarMap bar_from_json(const Json& j) {
  try {
    return BarMap(j.get<std::vector<int>>());
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("Bar JSON: ") + e.what());
  }
}

Json to_json(const ResidueTable& t) {
  Json entries = Json::array();
  for (int i = 1; i <= t.d; ++i)
    for (int j = 1; j <= t.d; ++j) entries.push_back({{"i", i}, {"j", j}, {"r", t.at(i, j)}});
  return {{"d", t.d}, {"k", t.k}, {"entries", std::move(entries)}};
}

Json moves_to_json(const std::vector<Move>& moves) {
  Json out = Json::array();
  for (const Move& m : moves) out.push_back({m.vertex, m.color});
  return out;
}

std::vector<Move> moves_from_json(const Json& j) {
  std::vector<Move> out;
  try {
    for (const auto& m : j) out.push_back({m.at(0).get<int>(), m.at(1).get<int>()});
  } catch (const Json::exception& e) {
    throw InvalidArgument(std::string("move list: ") + e.what());
  }
  return out;
}

std::vector<Move> parse_moves(const std::string& text) {
  std::size_t start = 0;
  while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
  if (start < text.size() && text[start] == '[') {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("move list is not valid JSON", start);
    return moves_from_json(j);
  }
  std::vector<Move> out;
  std::size_t pos = start;
  while (pos < text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string item = text.substr(pos, comma - pos);
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("expected vertex:color", pos);
    try {
      std::size_t used_v = 0;
      std::size_t used_c = 0;
      const int v = std::stoi(item.substr(0, colon), &used_v);
      const int c = std::stoi(item.substr(colon + 1), &used_c);
      if (used_v != colon || used_c != item.size() - colon - 1) throw ParseError("trailing characters", pos);
      out.push_back({v, c});
    } catch (const std::logic_error&) {
      throw ParseError("bad number in move", pos);
    }
    pos = comma + 1;
  }
  return out;
}

Json to_json(const InfinityCertificate& cert) {
  Json j;
  j["kind"] = cert.kind == CertificateKind::Involution ? "involution" : "color_saturation";
  j["first_player"] = to_string(cert.first_player);
  if (cert.kind == CertificateKind::Involution) {
    j["witness"] = to_json(*cert.witness);
    j["element_order"] = element_order(*cert.witness);
    j["fixed"] = cert.fixed;
  } else {
    j["saturation_budget"] = cert.saturation_budget;
  }
  return j;
}

std::string infinity_label(const InfinityCertificate& cert) {
  return cert.kind == CertificateKind::Involution ? "inf(order2-certificate)" : "inf(saturation-certificate)";
}

Json to_json(const VerificationReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(moves_to_json(f));
  Json j{{"schema", schema_tag("verify")},
         {"mode", r.mode == VerifyMode::Exhaustive ? "exhaustive" : "random"},
         {"strategy", r.strategy},
         {"role", to_string(r.role)},
         {"d", r.budget},
         {"first_player", to_string(r.first)},
         {"games_played", r.games_played},
         {"leaf_count", r.leaf_count},
         {"failure_count", r.failure_count},
         {"failures", std::move(failures)},
         {"verified", r.verified()}};
  if (r.mode == VerifyMode::Randomized) j["seed"] = r.seed;
  return j;
}

}  // namespace distinguo
