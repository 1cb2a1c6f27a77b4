#include "distinguo/harness.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <sstream>

#include "distinguo/distinguishing.hpp"
#include "distinguo/errors.hpp"
#include "distinguo/involutive.hpp"

namespace distinguo {

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw InvalidArgument("bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

/// Splits "name:param" into its parts; param is nullopt without a colon.
std::pair<std::string_view, std::optional<int>> split_spec(std::string_view spec, std::string_view what) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return {spec, std::nullopt};
  return {spec.substr(0, colon), parse_int(spec.substr(colon + 1), what)};
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

}  // namespace

Graph z3_graph() {
  return Graph(9,
               {{0, 1}, {0, 2}, {0, 4}, {0, 5}, {0, 7}, {1, 2}, {1, 3}, {1, 5},
                {1, 8}, {2, 3}, {2, 4}, {2, 6}, {3, 6}, {4, 7}, {5, 8}},
               "z3");
}

Graph graph_from_family_spec(std::string_view spec) {
  const auto [name, param] = split_spec(spec, "family parameter");
  if (name == "k4k2" && !param) {
    return cartesian_product(make_family(Family::Complete, 4), make_family(Family::Complete, 2)).renamed("K4xK2");
  }
  if (name == "z3" && !param) return z3_graph();
  if (!param) throw InvalidArgument("family '" + std::string(name) + "' needs NAME:PARAM");
  return make_family(parse_family(name), *param);
}

std::vector<std::string> strategy_names() {
  return {"c8",           "c10",          "c10-literal",     "c9",
          "c9-literal",   "k4k2",         "q4",              "prime-cycle:P",
          "odd-composite:N", "k2-union:N", "rascal-k2-union:N", "hypercube-bar:N",
          "hypercube-bar-literal:N", "even-cycle-bar:N", "mirror", "prime-cyclic",
          "involutive"};
}

StrategySetup strategy_setup(std::string_view spec, const std::optional<Graph>& graph) {
  const auto [name, param] = split_spec(spec, "strategy parameter");
  auto need_param = [&, name = name, param = param]() {
    if (!param) throw InvalidArgument("strategy '" + std::string(name) + "' needs NAME:PARAM");
    return *param;
  };
  auto need_graph = [&, name = name]() -> const Graph& {
    if (!graph) throw InvalidArgument("strategy '" + std::string(name) + "' needs a graph");
    return *graph;
  };
  auto setup = [](Strategy s, Player first) {
    const int d = s.info().required_d;
    return StrategySetup{std::move(s), d, first};
  };

  if (name == "c8") return setup(gentle_c8_c10(8), Player::Rascal);
  if (name == "c10") return setup(gentle_c8_c10(10), Player::Rascal);
  if (name == "c10-literal") return setup(gentle_c8_c10(10, Construction::Literal), Player::Rascal);
  if (name == "c9") return setup(gentle_c9(), Player::Gentle);
  if (name == "c9-literal") return setup(gentle_c9(Construction::Literal), Player::Gentle);
  if (name == "k4k2") return setup(gentle_k4k2(), Player::Rascal);
  if (name == "q4") return setup(gentle_q4(), Player::Rascal);
  if (name == "prime-cycle") return setup(gentle_prime_cycle(need_param()), Player::Gentle);
  if (name == "odd-composite") return setup(gentle_odd_composite_cycle(need_param()), Player::Gentle);
  if (name == "k2-union") return setup(gentle_k2_union(need_param()), Player::Rascal);
  if (name == "rascal-k2-union") {
    const int n = need_param();
    return StrategySetup{rascal_k2_union(n), n, Player::Rascal};
  }
  if (name == "hypercube-bar" || name == "hypercube-bar-literal") {
    const int dim = need_param();
    const auto variant = name == "hypercube-bar" ? Construction::Repaired : Construction::Literal;
    const Graph q = make_family(Family::Hypercube, dim);
    return setup(gentle_involutive_bar(q, hypercube_bar(dim), hypercube_s_coloring(dim, variant)),
                 Player::Rascal);
  }
  if (name == "even-cycle-bar") {
    const int n = need_param();
    const Graph c = make_family(Family::Cycle, n);
    return setup(gentle_involutive_bar(c, cycle_bar(n), even_cycle_coloring(n)), Player::Rascal);
  }
  if (name == "mirror") {
    const Graph& g = need_graph();
    const Player first = g.order() % 2 == 0 ? Player::Gentle : Player::Rascal;
    const auto cert = infinity_certificate(g, first);
    if (!cert) throw InvalidArgument("mirror: graph has no involution with the right fixed-point parity");
    return StrategySetup{rascal_mirror(g, *cert->witness), 3, first};
  }
  if (name == "prime-cyclic") return StrategySetup{gentle_prime_cyclic(need_graph()), 2, Player::Gentle};
  if (name == "involutive") {
    const Graph& g = need_graph();
    const auto bar = find_bar(g);
    if (!bar) throw InvalidArgument("involutive: graph has no Bar involution");
    const auto d = distinguishing_number(g, kMaxSolverBudget);
    if (!d.witness) throw InvalidArgument("involutive: no distinguishing coloring within the color limit");
    return setup(gentle_involutive(g, *bar, *d.witness), Player::Rascal);
  }
  throw InvalidArgument("unknown strategy '" + std::string(spec) + "'");
}

std::string_view to_string(RowStatus s) noexcept {
  switch (s) {
    case RowStatus::Match: return "MATCH";
    case RowStatus::Mismatch: return "MISMATCH";
    case RowStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

bool ReproReport::any_mismatch() const {
  for (const auto& r : rows)
    if (r.status == RowStatus::Mismatch) return true;
  return false;
}

namespace {

/// Claimed value: exact, a closed range, or infinite.
struct Claim {
  int lo = 0;
  int hi = 0;
  bool infinite = false;

  static Claim exact(int v) { return {v, v, false}; }
  static Claim range(int lo, int hi) { return {lo, hi, false}; }
  static Claim inf() { return {0, 0, true}; }

  std::string text() const {
    if (infinite) return "inf";
    if (lo == hi) return std::to_string(lo);
    if (lo <= 1) return "<=" + std::to_string(hi);
    return std::to_string(lo) + ".." + std::to_string(hi);
  }
};

class TableBuilder {
 public:
  explicit TableBuilder(const SolveOptions& options) : options_(options) {
    if (options_.node_budget == 0) options_.node_budget = kReproduceNodeBudget;
  }

  void classical(const Graph& g, int claimed) {
    ReproRow row{g.name(), "D", std::to_string(claimed), "", "enumeration", RowStatus::Skipped, ""};
    guarded(row, [&] {
      const auto d = distinguishing_number(g, claimed + 1);
      row.computed = d.value ? std::to_string(*d.value) : ">" + std::to_string(claimed + 1);
      row.status = d.value == claimed ? RowStatus::Match : RowStatus::Mismatch;
    });
  }

  void game(const Graph& g, Player first, Claim claim, std::string note = {}) {
    ReproRow row{g.name(), first == Player::Gentle ? "D_G" : "D_R", claim.text(), "", "solver",
                 RowStatus::Skipped, std::move(note)};
    guarded(row, [&] {
      if (claim.infinite) {
        if (const auto cert = infinity_certificate(g, first)) {
          row.method = "certificate";
          row.computed = infinity_label(*cert);
          row.status = check_certificate(g, *cert) ? RowStatus::Match : RowStatus::Mismatch;
          return;
        }
      }
      const int d_max = claim.infinite ? g.order() : claim.hi;
      const GameResult r = game_distinguishing_number(g, first, d_max, options_);
      switch (r.kind) {
        case GameResult::Kind::Finite:
          row.computed = std::to_string(r.value);
          row.status = !claim.infinite && claim.lo <= r.value && r.value <= claim.hi ? RowStatus::Match
                                                                                  : RowStatus::Mismatch;
          break;
        case GameResult::Kind::InfiniteCertified:
          row.method = "certificate";
          row.computed = infinity_label(*r.certificate);
          row.status = claim.infinite ? RowStatus::Match : RowStatus::Mismatch;
          break;
        case GameResult::Kind::UnknownAtLeast:
          row.computed = ">=" + std::to_string(r.value);
          row.status = RowStatus::Mismatch;
          break;
      }
    });
  }

  ReproReport done() { return std::move(report_); }

 private:
  template <class F>
  void guarded(ReproRow& row, F&& body) {
    try {
      body();
    } catch (const ResourceError& e) {
      row.status = RowStatus::Skipped;
      row.computed = "resource_bounded";
      row.note = row.note.empty() ? e.what() : row.note + "; " + e.what();
    }
    report_.rows.push_back(std::move(row));
  }

  SolveOptions options_;
  ReproReport report_;
};

}  // namespace

ReproReport reproduce(const SolveOptions& options) {
  TableBuilder t(options);
  auto cube = [](int n) { return make_family(Family::Hypercube, n).renamed("Q" + std::to_string(n)); };
  auto cycle = [](int n) { return make_family(Family::Cycle, n).renamed("C" + std::to_string(n)); };
  auto path = [](int n) { return make_family(Family::Path, n).renamed("P" + std::to_string(n)); };
  auto k2s = [](int n) { return make_family(Family::DisjointK2, n).renamed(std::to_string(n) + "K2"); };
  const Graph k4k2 = graph_from_family_spec("k4k2");
  const Player G = Player::Gentle;
  const Player R = Player::Rascal;

  for (int n : {2, 3}) t.classical(cube(n), 3);
  t.classical(cube(4), 2);
  for (int n = 2; n <= 5; ++n) t.game(cube(n), G, Claim::inf());
  t.game(cube(2), R, Claim::exact(3));
  t.game(cube(3), R, Claim::exact(3));
  t.game(cube(4), R, Claim::range(2, 3), "stated as a range");
  t.game(cube(5), R, Claim::exact(2));

  for (int n : {4, 6, 8, 10, 12}) t.game(cycle(n), G, Claim::inf());
  for (int n : {3, 5, 7, 9, 11}) t.game(cycle(n), R, Claim::inf());
  for (int n : {4, 6}) t.game(cycle(n), R, Claim::exact(3));
  for (int n : {8, 10, 12, 14}) t.game(cycle(n), R, Claim::exact(2));
  for (int n : {9, 15}) t.game(cycle(n), G, Claim::exact(2));
  t.game(cycle(3), G, Claim::inf());
  for (int n : {5, 7}) t.game(cycle(n), G, Claim::exact(3));
  for (int n : {11, 13}) t.game(cycle(n), G, Claim::range(1, 3), "stated as an upper bound");

  for (int n : {2, 4, 6, 8}) t.game(path(n), G, Claim::inf());
  for (int n : {3, 5, 7}) t.game(path(n), R, Claim::inf());
  for (int n : {3, 5, 7}) t.game(path(n), G, Claim::exact(2));
  for (int n : {2, 4, 6, 8}) t.game(path(n), R, Claim::exact(2));

  const Graph z3 = z3_graph();
  t.game(z3, G, Claim::exact(2));
  t.game(z3, R, Claim::exact(2));

  for (int n = 1; n <= 6; ++n) {
    const int formula = static_cast<int>(std::ceil((1 + std::sqrt(8.0 * n + 1)) / 2));
    t.classical(k2s(n), formula);
  }
  for (int n = 1; n <= 4; ++n) t.game(k2s(n), G, Claim::inf());
  for (int n = 1; n <= 4; ++n) t.game(k2s(n), R, Claim::exact(n + 1));

  t.classical(k4k2, 3);
  t.game(k4k2, R, Claim::exact(3));
  return t.done();
}

Json to_json(const ReproReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json j{{"graph", row.graph},     {"quantity", row.quantity},
           {"claimed", row.claimed}, {"computed", row.computed},
           {"method", row.method},   {"status", to_string(row.status)}};
    if (!row.note.empty()) j["note"] = row.note;
    rows.push_back(std::move(j));
  }
  return {{"schema", schema_tag("reproduce")}, {"rows", std::move(rows)}, {"mismatch", r.any_mismatch()}};
}

std::string to_text(const ReproReport& r) {
  std::ostringstream out;
  char line[200];
  std::snprintf(line, sizeof line, "%-8s %-4s %-8s %-28s %-12s %s\n", "graph", "qty", "claimed", "computed",
                "method", "status");
  out << line;
  for (const auto& row : r.rows) {
    std::snprintf(line, sizeof line, "%-8s %-4s %-8s %-28s %-12s %s", row.graph.c_str(), row.quantity.c_str(),
                  row.claimed.c_str(), row.computed.c_str(), row.method.c_str(),
                  std::string(to_string(row.status)).c_str());
    out << line;
    if (!row.note.empty()) out << "  (" << row.note << ")";
    out << '\n';
  }
  return out.str();
}

ProbeReport probe_prime_cycles(const std::vector<int>& primes, int d, const SolveOptions& options) {
  ProbeReport report;
  for (int p : primes) {
    if (!is_prime(p) || p < 3) throw InvalidArgument(std::to_string(p) + " is not an odd prime");
    ProbeEntry e{"C" + std::to_string(p), "prime_cycle", Player::Gentle, d, "", std::nullopt, ""};
    try {
      const auto r = solve(make_family(Family::Cycle, p), d, Player::Gentle, options);
      e.outcome = std::string(to_string(r.winner));
      e.detail = std::to_string(r.stats.nodes_expanded) + " nodes";
    } catch (const ResourceError& err) {
      e.outcome = "resource_bounded";
      e.detail = err.what();
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

ProbeReport probe_no_involution(const std::vector<Graph>& graphs, int d_max, const SolveOptions& options) {
  ProbeReport report;
  for (const Graph& g : graphs) {
    const AutGroup aut = automorphism_group(g);
    bool has_involution = false;
    for (const auto& e : aut.elements()) has_involution = has_involution || element_order(e) == 2;
    for (Player first : {Player::Gentle, Player::Rascal}) {
      ProbeEntry e{g.name(), "no_involution", first, d_max, "", std::nullopt, ""};
      if (has_involution) {
        e.outcome = "has_involution";
        e.detail = "not a candidate";
      } else {
        try {
          const GameResult r = game_distinguishing_number(g, first, d_max, options);
          if (r.kind == GameResult::Kind::Finite) {
            e.outcome = "finite";
            e.value = r.value;
          } else if (r.kind == GameResult::Kind::UnknownAtLeast) {
            e.outcome = "unknown_at_least";
            e.value = r.value;
          } else {
            e.outcome = "infinite_certified";
          }
        } catch (const ResourceError& err) {
          e.outcome = "resource_bounded";
          e.detail = err.what();
        }
      }
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

Json to_json(const ProbeReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json j{{"graph", e.graph},
           {"question", e.question},
           {"first_player", to_string(e.first)},
           {e.question == "prime_cycle" ? "d" : "d_max", e.d},
           {"outcome", e.outcome}};
    if (e.value) j["value"] = *e.value;
    if (!e.detail.empty()) j["detail"] = e.detail;
    entries.push_back(std::move(j));
  }
  return {{"schema", schema_tag("probe")}, {"evidence_only", true}, {"entries", std::move(entries)}};
}

}  // namespace distinguo
