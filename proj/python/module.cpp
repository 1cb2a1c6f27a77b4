#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "distinguo/distinguishing.hpp"
#include "distinguo/errors.hpp"
#include "distinguo/game.hpp"
#include "distinguo/harness.hpp"
#include "distinguo/involutive.hpp"
#include "distinguo/io.hpp"
#include "distinguo/verify.hpp"

namespace py = pybind11;
using namespace distinguo;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

SolveOptions options(bool memoize, int threads, std::size_t memo_budget, std::uint64_t node_budget) {
  SolveOptions o;
  o.memoize = memoize;
  o.threads = threads;
  if (memo_budget > 0) o.memo_budget = memo_budget;
  o.node_budget = node_budget;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact engine for the distinguishing game";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges, const std::string& name) {
             return Graph(n, edges, name);
           }),
           py::arg("n"), py::arg("edges"), py::arg("name") = "")
      .def_static("family", &graph_from_family_spec, py::arg("spec"))
      .def_static("from_graph6", [](const std::string& s) { return parse_graph6(s); })
      .def("graph6", [](const Graph& g) { return emit_graph6(g); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("name", &Graph::name)
      .def("edges", &Graph::edges)
      .def("adjacent", &Graph::adjacent)
      .def("complement", [](const Graph& g) { return complement(g); })
      .def("to_json", [](const Graph& g) { return to_python(to_json(g)); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph " + g.name() + " n=" + std::to_string(g.order()) + ">";
      });

  m.def("automorphism_group", [](const Graph& g) { return to_python(to_json(automorphism_group(g))); });

  m.def(
      "distinguishing_number",
      [](const Graph& g, int d_max) {
        const auto r = distinguishing_number(g, d_max);
        return py::make_tuple(r.value, r.witness ? py::cast(r.witness->to_vector()) : py::none());
      },
      py::arg("graph"), py::arg("d_max") = 8);

  m.def(
      "solve",
      [](const Graph& g, int d, const std::string& first, bool memoize, int threads, std::size_t memo_budget,
         std::uint64_t node_budget) {
        const Player p = parse_player(first);
        SolveResult res;
        {
          py::gil_scoped_release release;
          res = solve(g, d, p, options(memoize, threads, memo_budget, node_budget));
        }
        py::dict out;
        out["winner"] = std::string(to_string(res.winner));
        out["nodes_expanded"] = res.stats.nodes_expanded;
        out["memo_hits"] = res.stats.memo_hits;
        return out;
      },
      py::arg("graph"), py::arg("d"), py::arg("first"), py::arg("memoize") = true, py::arg("threads") = 1,
      py::arg("memo_budget") = 0, py::arg("node_budget") = 0);

  m.def(
      "game_distinguishing_number",
      [](const Graph& g, const std::string& first, int d_max) {
        const GameResult r = game_distinguishing_number(g, parse_player(first), d_max);
        Json j{{"first_player", to_string(parse_player(first))}, {"d_max", d_max}};
        if (r.kind == GameResult::Kind::Finite) j["value"] = r.value;
        if (r.kind == GameResult::Kind::InfiniteCertified) j["certificate"] = to_json(*r.certificate);
        if (r.kind == GameResult::Kind::UnknownAtLeast) j["unknown_at_least"] = r.value;
        return to_python(j);
      },
      py::arg("graph"), py::arg("first"), py::arg("d_max"));

  m.def(
      "infinity_certificate",
      [](const Graph& g, const std::string& first) -> py::object {
        const auto cert = infinity_certificate(g, parse_player(first));
        if (!cert) return py::none();
        return to_python(to_json(*cert));
      },
      py::arg("graph"), py::arg("first"));

  m.def(
      "winner",
      [](const Graph& g, int d, const std::string& first, const std::vector<std::pair<int, int>>& moves) {
        std::vector<Move> ms;
        for (const auto& [v, c] : moves) ms.push_back({v, c});
        const GameState s = GameState::replay(g.order(), d, parse_player(first), ms);
        return std::string(to_string(winner(s, g)));
      },
      py::arg("graph"), py::arg("d"), py::arg("first"), py::arg("moves"));

  m.def(
      "verify",
      [](const std::string& strategy, const std::string& mode, std::optional<int> d, std::optional<std::string> first,
         std::uint64_t trials, std::uint64_t seed, std::optional<Graph> graph) {
        const auto setup = strategy_setup(strategy, graph);
        const int budget = d.value_or(setup.budget);
        const Player p = first ? parse_player(*first) : setup.first;
        const Graph& g = setup.strategy.graph();
        if (mode == "exhaustive") return to_python(to_json(verify_strategy_exhaustive(g, setup.strategy, budget, p)));
        if (mode == "random") return to_python(to_json(verify_strategy_random(g, setup.strategy, budget, p, trials, seed)));
        throw InvalidArgument("mode must be exhaustive or random");
      },
      py::arg("strategy"), py::arg("mode") = "exhaustive", py::arg("d") = py::none(), py::arg("first") = py::none(),
      py::arg("trials") = 1000, py::arg("seed") = 0, py::arg("graph") = py::none());

  m.def("strategy_names", &strategy_names);

  m.def("find_bar", [](const Graph& g) -> std::optional<std::vector<int>> {
    const auto bar = find_bar(g);
    if (!bar) return std::nullopt;
    return bar->image();
  });

  m.def(
      "only_bar_preserving",
      [](const Graph& g, const std::vector<int>& bar, const std::vector<int>& coloring, int budget) {
        std::string diagnostic;
        const bool ok = only_bar_preserving(g, BarMap(bar), PartialColoring(coloring, budget), &diagnostic);
        return py::make_tuple(ok, diagnostic);
      },
      py::arg("graph"), py::arg("bar"), py::arg("coloring"), py::arg("budget"));

  m.def("residue_table", [](int d) { return to_python(to_json(residue_table(d))); });

  m.def(
      "reproduce", [](std::uint64_t node_budget) {
        SolveOptions o;
        o.node_budget = node_budget;
        return to_python(to_json(reproduce(o)));
      },
      py::arg("node_budget") = 0);

  m.def(
      "probe_prime_cycles",
      [](const std::vector<int>& primes, int d, std::uint64_t node_budget) {
        SolveOptions o;
        o.node_budget = node_budget;
        return to_python(to_json(probe_prime_cycles(primes, d, o)));
      },
      py::arg("primes"), py::arg("d") = 2, py::arg("node_budget") = 0);
}
