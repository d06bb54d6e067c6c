#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "eqdsatur/bench.hpp"
#include "eqdsatur/bounds.hpp"
#include "eqdsatur/coloring.hpp"
#include "eqdsatur/graph.hpp"
#include "eqdsatur/oracle.hpp"
#include "eqdsatur/search.hpp"

namespace py = pybind11;
using namespace eqdsatur;

namespace {

SolveResult solve_py(const Graph& g, const std::string& strategy,
    const std::string& order, const std::string& pruning, double time_limit,
    std::optional<uint64_t> node_limit) {
    SolverConfig cfg = config_from_label(strategy + "-" + order + "-" + pruning);
    cfg.time_limit = time_limit;
    cfg.node_limit = node_limit;
    return solve(g, cfg);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact equitable graph coloring: DSatur-style branch and bound "
              "with equity pruning";

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(),
            py::arg("n"), py::arg("edges"))
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def_property_readonly("num_edges", &Graph::num_edges)
        .def("degree", &Graph::degree, py::arg("v"))
        .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
        .def("neighbors",
            [](const Graph& g, int v) { return g.neighbors(v); }, py::arg("v"))
        .def("__repr__", [](const Graph& g) {
            std::ostringstream os;
            os << "Graph(n=" << g.num_vertices() << ", m=" << g.num_edges() << ")";
            return os.str();
        });

    py::class_<EquitableColoring>(m, "EquitableColoring")
        .def_readonly("k", &EquitableColoring::k)
        .def_readonly("assigned", &EquitableColoring::assigned)
        .def("__repr__", [](const EquitableColoring& c) {
            return "EquitableColoring(k=" + std::to_string(c.k) + ")";
        });

    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("chi_eq", &OracleResult::chi_eq)
        .def_readonly("witness", &OracleResult::witness);

    py::class_<SolveResult>(m, "SolveResult")
        .def_property_readonly("status",
            [](const SolveResult& r) { return to_string(r.status); })
        .def_readonly("chi_eq", &SolveResult::chi_eq)
        .def_readonly("lb_final", &SolveResult::lb_final)
        .def_readonly("ub_final", &SolveResult::ub_final)
        .def_readonly("lb_initial", &SolveResult::lb_initial)
        .def_readonly("ub_initial", &SolveResult::ub_initial)
        .def_readonly("incumbent", &SolveResult::incumbent)
        .def_readonly("nodes", &SolveResult::nodes)
        .def_readonly("wall_time", &SolveResult::wall_time)
        .def("__repr__", [](const SolveResult& r) {
            std::ostringstream os;
            os << "SolveResult(status=" << to_string(r.status)
               << ", lb=" << r.lb_final << ", ub=" << r.ub_final
               << ", nodes=" << r.nodes << ")";
            return os.str();
        });

    m.def("parse_dimacs",
        [](const std::string& text) {
            std::istringstream in(text);
            return parse_dimacs(in);
        },
        py::arg("text"), "parse DIMACS .col text");
    m.def("parse_dimacs_file", &parse_dimacs_file, py::arg("path"));
    m.def("write_dimacs",
        [](const Graph& g) {
            std::ostringstream out;
            write_dimacs(g, out);
            return out.str();
        },
        py::arg("graph"));
    m.def("random_graph", &random_graph, py::arg("n"), py::arg("density"),
        py::arg("seed"));
    m.def("greedy_maximal_clique",
        [](const Graph& g) { return greedy_maximal_clique(g).to_vector(); },
        py::arg("graph"));
    m.def("lower_bound", &lower_bound, py::arg("graph"));
    m.def("naive_heuristic", &naive_heuristic, py::arg("graph"),
        py::arg("start_k") = 1);
    m.def("validate_equitable", &validate_equitable, py::arg("graph"),
        py::arg("coloring"));
    m.def("coloring_text",
        [](const EquitableColoring& c) {
            std::ostringstream out;
            write_coloring(c, out);
            return out.str();
        },
        py::arg("coloring"));
    m.def("brute_force_chi_eq", &brute_force_chi_eq, py::arg("graph"),
        py::arg("max_n") = 12);
    m.def("solve", &solve_py, py::arg("graph"), py::arg("strategy") = "pass",
        py::arg("order") = "size", py::arg("pruning") = "equity",
        py::arg("time_limit") = 7200.0, py::arg("node_limit") = py::none(),
        py::call_guard<py::gil_scoped_release>(),
        "exact equitable chromatic number via branch and bound");
}
