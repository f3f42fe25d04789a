#include <pybind11/chrono.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lambda_lab/constructions.hpp"
#include "lambda_lab/errors.hpp"
#include "lambda_lab/graph.hpp"
#include "lambda_lab/instance.hpp"
#include "lambda_lab/io.hpp"
#include "lambda_lab/labeling.hpp"
#include "lambda_lab/solver.hpp"
#include "lambda_lab/tile.hpp"

namespace py = pybind11;
using namespace lambda_lab;

namespace {

SearchConfig make_config(std::optional<std::uint64_t> node_limit, std::optional<int> target, unsigned threads,
                         const std::string& ordering) {
    SearchConfig cfg;
    cfg.node_limit = node_limit;
    cfg.target_span = target;
    cfg.threads = threads;
    cfg.ordering = parse_ordering(ordering);
    return cfg;
}

py::dict result_dict(const LambdaResult& r) {
    py::dict d;
    d["span"] = r.span;
    d["witness"] = r.witness.labels();
    d["method"] = to_string(r.method);
    d["nodes_explored"] = r.nodes_explored;
    d["lower_bound"] = r.lower_bound;
    d["elapsed"] = std::chrono::duration_cast<std::chrono::microseconds>(r.elapsed);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "L(h,k)-labelings of direct products of paths and cycles";

    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<InvalidSize>(m, "InvalidSize", error.ptr());
    py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());
    py::register_exception<OutOfRange>(m, "OutOfRange", error.ptr());
    py::register_exception<UnsupportedRegime>(m, "UnsupportedRegime", error.ptr());
    py::register_exception<ParseError>(m, "ParseError", error.ptr());
    py::register_exception<MissingLabels>(m, "MissingLabels", error.ptr());
    py::register_exception<ResourceLimit>(m, "ResourceLimit", error.ptr());
    py::register_exception<Infeasible>(m, "Infeasible", error.ptr());

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("degree", &Graph::degree)
        .def("max_degree", &Graph::max_degree)
        .def("neighbors", [](const Graph& g, Vertex v) {
            auto nb = g.neighbors(v);
            return std::vector<Vertex>(nb.begin(), nb.end());
        })
        .def("edges", &Graph::edges)
        .def("coord", [](const Graph& g, Vertex v) {
            auto c = g.coord(v);
            return std::pair(c.i, c.j);
        })
        .def("__len__", &Graph::vertex_count)
        .def("__repr__", [](const Graph& g) {
            return "<Graph " + std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) +
                   " edges>";
        });

    m.def("path", &path, py::arg("m"));
    m.def("cycle", &cycle, py::arg("n"));
    m.def("direct_product", &direct_product);
    m.def("cartesian_product", &cartesian_product);
    m.def("square_graph", &square_graph);
    m.def("distance", &distance);
    m.def("connected_components", [](const Graph& g) {
        std::vector<std::vector<Vertex>> out;
        for (const auto& c : connected_components(g).components) out.push_back(c.to_parent);
        return out;
    }, "vertex lists of the components, component 0 first");
    m.def("build_graph", [](const std::string& key) { return build_graph(parse_instance_key(key)); }, py::arg("key"));
    m.def("canonical_key", [](const std::string& key) { return to_string(parse_instance_key(key)); });

    m.def("verify", [](const Graph& g, std::vector<int> labels, int h, int k) {
        std::vector<std::tuple<Vertex, Vertex, int, int, int>> out;
        for (const auto& v : verify(g, Labeling(std::move(labels)), h, k))
            out.emplace_back(v.u, v.v, v.dist, v.required_gap, v.actual_gap);
        return out;
    }, py::arg("graph"), py::arg("labels"), py::arg("h") = 1, py::arg("k") = 1,
          "violations as (u, v, dist, required_gap, actual_gap)");
    m.def("lambda_path", &lambda_path);
    m.def("lambda_cycle", &lambda_cycle);
    m.def("star_lower_bound", &star_lower_bound, py::arg("graph"), py::arg("h") = 1, py::arg("k") = 1);

    m.def("solve_exact", [](const Graph& g, int h, int k, std::optional<std::uint64_t> node_limit,
                            std::optional<int> target, unsigned threads, const std::string& ordering) {
        auto cfg = make_config(node_limit, target, threads, ordering);
        py::gil_scoped_release release;
        auto r = solve_exact(g, h, k, cfg);
        py::gil_scoped_acquire acquire;
        return result_dict(r);
    }, py::arg("graph"), py::arg("h") = 1, py::arg("k") = 1, py::arg("node_limit") = py::none(),
          py::arg("target") = py::none(), py::arg("threads") = 1, py::arg("ordering") = "dsatur");
    m.def("solve_via_square", [](const Graph& g) { return result_dict(solve_via_square(g)); });
    m.def("brute_force", [](const Graph& g, int h, int k, int max_span) {
        return result_dict(brute_force(g, h, k, max_span));
    });

    m.def("grid_formula", &grid_formula);
    m.def("expected_lambda", [](const std::string& key) {
        auto e = expected_lambda(parse_instance_key(key));
        py::dict d;
        d["value"] = e.value();
        d["claims"] = e.claims;
        d["text"] = to_string(e);
        d["rule"] = e.rule;
        return d;
    });
    m.def("construct", [](const std::string& key, const std::string& scheme) {
        auto c = construct(parse_instance_key(key), parse_scheme_preference(scheme));
        py::dict d;
        d["scheme"] = c.scheme;
        d["labels"] = c.labeling.labels();
        d["span"] = c.labeling.span();
        d["graph"] = c.graph;
        return d;
    }, py::arg("key"), py::arg("scheme") = "auto");
    m.def("render_grid", [](const Graph& g, std::vector<int> labels) { return render_grid(g, Labeling(std::move(labels))); });
    m.def("to_adjlist", &to_adjlist);
    m.def("load_fig1_tiles", [] {
        std::vector<std::string> out;
        for (const auto& t : load_fig1_tiles()) out.push_back(format_tile(t));
        return out;
    }, "the figure tiles in their text form");
}
