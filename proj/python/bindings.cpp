#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "indcx/complex.hpp"
#include "indcx/genfun.hpp"
#include "indcx/grid.hpp"
#include "indcx/homology.hpp"
#include "indcx/intervals.hpp"
#include "indcx/morse.hpp"
#include "indcx/transfer.hpp"

namespace py = pybind11;
using namespace indcx;

namespace {

py::object to_py(const BigInt& x) { return py::module_::import("builtins").attr("int")(x.str()); }

// Exact Gaussian coefficients as (re, im) integer pairs.
std::vector<std::pair<py::object, py::object>> gauss_list(const std::vector<GaussInt>& s) {
    std::vector<std::pair<py::object, py::object>> out;
    for (auto& z : s) out.emplace_back(to_py(z.re), to_py(z.im));
    return out;
}

py::dict profile_dict(const HomologyProfile& h) {
    py::dict d;
    for (auto& x : h.dims) {
        if (x.betti == 0 && x.torsion.empty()) continue;
        py::list tors;
        for (auto& t : x.torsion) tors.append(to_py(t));
        d[py::int_(x.dim)] = py::make_tuple(x.betti, tors);
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_indcx, m) {
    m.doc() = "Independence complexes of grid graphs and hard particles at activity -1";

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("family", [](const Graph& g) { return family_name(g.family()); })
        .def_property_readonly("m", &Graph::m)
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("rows", &Graph::rows)
        .def_property_readonly("cols", &Graph::cols)
        .def("vertex_count", &Graph::vertex_count)
        .def("edge_count", &Graph::edge_count)
        .def("edges", &Graph::edges)
        .def("id", &Graph::id, py::arg("row"), py::arg("col"))
        .def("coords", &Graph::coords)
        .def("usable", &Graph::usable)
        .def("to_json", [](const Graph& g) { return to_json(g); })
        .def_static("from_json", &graph_from_json)
        .def("__repr__", [](const Graph& g) {
            return "<Graph " + family_name(g.family()) + " " + std::to_string(g.m()) + "x" + std::to_string(g.n()) + ">";
        });

    m.def("build", [](const std::string& family, int rows, int cols) {
        return build_family(family_from_name(family), rows, cols);
    }, py::arg("family"), py::arg("m"), py::arg("n"));
    m.def("induced_delete", &induced_delete);
    m.def("fix_boundary", [](const Graph& g, std::vector<int> A, std::vector<int> B) {
        auto fx = fix_boundary(g, A, B);
        return py::make_tuple(fx.graph, fx.forced_count, fx.feasible);
    });

    m.def("alternating_sum", [](const Graph& g) { return to_py(alternating_sum(g)); },
          "Z(G): sum over independent sets of (-1)^|I|");
    m.def("partition_function", [](const Graph& g, long z) { return to_py(partition_function(g, z)); });
    m.def("count_independent_sets", &count_independent_sets);

    m.def("homology", [](const Graph& g, std::size_t max_faces) {
        return profile_dict(homology_profile(independence_complex(g, max_faces)));
    }, py::arg("graph"), py::arg("max_faces") = 2'000'000,
          "Reduced integer homology of I(G) as {dim: (betti, torsion)}");
    m.def("homology_entry", [](const Graph& g, std::size_t max_faces) {
        return homology_profile(independence_complex(g, max_faces)).table_entry();
    }, py::arg("graph"), py::arg("max_faces") = 2'000'000);

    m.def("z_cylinder", [](int a, int b) { return to_py(z_cylinder(a, b)); });
    m.def("z_rect", [](int a, int b) { return to_py(z_rect(a, b)); });
    m.def("z_hex_cylinder", [](int a, int b) { return to_py(z_hex_cylinder(a, b)); });
    m.def("z_hex_torus", [](int a, int b) { return to_py(z_hex_torus(a, b)); });
    m.def("transfer_charpoly", [](int rows) {
        std::vector<py::object> c;
        for (auto& x : char_poly(build_transfer_square(rows)).coeffs()) c.push_back(to_py(x));
        return c;
    }, "Coefficients of det(tI - T), ascending");

    m.def("morse_tree", [](const std::string& family, int rows) {
        auto gt = tree_generator(tree_family_from_name(family), rows);
        auto v = validate_tree(gt.graph, gt.tree);
        if (!v.ok) throw std::runtime_error(v.message);
        auto ev = evaluate_tree(gt.graph, gt.tree);
        auto c = independence_complex(gt.graph);
        bool acyclic = check_acyclic(c, ev.matching).ok;
        std::vector<std::vector<int>> crit;
        for (Face f : ev.critical) crit.push_back(face_vertices(f));
        return py::make_tuple(gt.graph, crit, acyclic);
    }, "(graph, critical faces, acyclic) for C2, C3, C4, C5 or H2");

    m.def("class_sums", [](int a, int b) {
        auto r = class_sums(a, b);
        py::dict d;
        d["total"] = r.total;
        d["P1"] = r.p1;
        d["P2"] = r.p2;
        d["Q1"] = r.q1;
        d["Q2"] = r.q2;
        d["Q3"] = r.q3;
        d["ok"] = r.ok();
        return d;
    });
    m.def("q2_sum", [](int a, int b) { return to_py(q2_sum(a, b)); });
    m.def("pattern_sum", [](int a, int b, std::vector<int> pi) { return to_py(pattern_sum(a, b, pi)); });

    m.def("g_series", [](int rows, std::vector<int> A, std::vector<int> B, int terms) {
        return gauss_list(g_series(rows, row_mask(A), row_mask(B), terms));
    }, py::arg("m"), py::arg("A"), py::arg("B"), py::arg("terms") = 40,
          "Coefficients of G_{A,B}(t) as (re, im) pairs");
    m.def("g_fit", [](int rows, std::vector<int> A, std::vector<int> B, int terms) -> py::object {
        auto f = rational_fit(g_series(rows, row_mask(A), row_mask(B), terms), 14, 20);
        if (!f) return py::none();
        return py::str(f->str());
    }, py::arg("m"), py::arg("A"), py::arg("B"), py::arg("terms") = 40);
    m.def("spectra_match", [](int rows) { return spectra_match(rows).ok; });

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
}
