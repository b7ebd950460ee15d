#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sigma_lab/classes.hpp"
#include "sigma_lab/cli.hpp"
#include "sigma_lab/enumerate.hpp"
#include "sigma_lab/graph.hpp"
#include "sigma_lab/graph6.hpp"
#include "sigma_lab/laws.hpp"
#include "sigma_lab/spectral.hpp"
#include "sigma_lab/verify.hpp"

namespace py = pybind11;
using namespace sigmalab;

namespace {

py::object to_fraction(const Rational& r) {
    return py::module_::import("fractions")
        .attr("Fraction")(r.numerator_str() + "/" + r.denominator_str());
}

Rational rational_from(py::handle h) {
    if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
        const std::string num = py::cast<std::string>(py::str(h.attr("numerator")));
        const std::string den = py::cast<std::string>(py::str(h.attr("denominator")));
        return Rational::from_string(num + "/" + den);
    }
    return Rational::from_string(py::cast<std::string>(py::str(h)));
}

py::object json_to_py(const nlohmann::ordered_json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::dict shape_to_dict(const SpiderShape& shape) {
    py::dict d;
    d["kind"] = shape.kind == SpiderKind::Thin ? "thin" : "thick";
    d["legs"] = shape.legs;
    d["body"] = shape.body;
    d["head"] = shape.head;
    return d;
}

py::dict form_to_dict(const ConjectureForm& form) {
    py::dict d;
    d["variant"] = form.variant == ConjectureVariant::K1 ? "K1"
                   : form.variant == ConjectureVariant::K2PlusIsolated ? "K2_plus_isolated"
                                                                       : "star_plus_isolated";
    d["r"] = form.r;
    d["s"] = form.s;
    d["size_constraint_ok"] = form.size_constraint_ok;
    return d;
}

py::dict record_to_dict(const AuditRecord& record) {
    py::dict d;
    d["law"] = record.law;
    d["graph6"] = record.graph6;
    d["verdict"] = std::string(verdict_name(record.verdict));
    d["evidence"] = json_to_py(record.evidence);
    return d;
}

std::vector<std::string> expand_laws(const std::vector<std::string>& laws) {
    if (laws.size() == 1 && laws[0] == "all") {
        std::vector<std::string> ids;
        for (const Law& law : all_laws()) ids.push_back(law.id);
        return ids;
    }
    return laws;
}

py::object run_and_convert(const GraphSource& source, const std::vector<std::string>& laws,
                           int jobs, nlohmann::ordered_json descriptor) {
    RunOptions options;
    options.law_ids = expand_laws(laws);
    options.jobs = jobs;
    return json_to_py(report_to_json(run_audits(source, options, std::move(descriptor))));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Laplacian sigma computation, spectrum calculus, and graph-class audits";

    py::class_<Graph>(m, "Graph")
        .def(py::init<>())
        .def_static("from_edges", &Graph::from_edges, py::arg("n"), py::arg("edges"))
        .def_static("edgeless", &Graph::edgeless, py::arg("n"))
        .def_property_readonly("n", &Graph::vertex_count)
        .def_property_readonly("m", &Graph::edge_count)
        .def("has_edge", &Graph::has_edge)
        .def("degree", &Graph::degree)
        .def("degrees", &Graph::degrees)
        .def("neighbors", &Graph::neighbors)
        .def("edges", &Graph::edges)
        .def("graph6", [](const Graph& g) { return graph6_encode(g); })
        .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
        .def("__hash__", [](const Graph& g) { return py::hash(py::str(graph6_encode(g))); })
        .def("__repr__",
             [](const Graph& g) { return "Graph(graph6='" + graph6_encode(g) + "')"; });

    // construction and structure
    m.def("complement", &complement);
    m.def("disjoint_union", &disjoint_union);
    m.def("k_copies", &k_copies, py::arg("k"), py::arg("g"));
    m.def("join", &join);
    m.def("add_twin", &add_twin, py::arg("g"), py::arg("v"), py::arg("adjacent"));
    m.def("induced_subgraph", &induced_subgraph, py::arg("g"), py::arg("vertices"));
    m.def("relabel", &relabel, py::arg("g"), py::arg("perm"));
    m.def("are_twins", &are_twins, py::arg("g"), py::arg("u"), py::arg("v"));
    m.def("connected_components", &connected_components);
    m.def("is_connected", &is_connected);
    m.def("is_co_connected", &is_co_connected);
    m.def("anticomponents", &anticomponents);
    m.def("anticomponent_vertex_sets", &anticomponent_vertex_sets);

    // families
    m.def("complete", &complete, py::arg("n"));
    m.def("star", &star, py::arg("n"));
    m.def("path", &path, py::arg("n"));
    m.def("cycle", &cycle, py::arg("n"));
    m.def("complete_bipartite", &complete_bipartite, py::arg("r"), py::arg("s"));
    m.def(
        "spider",
        [](const std::string& kind, int k, const Graph& head) {
            const auto made =
                spider(kind == "thin" ? SpiderKind::Thin : SpiderKind::Thick, k, head);
            return py::make_tuple(made.graph, shape_to_dict(made.shape));
        },
        py::arg("kind"), py::arg("k"), py::arg("head") = Graph());

    // spectral engine
    m.def("laplacian", &laplacian);
    m.def("average_degree", [](const Graph& g) { return to_fraction(average_degree(g)); });
    m.def(
        "eigenvalues", [](const Graph& g, double tol) { return eigenvalues(g, tol).values; },
        py::arg("g"), py::arg("tol") = 1e-14);
    m.def("sigma", &sigma);
    m.def("sigma_float", &sigma_float, py::arg("g"), py::arg("tie_tol") = 1e-9);
    m.def(
        "inertia_shifted",
        [](const Graph& g, py::handle t) {
            const Inertia in = inertia_shifted(g, rational_from(t));
            return py::make_tuple(in.n_plus, in.n_zero, in.n_minus);
        },
        py::arg("g"), py::arg("t"));
    m.def(
        "count_eigenvalues_at_least",
        [](const Graph& g, py::handle t) { return count_eigenvalues_at_least(g, rational_from(t)); },
        py::arg("g"), py::arg("t"));
    m.def("multiplicity_of_n", &multiplicity_of_n);
    m.def(
        "join_spectrum",
        [](std::vector<double> s1, int n1, std::vector<double> s2, int n2) {
            return join_spectrum(Spectrum{std::move(s1)}, n1, Spectrum{std::move(s2)}, n2).values;
        },
        py::arg("spec1"), py::arg("n1"), py::arg("spec2"), py::arg("n2"));
    m.def("union_spectrum", [](std::vector<double> s1, std::vector<double> s2) {
        return union_spectrum(Spectrum{std::move(s1)}, Spectrum{std::move(s2)}).values;
    });

    // recognizers
    m.def("is_forest", &is_forest);
    m.def("is_tree", &is_tree);
    m.def("is_star", &is_star);
    m.def("diameter", [](const Graph& g) -> py::object {
        const auto d = diameter(g);
        return d ? py::cast(*d) : py::none();
    });
    m.def("is_split", [](const Graph& g) -> py::object {
        const auto sp = is_split(g);
        return sp ? py::make_tuple(sp->clique, sp->stable) : py::object(py::none());
    });
    m.def("is_pseudo_split", &is_pseudo_split);
    m.def("is_cograph", &is_cograph);
    m.def("has_induced_p4", &has_induced_p4);
    m.def("count_induced_p4", &count_induced_p4);
    m.def("is_extended_p4_laden", &is_extended_p4_laden);
    m.def("recognize_spider", [](const Graph& g) -> py::object {
        const auto shape = recognize_spider(g);
        return shape ? py::object(shape_to_dict(*shape)) : py::object(py::none());
    });
    m.def("is_complete_bipartite", [](const Graph& g) -> py::object {
        const auto rs = is_complete_bipartite(g);
        return rs ? py::make_tuple(rs->first, rs->second) : py::object(py::none());
    });
    m.def("raw_shape", [](const Graph& g) -> py::object {
        const auto form = raw_shape(g);
        return form ? py::object(form_to_dict(*form)) : py::object(py::none());
    });
    m.def("conjecture_form", [](const Graph& g) -> py::object {
        const auto form = conjecture_form(g);
        return form ? py::object(form_to_dict(*form)) : py::object(py::none());
    });

    // graph6 and enumeration
    m.def("graph6_decode", [](const std::string& s) { return graph6_decode(s); });
    m.def("graph6_encode", &graph6_encode);
    m.def("enumerate_nonisomorphic", [](int n) { return enumerate_all(n); });
    m.def("canonical_key", &canonical_key);

    // audits
    m.def("law_ids", [] {
        std::vector<std::string> ids;
        for (const Law& law : all_laws()) ids.push_back(law.id);
        return ids;
    });
    m.def("audit", [](const std::string& law_id, const Graph& g) {
        const Law* law = find_law(law_id);
        if (!law) throw std::invalid_argument("unknown law '" + law_id + "'");
        AuditContext ctx(g);
        return record_to_dict(law->fn(ctx));
    });
    m.def("audit_all", [](const Graph& g) {
        py::list out;
        for (const AuditRecord& record : audit_all(g)) out.append(record_to_dict(record));
        return out;
    });
    m.def(
        "verify_graphs",
        [](std::vector<Graph> graphs, const std::vector<std::string>& laws, int jobs) {
            return run_and_convert(vector_source(std::move(graphs)), laws, jobs,
                                   {{"kind", "args"}});
        },
        py::arg("graphs"), py::arg("laws") = std::vector<std::string>{"all"}, py::arg("jobs") = 1);
    m.def(
        "verify_enumerated",
        [](int max_n, const std::vector<std::string>& laws, int jobs) {
            return run_and_convert(enumeration_source(max_n), laws, jobs,
                                   {{"kind", "enumerate"}, {"max_n", max_n}});
        },
        py::arg("max_n"), py::arg("laws") = std::vector<std::string>{"all"}, py::arg("jobs") = 1);
    m.def(
        "verify_file",
        [](const std::string& path, const std::vector<std::string>& laws, int jobs) {
            return run_and_convert(graph6_file_source(path), laws, jobs,
                                   {{"kind", "file"}, {"path", path}});
        },
        py::arg("path"), py::arg("laws") = std::vector<std::string>{"all"}, py::arg("jobs") = 1);

    // the CLI entry point, for driving the tool from python
    m.def("run_cli", &run_cli, py::arg("args"));
}
