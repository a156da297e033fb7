#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qmb/errors.hpp"
#include "qmb/harness.hpp"
#include "qmb/oracle.hpp"

namespace py = pybind11;
using qmb::json;

namespace {

json py_to_json(const py::handle& obj) {
    if (obj.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
    if (py::isinstance<py::int_>(obj)) {
        try {
            return obj.cast<std::int64_t>();
        } catch (const py::cast_error&) {
            return obj.cast<std::uint64_t>();
        }
    }
    if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
    if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
    if (py::isinstance<py::dict>(obj)) {
        json out = json::object();
        for (const auto& item : obj.cast<py::dict>())
            out[py::str(item.first).cast<std::string>()] = py_to_json(item.second);
        return out;
    }
    if (py::isinstance<py::list>(obj) || py::isinstance<py::tuple>(obj)) {
        json out = json::array();
        for (const auto& item : obj.cast<py::sequence>()) out.push_back(py_to_json(item));
        return out;
    }
    throw qmb::ConfigError("value is not convertible to JSON");
}

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null:
            return py::none();
        case json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case json::value_t::number_integer:
            return py::int_(j.get<std::int64_t>());
        case json::value_t::number_unsigned:
            return py::int_(j.get<std::uint64_t>());
        case json::value_t::number_float:
            return py::float_(j.get<double>());
        case json::value_t::string:
            return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const json& item : j) out.append(json_to_py(item));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (const auto& item : j.items())
                out[py::str(item.key())] = json_to_py(item.value());
            return out;
        }
        default:
            throw qmb::ConfigError("unsupported JSON value");
    }
}

qmb::PointValue point_arg(const py::handle& obj) {
    return qmb::point_from_json(py_to_json(obj));
}

// Composed distance with its expression echo; the Python face of the
// library's space expressions.
struct PySpace {
    qmb::ComposedSpace cs;

    static PySpace compose(const py::handle& expr) {
        return PySpace{qmb::compose_space(py_to_json(expr))};
    }
    std::string label() const { return cs.space.label(); }
    py::object expr() const { return json_to_py(cs.expr); }
    bool separating() const { return cs.separating; }
    double dist(const py::handle& x, const py::handle& y) const {
        return cs.space.dist(point_arg(x), point_arg(y));
    }
    PySpace conjugate() const {
        return PySpace{qmb::ComposedSpace{qmb::conjugate(cs.space), cs.zoo_id, std::nullopt,
                                          cs.separating, json{{"conjugate", cs.expr}}}};
    }
    PySpace symmetrize() const {
        return PySpace{qmb::ComposedSpace{qmb::symmetrize(cs.space), cs.zoo_id, std::nullopt,
                                          cs.separating, json{{"symmetrize", cs.expr}}}};
    }
    PySpace truncate(double cap) const {
        return PySpace{qmb::ComposedSpace{
            qmb::truncate(cs.space, cap), cs.zoo_id, std::nullopt, cs.separating,
            json{{"truncate", {{"of", cs.expr}, {"cap", cap}}}}}};
    }
    py::object check_axioms(std::size_t samples, std::uint64_t seed, double tol,
                            bool require_separation) const {
        qmb::AxiomCheckOptions opt;
        opt.samples = samples;
        opt.seed = seed;
        opt.tol = tol;
        opt.require_separation = require_separation;
        const qmb::AxiomReport rep = qmb::check_axioms(cs.space, opt);
        json out{{"pass", rep.pass()},
                 {"triples", rep.triples_checked},
                 {"distances", rep.distances_evaluated},
                 {"failures",
                  {{"reflexivity", rep.reflexivity_failures.size()},
                   {"triangle", rep.triangle_failures.size()},
                   {"separation", rep.separation_failures.size()},
                   {"negativity", rep.negativity_failures.size()}}}};
        return json_to_py(out);
    }
};

py::object run_suite_py(const py::handle& config) {
    const qmb::SuiteConfig cfg = qmb::SuiteConfig::from_json(py_to_json(config));
    return json_to_py(qmb::run_suite(cfg).to_json());
}

py::object list_zoo_py() { return json_to_py(qmb::list_zoo()); }

py::object construct_chi_py(const std::string& target, const py::handle& base, double delta) {
    return json_to_py(qmb::construct_chi(target, py_to_json(base), delta));
}

std::string random_digraph_text(std::size_t nodes, double density, std::uint64_t seed) {
    return qmb::random_digraph(nodes, density, seed).to_text();
}

py::object closure_info(const std::string& text) {
    const qmb::FiniteQPSpace space = qmb::closure(qmb::WeightedDigraph::from_text(text));
    json matrix = json::array();
    for (std::size_t i = 0; i < space.size; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < space.size; ++j) row.push_back(space.at(i, j));
        matrix.push_back(std::move(row));
    }
    return json_to_py(json{{"size", space.size},
                           {"matrix", std::move(matrix)},
                           {"cappedPairs", space.capped_pairs}});
}

py::object oracle_cross_check(const std::string& text, std::uint64_t seed) {
    const qmb::FiniteQPSpace space = qmb::closure(qmb::WeightedDigraph::from_text(text));
    return json_to_py(qmb::cross_check(space, seed).to_json());
}

}  // namespace

PYBIND11_MODULE(_qmb, m) {
    m.doc() = "quasi-metric spaces, bornologies, and seeded verification suites";

    static py::exception<qmb::Error> base_exc(m, "QmbError");
    static py::exception<qmb::ConfigError> config_exc(m, "ConfigError", base_exc.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const qmb::ConfigError& e) {
            PyErr_SetString(config_exc.ptr(), e.what());
        } catch (const qmb::Error& e) {
            PyErr_SetString(base_exc.ptr(), e.what());
        }
    });

    py::class_<PySpace>(m, "Space")
        .def_property_readonly("label", &PySpace::label)
        .def_property_readonly("expr", &PySpace::expr)
        .def_property_readonly("separating", &PySpace::separating)
        .def("dist", &PySpace::dist, py::arg("x"), py::arg("y"))
        .def("conjugate", &PySpace::conjugate)
        .def("symmetrize", &PySpace::symmetrize)
        .def("truncate", &PySpace::truncate, py::arg("cap"))
        .def("check_axioms", &PySpace::check_axioms, py::arg("samples") = 2000,
             py::arg("seed") = 0, py::arg("tol") = 1e-9,
             py::arg("require_separation") = false);

    m.def("compose", &PySpace::compose, py::arg("expr"),
          "build a space from a catalog id or expression dict");
    m.def("zoo_ids", [] { return qmb::zoo_ids(); });
    m.def("list_zoo", &list_zoo_py);
    m.def("run_suite", &run_suite_py, py::arg("config"));
    m.def("suite_ids", [] { return qmb::suite_ids(); });
    m.def("construct_chi", &construct_chi_py, py::arg("target"),
          py::arg("base") = py::none(), py::arg("delta") = 1.0);
    m.def("random_digraph_text", &random_digraph_text, py::arg("nodes"),
          py::arg("density"), py::arg("seed"));
    m.def("closure_info", &closure_info, py::arg("text"));
    m.def("oracle_cross_check", &oracle_cross_check, py::arg("text"), py::arg("seed") = 0);
}
