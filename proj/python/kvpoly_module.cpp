#include "kvpoly/invariants.hpp"
#include "kvpoly/moves.hpp"
#include "kvpoly/oracles.hpp"
#include "kvpoly/webfile.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace kvpoly;

namespace {

py::object fraction(const mpq_class& x) {
    py::object to_int = py::module_::import("builtins").attr("int");
    return py::module_::import("fractions")
        .attr("Fraction")(to_int(x.get_num().get_str()), to_int(x.get_den().get_str()));
}

mpq_class rational(const py::handle& x) {
    py::object f = py::module_::import("fractions").attr("Fraction")(x);
    return mpq_class(py::str(f.attr("numerator")).cast<std::string>() + "/" +
                     py::str(f.attr("denominator")).cast<std::string>());
}

py::list expansion(const oracles::Expansion& e) {
    py::list out;
    for (const auto& [k, c] : e) out.append(py::make_tuple(k, c));
    return out;
}

}  // namespace

PYBIND11_MODULE(_kvpoly, m) {
    m.doc() = "Colored quantum invariants of spatial graph diagrams";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Scalar>(m, "Scalar")
        .def(py::init<long>(), py::arg("value") = 0)
        .def_static("parse", &Scalar::parse)
        .def_static("v_pow", &Scalar::v_pow)
        .def("is_laurent", &Scalar::is_laurent)
        .def("is_zero", &Scalar::is_zero)
        .def("q_str", &Scalar::q_str)
        .def_property_readonly("numerator", [](const Scalar& s) { return s.num().str(); })
        .def_property_readonly("denominator", [](const Scalar& s) { return s.den().str(); })
        .def("eval", [](const Scalar& s, const py::object& v) { return fraction(s.eval(rational(v))); },
             "Value at a rational point v.")
        .def("__str__", &Scalar::str)
        .def("__repr__", [](const Scalar& s) { return "Scalar('" + s.str() + "')"; })
        .def("__eq__", [](const Scalar& a, const Scalar& b) { return a == b; })
        .def("__add__", [](const Scalar& a, const Scalar& b) { return a + b; })
        .def("__sub__", [](const Scalar& a, const Scalar& b) { return a - b; })
        .def("__mul__", [](const Scalar& a, const Scalar& b) { return a * b; })
        .def("__truediv__", [](const Scalar& a, const Scalar& b) { return a / b; })
        .def("__neg__", [](const Scalar& a) { return -a; });
    py::implicitly_convertible<long, Scalar>();

    py::class_<MoveSpec>(m, "Move")
        .def_property_readonly("name", [](const MoveSpec& s) { return std::string(move_name(s.move)); })
        .def("__str__", &MoveSpec::str)
        .def("__repr__", [](const MoveSpec& s) { return "Move('" + s.str() + "')"; });

    py::class_<GraphDiagram>(m, "Diagram")
        .def_static("parse", py::overload_cast<const std::string&>(&parse_diagram))
        .def_property_readonly("oriented", [](const GraphDiagram& g) { return g.oriented; })
        .def("__len__", &GraphDiagram::size)
        .def("__str__", [](const GraphDiagram& g) { return serialize(g); })
        .def("isomorphic", [](const GraphDiagram& a, const GraphDiagram& b) { return isomorphic(a, b); })
        .def("unoriented", [](const GraphDiagram& g) { return unoriented(g); })
        .def("reversed", [](const GraphDiagram& g) { return reversed(g); })
        .def("move_sites", [](const GraphDiagram& g) { return enumerate_move_sites(g); })
        .def("apply", [](const GraphDiagram& g, const MoveSpec& s) { return apply_move(g, s); });

    m.def("kv_oriented", &kv_oriented, py::arg("diagram"), py::arg("color"), py::arg("variant") = -1);
    m.def("kv_singular", &kv_singular, py::arg("diagram"), py::arg("m"));
    m.def("kv_unoriented", &kv_unoriented, py::arg("diagram"), py::arg("n"));
    m.def("unknot", &unknot, py::arg("oriented") = true);
    m.def("twist_closure", &twist_closure, py::arg("vertices"), py::arg("crossings"));
    m.def("twist_closure_unoriented", &twist_closure_unoriented, py::arg("vertices"), py::arg("crossings"));
    m.def("random_diagram", [](uint64_t seed, int size, bool oriented) {
        RandomOptions o;
        o.oriented = oriented;
        return random_diagram(seed, size, o);
    }, py::arg("seed"), py::arg("size"), py::arg("oriented") = true);
    m.def("reduce_web", [](const std::string& text) { return evaluate_closed(parse_web(text)); },
          py::arg("text"), "Value of a closed web given in the web file format.");

    py::module_ o = m.def_submodule("oracles", "Closed-form values");
    o.def("loop", &oracles::loop_value);
    o.def("double_loop", &oracles::double_loop_value);
    o.def("clasp_crossing", &oracles::clasp_crossing_coeff);
    o.def("partial_closure", &oracles::partial_closure_coeff);
    o.def("clasp_curl", &oracles::clasp_curl_coeff);
    o.def("double_clasp_crossing", &oracles::double_clasp_crossing_coeff);
    o.def("vertex_crossing", &oracles::vertex_crossing_coeff);
    o.def("skein", [](int n, int sign) { return expansion(oracles::colored_skein_coeffs(n, sign)); });
    o.def("full_twist", [](int n, int l) { return expansion(oracles::full_twist_expansion(n, l)); });
    o.def("bubble", [](int n, int mm, int k, int l) { return expansion(oracles::bubble_expansion(n, mm, k, l)); });
    o.def("st_oriented", &oracles::st_oriented);
    o.def("st_unoriented", &oracles::st_unoriented);
}
