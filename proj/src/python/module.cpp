#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dgs/exponents.hpp"
#include "dgs/families.hpp"
#include "dgs/poly_algorithms.hpp"
#include "dgs/report.hpp"
#include "dgs/spectra.hpp"

namespace py = pybind11;
using namespace dgs;

namespace {

// Coefficients constant term first, as Python ints of any size.
py::list to_python(const IntPolynomial& p) {
    py::list out;
    for (const BigInt& c : p.coefficients()) out.append(py::reinterpret_steal<py::object>(PyLong_FromString(c.get_str().c_str(), nullptr, 10)));
    return out;
}

IntPolynomial from_python(const std::vector<py::int_>& coeffs) {
    std::vector<BigInt> c;
    c.reserve(coeffs.size());
    for (const py::int_& v : coeffs) c.emplace_back(py::cast<std::string>(py::str(static_cast<const py::handle&>(v))));
    return IntPolynomial(std::move(c));
}

Digraph make_digraph(int n, const std::vector<std::vector<int>>& arcs) {
    std::vector<Arc> list;
    for (const auto& a : arcs) {
        if (a.size() != 2 && a.size() != 3) fail(ErrorKind::InvalidArgument, "an arc is (from, to) or (from, to, multiplicity)");
        list.push_back({a[0], a[1], a.size() == 3 ? a[2] : 1});
    }
    return Digraph::build(n, list);
}

Field field_of(const std::string& name) {
    if (name == "Q") return Field::Q;
    if (name == "F2") return Field::F2;
    fail(ErrorKind::InvalidArgument, "field must be 'Q' or 'F2'");
}

IntPolynomial charpoly(const Digraph& d, const std::string& method, int cap) {
    if (method == "exact") return charpoly_exact(d);
    if (method == "ldsg") return charpoly_ldsg(d, cap);
    fail(ErrorKind::InvalidArgument, "method must be 'exact' or 'ldsg'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact spectra, minimal polynomials and exponents of digraph families";

    // The message starts with the error kind, e.g. "InvalidParameter: ...".
    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    py::class_<Digraph>(m, "Digraph")
        .def(py::init(&make_digraph), py::arg("n"), py::arg("arcs"))
        .def_static("family", [](const std::string& spec) { return build_family(parse_family_spec(spec)); }, py::arg("spec"))
        .def_static("parse", &parse_digraph, py::arg("text"))
        .def_property_readonly("order", &Digraph::order)
        .def_property_readonly("arcs",
                               [](const Digraph& d) {
                                   std::vector<std::tuple<int, int, int>> out;
                                   for (const Arc& a : d.arcs()) out.emplace_back(a.from, a.to, a.multiplicity);
                                   return out;
                               })
        .def("multiplicity", &Digraph::multiplicity)
        .def("complement", [](const Digraph& d) { return complement(d); })
        .def("to_json", [](const Digraph& d) { return to_json(d); })
        .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; })
        .def("__repr__", [](const Digraph& d) {
            return "Digraph(n=" + std::to_string(d.order()) + ", arcs=" + std::to_string(d.arcs().size()) + ")";
        });

    m.def("charpoly", [](const Digraph& d, const std::string& method, int cap) { return to_python(charpoly(d, method, cap)); },
          py::arg("digraph"), py::arg("method") = "exact", py::arg("cap") = kDefaultEnumerationCap);
    m.def("closed_form", [](const std::string& spec) { return to_python(closed_form_charpoly(parse_family_spec(spec))); },
          py::arg("spec"));
    m.def("minimal_polynomial", [](const Digraph& d) { return to_python(minimal_polynomial(d)); }, py::arg("digraph"));
    m.def("is_non_derogatory", &is_non_derogatory, py::arg("digraph"));
    m.def("is_primitive", &is_primitive, py::arg("digraph"));
    m.def(
        "exponent",
        [](const Digraph& d) -> py::object {
            ExponentResult r = exponent(d);
            if (!r.exponent) return py::none();
            return py::make_tuple(*r.exponent, *r.witness);
        },
        py::arg("digraph"));
    m.def("format_polynomial", [](const std::vector<py::int_>& c) { return to_string(from_python(c)); }, py::arg("coefficients"));
    m.def("parse_polynomial", [](const std::string& text) { return to_python(parse_polynomial(text)); }, py::arg("text"));
    m.def(
        "is_squarefree",
        [](const std::vector<py::int_>& c, const std::string& field) { return is_squarefree(from_python(c), field_of(field)); },
        py::arg("coefficients"), py::arg("field") = "Q");
    m.def(
        "verify",
        [](const std::string& table, std::optional<std::string> n, int cap, unsigned threads) {
            VerifyOptions opts;
            auto t = table_from_string(table);
            if (!t) fail(ErrorKind::InvalidArgument, "unknown table '" + table + "'");
            opts.table = *t;
            if (n) opts.range = parse_range(*n);
            opts.cap = cap;
            opts.threads = threads;
            VerificationReport report;
            {
                py::gil_scoped_release release;
                report = verify(opts);
            }
            return render(report, Format::json);
        },
        py::arg("table") = "all", py::arg("n") = std::nullopt, py::arg("cap") = kDefaultEnumerationCap, py::arg("threads") = 0);
}
