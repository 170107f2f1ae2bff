#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pretzelccs/commands.hpp"

namespace py = pybind11;
using namespace pretzel;

namespace {

py::object to_py(const Int& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::tuple to_py(const Rat& v) { return py::make_tuple(to_py(Int(v.get_num())), to_py(Int(v.get_den()))); }

py::list conway_list(const ConwayPolynomial& c) {
    py::list out;
    for (int i = 0; i <= std::max(c.poly().degree(), 0); ++i)
        out.append(to_py(c.poly().coeff(static_cast<std::size_t>(i))));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact invariants and chirally cosmetic surgery obstructions for "
              "alternating odd pretzel knots";

    // translators run most-recently-registered first: base class first
    py::register_exception<Error>(m, "PretzelError", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<BadLength>(m, "BadLength", PyExc_ValueError);
    py::register_exception<NegativeTwist>(m, "NegativeTwist", PyExc_ValueError);

    py::class_<PretzelKnot>(m, "PretzelKnot")
        .def(py::init<std::vector<long>>(), py::arg("twists"))
        .def_static("parse", &parse_knot, py::arg("text"))
        .def_property_readonly("twists", &PretzelKnot::twists)
        .def_property_readonly("genus", &PretzelKnot::genus)
        .def("canonical", &PretzelKnot::canonical)
        .def("__str__", &PretzelKnot::to_string)
        .def("__repr__", [](const PretzelKnot& k) { return "PretzelKnot('" + k.to_string() + "')"; })
        .def("__eq__", [](const PretzelKnot& a, const PretzelKnot& b) { return a == b; });

    m.def("crossing_number", [](const PretzelKnot& k) { return to_py(crossing_number(k)); });
    m.def("conway_polynomial",
          [](const PretzelKnot& k) { return conway_list(conway_polynomial(k)); },
          "Conway coefficients [1, 0, a2, 0, a4, ...] in z");
    m.def("jones_polynomial", [](const PretzelKnot& k) {
        const JonesPolynomial jones = jones_polynomial(k);
        py::dict out;
        for (const auto& [e, c] : jones.in_t.terms()) out[py::int_(e)] = to_py(c);
        return out;
    }, "Jones polynomial as {exponent: coefficient} in t");
    m.def("a2_closed", [](const PretzelKnot& k) { return to_py(a2_closed(k)); });
    m.def("v3_closed", [](const PretzelKnot& k) { return to_py(v3_closed(k)); });
    m.def("v3_skein", [](const PretzelKnot& k) { return to_py(v3_skein(k)); });
    m.def("invariants_json",
          [](const PretzelKnot& k) { return invariants_json(full_invariants(k)).dump(); },
          "Cross-checked invariants as a JSON string");

    m.def("p_signature", [](const PretzelKnot& k, long p) {
        PSignature s = p_signature(k, Int(p));
        return py::make_tuple(to_py(s.value), s.coincidence);
    }, py::arg("knot"), py::arg("p"), "(sigma(K,p), coincidence flag)");
    m.def("sigma_ratio_table", [](const PretzelKnot& k, unsigned pmax, unsigned jobs) {
        py::list out;
        for (const SigmaRow& r : sigma_ratio_table(k, pmax, jobs))
            out.append(py::make_tuple(to_py(r.p), to_py(r.sigma), to_py(r.ratio), r.coincidence));
        return out;
    }, py::arg("knot"), py::arg("pmax"), py::arg("jobs") = 1,
       "rows (p, sigma, (num, den) of sigma/p, coincidence)");
    m.def("signature_at_pi_multiple", [](const PretzelKnot& k, long num, long den) {
        SignatureProfile profile = signature_profile(k);
        return signature_at_angle(profile, make_rat(Int(num), Int(den)));
    }, py::arg("knot"), py::arg("num"), py::arg("den"),
       "signature at omega = exp(i*pi*num/den)");
    m.def("alexander_root_angles", [](const PretzelKnot& k, long width_den) {
        SignatureProfile profile = signature_profile(k);
        py::list out;
        for (unsigned m = 0; m < profile.genus; ++m) {
            RationalInterval t = theta_interval(profile, m, make_rat(Int(1), Int(width_den)));
            out.append(py::make_tuple(to_py(t.lo), to_py(t.hi)));
        }
        return out;
    }, py::arg("knot"), py::arg("width_den") = 1000000,
       "certified enclosures ((lo_num, lo_den), (hi_num, hi_den)) of the "
       "Alexander root angles in (0, pi), sorted increasingly");
    m.def("hermitian_signature_oracle", &hermitian_signature_oracle, py::arg("knot"),
          py::arg("angle"));

    m.def("strong_ratio", [](const PretzelKnot& k) { return to_py(strong_ratio(k).value); },
          "F = -8*a2*v3 / (7*a2^2 - a2 - 10*a4) as (num, den)");
    m.def("cass_slope_sum", [](const PretzelKnot& k, long p) {
        return to_py(cass_slope_sum(k, Int(p)));
    }, "q + q' = -sigma(K,p)/(4*a2) as (num, den)");
    m.def("decide_json", [](const PretzelKnot& k) { return verdict_json(decide(k)).dump(); },
          "Obstruction verdict as a JSON string");

    m.attr("__version__") = "0.1.0";
}
