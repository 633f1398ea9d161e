#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gonia/anthyphairesis.hpp"
#include "gonia/side_diameter.hpp"
#include "gonia/solid_angle.hpp"
#include "gonia/spherical.hpp"

namespace py = pybind11;
using namespace gonia;

namespace {

py::int_ to_pyint(const Int& v) {
    std::string s = v.get_str();
    PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::list to_pylist(const QuotientSeq& seq) {
    py::list out;
    for (const Int& q : seq) out.append(to_pyint(q));
    return out;
}

py::dict outcome_dict(const AnthOutcome& r) {
    py::dict d;
    d["kind"] = r.is_finite() ? "finite" : r.is_periodic() ? "periodic" : "truncated";
    d["quotients"] = to_pylist(r.quotients);
    d["period"] = to_pylist(r.period);
    d["gcd"] = r.gcd ? py::object(py::str(to_string(*r.gcd))) : py::object(py::none());
    return d;
}

Vec3 as_vec3(const std::array<double, 3>& v) { return {v[0], v[1], v[2]}; }

py::tuple vec_tuple(const Vec3& v) { return py::make_tuple(v.x, v.y, v.z); }

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Equal: return "equal";
        case Verdict::NotEqual: return "not_equal";
        case Verdict::Undecided: return "undecided";
    }
    return "?";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact anthyphairesis, Pell side/diameter sequences, spherical excess, "
              "and solid angle measures";
    m.attr("__version__") = "0.1.0";

    py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<Magnitude>(m, "Magnitude",
                          "Exact rational or quadratic-surd quantity, e.g. "
                          "Magnitude(\"(1+sqrt(5))/2\")")
        .def(py::init([](const std::string& text) { return parse_magnitude(text); }))
        .def(py::init([](long n) { return Magnitude(n); }))
        .def("__str__", [](const Magnitude& x) { return to_string(x); })
        .def("__repr__",
             [](const Magnitude& x) { return "Magnitude(\"" + to_string(x) + "\")"; })
        .def("__float__", [](const Magnitude& x) { return to_double(x); })
        .def("__add__", [](const Magnitude& a, const Magnitude& b) { return a + b; })
        .def("__radd__", [](const Magnitude& a, const Magnitude& b) { return b + a; })
        .def("__sub__", [](const Magnitude& a, const Magnitude& b) { return a - b; })
        .def("__rsub__", [](const Magnitude& a, const Magnitude& b) { return b - a; })
        .def("__mul__", [](const Magnitude& a, const Magnitude& b) { return a * b; })
        .def("__rmul__", [](const Magnitude& a, const Magnitude& b) { return b * a; })
        .def("__truediv__", [](const Magnitude& a, const Magnitude& b) { return a / b; })
        .def("__rtruediv__", [](const Magnitude& a, const Magnitude& b) { return b / a; })
        .def("__neg__", [](const Magnitude& a) { return -a; })
        .def("__eq__", [](const Magnitude& a, const Magnitude& b) { return a == b; })
        .def("__lt__", [](const Magnitude& a, const Magnitude& b) { return a < b; })
        .def("__le__", [](const Magnitude& a, const Magnitude& b) { return a <= b; })
        .def("__gt__", [](const Magnitude& a, const Magnitude& b) { return a > b; })
        .def("__ge__", [](const Magnitude& a, const Magnitude& b) { return a >= b; })
        .def("floor", [](const Magnitude& a) { return to_pyint(floor_of(a)); })
        .def_property_readonly("is_rational", &Magnitude::is_rational);
    py::implicitly_convertible<py::str, Magnitude>();
    py::implicitly_convertible<py::int_, Magnitude>();

    m.def("parse_magnitude", &parse_magnitude, py::arg("text"));
    m.def(
        "archimedean_witness",
        [](const Magnitude& a, const Magnitude& b) { return to_pyint(archimedean_witness(a, b)); },
        py::arg("a"), py::arg("b"), "Minimal natural n with n*a > b");

    m.def(
        "anth",
        [](const Magnitude& a, const Magnitude& b, int max_terms) {
            return outcome_dict(anth_magnitudes(a, b, max_terms));
        },
        py::arg("a"), py::arg("b"), py::arg("max_terms") = 64,
        "Reciprocal subtraction of two magnitudes");
    m.def(
        "anth_integers",
        [](long a, long b) { return outcome_dict(anth_integers(a, b)); },
        py::arg("a"), py::arg("b"));
    m.def(
        "logos_equal",
        [](const Magnitude& a, const Magnitude& b, const Magnitude& c, const Magnitude& d,
           int max_terms) { return verdict_name(logos_equal(a, b, c, d, max_terms)); },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("max_terms") = 64);
    m.def(
        "gnomon_check",
        [](const Magnitude& a, const Magnitude& b) {
            GnomonReport r = gnomon_check(a, b);
            py::dict d;
            d["gnomon_preserved"] = r.gnomon_preserved;
            d["right_angle"] = r.right_angle;
            return d;
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "verify_mean_proportional",
        [](long A, long B, long C, const Magnitude& a, const Magnitude& b, const Magnitude& c,
           const Magnitude& d) { return verify_mean_proportional(A, B, C, a, b, c, d); },
        py::arg("A"), py::arg("B"), py::arg("C"), py::arg("a"), py::arg("b"), py::arg("c"),
        py::arg("d"));

    m.def(
        "side_diameter",
        [](int n) {
            py::list out;
            for (const auto& row : side_diameter_table(n)) {
                py::dict d;
                d["n"] = row.n;
                d["p"] = to_pyint(row.p);
                d["q"] = to_pyint(row.q);
                d["pell_residual"] = to_pyint(row.residual);
                d["angle_class"] = to_string(row.angle_class);
                d["apex_angle_rad"] = row.apex_rad;
                d["gap_rad"] = row.gap_rad;
                out.append(d);
            }
            return out;
        },
        py::arg("count"), "Side and diameter number table");
    m.def(
        "classify_isosceles_apex",
        [](const Magnitude& p, const Magnitude& q) {
            return to_string(classify_isosceles_apex(p, q));
        },
        py::arg("p"), py::arg("q"));
    m.def("apex_angle", py::overload_cast<double, double>(&apex_angle), py::arg("p"),
          py::arg("q"));
    m.def(
        "pythagorean_classify",
        [](double omega, int n_max) { return to_string(pythagorean_classify(omega, n_max)); },
        py::arg("omega"), py::arg("n_max") = 20);
    m.def("right_angle_gap", &right_angle_gap, py::arg("n"));

    m.def(
        "excess_girard",
        [](double a, double b, double c) {
            return excess_from_angles(angles_from_sides(make_triangle(a, b, c)));
        },
        py::arg("a"), py::arg("b"), py::arg("c"),
        "Spherical excess via interior angles (Girard)");
    m.def(
        "excess_lhuilier",
        [](double a, double b, double c) { return excess_lhuilier(make_triangle(a, b, c)); },
        py::arg("a"), py::arg("b"), py::arg("c"), "Spherical excess from sides (l'Huilier)");
    m.def("heron_euclidean", &heron_euclidean, py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("flat_limit_ratio", &flat_limit_ratio, py::arg("a"), py::arg("b"), py::arg("c"),
          py::arg("eps"));
    m.def(
        "embed_triangle",
        [](double a, double b, double c) {
            auto [A, B, C] = embed_triangle(make_triangle(a, b, c));
            return py::make_tuple(vec_tuple(A), vec_tuple(B), vec_tuple(C));
        },
        py::arg("a"), py::arg("b"), py::arg("c"));
    m.def(
        "monte_carlo_excess",
        [](double a, double b, double c, std::uint64_t samples, std::uint64_t seed) {
            McEstimate mc = monte_carlo_excess(make_triangle(a, b, c), samples, seed);
            return py::make_tuple(mc.value, mc.stderr_value);
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("samples") = 1000000,
        py::arg("seed") = 0);

    m.def(
        "trihedral_solid_angle",
        [](double f1, double f2, double f3) {
            return trihedral_solid_angle(validate_trihedral(f1, f2, f3));
        },
        py::arg("f1"), py::arg("f2"), py::arg("f3"),
        "Solid angle of a trihedral vertex from its face angles");
    m.def(
        "triple_product_solid_angle",
        [](const std::array<double, 3>& u, const std::array<double, 3>& v,
           const std::array<double, 3>& w) {
            TripleProductResult r = triple_product_solid_angle(as_vec3(u), as_vec3(v), as_vec3(w));
            return py::make_tuple(r.value, r.degenerate);
        },
        py::arg("u"), py::arg("v"), py::arg("w"));
    m.def(
        "regular_vertex_solid_angle",
        [](int n, double alpha) {
            return regular_vertex_solid_angle(make_vertex_figure(n, alpha));
        },
        py::arg("n"), py::arg("alpha"));
    m.def(
        "platonic_table",
        []() {
            py::list out;
            for (const auto& row : platonic_table()) {
                py::dict d;
                d["solid"] = row.name;
                d["n"] = row.n;
                d["alpha"] = row.alpha;
                d["solid_angle_sr"] = row.solid_angle_sr;
                d["fraction_of_sphere"] = row.fraction_of_sphere;
                out.append(d);
            }
            return out;
        },
        "Vertex solid angles of the five Platonic solids");
    m.def(
        "monte_carlo_solid_angle",
        [](const std::vector<std::array<double, 3>>& edges, std::uint64_t samples,
           std::uint64_t seed) {
            std::vector<Vec3> e;
            e.reserve(edges.size());
            for (const auto& v : edges) e.push_back(as_vec3(v));
            McEstimate mc = monte_carlo_solid_angle(e, samples, seed);
            return py::make_tuple(mc.value, mc.stderr_value);
        },
        py::arg("edges"), py::arg("samples") = 1000000, py::arg("seed") = 0);
    m.def(
        "embed_vertex_figure",
        [](int n, double alpha) {
            py::list out;
            for (const Vec3& v : embed_vertex_figure(make_vertex_figure(n, alpha)))
                out.append(vec_tuple(v));
            return out;
        },
        py::arg("n"), py::arg("alpha"));
}
