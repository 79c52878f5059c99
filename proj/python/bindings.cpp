// Python module _synco: loaders, the main computations and exact results as Fractions.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "synco/io.hpp"

namespace py = pybind11;
using namespace synco;

namespace {

py::object fraction(const Rational& q) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(py::int_(py::str(q.get_num().get_str())), py::int_(py::str(q.get_den().get_str())));
}

py::list matrix(const Matrix& m) {
    py::list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < m.cols(); ++j) row.append(fraction(m(i, j)));
        rows.append(row);
    }
    return rows;
}

py::object from_json(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }
Json to_json_value(const py::object& o) { return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>()); }

CoefficientFrame frame(long p) {
    CoefficientFrame f;
    f.p = p;
    f.validate();
    return f;
}

py::dict spectral_summary(const SpectralSequence& ss) {
    auto page = [](const SpectralPage& p) {
        py::dict d;
        for (auto& [b, n] : p.dims) d[py::make_tuple(b.first, b.second)] = n;
        return d;
    };
    py::list pages;
    for (auto& p : ss.pages) pages.append(page(p));
    py::dict out;
    out["pages"] = pages;
    out["infinity"] = page(ss.infinity);
    out["total_betti"] = ss.total_betti;
    out["converges"] = ss.converges;
    out["degenerates_at"] = ss.degenerates_at;
    return out;
}

}  // namespace

PYBIND11_MODULE(_synco, m) {
    m.doc() = "Exact computations with p-adic Hodge complexes over Q";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_RuntimeError);

    py::class_<Complex>(m, "Complex")
        .def_static("from_json", [](const py::object& o) { return complex_from_json(to_json_value(o)); })
        .def_property_readonly("lo", &Complex::lo)
        .def_property_readonly("hi", &Complex::hi)
        .def("dim", &Complex::dim)
        .def("d", [](const Complex& c, int n) { return matrix(c.d(n)); })
        .def("betti", [](const Complex& c) { return betti_table(c); })
        .def("euler_characteristic", &euler_characteristic)
        .def("to_json", [](const Complex& c) { return from_json(to_json(c)); })
        .def("__eq__", [](const Complex& a, const Complex& b) { return a == b; });

    py::class_<FilteredComplex>(m, "FilteredComplex")
        .def_static("from_json", [](const py::object& o) { return filtered_from_json(to_json_value(o)); })
        .def_property_readonly("carrier", &FilteredComplex::carrier)
        .def_property_readonly("levels", &FilteredComplex::levels)
        .def("is_strict", &is_strict_complex)
        .def("is_strict_by_e1", &is_strict_complex_by_e1)
        .def("e1_dimension", &e1_dimension)
        .def("spectral_sequence", [](const FilteredComplex& fc) { return spectral_summary(spectral_sequence(fc)); })
        .def("to_json", [](const FilteredComplex& fc) { return from_json(to_json(fc)); });

    py::class_<PHodgeComplex>(m, "PHodgeComplex")
        .def_static("from_json", [](const py::object& o, long p) { return phc_from_json(to_json_value(o), frame(p)); },
                    py::arg("data"), py::arg("p"))
        .def_property_readonly("rig", [](const PHodgeComplex& x) { return x.rig.complex(); })
        .def_property_readonly("k", [](const PHodgeComplex& x) { return x.k; })
        .def_property_readonly("dr", [](const PHodgeComplex& x) { return x.dr; })
        .def_property_readonly("p", [](const PHodgeComplex& x) { return x.frame().p; })
        .def("frobenius", [](const PHodgeComplex& x, int n) { return matrix(frobenius_on_cohomology(x.rig, n)); })
        .def("twist", [](const PHodgeComplex& x, int n) { return twist(x, n); })
        .def("shift", [](const PHodgeComplex& x, int k) { return shift(x, k); })
        .def("__matmul__", [](const PHodgeComplex& a, const PHodgeComplex& b) { return tensor(a, b); })
        .def("to_json", [](const PHodgeComplex& x) { return from_json(to_json(x)); });

    m.def("tate", [](int n, long p) { return tate_object(n, frame(p)); }, py::arg("n"), py::arg("p"));
    m.def("unit", [](long p) { return unit_object(frame(p)); }, py::arg("p"));
    m.def("ext", &ext, py::arg("source"), py::arg("target"), py::arg("degree"));
    m.def("ext_table", &ext_table, py::arg("source"), py::arg("target"));
    m.def("charpoly", [](const std::vector<std::vector<std::string>>& rows) {
        Matrix a(rows.size(), rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < rows[i].size(); ++j) a(i, j) = parse_rational(rows[i][j]);
        py::list out;
        for (auto& c : charpoly(a)) out.append(fraction(c));
        return out;
    });

    py::class_<GeometricDatum>(m, "Datum")
        .def_readonly("name", &GeometricDatum::name)
        .def_readonly("d", &GeometricDatum::d)
        .def_readonly("rgamma", &GeometricDatum::rgamma)
        .def_readonly("rgamma_c", &GeometricDatum::rgamma_c)
        .def("cohomology", [](const GeometricDatum& x, int twist, int degree) { return abs_cohomology(x, twist, degree).dim; },
             py::arg("twist"), py::arg("degree"))
        .def("compact", [](const GeometricDatum& x, int twist, int degree) { return abs_compact(x, twist, degree).dim; },
             py::arg("twist"), py::arg("degree"))
        .def("homology", &abs_homology, py::arg("twist"), py::arg("degree"))
        .def("duality", [](const GeometricDatum& x, int twist, int degree) {
            DualityReport r = duality_check(x, twist, degree);
            py::dict d;
            d["preconditions_ok"] = r.preconditions_ok;
            d["failure"] = r.failure;
            d["lhs"] = r.lhs;
            d["rhs"] = r.rhs;
            d["isomorphism"] = r.isomorphism;
            return d;
        }, py::arg("twist"), py::arg("degree"))
        .def("les_exact", [](const GeometricDatum& x, int twist, bool compact) {
            return long_exact_sequence(x, twist, -1, 2 * x.d + 1, LesKind::Eta, compact).sequence.all_exact();
        }, py::arg("twist"), py::arg("compact") = false);

    py::class_<ProperMap>(m, "ProperMap")
        .def_readonly("source", &ProperMap::source)
        .def_readonly("target", &ProperMap::target)
        .def("gysin", [](const ProperMap& f, int degree, int twist) { return matrix(gysin(f, degree, twist)); },
             py::arg("degree"), py::arg("twist"));

    py::class_<DoubleComplex>(m, "DoubleComplex")
        .def("total", &total_complex)
        .def("spectral_sequence", [](const DoubleComplex& dc, const std::string& direction) {
            if (direction != "col" && direction != "row") throw ValidationError("direction must be 'col' or 'row'");
            return spectral_summary(spectral_sequence(dc, direction == "col" ? Direction::Columns : Direction::Rows));
        }, py::arg("direction") = "col");

    py::class_<FiniteSite>(m, "Site")
        .def_property_readonly("names", &FiniteSite::names)
        .def("height", &FiniteSite::height)
        .def("has_enough_points", &FiniteSite::has_enough_points)
        .def("cohomology", [](const FiniteSite& site, const py::object& sheaf, const std::string& route) {
            Sheaf f = sheaf_from_json(to_json_value(sheaf), site);
            f.validate(site);
            Route r = route == "cech" ? Route::Cech : route == "godement" ? Route::Godement
                    : route == "godement_squared" ? Route::GodementSquared
                    : throw ValidationError("unknown route '" + route + "'");
            return sheaf_cohomology(site, f, r);
        }, py::arg("sheaf"), py::arg("route") = "cech");

    m.def("load", [](const std::filesystem::path& path) -> py::object {
        return std::visit([](auto&& v) -> py::object {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Json>) return from_json(v);
            else if constexpr (std::is_same_v<T, PHMorphism>) throw ValidationError("morphism files are not exposed");
            else return py::cast(v);
        }, load_file(path));
    }, py::arg("path"));
}
