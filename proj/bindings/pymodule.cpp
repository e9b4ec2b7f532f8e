#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <pretzel/errors.hpp>
#include <pretzel/knot.hpp>
#include <pretzel/lens.hpp>
#include <pretzel/matrix.hpp>
#include <pretzel/obstruction.hpp>
#include <pretzel/plumbing.hpp>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace pretzel;

namespace {

py::object big_int(const Int& v) {
    static py::object ctor = py::module_::import("builtins").attr("int");
    return ctor(v.get_str());
}

py::object fraction(const Rat& q) {
    static py::object ctor = py::module_::import("fractions").attr("Fraction");
    return ctor(rat_to_string(q));
}

long long ll_of(const Int& v) {
    if (!v.fits_slong_p()) throw limit_error("value exceeds the machine-integer range");
    return mpz_get_si(v.get_mpz_t());
}

py::tuple triple(const PretzelKnot& k) { return py::make_tuple(k.p, k.q, k.r); }

py::list matrix_rows(const IntMatrix& m) {
    py::list rows;
    for (int i = 0; i < m.rows(); ++i) {
        py::list row;
        for (int j = 0; j < m.cols(); ++j) row.append(ll_of(m.at(i, j)));
        rows.append(row);
    }
    return rows;
}

// class table of the double branched cover, plus its unit labelling
std::pair<ClassTable, std::vector<int>> labelled_cover(const PretzelKnot& k) {
    ClassTable t = compute_class_table(pretzel_plumbing(normalize(k).knot));
    std::vector<int> labels = label_classes(t, pretzel_unit_class(t));
    return {std::move(t), std::move(labels)};
}

const char* alexander_name(AlexanderStatus s) {
    switch (s) {
        case AlexanderStatus::NoObstruction: return "NoObstruction";
        case AlexanderStatus::UnknottingAtLeast2: return "UnknottingAtLeast2";
        default: return "Indeterminate";
    }
}

const char* symmetry_name(SymmetryStatus s) {
    switch (s) {
        case SymmetryStatus::PassesWith: return "PassesWith";
        case SymmetryStatus::FailsAllUnits: return "FailsAllUnits";
        default: return "NotApplicable";
    }
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact unknotting-number-one obstructions for 3-strand pretzel knots";

    py::register_exception<limit_error>(m, "LimitError", PyExc_RuntimeError);
    py::register_exception<unsupported_error>(m, "UnsupportedError", PyExc_ValueError);

    m.def(
        "normalize",
        [](long long p, long long q, long long r) {
            NormalForm nf = normalize(PretzelKnot(p, q, r));
            return py::make_tuple(triple(nf.knot), nf.reflected);
        },
        py::arg("p"), py::arg("q"), py::arg("r"),
        "Normal form of P(p,q,r) and whether a mirror was taken");

    m.def(
        "determinant",
        [](long long p, long long q, long long r) {
            return big_int(knot_determinant(PretzelKnot(p, q, r)));
        },
        py::arg("p"), py::arg("q"), py::arg("r"), "Signed determinant pq + qr + rp");

    m.def(
        "signature",
        [](long long p, long long q, long long r) {
            NormalForm nf = normalize(PretzelKnot(p, q, r));
            if (nf.knot.all_odd())
                throw std::invalid_argument("signature is computed for the one-even-parameter form");
            return signature(nf.knot);
        },
        py::arg("p"), py::arg("q"), py::arg("r"));

    m.def(
        "classify",
        [](long long p, long long q, long long r) {
            ObstructionReport rep = classify(PretzelKnot(p, q, r));
            py::dict d;
            d["input"] = triple(rep.input);
            d["normal"] = triple(rep.normal);
            d["reflected"] = rep.reflected;
            d["all_odd"] = rep.all_odd;
            d["two_bridge"] = rep.two_bridge;
            d["family"] = rep.family;
            d["sigma"] = rep.sigma ? py::cast(*rep.sigma) : py::none();
            d["det_k"] = rep.det_k;
            d["alexander"] = rep.alexander;
            d["greene"] = rep.greene;
            d["symmetry"] = rep.symmetry;
            d["verdict"] = verdict_name(rep.verdict);
            d["notes"] = rep.notes;
            return d;
        },
        py::arg("p"), py::arg("q"), py::arg("r"),
        "Full obstruction pipeline; mirrors the CLI classify report");

    m.def(
        "lens_correction_terms",
        [](long long D) {
            LensTable t = lens_table(make_int(D));
            py::list out;
            for (size_t i = 0; i < t.d.size(); ++i)
                out.append(py::make_tuple(
                    py::make_tuple(ll_of(t.psi[i].first), ll_of(t.psi[i].second)),
                    fraction(t.d[i])));
            return out;
        },
        py::arg("D"), "Pairs (label covector, d) for L(D, 2), label order 0..D-1");

    m.def(
        "cover_correction_terms",
        [](long long p, long long q, long long r) {
            auto [t, labels] = labelled_cover(PretzelKnot(p, q, r));
            py::list out;
            for (int label : labels) {
                const SpinClassInfo& c = t.classes[static_cast<size_t>(label)];
                py::list rep;
                for (long long x : c.rep) rep.append(x);
                out.append(py::make_tuple(py::tuple(rep), fraction(c.d)));
            }
            return out;
        },
        py::arg("p"), py::arg("q"), py::arg("r"),
        "Pairs (representative covector, d) for the double branched cover, unit-labelled order");

    m.def(
        "embedding_certificate",
        [](long long p, long long q, long long r) -> py::object {
            PlumbingGraph g = pretzel_plumbing(normalize(PretzelKnot(p, q, r)).knot);
            long long n = (ll_of(abs(g.determinant())) + 1) / 2;
            std::optional<IntMatrix> e = greene_search(g.intersection_form(), n);
            if (!e) return py::none();
            return matrix_rows(*e);
        },
        py::arg("p"), py::arg("q"), py::arg("r"),
        "Integer matrix E with -E E^t = Q (+) [[-n,1],[1,-2]] for the cover form Q, or None");

    m.def(
        "quotient_module_test",
        [](long long k, long long m_twists) {
            return alexander_name(nakanishi_test(seifert_matrix(k, m_twists)));
        },
        py::arg("k"), py::arg("m"),
        "Alexander-module verdict for P(k,-k,2m): NoObstruction, UnknottingAtLeast2 or "
        "Indeterminate");

    m.def(
        "symmetry_sweep",
        [](long long p, long long q, long long r) {
            SymmetryResult s =
                symmetry_obstruction(pretzel_plumbing(normalize(PretzelKnot(p, q, r)).knot));
            py::dict d;
            d["status"] = symmetry_name(s.status);
            d["passing"] = s.passing;
            return d;
        },
        py::arg("p"), py::arg("q"), py::arg("r"),
        "Unit sweep of the correction-term symmetry; status and surviving units");
}
