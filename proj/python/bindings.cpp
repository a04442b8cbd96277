#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nrcn/basep.hpp"
#include "nrcn/classes.hpp"
#include "nrcn/curve.hpp"
#include "nrcn/error.hpp"
#include "nrcn/gf.hpp"
#include "nrcn/nuclei.hpp"
#include "nrcn/report.hpp"

namespace py = pybind11;

namespace {

// None stands for infinity on the Python side.
nrcn::ExtendedNatural to_extended(const std::optional<nrcn::Natural>& v) {
    return v ? nrcn::ExtendedNatural(*v) : nrcn::ExtendedNatural::infinity();
}

py::object from_extended(const nrcn::ExtendedNatural& v) {
    return v.is_infinite() ? py::none() : py::cast(v.value());
}

py::dict record_dict(const nrcn::VerificationRecord& r) {
    py::dict d;
    d["p"] = r.p;
    d["e"] = r.e;
    d["q"] = r.q;
    d["n"] = r.n;
    d["k"] = r.k;
    d["dim_formula"] = r.dim_formula;
    d["dim_basis"] = r.dim_basis;
    d["dim_geometric"] = r.dim_geometric;
    d["basis_match"] = r.basis_match;
    d["agree"] = r.agree;
    d["elapsed_ms"] = r.elapsed.count();
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Nuclei of normal rational curves: Pascal's triangle mod p, finite fields, osculating subspaces";

    py::register_exception<nrcn::InvalidPrimeError>(m, "InvalidPrimeError", PyExc_ValueError);
    py::register_exception<nrcn::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<nrcn::ResourceLimitError>(m, "ResourceLimitError", PyExc_ValueError);
    py::register_exception<nrcn::RangeError>(m, "RangeError", PyExc_OverflowError);
    py::register_exception<nrcn::FieldMismatchError>(m, "FieldMismatchError", PyExc_ValueError);
    py::register_exception<nrcn::DivisionByZeroError>(m, "DivisionByZeroError", PyExc_ZeroDivisionError);

    // basep
    m.def("is_prime", &nrcn::is_prime, py::arg("p"));
    m.def(
        "to_base_p",
        [](nrcn::Natural n, std::uint64_t p) {
            const auto d = nrcn::to_base_p(n, p);
            return std::vector<std::uint32_t>(d.digits().begin(), d.digits().end());
        },
        py::arg("n"), py::arg("p"), "Little-endian base-p digits");
    m.def(
        "from_digits",
        [](std::vector<std::uint32_t> digits, std::uint32_t p) {
            return nrcn::from_digits(nrcn::Digits(p, std::move(digits)));
        },
        py::arg("digits"), py::arg("p"));
    m.def("preceq", &nrcn::preceq, py::arg("j"), py::arg("n"), py::arg("p"));
    m.def("lucas_binom", &nrcn::lucas_binom, py::arg("n"), py::arg("j"), py::arg("p"));
    m.def("binom_mod_p_direct", &nrcn::binom_mod_p_direct, py::arg("n"), py::arg("j"), py::arg("p"));
    m.def("pascal_triangle_mod_p", &nrcn::pascal_triangle_mod_p, py::arg("p"), py::arg("rows"));

    // classes
    m.def(
        "class_of",
        [](nrcn::Natural n, nrcn::Natural j, std::uint64_t p) -> py::object {
            const auto label = nrcn::class_of(n, j, p);
            if (!label) {
                return py::none();
            }
            return py::make_tuple(from_extended(label->i), label->L);
        },
        py::arg("n"), py::arg("j"), py::arg("p"),
        "(i, L) for a vanishing entry, i = None meaning infinity; None when binom(n, j) != 0 mod p");
    m.def("phi", &nrcn::phi, py::arg("i"), py::arg("n"), py::arg("p"));
    m.def("sigma", &nrcn::sigma, py::arg("i"), py::arg("n"), py::arg("p"));
    m.def("is_class_empty", &nrcn::is_class_empty, py::arg("i"), py::arg("n"), py::arg("p"));
    m.def("max_class_member", &nrcn::max_class_member, py::arg("i"), py::arg("n"), py::arg("p"));
    m.def(
        "class_members",
        [](std::optional<nrcn::Natural> i, nrcn::Natural n, std::uint64_t p, nrcn::Natural bound) {
            return nrcn::class_members(to_extended(i), n, p, bound);
        },
        py::arg("i"), py::arg("n"), py::arg("p"), py::arg("bound"));
    m.def(
        "top_line",
        [](std::optional<nrcn::Natural> R, nrcn::Natural b, std::uint64_t p) {
            return nrcn::top_line(to_extended(R), b, p);
        },
        py::arg("R"), py::arg("b"), py::arg("p"));
    m.def(
        "class_profile",
        [](nrcn::Natural n, std::uint64_t p) {
            const auto c = nrcn::class_profile(n, p);
            py::dict d;
            d["n"] = c.n;
            d["p"] = c.p;
            d["b"] = c.b;
            d["M"] = c.M;
            d["J"] = c.J;
            d["d"] = c.d();
            d["nonzero_positions"] = c.nonzero_positions;
            return d;
        },
        py::arg("n"), py::arg("p"));

    // nuclei
    m.def("nucleus_dim", &nrcn::nucleus_dim, py::arg("k"), py::arg("n"), py::arg("p"));
    m.def("nucleus_basis_indices", &nrcn::nucleus_basis_indices, py::arg("k"), py::arg("n"), py::arg("p"));
    m.def("distinct_nuclei_count", &nrcn::distinct_nuclei_count, py::arg("n"), py::arg("p"));
    m.def("empty_threshold", &nrcn::empty_threshold, py::arg("n"), py::arg("p"));
    m.def("timmermann_dim", &nrcn::timmermann_dim, py::arg("n"), py::arg("p"));
    m.def(
        "point_nucleus",
        [](nrcn::Natural n, std::uint64_t p) -> py::object {
            const auto pt = nrcn::point_nucleus(n, p);
            return pt ? py::object(py::make_tuple(pt->i, pt->point_index)) : py::object(py::none());
        },
        py::arg("n"), py::arg("p"));
    m.def(
        "nuclei_table",
        [](nrcn::Natural n, std::uint64_t p) {
            py::list rows;
            for (const auto& r : nrcn::nuclei_table(n, p).rows) {
                py::dict d;
                d["k_low"] = r.k_low;
                d["k_high"] = r.k_high;
                d["lower"] = r.lower;
                d["upper"] = r.upper;
                d["R"] = r.R;
                d["dim"] = r.dim;
                rows.append(d);
            }
            return rows;
        },
        py::arg("n"), py::arg("p"));

    // finite fields and geometry
    py::class_<nrcn::Field>(m, "Field")
        .def(py::init(&nrcn::make_field), py::arg("p"), py::arg("e") = 1)
        .def_property_readonly("p", &nrcn::Field::characteristic)
        .def_property_readonly("e", &nrcn::Field::degree)
        .def_property_readonly("q", &nrcn::Field::order)
        .def_property_readonly("modulus", [](const nrcn::Field& f) {
            return std::vector<std::uint32_t>(f.modulus().begin(), f.modulus().end());
        })
        .def("add", [](const nrcn::Field& f, std::uint32_t a, std::uint32_t b) {
            return f.add(f.element(a), f.element(b)).index();
        })
        .def("mul", [](const nrcn::Field& f, std::uint32_t a, std::uint32_t b) {
            return f.mul(f.element(a), f.element(b)).index();
        })
        .def("inv", [](const nrcn::Field& f, std::uint32_t a) { return f.inv(f.element(a)).index(); })
        .def("__repr__", [](const nrcn::Field& f) {
            return "Field(" + std::to_string(f.characteristic()) + ", " + std::to_string(f.degree()) + ")";
        });

    m.def(
        "geometric_nucleus",
        [](const nrcn::Field& field, std::size_t n, std::int64_t k) {
            const nrcn::CurveContext ctx(field, n);
            const auto nucleus = nrcn::geometric_nucleus(ctx, k);
            std::vector<std::vector<std::uint32_t>> rows;
            for (std::size_t r = 0; r < nucleus.rank(); ++r) {
                std::vector<std::uint32_t> row;
                for (auto e : nucleus.basis().row(r)) {
                    row.push_back(e.index());
                }
                rows.push_back(std::move(row));
            }
            return py::make_tuple(nucleus.projective_dim(), rows);
        },
        py::arg("field"), py::arg("n"), py::arg("k"),
        "(projective dimension, RREF basis rows as element indices)");
    m.def(
        "verify",
        [](std::uint64_t p, std::uint64_t e, std::size_t max_n, std::uint64_t seed) {
            const auto summary = nrcn::run_verification(p, e, max_n, seed);
            py::list records;
            for (const auto& r : summary.records) {
                records.append(record_dict(r));
            }
            return py::make_tuple(summary.all_agree(), records);
        },
        py::arg("p"), py::arg("e") = 1, py::arg("max_n") = 8, py::arg("seed") = 1);

    // CLI-equivalent JSON documents, as strings.
    m.def("nuclei_json", [](std::uint64_t p, nrcn::Natural n) { return nrcn::nuclei_json(p, n).dump(); },
          py::arg("p"), py::arg("n"));
    m.def("classes_json", [](std::uint64_t p, nrcn::Natural n) { return nrcn::classes_json(p, n).dump(); },
          py::arg("p"), py::arg("n"));
    m.def("triangle_json", [](std::uint64_t p, std::size_t rows) { return nrcn::triangle_json(p, rows).dump(); },
          py::arg("p"), py::arg("rows"));
}
