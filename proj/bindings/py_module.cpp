#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "hkface/audit.hpp"
#include "hkface/engine.hpp"
#include "hkface/json_io.hpp"
#include "hkface/limits.hpp"
#include "hkface/oracle.hpp"
#include "hkface/shelling.hpp"

namespace py = pybind11;
using namespace hkface;

namespace {

py::object py_int(const Integer& x) {
    return py::module_::import("builtins").attr("int")(x.get_str());
}

py::object py_fraction(const Rational& x) {
    return py::module_::import("fractions").attr("Fraction")(rational_to_string(x));
}

ExponentVector exponents_or_ones(const SimplicialComplex& c, const std::optional<std::vector<long>>& v) {
    if (!v) return ExponentVector(c.num_vertices());
    return ExponentVector(*v);
}

py::dict table_dict(const CoefficientTable& t) {
    py::dict d;
    d["dimension"] = t.dimension;
    py::list e, limits;
    for (const auto& ei : t.e) e.append(ei.str());
    for (const auto& li : t.limits) limits.append(py_fraction(li));
    d["e"] = e;
    d["limits"] = limits;
    d["ehk_powers"] = t.ehk_powers.str();
    return d;
}

PowerTable make_power_table(int d, int r, const std::string& e0, const std::map<int, std::string>& ehk) {
    PowerTable t;
    t.d = d;
    t.r = r;
    t.e0 = parse_rational(e0);
    for (const auto& [n, val] : ehk) t.ehk[n] = parse_rational(val);
    t.validate();
    return t;
}

}  // namespace

PYBIND11_MODULE(_hkface, m) {
    m.doc() = "generalized Hilbert-Kunz functions of pure-power ideals in face rings";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

    py::class_<BivariatePolynomial>(m, "Poly")
        .def("__str__", &BivariatePolynomial::str_binomial_basis)
        .def("__repr__", &BivariatePolynomial::str_binomial_basis)
        .def("__eq__", [](const BivariatePolynomial& a, const BivariatePolynomial& b) { return a == b; })
        .def("binomial", &BivariatePolynomial::str_binomial_basis)
        .def("expanded", &BivariatePolynomial::str_expanded)
        .def("degree_q", &BivariatePolynomial::degree_q)
        .def("degree_k", &BivariatePolynomial::degree_k)
        .def("evaluate",
             [](const BivariatePolynomial& p, long q, long k) {
                 return py_fraction(p.evaluate(Rational(q), Rational(k)));
             })
        .def("terms", [](const BivariatePolynomial& p) {
            py::list out;
            for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
                out.append(py::make_tuple(it->first.first, it->first.second, py_fraction(it->second)));
            return out;
        });

    py::class_<Graph>(m, "Graph")
        .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("vertices"), py::arg("edges"))
        .def_property_readonly("num_vertices", &Graph::num_vertices)
        .def_property_readonly("edges", &Graph::edges);

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def(py::init<int, const std::vector<std::vector<int>>&>(), py::arg("vertices"), py::arg("facets"))
        .def_property_readonly("num_vertices", &SimplicialComplex::num_vertices)
        .def_property_readonly("facets", [](const SimplicialComplex& c) { return c.facets(); })
        .def_property_readonly("dimension", &SimplicialComplex::dimension_d)
        .def_property_readonly("pure", &SimplicialComplex::is_pure)
        .def("f_vector",
             [](const SimplicialComplex& c) {
                 py::list out;
                 for (const auto& x : c.f_vector()) out.append(py_int(x));
                 return out;
             })
        .def("h_vector", [](const SimplicialComplex& c) {
            auto hv = c.h_vector();
            py::list h;
            for (const auto& x : hv.h) h.append(py_int(x));
            return py::make_tuple(h, hv.s);
        });

    m.def("family", [](const std::string& kind, const std::vector<long>& params) {
        return named_family(kind, params);
    }, py::arg("kind"), py::arg("params"), "path/cycle/complete/bipartite/simplex with its parameters");

    m.def("edge_ideal_complex", &edge_ideal_complex, py::arg("graph"));
    m.def("minimal_vertex_covers", &minimal_vertex_covers, py::arg("graph"));
    m.def("face_ideal_decomposition",
          [](const SimplicialComplex& c) { return face_ideal_decomposition(c).components(); });

    m.def("ghk", [](const SimplicialComplex& c, const std::optional<std::vector<long>>& v) {
        return ghk_polynomial(c, exponents_or_ones(c, v));
    }, py::arg("complex"), py::arg("v") = std::nullopt);

    m.def("multiplicity_e0", [](const SimplicialComplex& c, const std::optional<std::vector<long>>& v) {
        return py_int(multiplicity_e0(c, exponents_or_ones(c, v)));
    }, py::arg("complex"), py::arg("v") = std::nullopt);

    m.def("hilbert_coefficients", [](const SimplicialComplex& c, const std::optional<std::vector<long>>& v) {
        return table_dict(hilbert_coefficients(c, exponents_or_ones(c, v)));
    }, py::arg("complex"), py::arg("v") = std::nullopt);

    m.def("ehk_of_powers", [](const SimplicialComplex& c, const std::optional<std::vector<long>>& v, long k) {
        return py_fraction(ehk_of_powers(c, exponents_or_ones(c, v), k));
    }, py::arg("complex"), py::arg("v") = std::nullopt, py::arg("k") = 1);

    m.def("audit", [](const SimplicialComplex& c, const std::optional<std::vector<long>>& v, bool assume_cm) {
        AuditReport rep = smirnov_audit(c, exponents_or_ones(c, v), assume_cm);
        py::dict d;
        d["e0"] = py_int(rep.e0);
        d["e1_at_q1"] = py_fraction(rep.e1_at_q1);
        d["colength"] = py_int(rep.colength);
        d["stable"] = rep.stable;
        d["stable_all_q"] = rep.stable_all_q;
        d["limit_identity_holds"] = rep.limit_identity_holds;
        d["conjecture_status"] = to_string(rep.conjecture_status);
        d["rossi_valla_holds"] = rep.rossi_valla_holds;
        d["cm_certificate"] = to_string(rep.cm_certificate);
        d["candidate_reduction_number"] =
            rep.candidate_reduction_number ? py::cast(*rep.candidate_reduction_number) : py::none();
        d["reduction_number_note"] = rep.reduction_number_note;
        d["ghk"] = rep.ghk;
        d["coefficients"] = table_dict(rep.table);
        return d;
    }, py::arg("complex"), py::arg("v") = std::nullopt, py::arg("assume_cm") = false);

    m.def("is_shellable", [](const SimplicialComplex& c, int max_facets) {
        auto res = is_shellable(c, max_facets);
        const char* status = res.status == ShellStatus::shellable       ? "shellable"
                             : res.status == ShellStatus::not_shellable ? "not_shellable"
                                                                        : "undecided";
        return py::make_tuple(status,
                              res.status == ShellStatus::shellable ? py::cast(res.order) : py::none());
    }, py::arg("complex"), py::arg("max_facets") = 12);

    m.def("count_standard_monomials",
          [](const SimplicialComplex& c, const std::optional<std::vector<long>>& v, long q, long k,
             std::uint64_t budget, int threads) {
              EnumerationBudget b{budget};
              return count_standard_monomials(c, exponents_or_ones(c, v), q, k, b, threads);
          },
          py::arg("complex"), py::arg("v") = std::nullopt, py::arg("q") = 1, py::arg("k") = 1,
          py::arg("budget") = EnumerationBudget{}.max_lattice_points, py::arg("threads") = 1);

    m.def("cross_validate",
          [](const SimplicialComplex& c, const std::optional<std::vector<long>>& v, long q_max, long k_max,
             std::uint64_t budget, int threads) {
              EnumerationBudget b{budget};
              auto rep = cross_validate(c, exponents_or_ones(c, v), q_max, k_max, b, threads);
              py::list pts;
              for (const auto& p : rep.points)
                  pts.append(py::dict(py::arg("q") = p.q, py::arg("k") = p.k,
                                      py::arg("closed_form") = py_fraction(p.closed_form),
                                      py::arg("oracle") = p.oracle_count, py::arg("match") = p.match));
              return py::dict(py::arg("all_match") = rep.all_match, py::arg("points") = pts);
          },
          py::arg("complex"), py::arg("v") = std::nullopt, py::arg("q_max") = 3, py::arg("k_max") = 3,
          py::arg("budget") = EnumerationBudget{}.max_lattice_points, py::arg("threads") = 1);

    m.def("limit_L_i", [](int d, int r, const std::string& e0, const std::map<int, std::string>& ehk, int i) {
        return py_fraction(limit_L_i(make_power_table(d, r, e0, ehk), i));
    }, py::arg("d"), py::arg("r"), py::arg("e0"), py::arg("ehk"), py::arg("i"));

    m.def("predicted_ehk",
          [](int d, int r, const std::string& e0, const std::map<int, std::string>& ehk,
             const std::vector<std::string>& L, long n) {
              std::vector<Rational> limits;
              for (const auto& s : L) limits.push_back(parse_rational(s));
              return py_fraction(predicted_ehk(make_power_table(d, r, e0, ehk), limits, n));
          },
          py::arg("d"), py::arg("r"), py::arg("e0"), py::arg("ehk"), py::arg("L"), py::arg("n"));

    m.def("dim2_closed_forms", [](int r, const std::string& e0, const std::map<int, std::string>& ehk) {
        auto [L1, L2] = dim2_closed_forms(make_power_table(2, r, e0, ehk));
        return py::make_tuple(py_fraction(L1), py_fraction(L2));
    }, py::arg("r"), py::arg("e0"), py::arg("ehk"));
}
