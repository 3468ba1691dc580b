#include "hkface/json_io.hpp"

#include <optional>

namespace hkface {

namespace {

[[noreturn]] void fail(const std::string& pointer, const std::string& msg) {
    throw SchemaError(pointer + ": " + msg);
}

long require_int(const json& j, const std::string& pointer) {
    if (!j.is_number_integer()) fail(pointer, "expected an integer");
    return j.get<long>();
}

Rational number_or_string(const json& j, const std::string& pointer) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail(pointer, e.what());
        }
    }
    fail(pointer, "expected an integer or an exact \"num/den\" string");
}

std::vector<std::vector<int>> require_int_lists(const json& j, const std::string& pointer,
                                                std::optional<int> vertex_bound = std::nullopt) {
    if (!j.is_array()) fail(pointer, "expected an array of arrays");
    std::vector<std::vector<int>> out;
    for (size_t i = 0; i < j.size(); ++i) {
        const json& row = j[i];
        const std::string p = pointer + "/" + std::to_string(i);
        if (!row.is_array()) fail(p, "expected an array");
        std::vector<int> verts;
        for (size_t u = 0; u < row.size(); ++u) {
            long value = require_int(row[u], p + "/" + std::to_string(u));
            if (vertex_bound && (value < 1 || value > *vertex_bound))
                fail(p + "/" + std::to_string(u), "vertex " + std::to_string(value) + " out of range [1," +
                                                      std::to_string(*vertex_bound) + "]");
            verts.push_back(static_cast<int>(value));
        }
        out.push_back(std::move(verts));
    }
    return out;
}

}  // namespace

SimplicialComplex parse_complex(const json& j) {
    if (!j.is_object()) fail("", "expected a JSON object");

    if (j.contains("family")) {
        if (!j["family"].is_string()) fail("/family", "expected a string");
        const std::string name = j["family"].get<std::string>();
        std::vector<long> params;
        auto grab = [&](const char* key) {
            if (!j.contains(key)) fail(std::string("/") + key, "missing family parameter");
            params.push_back(require_int(j[key], std::string("/") + key));
        };
        try {
            if (name == "path" || name == "simplex" || name == "complete" || name == "complete_graph") {
                grab("r");
            } else if (name == "cycle") {
                grab("n");
            } else if (name == "bipartite" || name == "complete_bipartite") {
                grab("alpha");
                grab("beta");
            } else {
                fail("/family", "unknown family '" + name + "'");
            }
            return named_family(name, params);
        } catch (const ValidationError& e) {
            fail("/family", e.what());
        }
    }

    if (!j.contains("vertices")) fail("/vertices", "missing vertex count");
    const int r = static_cast<int>(require_int(j["vertices"], "/vertices"));
    if (r < 1 || r > kMaxVertices)
        fail("/vertices", "vertex count must lie in 1.." + std::to_string(kMaxVertices));

    if (j.contains("edges")) {
        if (j.contains("as") && j["as"] != "edge_ideal") fail("/as", "only \"edge_ideal\" is supported");
        auto rows = require_int_lists(j["edges"], "/edges", r);
        std::vector<std::pair<int, int>> edges;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != 2) fail("/edges/" + std::to_string(i), "an edge has exactly two endpoints");
            edges.emplace_back(rows[i][0], rows[i][1]);
        }
        try {
            return edge_ideal_complex(Graph(r, edges));
        } catch (const ValidationError& e) {
            fail("/edges", e.what());
        }
    }

    if (!j.contains("facets")) fail("/facets", "missing facet list");
    try {
        return SimplicialComplex(r, require_int_lists(j["facets"], "/facets", r));
    } catch (const ValidationError& e) {
        fail("/facets", e.what());
    }
}

PowerTable parse_power_table(const json& j) {
    if (!j.is_object()) fail("", "expected a JSON object");
    PowerTable t;
    if (!j.contains("d")) fail("/d", "missing dimension");
    t.d = static_cast<int>(require_int(j["d"], "/d"));
    if (!j.contains("r")) fail("/r", "missing reduction number");
    t.r = static_cast<int>(require_int(j["r"], "/r"));
    if (!j.contains("e0")) fail("/e0", "missing multiplicity");
    t.e0 = number_or_string(j["e0"], "/e0");
    if (!j.contains("ehk") || !j["ehk"].is_object()) fail("/ehk", "expected an object of n -> e_HK(I^n)");
    for (const auto& [key, value] : j["ehk"].items()) {
        long n;
        try {
            n = std::stol(key);
        } catch (...) {
            fail("/ehk/" + key, "key must be a positive integer");
        }
        if (n < 1) fail("/ehk/" + key, "key must be a positive integer");
        t.ehk[static_cast<int>(n)] = number_or_string(value, "/ehk/" + key);
    }
    if (j.contains("assumptions")) {
        if (!j["assumptions"].is_array()) fail("/assumptions", "expected an array of strings");
        for (size_t i = 0; i < j["assumptions"].size(); ++i) {
            if (!j["assumptions"][i].is_string())
                fail("/assumptions/" + std::to_string(i), "expected a string");
            t.assumptions.push_back(j["assumptions"][i].get<std::string>());
        }
    }
    try {
        t.validate();
    } catch (const std::invalid_argument& e) {
        fail("", e.what());
    }
    return t;
}

json complex_to_json(const SimplicialComplex& c) {
    json j;
    j["vertices"] = c.num_vertices();
    j["facets"] = c.facets();
    return j;
}

json polynomial_to_json(const BivariatePolynomial& p) {
    // [[q_deg, k_deg, "num/den"], ...] in canonical term order
    json arr = json::array();
    const auto& terms = p.terms();
    for (auto it = terms.rbegin(); it != terms.rend(); ++it)
        arr.push_back(json::array({it->first.first, it->first.second, rational_to_string(it->second)}));
    return arr;
}

json univariate_to_json(const UnivariatePolynomial& p) {
    json j;
    j["var"] = var_name(p.var());
    json coeffs = json::array();
    for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(rational_to_string(p.coeff(i)));
    j["coeffs"] = coeffs;
    j["str"] = p.str();
    return j;
}

json coefficient_table_to_json(const CoefficientTable& t) {
    json j;
    j["dimension"] = t.dimension;
    json e = json::array(), limits = json::array();
    for (const auto& ei : t.e) e.push_back(univariate_to_json(ei));
    for (const auto& li : t.limits) limits.push_back(rational_to_string(li));
    j["e"] = e;
    j["limits"] = limits;
    j["ehk_powers"] = univariate_to_json(t.ehk_powers);
    return j;
}

json audit_report_to_json(const AuditReport& r) {
    json j;
    j["e0"] = r.e0.get_str();
    j["e1_at_q1"] = rational_to_string(r.e1_at_q1);
    j["colength"] = r.colength.get_str();
    j["stable"] = r.stable;
    j["stable_all_q"] = r.stable_all_q;
    j["limit_identity_holds"] = r.limit_identity_holds;
    j["conjecture_status"] = to_string(r.conjecture_status);
    j["rossi_valla_holds"] = r.rossi_valla_holds;
    j["cm_certificate"] = to_string(r.cm_certificate);
    j["stability_interpretation"] = (r.cm_certificate == CmCertificate::unknown)
                                        ? "arithmetic criterion only (no CM certificate)"
                                        : "Huneke-Ooishi under CM certificate";
    if (r.candidate_reduction_number)
        j["candidate_reduction_number"] = *r.candidate_reduction_number;
    else
        j["candidate_reduction_number"] = nullptr;
    j["reduction_number_note"] = r.reduction_number_note;
    j["ghk"] = {{"binomial", r.ghk.str_binomial_basis()},
                {"expanded", r.ghk.str_expanded()},
                {"terms", polynomial_to_json(r.ghk)}};
    j["coefficients"] = coefficient_table_to_json(r.table);
    return j;
}

json cross_validation_to_json(const CrossValidationReport& r) {
    json j;
    j["all_match"] = r.all_match;
    json pts = json::array();
    for (const auto& p : r.points)
        pts.push_back({{"q", p.q},
                       {"k", p.k},
                       {"closed_form", rational_to_string(p.closed_form)},
                       {"oracle", p.oracle_count},
                       {"match", p.match}});
    j["points"] = pts;
    return j;
}

json power_table_to_json(const PowerTable& t) {
    json j;
    j["d"] = t.d;
    j["r"] = t.r;
    j["e0"] = rational_to_string(t.e0);
    json ehk = json::object();
    for (const auto& [n, val] : t.ehk) ehk[std::to_string(n)] = rational_to_string(val);
    j["ehk"] = ehk;
    j["assumptions"] = t.assumptions;
    return j;
}

}  // namespace hkface
