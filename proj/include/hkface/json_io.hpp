#ifndef HKFACE_JSON_IO_HPP
#define HKFACE_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "hkface/audit.hpp"
#include "hkface/complex.hpp"
#include "hkface/engine.hpp"
#include "hkface/limits.hpp"
#include "hkface/oracle.hpp"

namespace hkface {

using json = nlohmann::json;

struct SchemaError : std::invalid_argument {
    // what() carries "<json pointer>: <message>".
    using std::invalid_argument::invalid_argument;
};

// Accepted shapes:
//   {"vertices": r, "facets": [[..], ..]}
//   {"vertices": n, "edges": [[a,b], ..], "as": "edge_ideal"}
//   {"family": "cycle", "n": 5}   (path/complete: "r"; bipartite: "alpha","beta"; simplex: "r")
SimplicialComplex parse_complex(const json& j);

// {"d":2, "r":2, "e0":"4", "ehk":{"1":"4","2":"12"}, "assumptions":[..]}
// e0/ehk values may be JSON integers or exact "num/den" strings.
PowerTable parse_power_table(const json& j);

json complex_to_json(const SimplicialComplex& c);
json polynomial_to_json(const BivariatePolynomial& p);   // [[a, b, "num/den"], ...]
json univariate_to_json(const UnivariatePolynomial& p);  // {"var": "q", "coeffs": ["..", ..]}
json coefficient_table_to_json(const CoefficientTable& t);
json audit_report_to_json(const AuditReport& r);
json cross_validation_to_json(const CrossValidationReport& r);
json power_table_to_json(const PowerTable& t);

}  // namespace hkface

#endif
