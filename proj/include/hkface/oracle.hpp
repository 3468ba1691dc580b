#ifndef HKFACE_ORACLE_HPP
#define HKFACE_ORACLE_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hkface/complex.hpp"
#include "hkface/polynomial.hpp"

namespace hkface {

struct EnumerationBudget {
    std::uint64_t max_lattice_points = 10'000'000;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// x^a lies in the k-th power of (x_1^{w_1}, ..., x_r^{w_r}) iff
// sum_i floor(a_i / w_i) >= k.
bool in_power_of_pure_ideal(const std::vector<long>& a, const std::vector<long>& w, long k);

// Ground-truth colength ell(R/(J^[q])^k) by direct enumeration: counts
// exponent vectors with a_i < k q v_i, support a face of the complex, and
// x^a outside (J^[q])^k. Enumeration runs face by face over vectors
// supported exactly on that face. Throws BudgetExceeded before starting if
// the bounding box prod_i (k q v_i) exceeds the budget; no partial answers.
std::uint64_t count_standard_monomials(const SimplicialComplex& c, const ExponentVector& v, long q, long k,
                                       const EnumerationBudget& budget = {}, int threads = 1);

struct CrossValidationPoint {
    long q, k;
    Rational closed_form;
    std::uint64_t oracle_count;
    bool match;
};

struct CrossValidationReport {
    std::vector<CrossValidationPoint> points;
    bool all_match;
};

// Compares evaluate(ghk_polynomial) with the enumeration count on the full
// grid 1 <= q <= q_max, 1 <= k <= k_max. Mismatches are reported with their
// witnesses, never swallowed.
CrossValidationReport cross_validate(const SimplicialComplex& c, const ExponentVector& v, long q_max, long k_max,
                                     const EnumerationBudget& budget = {}, int threads = 1);

// Inclusion-minimal non-faces of the complex (second membership route for
// the support test; test infrastructure, small complexes only).
std::vector<VertexSet> minimal_non_faces(const SimplicialComplex& c);

}  // namespace hkface

#endif
