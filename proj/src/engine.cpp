#include "hkface/engine.hpp"

#include <unordered_map>

namespace hkface {

BivariatePolynomial pure_power_length(int surviving_vars, const Integer& v_prod) {
    if (surviving_vars < 0) throw std::invalid_argument("pure_power_length: negative variable count");
    if (surviving_vars == 0) return BivariatePolynomial::constant(Rational(1));
    BivariatePolynomial out;
    const UnivariatePolynomial binom = binom_in_k(surviving_vars);
    for (int b = 0; b <= binom.degree(); ++b)
        out.add_term(surviving_vars, b, binom.coeff(b) * Rational(v_prod));
    return out;
}

namespace {

void check_inputs(const SimplicialComplex& c, const ExponentVector& v) {
    if (v.size() != c.num_vertices())
        throw ValidationError("exponent vector length " + std::to_string(v.size()) +
                              " does not match vertex count " + std::to_string(c.num_vertices()));
}

// Net inclusion-exclusion coefficient per distinct intersection of facet
// subsets. Processing facets one at a time keeps the state per distinct
// mask, which collapses the 2^alpha subsets for structured complexes.
std::unordered_map<VertexSet, long long> signed_intersection_counts(const std::vector<VertexSet>& facets) {
    std::unordered_map<VertexSet, long long> acc;
    for (VertexSet f : facets) {
        std::unordered_map<VertexSet, long long> next = acc;
        for (const auto& [mask, coeff] : acc) next[mask & f] -= coeff;
        next[f] += 1;
        acc = std::move(next);
    }
    for (auto it = acc.begin(); it != acc.end();)
        it = (it->second == 0) ? acc.erase(it) : std::next(it);
    return acc;
}

}  // namespace

BivariatePolynomial ghk_polynomial(const SimplicialComplex& c, const ExponentVector& v) {
    check_inputs(c, v);
    if (c.facet_masks().size() > 30)
        throw ValidationError("inclusion-exclusion capped at 30 face-ideal components");

    BivariatePolynomial out;
    for (const auto& [mask, coeff] : signed_intersection_counts(c.facet_masks())) {
        // S / (sum of the chosen components) is a polynomial ring on the
        // intersection of the chosen facets.
        out += pure_power_length(popcount(mask), v.product_over(mask)) * Rational(static_cast<long>(coeff));
    }
    return out;
}

Integer multiplicity_e0(const SimplicialComplex& c, const ExponentVector& v) {
    check_inputs(c, v);
    const int d = c.dimension_d();
    Integer e0(0);
    for (VertexSet f : c.facet_masks())
        if (popcount(f) == d) e0 += v.product_over(f);
    return e0;
}

CoefficientTable hilbert_coefficients(const SimplicialComplex& c, const ExponentVector& v) {
    check_inputs(c, v);
    const int d = c.dimension_d();
    const BivariatePolynomial P = ghk_polynomial(c, v);

    CoefficientTable t;
    t.dimension = d;
    t.e = binomial_basis_decompose(P, d);  // deg_k(P) = d by construction
    t.limits.reserve(t.e.size());
    for (const auto& ei : t.e) t.limits.push_back(ei.coeff(d));

    const Integer e0 = multiplicity_e0(c, v);
    t.ehk_powers = binom_in_k(d) * Rational(e0);
    return t;
}

Rational ehk_of_powers(const SimplicialComplex& c, const ExponentVector& v, long k) {
    check_inputs(c, v);
    if (k < 1) throw std::invalid_argument("ehk_of_powers: k must be >= 1");
    const int d = c.dimension_d();
    return Rational(multiplicity_e0(c, v) * binomial(k + d - 1, static_cast<unsigned long>(d)));
}

}  // namespace hkface
