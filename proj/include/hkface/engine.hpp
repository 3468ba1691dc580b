#ifndef HKFACE_ENGINE_HPP
#define HKFACE_ENGINE_HPP

#include <vector>

#include "hkface/complex.hpp"
#include "hkface/polynomial.hpp"

namespace hkface {

// Colength of the k-th power of the q-th pure power of an ideal generated by
// pure powers of w variables whose exponents multiply to v_prod:
//   v_prod * q^w * C(k+w-1, w).
// w = 0 is the residue field, constant 1.
BivariatePolynomial pure_power_length(int surviving_vars, const Integer& v_prod);

// The generalized Hilbert-Kunz function ell(R/(J^[q])^k) as a closed-form
// bivariate polynomial, by inclusion-exclusion over the face-ideal
// components. Subsets with equal intersection of facets are grouped, so the
// cost is per distinct intersection, not per subset. Throws ValidationError
// past 30 components.
BivariatePolynomial ghk_polynomial(const SimplicialComplex& c, const ExponentVector& v);

// e_0(J) = sum over top-dimensional facets F of prod_{i in F} v_i.
Integer multiplicity_e0(const SimplicialComplex& c, const ExponentVector& v);

// e_i(J^[q]) as exact polynomials in q, their q^d-coefficient limits
// L_i = lim e_i(J^[q])/q^d, and e_HK(J^k) = e_0(J) C(k+d-1, d) in k.
struct CoefficientTable {
    int dimension;
    std::vector<UnivariatePolynomial> e;  // e[0..d], polynomials in q
    std::vector<Rational> limits;         // L_0..L_d; L_i = 0 for i >= 1
    UnivariatePolynomial ehk_powers;      // polynomial in k
};

CoefficientTable hilbert_coefficients(const SimplicialComplex& c, const ExponentVector& v);

// e_HK(J^k) for one concrete k >= 1.
Rational ehk_of_powers(const SimplicialComplex& c, const ExponentVector& v, long k);

}  // namespace hkface

#endif
