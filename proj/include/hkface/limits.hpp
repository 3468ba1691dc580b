#ifndef HKFACE_LIMITS_HPP
#define HKFACE_LIMITS_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hkface/rational.hpp"

namespace hkface {

// Input record for the Huckaba-Marley-derived limit formulas. The
// Cohen-Macaulay, minimal-reduction and depth G(I^[q]) >= d-1 hypotheses are
// not decidable from this data; they travel as caller-asserted assumption
// strings only.
struct PowerTable {
    int d = 0;                     // dimension >= 1
    int r = 0;                     // reduction number >= 0
    Rational e0;                   // Hilbert-Samuel multiplicity e_0(I)
    std::map<int, Rational> ehk;   // n -> e_HK(I^n) for n = 1..r
    std::vector<std::string> assumptions;

    // e_HK(I^n) with the n <= 0 |-> 0 convention (I^m = R for m <= 0).
    Rational ehk_at(int n) const;

    void validate() const;  // throws std::invalid_argument
};

// d-th finite difference sum_{j=0}^{d} (-1)^j C(d,j) H(m-j); arguments
// m - j <= 0 contribute 0 regardless of H.
Rational delta_d(const std::function<Rational(int)>& H, int d, int m);

// L_i(I) = sum_{n=i}^{r} C(n-1, i-1) [e0 - sum_j (-1)^j C(d,j) ehk(n-j)],
// for 1 <= i <= d. Empty sum (r < i) is 0.
Rational limit_L_i(const PowerTable& t, int i);

// sum_{i=0}^{d} (-1)^i L[i] C(n+d-1-i, d-i); requires n >= r-d+1 and
// L[0] = e0. Throws std::invalid_argument outside the validity range.
Rational predicted_ehk(const PowerTable& t, const std::vector<Rational>& L, long n);

// d = 2 closed forms:
//   L1 = r e0 - ehk(r) + ehk(r-1)
//   L2 = C(r,2) e0 - (r-1) ehk(r) + r ehk(r-1)
std::pair<Rational, Rational> dim2_closed_forms(const PowerTable& t);

// d = 1: L1 collapses to r e0 - ehk(r) = 0 for any consistent table; a
// nonzero value flags the table as inconsistent.
struct Dim1Check {
    Rational discrepancy;
    bool consistent;
};

Dim1Check dim1_check(const PowerTable& t);

}  // namespace hkface

#endif
