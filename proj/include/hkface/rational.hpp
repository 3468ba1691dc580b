#ifndef HKFACE_RATIONAL_HPP
#define HKFACE_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hkface {

// Exact arithmetic everywhere. No floating point in any computation path.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Generalized binomial C(n, j) for arbitrary integer n (falling factorial
// over j!), so C(-2, 3) = -4, C(1, 2) = 0.
inline Integer binomial(const Integer& n, unsigned long j) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), j);
    return r;
}

inline Integer binomial(long n, unsigned long j) { return binomial(Integer(n), j); }

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "num", "num/den", with optional sign. Canonical output of
// rational_to_string round-trips through here.
inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (text.empty() || mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw std::invalid_argument("rational: zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace hkface

#endif
