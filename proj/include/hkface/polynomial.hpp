#ifndef HKFACE_POLYNOMIAL_HPP
#define HKFACE_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hkface/rational.hpp"

namespace hkface {

enum class Var { q, k };

inline const char* var_name(Var v) { return v == Var::q ? "q" : "k"; }

// Dense univariate polynomial with exact rational coefficients. The variable
// tag is carried so that e_i(q) tables and e_HK(J^k) expressions stay
// distinguishable when rendered; mixing tags in arithmetic is an error.
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    explicit UnivariatePolynomial(Var v) : var_(v) {}
    UnivariatePolynomial(Var v, std::vector<Rational> coeffs);

    static UnivariatePolynomial constant(Var v, const Rational& c);
    static UnivariatePolynomial monomial(Var v, int degree, const Rational& c);

    Var var() const { return var_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational evaluate(const Rational& x) const;

    UnivariatePolynomial operator-() const;
    UnivariatePolynomial& operator+=(const UnivariatePolynomial& o);
    UnivariatePolynomial& operator-=(const UnivariatePolynomial& o);
    UnivariatePolynomial& operator*=(const UnivariatePolynomial& o);
    UnivariatePolynomial& operator*=(const Rational& c);

    friend UnivariatePolynomial operator+(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a += b; }
    friend UnivariatePolynomial operator-(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a -= b; }
    friend UnivariatePolynomial operator*(UnivariatePolynomial a, const UnivariatePolynomial& b) { return a *= b; }
    friend UnivariatePolynomial operator*(UnivariatePolynomial a, const Rational& c) { return a *= c; }
    friend UnivariatePolynomial operator*(const Rational& c, UnivariatePolynomial a) { return a *= c; }

    bool operator==(const UnivariatePolynomial& o) const { return var_ == o.var_ && coeffs_ == o.coeffs_; }

    std::string str() const;

private:
    void trim();
    Var var_ = Var::q;
    std::vector<Rational> coeffs_;  // coeffs_[i] is the degree-i coefficient; no trailing zeros
};

// The degree-b polynomial C(x+b-1, b) = x(x+1)...(x+b-1)/b! in the given
// variable; b = 0 gives the constant 1.
UnivariatePolynomial binomial_basis_poly(Var v, int b);

inline UnivariatePolynomial binom_in_k(int b) { return binomial_basis_poly(Var::k, b); }

// Sparse exact polynomial in the two formal variables q and k.
class BivariatePolynomial {
public:
    using Key = std::pair<int, int>;  // (q-degree, k-degree)

    BivariatePolynomial() = default;

    static BivariatePolynomial constant(const Rational& c);
    static BivariatePolynomial monomial(int q_deg, int k_deg, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    int degree_q() const;
    int degree_k() const;
    Rational coeff(int q_deg, int k_deg) const;
    const std::map<Key, Rational>& terms() const { return terms_; }

    Rational evaluate(const Rational& q0, const Rational& k0) const;

    // The k-polynomial multiplying q^a (resp. the q-polynomial multiplying k^b).
    UnivariatePolynomial coefficient_of_q_power(int a) const;
    UnivariatePolynomial coefficient_of_k_power(int b) const;

    BivariatePolynomial operator-() const;
    BivariatePolynomial& operator+=(const BivariatePolynomial& o);
    BivariatePolynomial& operator-=(const BivariatePolynomial& o);
    BivariatePolynomial& operator*=(const BivariatePolynomial& o);
    BivariatePolynomial& operator*=(const Rational& c);

    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
    friend BivariatePolynomial operator*(BivariatePolynomial a, const BivariatePolynomial& b) { return a *= b; }
    friend BivariatePolynomial operator*(BivariatePolynomial a, const Rational& c) { return a *= c; }
    friend BivariatePolynomial operator*(const Rational& c, BivariatePolynomial a) { return a *= c; }

    bool operator==(const BivariatePolynomial& o) const { return terms_ == o.terms_; }

    void add_term(int q_deg, int k_deg, const Rational& c);

    // Canonical expanded monomial form, terms sorted by (q-degree desc,
    // k-degree desc): "5/2*q^2*k^2 + 5/2*q^2*k - 5*q*k + 1".
    std::string str_expanded() const;

    // Binomial-basis form in k: each q-slice rewritten over C(k+b-1, b),
    // e.g. "4*q^2*C(k+1,2) - 4*q*k + 1".
    std::string str_binomial_basis() const;

    // (q-degree, b) -> coefficient of q^a * C(k+b-1, b); exact rewrite.
    std::map<Key, Rational> binomial_basis_terms() const;

private:
    std::map<Key, Rational> terms_;  // no zero coefficients stored
};

// Embed a univariate polynomial as a bivariate one.
BivariatePolynomial to_bivariate(const UnivariatePolynomial& p);

// Unique coefficients c_0(q),...,c_d(q) with
//   P(q,k) = sum_i (-1)^i c_i(q) C(k+d-1-i, d-i);
// the basis is triangular in k-degree, solved from i = 0 downward.
// Throws std::invalid_argument if deg_k(P) > d.
std::vector<UnivariatePolynomial> binomial_basis_decompose(const BivariatePolynomial& P, int d);

// Inverse of binomial_basis_decompose; used by round-trip checks.
BivariatePolynomial binomial_basis_recompose(const std::vector<UnivariatePolynomial>& c);

}  // namespace hkface

#endif
