#include "hkface/audit.hpp"

#include "hkface/shelling.hpp"

namespace hkface {

const char* to_string(CmCertificate c) {
    switch (c) {
        case CmCertificate::shellable: return "shellable";
        case CmCertificate::assumed: return "assumed";
        case CmCertificate::unknown: return "unknown";
    }
    return "unknown";
}

const char* to_string(ConjectureStatus s) {
    return s == ConjectureStatus::counterexample ? "counterexample" : "consistent";
}

bool stability_check(const Rational& e0, const Rational& e1, const Rational& colength) {
    return e1 == e0 - colength;
}

bool rossi_valla_check(const SimplicialComplex& c, const ExponentVector& v) {
    const int d = c.dimension_d();
    const BivariatePolynomial P = ghk_polynomial(c, v);

    // ell(R/J^[q]) and ell(R/(J^[q])^2) as polynomials in q
    UnivariatePolynomial len1(Var::q), len2(Var::q);
    for (int a = 0; a <= P.degree_q(); ++a) {
        len1 += UnivariatePolynomial::monomial(Var::q, a, P.coefficient_of_q_power(a).evaluate(Rational(1)));
        len2 += UnivariatePolynomial::monomial(Var::q, a, P.coefficient_of_q_power(a).evaluate(Rational(2)));
    }

    // e_0(J^[q]) = e_0(J) q^d
    UnivariatePolynomial lhs =
        UnivariatePolynomial::monomial(Var::q, d, Rational(multiplicity_e0(c, v)));

    // ell(J^[q]/(J^[q])^2) + (1-d) ell(R/J^[q]) + 1
    UnivariatePolynomial rhs = (len2 - len1) + Rational(1 - d) * len1 +
                               UnivariatePolynomial::constant(Var::q, Rational(1));
    return lhs == rhs;
}

namespace {

CmCertificate cm_certificate_of(const SimplicialComplex& c, bool assume_cm, int shell_cap) {
    // Only pure shellable complexes get the unconditional certificate; the
    // non-pure shelling notion does not imply CM.
    if (c.is_pure() && is_shellable(c, shell_cap).status == ShellStatus::shellable)
        return CmCertificate::shellable;
    return assume_cm ? CmCertificate::assumed : CmCertificate::unknown;
}

}  // namespace

ReductionNumberResult reduction_number_candidate(const SimplicialComplex& c, bool assume_cm, int shell_cap) {
    CmCertificate cert = cm_certificate_of(c, assume_cm, shell_cap);
    if (cert == CmCertificate::unknown)
        return {std::nullopt, cert, "no CM certificate"};
    return {c.h_vector().s, cert, ""};
}

AuditReport smirnov_audit(const SimplicialComplex& c, const ExponentVector& v, bool assume_cm) {
    AuditReport rep;
    const int d = c.dimension_d();

    rep.ghk = ghk_polynomial(c, v);
    rep.table = hilbert_coefficients(c, v);

    const Rational e0_q1 = rep.table.e[0].evaluate(Rational(1));
    const Rational e1_q1 = (d >= 1) ? rep.table.e[1].evaluate(Rational(1)) : Rational(0);
    const Rational colength = rep.ghk.evaluate(Rational(1), Rational(1));
    rep.e0 = e0_q1.get_num();
    rep.e1_at_q1 = e1_q1;
    rep.colength = colength.get_num();

    rep.stable = stability_check(e0_q1, e1_q1, colength);

    // Symbolic Huneke-Ooishi across all q: e_1(q) == e_0(q) - ell(R/J^[q])(q).
    {
        UnivariatePolynomial len1(Var::q);
        for (int a = 0; a <= rep.ghk.degree_q(); ++a)
            len1 += UnivariatePolynomial::monomial(Var::q, a,
                                                   rep.ghk.coefficient_of_q_power(a).evaluate(Rational(1)));
        rep.stable_all_q = (d >= 1) && (rep.table.e[1] == rep.table.e[0] - len1);
    }

    // L_1 = e_0(J) - e_HK(J); both sides computed, nothing assumed.
    const Rational L1 = (d >= 1) ? rep.table.limits[1] : Rational(0);
    rep.limit_identity_holds = (L1 == Rational(multiplicity_e0(c, v)) - ehk_of_powers(c, v, 1));

    rep.conjecture_status = (rep.limit_identity_holds && !rep.stable) ? ConjectureStatus::counterexample
                                                                      : ConjectureStatus::consistent;
    rep.rossi_valla_holds = rossi_valla_check(c, v);
    rep.cm_certificate = cm_certificate_of(c, assume_cm, 12);

    auto rn = reduction_number_candidate(c, assume_cm, 12);
    rep.candidate_reduction_number = rn.value;
    if (rn.value) {
        rep.reduction_number_note = (rep.cm_certificate == CmCertificate::shellable)
                                        ? "valid: pure shellable => CM"
                                        : "valid under caller CM assumption";
    } else {
        rep.reduction_number_note = rn.reason;
    }
    return rep;
}

}  // namespace hkface
