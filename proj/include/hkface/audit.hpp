#ifndef HKFACE_AUDIT_HPP
#define HKFACE_AUDIT_HPP

#include <optional>
#include <string>

#include "hkface/complex.hpp"
#include "hkface/engine.hpp"

namespace hkface {

enum class CmCertificate { shellable, assumed, unknown };
enum class ConjectureStatus { consistent, counterexample };

const char* to_string(CmCertificate c);
const char* to_string(ConjectureStatus s);

// Huneke-Ooishi: in a CM local ring, I is stable iff e1 = e0 - ell(A/I).
// Pure arithmetic; the CM certificate is the caller's burden.
bool stability_check(const Rational& e0, const Rational& e1, const Rational& colength);

// Rossi-Valla sufficient criterion as a symbolic identity in q:
//   e_0(J^[q])  ==  ell(J^[q]/(J^[q])^2) + (1-d) ell(R/J^[q]) + 1,
// both sides formed from ghk_polynomial at k = 1, 2.
bool rossi_valla_check(const SimplicialComplex& c, const ExponentVector& v);

struct AuditReport {
    Integer e0;                 // e_0(J), q = 1
    Rational e1_at_q1;
    Integer colength;           // ell(R/J)
    bool stable;                // Huneke-Ooishi at q = 1
    bool stable_all_q;          // e_1(q) == e_0(q) - ell(R/J^[q])(q) as polynomials
    bool limit_identity_holds;  // L_1 == e_0(J) - e_HK(J)
    ConjectureStatus conjecture_status;
    bool rossi_valla_holds;
    CmCertificate cm_certificate;
    std::optional<int> candidate_reduction_number;
    std::string reduction_number_note;  // reason when absent; verdict qualifier otherwise
    BivariatePolynomial ghk;
    CoefficientTable table;
};

// Full stability/conjecture audit of J = (x_i^{v_i}) in the face ring.
// conjecture_status is counterexample exactly when the limit identity holds
// while the ideal is not stable. With certificate unknown and no assumed
// flag, the stability verdict is an arithmetic criterion only.
AuditReport smirnov_audit(const SimplicialComplex& c, const ExponentVector& v, bool assume_cm = false);

struct ReductionNumberResult {
    std::optional<int> value;
    CmCertificate certificate;
    std::string reason;  // set when value is absent
};

// Degree of the h-polynomial, reported as the reduction-number candidate
// when a CM certificate is available (pure shellable, or caller-assumed).
ReductionNumberResult reduction_number_candidate(const SimplicialComplex& c, bool assume_cm = false,
                                                 int shell_cap = 12);

}  // namespace hkface

#endif
