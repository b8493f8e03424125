#pragma once

#include "bicyclic/families.hpp"
#include "bicyclic/polynomial.hpp"

#include <string>
#include <vector>

namespace bicyclic {

/// Closed-form characteristic polynomials of the named families.
///
/// Verified is the form that equals char_poly of the constructed graph.
/// AsPrinted swaps in three variant coefficients that disagree with it:
/// the x term of f1 (-2x), the constant of f2 (-(n-2a-1)), and the factor
/// x^2+x+1 in the product for M5.
enum class Transcription { Verified, AsPrinted };

/// f(x) = x^4 - (a+3)x^2 - 4x + (2a - n + 1)
IntPolynomial m_quartic(int n, int alpha);

/// The factor whose largest root is the spectral radius: f, f1..f6 for the
/// M kinds, g for F and h for Fprime. Throws FamilyError for other kinds.
IntPolynomial reduced_poly(const FamilySpec & spec, Transcription t = Transcription::Verified);

/// Full characteristic polynomial assembled from the closed form. Negative
/// exponents at boundary parameters are applied by exact division.
IntPolynomial family_poly(const FamilySpec & spec, Transcription t = Transcription::Verified);

bool has_closed_form(FamilyKind kind);

/// Polynomial identities tying each reduced factor to f (or h to g).
enum class Identity { F1, F2, F3, F4, F5, F6, HG };

/// Displayed: the relation in its customary written form.
/// Corrected: the left-hand side fixed where the written one is false
/// (F5: x(x^2+x-1)f5 - (x-1)^2(x^2-1)^2 f, F6: x f6 - (x-1)^2 f).
enum class IdentityForm { Displayed, Corrected };

struct IdentityResult {
    Identity id;
    int n = 0;
    int alpha = 0;
    IdentityForm form = IdentityForm::Displayed;
    bool holds = false;
    IntPolynomial lhs;
    IntPolynomial rhs;
};

const std::vector<Identity> & all_identities();
std::string identity_name(Identity id);
Identity parse_identity(const std::string & name);
std::string identity_formula(Identity id, IdentityForm form);

/// Whether (n, alpha) lies in the domain of the identity (both families
/// feasible; HG needs even n >= 8 and ignores alpha).
bool identity_applicable(Identity id, int n, int alpha);

/// Exact check over Z[x]. Throws FamilyError outside the domain.
IdentityResult identity_check(Identity id, int n, int alpha,
                              IdentityForm form = IdentityForm::Displayed);

}  // namespace bicyclic
