#include "bicyclic/catalog.hpp"

namespace bicyclic {

namespace {

// Coefficients listed from the leading term down, as the formulas are written.
IntPolynomial desc(std::initializer_list<long> coeffs)
{
    std::vector<mpz_class> v;
    for (long c : coeffs)
        v.emplace_back(c);
    return IntPolynomial(std::vector<mpz_class>(v.rbegin(), v.rend()));
}

const IntPolynomial & X()
{
    static const IntPolynomial x = IntPolynomial::monomial(1);
    return x;
}

IntPolynomial x_minus(long r) { return IntPolynomial::linear(r); }
IntPolynomial x2_minus_1() { return desc({1, 0, -1}); }
IntPolynomial golden(Transcription t) { return t == Transcription::Verified ? desc({1, 1, -1}) : desc({1, 1, 1}); }

// Product of factor^exponent, applying negative exponents by exact division.
class Assembly {
public:
    void add(const IntPolynomial & p, int e = 1)
    {
        if (e >= 0)
            num_ *= p.pow(e);
        else
            den_ *= p.pow(-e);
    }
    IntPolynomial result() const { return num_.exact_div(den_); }

private:
    IntPolynomial num_ = IntPolynomial::constant(1);
    IntPolynomial den_ = IntPolynomial::constant(1);
};

IntPolynomial f1(long n, long a, Transcription t)
{
    const long linear = t == Transcription::Verified ? 0 : -2;
    return desc({1, 0, -(a + 5), -4, -(n - 6 * a), 4, 4 * n - 9 * a - 5, linear, -(n - 2 * a - 1)});
}

IntPolynomial f2(long n, long a, Transcription t)
{
    const long constant = t == Transcription::Verified ? n - 2 * a - 1 : -(n - 2 * a - 1);
    return desc({1, -1, -(a + 3), a - 2, -(n - 3 * a - 5), n - 2 * a + 1, constant});
}

IntPolynomial f3(long n, long a)
{
    return desc({1, 0, -(a + 5), -4, -(n - 5 * a - 4), 6, 3 * n - 7 * a - 4, -2, -(n - 2 * a - 1)});
}

IntPolynomial f4(long n, long a)
{
    return desc({1, 0, -(a + 5), -4, -(n - 6 * a - 3), 2 * (a + 1), 4 * n - 8 * a - 9, 2 * (n - 2 * a - 2)});
}

IntPolynomial f5(long n, long a)
{
    return desc({1, -3, -a, 3 * (a + 1), -(n - a - 4), 3 * n - 8 * a - 7, -(n - 2 * a - 3), -2 * (n - 2 * a - 2)});
}

IntPolynomial f6(long n, long a)
{
    return desc({1, -2, -(a + 2), 2 * (a + 1), -(n - 2 * a - 2), 2 * n - 4 * a - 4});
}

IntPolynomial f_quartic_of_F(long c)
{
    return desc({1, -2, -(c + 1), 2 * c, 3});
}

IntPolynomial quintic_of_Fprime(long c)
{
    return desc({1, -2, -c, 2 * c, -1, -2});
}

IntPolynomial g_poly(long c)
{
    return x_minus(1).pow(2) * f_quartic_of_F(c);
}

IntPolynomial h_poly(long c)
{
    return x_minus(2) * quintic_of_Fprime(c);
}

FamilyKind family_of(Identity id)
{
    switch (id) {
    case Identity::F1: return FamilyKind::M1;
    case Identity::F2: return FamilyKind::M2;
    case Identity::F3: return FamilyKind::M3;
    case Identity::F4: return FamilyKind::M4;
    case Identity::F5: return FamilyKind::M5;
    case Identity::F6: return FamilyKind::M6;
    case Identity::HG: return FamilyKind::Fprime;
    }
    return FamilyKind::M;
}

}  // namespace

IntPolynomial m_quartic(int n, int alpha)
{
    const long a = alpha;
    return desc({1, 0, -(a + 3), -4, 2 * a - n + 1});
}

bool has_closed_form(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::F:
    case FamilyKind::Fprime:
    case FamilyKind::M:
    case FamilyKind::M1:
    case FamilyKind::M2:
    case FamilyKind::M3:
    case FamilyKind::M4:
    case FamilyKind::M5:
    case FamilyKind::M6: return true;
    default: return false;
    }
}

IntPolynomial reduced_poly(const FamilySpec & spec, Transcription t)
{
    const long n = spec.order(), a = spec.alpha();
    switch (spec.kind()) {
    case FamilyKind::F: return g_poly(n / 2);
    case FamilyKind::Fprime: return h_poly(n / 2);
    case FamilyKind::M: return m_quartic(n, a);
    case FamilyKind::M1: return f1(n, a, t);
    case FamilyKind::M2: return f2(n, a, t);
    case FamilyKind::M3: return f3(n, a);
    case FamilyKind::M4: return f4(n, a);
    case FamilyKind::M5: return f5(n, a);
    case FamilyKind::M6: return f6(n, a);
    default: throw FamilyError("no closed-form polynomial for " + spec.name());
    }
}

IntPolynomial family_poly(const FamilySpec & spec, Transcription t)
{
    const int n = spec.order(), a = spec.alpha();
    const int c = n / 2;
    Assembly p;
    switch (spec.kind()) {
    case FamilyKind::F:
        p.add(x2_minus_1(), c - 3);
        p.add(x_minus(-1), 2);
        p.add(f_quartic_of_F(c));
        break;
    case FamilyKind::Fprime:
        p.add(x2_minus_1(), c - 5);
        p.add(x_minus(-1), 4);
        p.add(h_poly(c));
        break;
    case FamilyKind::M:
        p.add(X(), 2 * a - n);
        p.add(x2_minus_1(), n - a - 2);
        p.add(m_quartic(n, a));
        break;
    case FamilyKind::M1:
    case FamilyKind::M3:
        p.add(X(), 2 * a - n);
        p.add(x2_minus_1(), n - a - 4);
        p.add(reduced_poly(spec, t));
        break;
    case FamilyKind::M2:
        p.add(X(), 2 * a - n);
        p.add(x2_minus_1(), n - a - 4);
        p.add(desc({1, 1, -1}));
        p.add(f2(n, a, t));
        break;
    case FamilyKind::M4:
        p.add(X(), 2 * a - n + 1);
        p.add(x2_minus_1(), n - a - 4);
        p.add(f4(n, a));
        break;
    case FamilyKind::M5:
        p.add(X(), 2 * a - n + 1);
        p.add(x2_minus_1(), n - a - 6);
        p.add(x_minus(-1), 2);
        p.add(golden(t));
        p.add(f5(n, a));
        break;
    case FamilyKind::M6:
        p.add(X(), 2 * a - n + 1);
        p.add(x2_minus_1(), n - a - 4);
        p.add(x_minus(-1), 2);
        p.add(f6(n, a));
        break;
    default: throw FamilyError("no closed-form polynomial for " + spec.name());
    }
    return p.result();
}

const std::vector<Identity> & all_identities()
{
    static const std::vector<Identity> ids{Identity::F1, Identity::F2, Identity::F3, Identity::F4,
                                           Identity::F5, Identity::F6, Identity::HG};
    return ids;
}

std::string identity_name(Identity id)
{
    switch (id) {
    case Identity::F1: return "f1-f";
    case Identity::F2: return "f2-f";
    case Identity::F3: return "f3-f";
    case Identity::F4: return "f4-f";
    case Identity::F5: return "f5-f";
    case Identity::F6: return "f6-f";
    case Identity::HG: return "h-g";
    }
    return "?";
}

Identity parse_identity(const std::string & name)
{
    for (Identity id : all_identities())
        if (identity_name(id) == name)
            return id;
    throw std::invalid_argument("unknown identity: " + name);
}

std::string identity_formula(Identity id, IdentityForm form)
{
    const bool fixed = form == IdentityForm::Corrected;
    switch (id) {
    case Identity::F1: return "f1 - (x^2-1)^2 f = 2x[(a-4)x^3 - 2x^2 + (n-2a)x + 2]";
    case Identity::F2: return "(x^2+x-1) f2 - (x^2-1)^2 f = x[(a-2)x^3 + (n-2a)x + 2]";
    case Identity::F3: return "f3 - (x^2-1)^2 f = x[(a-4)x^3 - 2x^2 + (n-2a+1)x + 2]";
    case Identity::F4:
        return "x f4 - (x^2-1)^2 f = (2a-5)x^4 + 2(a-3)x^3 + (2n-3a-4)x^2 + 2(n-2a)x + (n-2a-1)";
    case Identity::F5:
        return std::string(fixed ? "x(x^2+x-1) f5 - (x-1)^2(x^2-1)^2 f" : "x(x^2+x+1) f5 - (x+1)^2(x^2-1)^2 f")
               + " = (2a-4)x^6 - (2a-6)x^5 + (2n-6a+5)x^4 - (2n-4a)x^3 - (2n-5a+3)x^2 + 2x + (n-2a-1)";
    case Identity::F6:
        return std::string(fixed ? "x f6 - (x-1)^2 f" : "x(x+1)^2 f6 - (x^2-1)^2 f") + " = (a-4)x^2 + 2x + (n-2a-1)";
    case Identity::HG: return "h - g = (c-3)x(x-2) + 1, c = n/2";
    }
    return "?";
}

bool identity_applicable(Identity id, int n, int alpha)
{
    if (id == Identity::HG)
        return n % 2 == 0 && n >= 8 && n <= kMaxVertices;
    return !FamilySpec::infeasibility(FamilyKind::M, n, alpha)
           && !FamilySpec::infeasibility(family_of(id), n, alpha);
}

IdentityResult identity_check(Identity id, int n, int alpha, IdentityForm form)
{
    if (!identity_applicable(id, n, alpha))
        throw FamilyError("identity " + identity_name(id) + " does not apply at (n=" + std::to_string(n)
                          + ", alpha=" + std::to_string(alpha) + ")");
    const long N = n, a = alpha;
    const bool fixed = form == IdentityForm::Corrected;
    const IntPolynomial f = m_quartic(n, alpha);
    const IntPolynomial P = x2_minus_1().pow(2) * f;
    IdentityResult r{id, n, alpha, form, false, {}, {}};
    switch (id) {
    case Identity::F1:
        r.lhs = f1(N, a, Transcription::Verified) - P;
        r.rhs = desc({2, 0}) * desc({a - 4, -2, N - 2 * a, 2});
        break;
    case Identity::F2:
        r.lhs = desc({1, 1, -1}) * f2(N, a, Transcription::Verified) - P;
        r.rhs = X() * desc({a - 2, 0, N - 2 * a, 2});
        break;
    case Identity::F3:
        r.lhs = f3(N, a) - P;
        r.rhs = X() * desc({a - 4, -2, N - 2 * a + 1, 2});
        break;
    case Identity::F4:
        r.lhs = X() * f4(N, a) - P;
        r.rhs = desc({2 * a - 5, 2 * (a - 3), 2 * N - 3 * a - 4, 2 * (N - 2 * a), N - 2 * a - 1});
        break;
    case Identity::F5:
        if (fixed)
            r.lhs = X() * desc({1, 1, -1}) * f5(N, a) - x_minus(1).pow(2) * P;
        else
            r.lhs = X() * desc({1, 1, 1}) * f5(N, a) - x_minus(-1).pow(2) * P;
        r.rhs = desc({2 * a - 4, -(2 * a - 6), 2 * N - 6 * a + 5, -(2 * N - 4 * a), -(2 * N - 5 * a + 3), 2,
                      N - 2 * a - 1});
        break;
    case Identity::F6:
        if (fixed)
            r.lhs = X() * f6(N, a) - x_minus(1).pow(2) * f;
        else
            r.lhs = X() * x_minus(-1).pow(2) * f6(N, a) - P;
        r.rhs = desc({a - 4, 2, N - 2 * a - 1});
        break;
    case Identity::HG: {
        const long c = n / 2;
        r.lhs = h_poly(c) - g_poly(c);
        r.rhs = desc({c - 3, -2 * (c - 3), 1});
        break;
    }
    }
    r.holds = r.lhs == r.rhs;
    return r;
}

}  // namespace bicyclic
