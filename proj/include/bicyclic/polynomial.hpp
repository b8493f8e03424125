#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace bicyclic {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree. The zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long> ascending);
    explicit IntPolynomial(std::vector<mpz_class> ascending);

    static IntPolynomial constant(const mpz_class & c);
    static IntPolynomial monomial(int degree, const mpz_class & c = 1);
    /// x - root
    static IntPolynomial linear(long root);

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }   // -1 for zero
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const mpz_class & leading() const { return c_.back(); }
    const std::vector<mpz_class> & coefficients() const noexcept { return c_; }
    mpz_class coefficient(int k) const;

    IntPolynomial & operator+=(const IntPolynomial & o);
    IntPolynomial & operator-=(const IntPolynomial & o);
    IntPolynomial & operator*=(const IntPolynomial & o);
    IntPolynomial & operator*=(const mpz_class & k);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial & b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial & b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial & b) { return a *= b; }
    friend IntPolynomial operator*(IntPolynomial a, const mpz_class & k) { return a *= k; }
    friend IntPolynomial operator*(const mpz_class & k, IntPolynomial a) { return a *= k; }
    IntPolynomial operator-() const;

    friend bool operator==(const IntPolynomial & a, const IntPolynomial & b) { return a.c_ == b.c_; }

    IntPolynomial pow(int e) const;
    IntPolynomial derivative() const;
    /// p(-x)
    IntPolynomial reflected() const;

    mpz_class content() const;
    IntPolynomial primitive() const;

    /// Exact quotient; throws std::domain_error when the division leaves a remainder.
    IntPolynomial exact_div(const IntPolynomial & d) const;
    /// lc(d)^(deg - deg d + 1) * this = q d + r
    IntPolynomial pseudo_remainder(const IntPolynomial & d) const;

    mpz_class evaluate(const mpz_class & x) const;
    mpq_class evaluate(const mpq_class & x) const;
    int sign_at(const mpq_class & x) const;

    /// b^deg * p((a + t) / b) for x = a/b in lowest terms: an integer
    /// polynomial in t whose roots are b*(root - x).
    IntPolynomial shifted(const mpq_class & x) const;

    /// Ascending coefficients separated by spaces.
    std::string coeff_string() const;
    std::string to_string(const char * var = "x") const;

private:
    void trim();

    std::vector<mpz_class> c_;
};

/// Primitive gcd with positive leading coefficient.
IntPolynomial gcd(IntPolynomial a, IntPolynomial b);
/// p / gcd(p, p')
IntPolynomial square_free_part(const IntPolynomial & p);

/// Sign changes in the coefficient sequence, zeros skipped.
int sign_variations(const std::vector<mpz_class> & coeffs);

}  // namespace bicyclic
