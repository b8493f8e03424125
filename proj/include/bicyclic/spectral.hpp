#pragma once

#include "bicyclic/graph.hpp"
#include "bicyclic/polynomial.hpp"

#include <string>
#include <vector>

namespace bicyclic {

/// det(xI - A) by Berkowitz's division-free algorithm.
IntPolynomial char_poly(const Graph & g);

/// Characteristic polynomial by repeated vertex deletion, expanding at v first:
///   phi(G) = x phi(G-v) - sum_{u~v} phi(G-u-v) - 2 sum_{cycles Z through v} phi(G-V(Z))
/// Subgraphs are memoised by vertex set.
IntPolynomial schwenk_delete(const Graph & g, Vertex v);

struct RootCount {
    int above = 0;  // roots strictly greater than y, with multiplicity
    int at = 0;     // multiplicity of y as a root
};

/// Exact for polynomials whose roots are all real (Descartes on p(y + t)).
RootCount count_roots_above(const IntPolynomial & real_rooted, const mpq_class & y);

/// Every root of the real-rooted polynomial is strictly below y.
bool all_roots_below(const IntPolynomial & real_rooted, const mpq_class & y);

/// lo < r <= hi for the largest real root r.
struct RootInterval {
    mpq_class lo;
    mpq_class hi;
};

/// Largest real root of an arbitrary integer polynomial via Sturm sequences.
/// Throws std::domain_error if p has no real root.
RootInterval largest_real_root(const IntPolynomial & p, double tol = 1e-12);

/// Number of distinct real roots in (a, b].
int sturm_count(const IntPolynomial & p, const mpq_class & a, const mpq_class & b);

struct SpectralCertificate {
    double rho = 0;          // numeric value
    mpq_class lo;            // lo < rho < hi, certified against poly
    mpq_class hi;
    bool exact = false;      // rho is the integer (lo + hi) / 2
    IntPolynomial poly;
    std::vector<double> perron;  // unit Perron vector, nonnegative

    double width() const { return mpq_class(hi - lo).get_d(); }
};

double numeric_spectral_radius(const Graph & g);
std::vector<double> perron_vector(const Graph & g);

/// Spectral radius with a rational bracket of width at most tol.
SpectralCertificate spectral_radius(const Graph & g, double tol = 1e-9);

/// Halve the bracket until its width is at most `width`.
void refine(SpectralCertificate & c, const mpq_class & width);

enum class Order { Less, Equal, Greater };

std::string to_string(Order o);

/// Exact comparison of spectral radii of two connected graphs.
Order compare_radii(const Graph & a, const Graph & b);

/// rho(G) >= sqrt(max degree), decided exactly.
bool sqrt_delta_bound_check(const Graph & g);

/// Decimal rounding that keeps the bracket valid: floor for lower ends,
/// ceiling for upper ends.
std::string decimal_floor(const mpq_class & q, int digits);
std::string decimal_ceil(const mpq_class & q, int digits);

}  // namespace bicyclic
