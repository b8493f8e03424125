#include "bicyclic/canonical.hpp"
#include "bicyclic/catalog.hpp"
#include "bicyclic/families.hpp"
#include "bicyclic/spectral.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace bicyclic;

namespace {

Graph bowtie()
{
    return infinity_graph(3, 1, 3);
}

bool contains(const SpectralCertificate & c, double x)
{
    return mpq_class(c.lo).get_d() <= x && x <= mpq_class(c.hi).get_d();
}

}  // namespace

TEST_CASE("characteristic polynomials of small graphs")
{
    CHECK(char_poly(path_graph(2)) == IntPolynomial{-1, 0, 1});
    CHECK(char_poly(cycle_graph(4)) == IntPolynomial{0, 0, -4, 0, 1});
    CHECK(char_poly(cycle_graph(3)) == IntPolynomial{-2, -3, 0, 1});
    CHECK(char_poly(make_graph(0, {})) == IntPolynomial{1});
    CHECK(char_poly(bowtie()) == oracle::det_char_poly(bowtie()));
    CHECK(char_poly(bowtie()).degree() == 5);
    CHECK(char_poly(bowtie()).is_monic());
}

TEST_CASE("Berkowitz agrees with Laplace expansion on random graphs, both precisions")
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 150; ++i) {
        Graph g = oracle::random_dense(1 + static_cast<int>(rng() % 12), 0.4, rng);
        REQUIRE(char_poly(g) == oracle::det_char_poly(g));
    }
    // past the 128-bit path: K_n has phi = (x - n + 1)(x + 1)^(n-1)
    for (int n : {16, 17, 20, 24}) {
        IntPolynomial want = IntPolynomial::linear(n - 1) * IntPolynomial{1, 1}.pow(n - 1);
        CHECK(char_poly(complete_graph(n)) == want);
    }
    for (int n : {17, 18})
        for (int i = 0; i < 3; ++i) {
            Graph g = oracle::random_dense(n, 0.3, rng);
            CHECK(char_poly(g) == oracle::det_char_poly(g));
        }
}

TEST_CASE("Schwenk expansion")
{
    for (Vertex v : {0, 1})
        CHECK(schwenk_delete(path_graph(2), v) == IntPolynomial{-1, 0, 1});
    for (Vertex v : {0, 1, 2})
        CHECK(schwenk_delete(cycle_graph(3), v) == IntPolynomial{-2, -3, 0, 1});
    CHECK(schwenk_delete(bowtie(), 0) == char_poly(bowtie()));
    // disconnected input: product over components
    Graph two = make_graph(5, {{0, 1}, {2, 3}, {3, 4}, {4, 2}});
    CHECK(schwenk_delete(two, 0) == char_poly(path_graph(2)) * char_poly(cycle_graph(3)));
    CHECK(schwenk_delete(complete_graph(6), 3) == char_poly(complete_graph(6)));
}

TEST_CASE("root counting")
{
    IntPolynomial p = IntPolynomial{-1, 1}.pow(2) * IntPolynomial{2, 1};   // roots 1, 1, -2
    RootCount at1 = count_roots_above(p, mpq_class(1));
    CHECK(at1.above == 0);
    CHECK(at1.at == 2);
    CHECK(count_roots_above(p, mpq_class(0)).above == 2);
    CHECK(count_roots_above(p, mpq_class(-3)).above == 3);
    CHECK(all_roots_below(p, mpq_class(11, 10)));
    CHECK_FALSE(all_roots_below(p, mpq_class(1)));

    IntPolynomial q{-2, 0, 1};   // +-sqrt 2
    CHECK(sturm_count(q, mpq_class(0), mpq_class(2)) == 1);
    CHECK(sturm_count(q, mpq_class(-2), mpq_class(2)) == 2);
    CHECK(sturm_count(q * q, mpq_class(-2), mpq_class(2)) == 2);
    CHECK(sturm_count(IntPolynomial{1, 0, 1}, mpq_class(-5), mpq_class(5)) == 0);
}

TEST_CASE("largest real root")
{
    RootInterval one = largest_real_root(IntPolynomial{-1, 0, 1});
    CHECK(one.lo < 1);
    CHECK(one.hi >= 1);

    IntPolynomial quartic{1, -4, -8, 0, 1};
    RootInterval r = largest_real_root(quartic);
    CHECK(r.lo >= 3);
    CHECK(r.hi <= mpq_class(31, 10));
    CHECK(quartic.sign_at(mpq_class(3)) < 0);
    CHECK(quartic.sign_at(mpq_class(31, 10)) > 0);
    CHECK(mpq_class(r.hi - r.lo).get_d() <= 1e-12);

    IntPolynomial g{3, 10, -6, -2, 1};   // x^4 - 2x^3 - 6x^2 + 10x + 3
    RootInterval gr = largest_real_root(g);
    SpectralCertificate f = spectral_radius(build_family(FamilySpec::F(10)));
    CHECK(std::abs(mpq_class((gr.lo + gr.hi) / 2).get_d() - f.rho) < 1e-9);

    // non-real-rooted input
    RootInterval cubic = largest_real_root(IntPolynomial{-2, 0, 0, 1});
    CHECK(std::abs(mpq_class(cubic.lo).get_d() - std::cbrt(2.0)) < 1e-11);
    CHECK_THROWS_AS(largest_real_root(IntPolynomial{1, 0, 1}), std::domain_error);
}

TEST_CASE("spectral radius certificates")
{
    for (int n = 3; n <= 9; ++n) {
        SpectralCertificate c = spectral_radius(cycle_graph(n));
        CHECK(c.exact);
        CHECK(c.lo < 2);
        CHECK(c.hi > 2);
    }
    SpectralCertificate star = spectral_radius(star_graph(4));
    CHECK(star.exact);
    CHECK(contains(star, 2.0));

    SpectralCertificate m = spectral_radius(build_family(FamilySpec::M(10, 5)));
    CHECK(m.lo > 3);
    CHECK(m.hi < mpq_class(31, 10));
    CHECK(m.width() <= 1e-9);
    CHECK(all_roots_below(m.poly, m.hi));
    CHECK(count_roots_above(m.poly, m.lo).above == 1);

    CHECK_THROWS_AS(spectral_radius(make_graph(4, {{0, 1}, {2, 3}})), GraphError);
    CHECK_THROWS_AS(spectral_radius(make_graph(0, {})), GraphError);
}

TEST_CASE("certificate, Perron vector and power iteration agree on random connected graphs")
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; ++i) {
        Graph g = oracle::random_dense(2 + static_cast<int>(rng() % 12), 0.25, rng);
        SpectralCertificate c = spectral_radius(g);
        CHECK(contains(c, oracle::power_iteration_rho(g)));
        double norm = 0, residual = 0;
        for (Vertex v = 0; v < g.order(); ++v) {
            CHECK(c.perron[v] > 0);
            norm += c.perron[v] * c.perron[v];
            double ax = 0;
            for (Vertex w : to_vector(g.neighbours(v)))
                ax += c.perron[w];
            residual = std::max(residual, std::abs(ax - c.rho * c.perron[v]));
        }
        CHECK(std::abs(norm - 1) < 1e-12);
        CHECK(residual <= 1e-9);
    }
}

TEST_CASE("refine keeps the bracket valid")
{
    SpectralCertificate c = spectral_radius(bowtie(), 1e-3);
    refine(c, mpq_class("1/1000000000000"));
    CHECK(c.width() <= 1e-12);
    CHECK(count_roots_above(c.poly, c.lo).above == 1);
    CHECK(all_roots_below(c.poly, c.hi));
}

TEST_CASE("compare radii")
{
    Graph c4 = cycle_graph(4);
    CHECK(compare_radii(c4, c4.relabelled({3, 1, 0, 2})) == Order::Equal);
    CHECK(compare_radii(build_family(FamilySpec::Fprime(10)), build_family(FamilySpec::F(10))) == Order::Less);
    CHECK(compare_radii(build_family(FamilySpec::M1(12, 6)), build_family(FamilySpec::M(12, 6))) == Order::Less);
    CHECK(compare_radii(build_family(FamilySpec::M(12, 6)), build_family(FamilySpec::M1(12, 6))) == Order::Greater);

    // equal integer radii on different orders: C5 and K_{1,4}
    CHECK(compare_radii(cycle_graph(5), star_graph(4)) == Order::Equal);
    CHECK(compare_radii(path_graph(3), star_graph(2)) == Order::Equal);
    // golden ratio against sqrt 5
    CHECK(compare_radii(path_graph(4), star_graph(5)) == Order::Less);

    CHECK_THROWS_AS(compare_radii(make_graph(4, {{0, 1}, {2, 3}}), c4), GraphError);
}

TEST_CASE("compare radii detects equal irrational radii of non-cospectral graphs")
{
    // both sqrt 3
    CHECK(compare_radii(path_graph(5), star_graph(3)) == Order::Equal);
    CHECK(char_poly(path_graph(5)) != char_poly(star_graph(3)));
    CHECK(compare_radii(star_graph(3), path_graph(5)) == Order::Equal);
}

TEST_CASE("compare radii is antisymmetric and matches numeric order on random pairs")
{
    std::mt19937_64 rng(29);
    for (int i = 0; i < 300; ++i) {
        Graph a = oracle::random_connected(3 + static_cast<int>(rng() % 8), static_cast<int>(rng() % 4), rng);
        Graph b = oracle::random_connected(3 + static_cast<int>(rng() % 8), static_cast<int>(rng() % 4), rng);
        Order ab = compare_radii(a, b), ba = compare_radii(b, a);
        CHECK((ab == Order::Equal) == (ba == Order::Equal));
        CHECK((ab == Order::Less) == (ba == Order::Greater));
        double ra = oracle::power_iteration_rho(a), rb = oracle::power_iteration_rho(b);
        if (ra - rb > 1e-6)
            CHECK(ab == Order::Greater);
        else if (rb - ra > 1e-6)
            CHECK(ab == Order::Less);
    }
}

TEST_CASE("rho >= sqrt(max degree)")
{
    CHECK(sqrt_delta_bound_check(star_graph(4)));
    CHECK(sqrt_delta_bound_check(cycle_graph(5)));
    CHECK(sqrt_delta_bound_check(complete_graph(5)));
    CHECK(sqrt_delta_bound_check(make_graph(3, {})));
    CHECK(sqrt_delta_bound_check(make_graph(7, {{0, 1}, {2, 3}, {2, 4}, {2, 5}, {2, 6}})));
    CHECK_THROWS(sqrt_delta_bound_check(make_graph(0, {})));
}

TEST_CASE("decimal rounding brackets the value")
{
    CHECK(decimal_floor(mpq_class(1, 3), 4) == "0.3333");
    CHECK(decimal_ceil(mpq_class(1, 3), 4) == "0.3334");
    CHECK(decimal_floor(mpq_class(-1, 3), 2) == "-0.34");
    CHECK(decimal_ceil(mpq_class(-1, 3), 2) == "-0.33");
    CHECK(decimal_floor(mpq_class(2), 3) == "2.000");
}
