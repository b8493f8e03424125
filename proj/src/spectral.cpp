#include "bicyclic/spectral.hpp"

#include "bicyclic/canonical.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace bicyclic {

namespace {

// Berkowitz over T; returns det(xI - A) highest degree first.
template <class T>
std::vector<T> berkowitz(const Graph & g)
{
    const int n = g.order();
    std::vector<T> c{1};
    for (int r = 1; r <= n; ++r) {
        const int k = r - 1;   // index of the new row/column
        const VertexSet inner = (1u << k) - 1u;
        std::vector<T> col(r + 1);
        col[0] = 1;
        col[1] = 0;   // no loops
        // col[j + 2] = -R A^j S with A the leading k x k block
        std::vector<T> v(k), next(k);
        for (int i = 0; i < k; ++i)
            v[i] = g.adjacent(i, k) ? 1 : 0;
        for (int j = 0; j + 2 <= r; ++j) {
            T dot = 0;
            for (VertexSet s = g.row(k) & inner; s; s &= s - 1)
                dot += v[first_vertex(s)];
            col[j + 2] = -dot;
            for (int i = 0; i < k; ++i) {
                next[i] = 0;
                for (VertexSet s = g.row(i) & inner; s; s &= s - 1)
                    next[i] += v[first_vertex(s)];
            }
            v.swap(next);
        }
        std::vector<T> out(r + 1);
        for (int i = 0; i <= r; ++i)
            for (int j = std::max(0, i - r); j <= std::min(i, r - 1); ++j)
                out[i] += col[i - j] * c[j];
        c = std::move(out);
    }
    return c;
}

mpz_class to_mpz(__int128 v)
{
    const bool neg = v < 0;
    unsigned __int128 m = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    mpz_class hi(static_cast<unsigned long>(m >> 64)), lo(static_cast<unsigned long>(m));
    mpz_class out = (hi << 64) + lo;
    return neg ? mpz_class(-out) : out;
}

}  // namespace

IntPolynomial char_poly(const Graph & g)
{
    std::vector<mpz_class> asc;
    // With at most 16 vertices walk counts stay below 15^15 and coefficients
    // below 15!, so their products fit in 128 bits.
    if (g.order() <= 16) {
        auto c = berkowitz<__int128>(g);
        for (auto it = c.rbegin(); it != c.rend(); ++it)
            asc.push_back(to_mpz(*it));
    }
    else {
        auto c = berkowitz<mpz_class>(g);
        asc.assign(c.rbegin(), c.rend());
    }
    return IntPolynomial(std::move(asc));
}

namespace {

class Schwenk {
public:
    explicit Schwenk(const Graph & g) : g_(g) {}

    IntPolynomial expand(VertexSet s, Vertex v)
    {
        static const IntPolynomial x = IntPolynomial::monomial(1);
        const VertexSet without = s & ~(1u << v);
        IntPolynomial result = x * phi(without);
        for (VertexSet nb = g_.row(v) & s; nb; nb &= nb - 1)
            result -= phi(without & ~(1u << first_vertex(nb)));
        for (VertexSet z : cycles_through(s, v))
            result -= phi(s & ~z) * mpz_class(2);
        return result;
    }

private:
    IntPolynomial phi(VertexSet s)
    {
        if (!s)
            return IntPolynomial::constant(1);
        if (auto it = memo_.find(s); it != memo_.end())
            return it->second;
        IntPolynomial p = expand(s, first_vertex(s));
        memo_.emplace(s, p);
        return p;
    }

    std::vector<VertexSet> cycles_through(VertexSet s, Vertex v)
    {
        std::vector<VertexSet> out;
        std::vector<Vertex> path{v};
        walk(s, v, 1u << v, path, out);
        return out;
    }

    void walk(VertexSet s, Vertex at, VertexSet on_path, std::vector<Vertex> & path,
              std::vector<VertexSet> & out)
    {
        const Vertex start = path.front();
        for (VertexSet nb = g_.row(at) & s; nb; nb &= nb - 1) {
            Vertex w = first_vertex(nb);
            // each cycle is seen in both directions; keep one
            if (w == start && path.size() >= 3 && path[1] < at)
                out.push_back(on_path);
            if (on_path & (1u << w))
                continue;
            path.push_back(w);
            walk(s, w, on_path | (1u << w), path, out);
            path.pop_back();
        }
    }

    const Graph & g_;
    std::unordered_map<VertexSet, IntPolynomial> memo_;
};

mpq_class power_of_two(int e)
{
    mpq_class r(1);
    if (e >= 0)
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), e);
    else
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), -e);
    return r;
}

std::vector<IntPolynomial> sturm_sequence(const IntPolynomial & p)
{
    std::vector<IntPolynomial> seq{p, p.derivative()};
    while (seq.back().degree() > 0) {
        const IntPolynomial & a = seq[seq.size() - 2];
        const IntPolynomial & b = seq.back();
        IntPolynomial r = a.pseudo_remainder(b);
        if (r.is_zero())
            break;
        // prem = lc(b)^e * rem; the next term is -rem up to a positive factor
        const int e = a.degree() - b.degree() + 1;
        const bool flip = b.leading() < 0 && e % 2 == 1;
        const mpz_class k = r.content();
        std::vector<mpz_class> cs = r.coefficients();
        for (auto & v : cs)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), k.get_mpz_t());
        IntPolynomial next(std::move(cs));
        seq.push_back(flip ? next : -next);
    }
    return seq;
}

int variations_at(const std::vector<IntPolynomial> & seq, const mpq_class & x)
{
    int changes = 0, last = 0;
    for (const auto & p : seq) {
        int s = p.sign_at(x);
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

IntPolynomial schwenk_delete(const Graph & g, Vertex v)
{
    if (v < 0 || v >= g.order())
        throw GraphError("vertex out of range");
    return Schwenk(g).expand(g.all(), v);
}

RootCount count_roots_above(const IntPolynomial & p, const mpq_class & y)
{
    if (p.is_zero())
        throw std::domain_error("root count of the zero polynomial");
    IntPolynomial q = p.shifted(y);
    const auto & cs = q.coefficients();
    RootCount rc;
    while (cs[rc.at] == 0)
        ++rc.at;
    rc.above = sign_variations(cs);
    return rc;
}

bool all_roots_below(const IntPolynomial & p, const mpq_class & y)
{
    RootCount rc = count_roots_above(p, y);
    return rc.above == 0 && rc.at == 0;
}

int sturm_count(const IntPolynomial & p, const mpq_class & a, const mpq_class & b)
{
    if (p.degree() <= 0)
        return 0;
    auto seq = sturm_sequence(square_free_part(p));
    return variations_at(seq, a) - variations_at(seq, b);
}

RootInterval largest_real_root(const IntPolynomial & p, double tol)
{
    if (p.degree() < 1)
        throw std::domain_error("polynomial has no real root");
    IntPolynomial sf = square_free_part(p);
    auto seq = sturm_sequence(sf);
    // Cauchy bound: every root has |r| < 1 + max |c_i / c_d|
    mpz_class big = 0;
    for (const auto & c : sf.coefficients())
        big = std::max(big, mpz_class(abs(c)));
    mpz_class bound = big / abs(sf.leading()) + 2;
    mpq_class lo(-bound), hi(bound);
    if (variations_at(seq, lo) - variations_at(seq, hi) == 0)
        throw std::domain_error("polynomial has no real root");
    const int hi_var = variations_at(seq, hi);
    const mpq_class width(tol);
    while (hi - lo > width) {
        mpq_class mid = (lo + hi) / 2;
        if (variations_at(seq, mid) - hi_var >= 1)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, hi};
}

double numeric_spectral_radius(const Graph & g)
{
    const int n = g.order();
    if (n == 0)
        throw GraphError("spectral radius of the empty graph");
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.edges())
        a(u, v) = a(v, u) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
    return es.eigenvalues()(n - 1);
}

std::vector<double> perron_vector(const Graph & g)
{
    const int n = g.order();
    if (n == 0)
        throw GraphError("Perron vector of the empty graph");
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.edges())
        a(u, v) = a(v, u) = 1.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    Eigen::VectorXd x = es.eigenvectors().col(n - 1);
    if (x.sum() < 0)
        x = -x;
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i)
        out[i] = std::max(0.0, x(i));
    return out;
}

void refine(SpectralCertificate & c, const mpq_class & width)
{
    while (c.hi - c.lo > width) {
        mpq_class mid = (c.lo + c.hi) / 2;
        RootCount rc = count_roots_above(c.poly, mid);
        if (rc.above == 0 && rc.at == 0) {
            c.hi = mid;
        }
        else if (rc.above == 0) {
            mpq_class half = (c.hi - c.lo) / 4;
            c.lo = mid - half;
            c.hi = mid + half;
            c.exact = true;
        }
        else {
            c.lo = mid;
        }
    }
}

SpectralCertificate spectral_radius(const Graph & g, double tol)
{
    if (g.order() == 0)
        throw GraphError("spectral radius of the empty graph");
    if (!is_connected(g))
        throw GraphError("spectral radius certificate requires a connected graph");
    if (!(tol > 0))
        throw std::invalid_argument("tolerance must be positive");
    SpectralCertificate c;
    c.poly = char_poly(g);
    c.perron = perron_vector(g);
    c.rho = numeric_spectral_radius(g);
    const mpq_class width(tol);

    const double nearest = std::round(c.rho);
    if (std::abs(c.rho - nearest) < 1e-6) {
        mpq_class y(nearest);
        RootCount rc = count_roots_above(c.poly, y);
        if (rc.above == 0 && rc.at > 0) {
            c.exact = true;
            c.lo = y - width / 2;
            c.hi = y + width / 2;
            return c;
        }
    }

    const mpq_class seed(c.rho);
    for (int e = -36;; ++e) {
        c.lo = seed - power_of_two(e);
        if (count_roots_above(c.poly, c.lo).above >= 1)
            break;
    }
    for (int e = -36;; ++e) {
        c.hi = seed + power_of_two(e);
        if (all_roots_below(c.poly, c.hi))
            break;
    }
    refine(c, width);
    return c;
}

std::string to_string(Order o)
{
    switch (o) {
    case Order::Less:
        return "less";
    case Order::Equal:
        return "equal";
    case Order::Greater:
        return "greater";
    }
    return "?";
}

Order compare_radii(const Graph & a, const Graph & b)
{
    if (!is_connected(a) || !is_connected(b))
        throw GraphError("compare_radii requires connected graphs");
    if (a.order() == b.order() && canonical_form(a) == canonical_form(b))
        return Order::Equal;
    SpectralCertificate ca = spectral_radius(a, 1e-9), cb = spectral_radius(b, 1e-9);
    if (ca.poly == cb.poly)
        return Order::Equal;   // cospectral

    bool equality_ruled_out = false;
    for (int step = 0; step < 2000; ++step) {
        if (ca.hi <= cb.lo)
            return Order::Less;
        if (cb.hi <= ca.lo)
            return Order::Greater;
        if (!equality_ruled_out) {
            IntPolynomial common = gcd(ca.poly, cb.poly);
            if (common.degree() <= 0) {
                equality_ruled_out = true;
            }
            else if (count_roots_above(ca.poly, ca.lo).above == 1
                     && count_roots_above(cb.poly, cb.lo).above == 1) {
                // Above lo only the largest root survives, so a root of the
                // common factor there pins rho(a) = rho(b).
                if (count_roots_above(common, ca.lo).above >= 1
                    && count_roots_above(common, cb.lo).above >= 1)
                    return Order::Equal;
                equality_ruled_out = true;
            }
        }
        refine(ca, (ca.hi - ca.lo) / 2);
        refine(cb, (cb.hi - cb.lo) / 2);
    }
    throw std::runtime_error("compare_radii failed to separate the spectral radii");
}

bool sqrt_delta_bound_check(const Graph & input)
{
    if (input.order() == 0)
        throw GraphError("empty graph");
    const int delta = input.max_degree();
    if (delta == 0)
        return true;
    // rho(G) is the largest component radius, so the component holding a
    // vertex of maximum degree decides it
    Vertex top = 0;
    while (input.degree(top) != delta)
        ++top;
    VertexSet comp = 1u << top, frontier = comp;
    while (frontier) {
        VertexSet next = 0;
        for (Vertex v : to_vector(frontier))
            next |= input.neighbours(v);
        frontier = next & ~comp;
        comp |= next;
    }
    const Graph g = input.induced(comp);
    SpectralCertificate c = spectral_radius(g, 1e-6);
    if (c.lo > 0 && c.lo * c.lo >= delta)
        return true;
    // phi(x) phi(-x) = (-1)^n psi(x^2) with psi real-rooted, roots lambda_i^2,
    // so rho^2 >= delta iff psi has a root at or above delta.
    IntPolynomial prod = c.poly * c.poly.reflected();
    std::vector<mpz_class> even;
    const auto & cs = prod.coefficients();
    for (std::size_t i = 0; i < cs.size(); i += 2)
        even.push_back(cs[i]);
    IntPolynomial psi(std::move(even));
    RootCount rc = count_roots_above(psi, mpq_class(delta));
    return rc.above + rc.at >= 1;
}

namespace {

std::string fixed_point(const mpz_class & scaled, int digits)
{
    std::string body = mpz_class(abs(scaled)).get_str();
    if (static_cast<int>(body.size()) <= digits)
        body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
    return (scaled < 0 ? "-" : "") + body;
}

mpq_class scaled_by_ten(const mpq_class & q, int digits)
{
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    return q * scale;
}

}  // namespace

std::string decimal_floor(const mpq_class & q, int digits)
{
    mpq_class s = scaled_by_ten(q, digits);
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    return fixed_point(f, digits);
}

std::string decimal_ceil(const mpq_class & q, int digits)
{
    mpq_class s = scaled_by_ten(q, digits);
    mpz_class f;
    mpz_cdiv_q(f.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
    return fixed_point(f, digits);
}

}  // namespace bicyclic
