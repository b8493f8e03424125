#include "suites.hpp"

#include "bicyclic/enumeration.hpp"
#include "bicyclic/graph6.hpp"
#include "bicyclic/invariants.hpp"
#include "bicyclic/spectral.hpp"
#include "bicyclic/transforms.hpp"
#include "oracles.hpp"

#include <random>

namespace suites {

using namespace bicyclic;

namespace {

void fail(Outcome & o, const Graph & g, const std::string & what)
{
    if (o.violations++ == 0)
        o.first_violation = to_graph6(g) + " " + what;
}

int pick(std::mt19937_64 & rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Connected bicyclic graph or, one time in four, something denser.
Graph sample(std::mt19937_64 & rng, int lo, int hi)
{
    int n = pick(rng, lo, hi);
    int extra = pick(rng, 0, 3) == 0 ? pick(rng, 0, 5) : 2;
    return oracle::random_connected(n, extra, rng);
}

}  // namespace

Outcome rotation(int instances, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    Outcome o;
    while (o.instances < instances) {
        Graph g = sample(rng, 4, 12);
        Vertex u = pick(rng, 0, g.order() - 1), v = pick(rng, 0, g.order() - 1);
        if (u == v)
            continue;
        VertexSet movable = g.neighbours(v) & ~g.neighbours(u) & ~(1u << u);
        if (!movable)
            continue;
        VertexSet s = 0;
        while (!s)
            for (Vertex w : to_vector(movable))
                if (pick(rng, 0, 1))
                    s |= 1u << w;
        RotationMove mv{u, v, s};
        Graph h;
        try {
            h = rotate_edges(g, mv);
        }
        catch (const TransformError &) {
            continue;   // disconnected result
        }
        if (!is_rho_increasing(g, mv))
            continue;
        ++o.instances;
        if (h.order() != g.order() || h.size() != g.size())
            fail(o, g, "rotation changed the counts");
        else if (compare_radii(h, g) != Order::Greater)
            fail(o, g, "u=" + std::to_string(u) + " v=" + std::to_string(v) + " s=" + std::to_string(s));
    }
    return o;
}

Outcome grafting(int instances, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    Outcome o;
    while (o.instances < instances) {
        Graph g = sample(rng, 2, 9);
        Vertex v = pick(rng, 0, g.order() - 1);
        int m = pick(rng, 1, 4);
        int k = m + pick(rng, 0, 4);
        if (g.order() + k + m > 20)
            continue;
        auto [a, b] = graft_pair(g, v, k, m);
        ++o.instances;
        if (compare_radii(a, b) != Order::Greater)
            fail(o, g, "v=" + std::to_string(v) + " k=" + std::to_string(k) + " m=" + std::to_string(m));
    }
    return o;
}

Outcome schwenk_enumerated(int max_n)
{
    Outcome o;
    for (int n = 4; n <= max_n; ++n) {
        EnumerationConfig cfg;
        cfg.n = n;
        enumerate_bicyclic(cfg, [&](const Graph & g) {
            IntPolynomial want = char_poly(g);
            ++o.instances;
            for (Vertex v = 0; v < n; ++v)
                if (schwenk_delete(g, v) != want) {
                    fail(o, g, "v=" + std::to_string(v));
                    break;
                }
        });
    }
    return o;
}

Outcome schwenk_random(int instances, int max_n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    Outcome o;
    for (; o.instances < instances; ++o.instances) {
        Graph g = oracle::random_dense(pick(rng, 1, max_n), pick(rng, 0, 3) * 0.15, rng);
        if (pick(rng, 0, 4) == 0) {
            // drop an edge now and then so disconnected inputs occur
            auto e = g.edges();
            if (!e.empty()) {
                e.erase(e.begin() + pick(rng, 0, static_cast<int>(e.size()) - 1));
                g = make_graph(g.order(), e);
            }
        }
        IntPolynomial want = char_poly(g);
        for (Vertex v = 0; v < g.order(); ++v)
            if (schwenk_delete(g, v) != want) {
                fail(o, g, "v=" + std::to_string(v));
                break;
            }
    }
    return o;
}

Outcome gallai(int instances, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    Outcome o;
    for (; o.instances < instances; ++o.instances) {
        Graph g = o.instances % 2 ? sample(rng, 2, 10) : oracle::random_dense(pick(rng, 2, 10), 0.3, rng);
        InvariantSummary s = summarize(g);
        bool ok = s.alpha + s.beta == s.n && s.alpha_prime + s.beta_prime == s.n;
        ok = ok && s.alpha == oracle::mis_size(g) && s.beta == oracle::vertex_cover_size(g);
        if (g.size() <= 16)
            ok = ok && s.alpha_prime == oracle::matching_size(g) && s.beta_prime == oracle::edge_cover_size(g);
        if (!ok)
            fail(o, g, "gallai");
    }
    return o;
}

Outcome koenig(int instances, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    Outcome o;
    while (o.instances < instances) {
        // random bipartite graph: tree (bipartite) plus cross edges
        int n = pick(rng, 2, 12);
        Graph t = oracle::random_tree(n, rng);
        std::vector<int> side(n, -1);
        side[0] = 0;
        std::vector<Vertex> queue{0};
        for (std::size_t i = 0; i < queue.size(); ++i)
            for (Vertex w : to_vector(t.neighbours(queue[i])))
                if (side[w] < 0) {
                    side[w] = 1 - side[queue[i]];
                    queue.push_back(w);
                }
        auto edges = t.edges();
        std::bernoulli_distribution coin(0.25);
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                if (side[a] != side[b] && !t.adjacent(a, b) && coin(rng))
                    edges.emplace_back(a, b);
        Graph g = make_graph(n, edges);
        ++o.instances;
        bool ok = is_bipartite(g) && is_koenig_consistent(g);
        if (g.size() <= 18)
            ok = ok && oracle::mis_size(g) == oracle::edge_cover_size(g);
        if (!ok)
            fail(o, g, "koenig");
    }
    return o;
}

Outcome sqrt_delta_enumerated(int max_n)
{
    Outcome o;
    for (int n = 4; n <= max_n; ++n) {
        EnumerationConfig cfg;
        cfg.n = n;
        enumerate_bicyclic(cfg, [&](const Graph & g) {
            ++o.instances;
            if (!sqrt_delta_bound_check(g))
                fail(o, g, "rho < sqrt(Delta)");
        });
    }
    return o;
}

}  // namespace suites
