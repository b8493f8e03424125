#include "bicyclic/invariants.hpp"

#include "bicyclic/families.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace bicyclic {

namespace {

// Greedy clique cover of `cand`: each clique holds at most one vertex of any
// independent set, so the clique count bounds alpha(G[cand]).
int clique_cover_bound(const Graph & g, VertexSet cand)
{
    int cliques = 0;
    while (cand) {
        VertexSet clique = 0, open = cand;
        while (open) {
            Vertex v = first_vertex(open);
            clique |= 1u << v;
            open &= g.row(v);
        }
        cand &= ~clique;
        ++cliques;
    }
    return cliques;
}

class MisSolver {
public:
    explicit MisSolver(const Graph & g) : g_(g) {}

    IndependentSet solve()
    {
        expand(g_.all(), 0);
        return best_;
    }

private:
    void expand(VertexSet cand, VertexSet chosen)
    {
        // Vertices of degree <= 1 inside cand can always be taken.
        for (bool again = true; again;) {
            again = false;
            for (VertexSet s = cand; s; s &= s - 1) {
                Vertex v = first_vertex(s);
                if (popcount(g_.row(v) & cand) <= 1) {
                    chosen |= 1u << v;
                    cand &= ~((1u << v) | g_.row(v));
                    again = true;
                    break;
                }
            }
        }
        const int have = popcount(chosen);
        if (!cand) {
            if (have > best_.size)
                best_ = {have, chosen};
            return;
        }
        if (have + clique_cover_bound(g_, cand) <= best_.size)
            return;

        Vertex pivot = -1;
        int pivot_degree = -1;
        for (VertexSet s = cand; s; s &= s - 1) {
            Vertex v = first_vertex(s);
            int d = popcount(g_.row(v) & cand);
            if (d > pivot_degree)
                pivot = v, pivot_degree = d;
        }
        expand(cand & ~(1u << pivot), chosen);
        expand(cand & ~((1u << pivot) | g_.row(pivot)), chosen | (1u << pivot));
    }

    const Graph & g_;
    IndependentSet best_;
};

class VertexCoverSolver {
public:
    explicit VertexCoverSolver(const Graph & g) : g_(g), best_(g.order()) {}

    int solve()
    {
        search(g_.all(), 0);
        return best_;
    }

private:
    // Edges of G[alive] still need covering; `taken` vertices already in the cover.
    void search(VertexSet alive, int taken)
    {
        for (bool again = true; again;) {
            again = false;
            for (VertexSet s = alive; s; s &= s - 1) {
                Vertex v = first_vertex(s);
                VertexSet nb = g_.row(v) & alive;
                if (nb == 0) {
                    alive &= ~(1u << v);
                    again = true;
                    break;
                }
                if (popcount(nb) == 1) {
                    // a pendant edge is covered by its non-leaf end
                    alive &= ~((1u << v) | nb);
                    ++taken;
                    again = true;
                    break;
                }
            }
        }
        if (!alive) {
            best_ = std::min(best_, taken);
            return;
        }
        // Disjoint edges need distinct cover vertices.
        int lower = 0;
        for (VertexSet rest = alive; rest;) {
            Vertex v = first_vertex(rest);
            VertexSet nb = g_.row(v) & rest;
            rest &= ~(1u << v);
            if (nb) {
                rest &= ~(1u << first_vertex(nb));
                ++lower;
            }
        }
        if (taken + lower >= best_)
            return;

        Vertex pivot = -1;
        int pivot_degree = -1;
        for (VertexSet s = alive; s; s &= s - 1) {
            Vertex v = first_vertex(s);
            int d = popcount(g_.row(v) & alive);
            if (d > pivot_degree)
                pivot = v, pivot_degree = d;
        }
        search(alive & ~(1u << pivot), taken + 1);
        VertexSet nb = g_.row(pivot) & alive;
        search(alive & ~((1u << pivot) | nb), taken + popcount(nb));
    }

    const Graph & g_;
    int best_;
};

// Edmonds' blossom algorithm, O(n^3).
class Blossom {
public:
    explicit Blossom(const Graph & g)
        : g_(g), n_(g.order()), match_(n_, -1), parent_(n_), base_(n_), used_(n_), in_blossom_(n_)
    {
    }

    Matching solve()
    {
        for (int v = 0; v < n_; ++v)
            if (match_[v] < 0) {
                int end = find_path(v);
                while (end >= 0) {
                    int pv = parent_[end], ppv = match_[pv];
                    match_[end] = pv;
                    match_[pv] = end;
                    end = ppv;
                }
            }
        Matching m;
        for (int v = 0; v < n_; ++v)
            if (match_[v] > v)
                m.edges.emplace_back(v, match_[v]);
        m.size = static_cast<int>(m.edges.size());
        return m;
    }

private:
    int lca(int a, int b)
    {
        std::vector<bool> seen(n_, false);
        while (true) {
            a = base_[a];
            seen[a] = true;
            if (match_[a] < 0)
                break;
            a = parent_[match_[a]];
        }
        while (true) {
            b = base_[b];
            if (seen[b])
                return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child)
    {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root)
    {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        std::iota(base_.begin(), base_.end(), 0);
        used_[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (VertexSet r = g_.row(v); r; r &= r - 1) {
                int to = first_vertex(r);
                if (base_[v] == base_[to] || match_[v] == to)
                    continue;
                if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
                    int cur = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i)
                        if (in_blossom_[base_[i]]) {
                            base_[i] = cur;
                            if (!used_[i]) {
                                used_[i] = true;
                                q.push(i);
                            }
                        }
                }
                else if (parent_[to] < 0) {
                    parent_[to] = v;
                    if (match_[to] < 0)
                        return to;
                    used_[match_[to]] = true;
                    q.push(match_[to]);
                }
            }
        }
        return -1;
    }

    const Graph & g_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<bool> used_, in_blossom_;
};

}  // namespace

IndependentSet independence_number(const Graph & g)
{
    if (g.order() == 0)
        return {};
    return MisSolver(g).solve();
}

Matching maximum_matching(const Graph & g)
{
    return Blossom(g).solve();
}

int matching_number(const Graph & g)
{
    return maximum_matching(g).size;
}

int vertex_cover_number(const Graph & g)
{
    return VertexCoverSolver(g).solve();
}

std::vector<std::pair<Vertex, Vertex>> minimum_edge_cover(const Graph & g)
{
    if (has_isolated_vertex(g))
        throw GraphError("edge cover undefined: graph has an isolated vertex");
    Matching m = maximum_matching(g);
    VertexSet covered = 0;
    for (auto [u, v] : m.edges)
        covered |= (1u << u) | (1u << v);
    auto cover = m.edges;
    for (VertexSet s = g.all() & ~covered; s; s &= s - 1) {
        Vertex v = first_vertex(s);
        cover.emplace_back(v, first_vertex(g.row(v)));
    }
    return cover;
}

int edge_cover_number(const Graph & g)
{
    return static_cast<int>(minimum_edge_cover(g).size());
}

bool is_koenig_consistent(const Graph & g)
{
    if (!is_bipartite(g))
        throw GraphError("Koenig check requires a bipartite graph");
    return independence_number(g).size == edge_cover_number(g);
}

VertexSet pendant_vertices(const Graph & g)
{
    VertexSet out = 0;
    for (int v = 0; v < g.order(); ++v)
        if (popcount(g.row(v)) == 1)
            out |= 1u << v;
    return out;
}

bool has_perfect_matching(const Graph & g)
{
    return g.order() % 2 == 0 && 2 * matching_number(g) == g.order();
}

VertexSet v_prime_set(const Graph & g)
{
    VertexSet pendants = pendant_vertices(g);
    VertexSet out = 0;
    for (int v = 0; v < g.order(); ++v)
        if (popcount(g.row(v)) >= 2 && (g.row(v) & pendants) == 0)
            out |= 1u << v;
    return out;
}

bool alpha_floor_characterization(const Graph & g)
{
    BaseResult b = base(g);
    if (b.kind.tag != BaseTag::B1)
        return false;
    auto [p, l, q] = b.kind.params;
    if (l < 2 || p % 2 == 0 || q % 2 == 0)
        return false;
    return has_perfect_matching(g.induced(g.all() & ~cycle_vertices(g)));
}

InvariantSummary summarize(const Graph & g)
{
    InvariantSummary s;
    s.n = g.order();
    s.m = g.size();
    s.alpha = independence_number(g).size;
    s.alpha_prime = matching_number(g);
    s.beta = vertex_cover_number(g);
    s.beta_prime = has_isolated_vertex(g) ? -1 : edge_cover_number(g);
    s.pendants = popcount(pendant_vertices(g));
    s.v_prime = popcount(v_prime_set(g));
    return s;
}

}  // namespace bicyclic
