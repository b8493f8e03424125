#include "bicyclic/graph.hpp"

#include <algorithm>
#include <string>

namespace bicyclic {

namespace {

void check_vertex(const Graph & g, Vertex v)
{
    if (v < 0 || v >= g.order())
        throw GraphError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(g.order()) + ")");
}

// Vertices reachable from `start` inside `allowed`.
VertexSet component_of(const Graph & g, Vertex start, VertexSet allowed)
{
    VertexSet seen = 1u << start;
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet f = frontier; f; f &= f - 1)
            next |= g.row(first_vertex(f));
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

}  // namespace

int Graph::size() const noexcept
{
    int twice = 0;
    for (int v = 0; v < n_; ++v)
        twice += std::popcount(rows_[v]);
    return twice / 2;
}

VertexSet Graph::neighbours(Vertex v) const
{
    check_vertex(*this, v);
    return rows_[v];
}

int Graph::degree(Vertex v) const
{
    check_vertex(*this, v);
    return std::popcount(rows_[v]);
}

int Graph::max_degree() const noexcept
{
    int best = 0;
    for (int v = 0; v < n_; ++v)
        best = std::max(best, std::popcount(rows_[v]));
    return best;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    for (int u = 0; u < n_; ++u)
        for (VertexSet r = rows_[u] >> (u + 1) << (u + 1); r; r &= r - 1)
            out.emplace_back(u, first_vertex(r));
    return out;
}

Graph Graph::induced(VertexSet keep) const
{
    keep &= all();
    std::vector<Vertex> index(n_, -1);
    int k = 0;
    for (VertexSet s = keep; s; s &= s - 1)
        index[first_vertex(s)] = k++;
    Graph h;
    h.n_ = k;
    for (VertexSet s = keep; s; s &= s - 1) {
        Vertex v = first_vertex(s);
        for (VertexSet r = rows_[v] & keep; r; r &= r - 1)
            h.rows_[index[v]] |= 1u << index[first_vertex(r)];
    }
    return h;
}

Graph Graph::relabelled(const std::vector<Vertex> & perm) const
{
    if (static_cast<int>(perm.size()) != n_)
        throw GraphError("permutation length does not match vertex count");
    Graph h;
    h.n_ = n_;
    for (int u = 0; u < n_; ++u)
        for (VertexSet r = rows_[u]; r; r &= r - 1)
            h.rows_[perm[u]] |= 1u << perm[first_vertex(r)];
    return h;
}

Graph make_graph(int n, const std::vector<std::pair<Vertex, Vertex>> & edges)
{
    if (n < 0 || n > kMaxVertices)
        throw GraphError("vertex count " + std::to_string(n) + " outside [0,32]");
    Graph g;
    g.n_ = n;
    for (auto [u, v] : edges) {
        check_vertex(g, u);
        check_vertex(g, v);
        if (u == v)
            throw GraphError("self-loop at vertex " + std::to_string(u));
        g.rows_[u] |= 1u << v;
        g.rows_[v] |= 1u << u;
    }
    return g;
}

GraphBuilder::GraphBuilder(const Graph & start) : g_(start) {}

Vertex GraphBuilder::add_vertex()
{
    if (g_.n_ == kMaxVertices)
        throw GraphError("graph would exceed 32 vertices");
    return g_.n_++;
}

void GraphBuilder::add_edge(Vertex u, Vertex v)
{
    check_vertex(g_, u);
    check_vertex(g_, v);
    if (u == v)
        throw GraphError("self-loop at vertex " + std::to_string(u));
    g_.rows_[u] |= 1u << v;
    g_.rows_[v] |= 1u << u;
}

void GraphBuilder::remove_edge(Vertex u, Vertex v)
{
    check_vertex(g_, u);
    check_vertex(g_, v);
    g_.rows_[u] &= ~(1u << v);
    g_.rows_[v] &= ~(1u << u);
}

Vertex GraphBuilder::add_path(Vertex at, int length)
{
    Vertex prev = at;
    for (int i = 0; i < length; ++i) {
        Vertex next = add_vertex();
        add_edge(prev, next);
        prev = next;
    }
    return prev;
}

bool is_connected(const Graph & g)
{
    if (g.order() == 0)
        return true;
    return component_of(g, 0, g.all()) == g.all();
}

bool is_bicyclic(const Graph & g)
{
    return g.size() == g.order() + 1 && is_connected(g);
}

bool is_bipartite(const Graph & g)
{
    std::vector<int> side(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (side[s] >= 0)
            continue;
        side[s] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (VertexSet r = g.row(v); r; r &= r - 1) {
                Vertex u = first_vertex(r);
                if (side[u] < 0) {
                    side[u] = 1 - side[v];
                    stack.push_back(u);
                }
                else if (side[u] == side[v])
                    return false;
            }
        }
    }
    return true;
}

bool has_isolated_vertex(const Graph & g)
{
    for (int v = 0; v < g.order(); ++v)
        if (g.row(v) == 0)
            return true;
    return false;
}

VertexSet cycle_vertices(const Graph & g)
{
    if (!is_connected(g))
        throw GraphError("cycle_vertices requires a connected graph");

    // Strip pendant vertices down to the 2-core.
    VertexSet core = g.all();
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexSet s = core; s; s &= s - 1) {
            Vertex v = first_vertex(s);
            if (std::popcount(g.row(v) & core) <= 1) {
                core &= ~(1u << v);
                changed = true;
            }
        }
    }

    // A core vertex lies on a cycle unless every edge at it is a bridge of the
    // core. Edge uv lies on a cycle iff u still reaches v once uv is removed.
    VertexSet on_cycle = 0;
    Graph h = g;
    for (VertexSet s = core; s; s &= s - 1) {
        Vertex u = first_vertex(s);
        for (VertexSet r = g.row(u) & core; r; r &= r - 1) {
            Vertex v = first_vertex(r);
            if (v < u)
                continue;
            GraphBuilder b(h);
            b.remove_edge(u, v);
            if (component_of(b.build(), u, core) & (1u << v))
                on_cycle |= (1u << u) | (1u << v);
        }
    }
    return on_cycle;
}

std::vector<Vertex> to_vector(VertexSet s)
{
    std::vector<Vertex> out;
    for (; s; s &= s - 1)
        out.push_back(first_vertex(s));
    return out;
}

Graph path_graph(int n)
{
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return make_graph(n, e);
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw GraphError("cycle needs at least 3 vertices");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < n; ++i)
        e.emplace_back(i, (i + 1) % n);
    return make_graph(n, e);
}

Graph complete_graph(int n)
{
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return make_graph(n, e);
}

Graph star_graph(int leaves)
{
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int i = 1; i <= leaves; ++i)
        e.emplace_back(0, i);
    return make_graph(leaves + 1, e);
}

}  // namespace bicyclic
