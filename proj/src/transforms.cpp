#include "bicyclic/transforms.hpp"

#include "bicyclic/spectral.hpp"

namespace bicyclic {

namespace {

void check_vertex(const Graph & g, Vertex v)
{
    if (v < 0 || v >= g.order())
        throw TransformError("vertex " + std::to_string(v) + " out of range");
}

}  // namespace

Graph rotate_edges(const Graph & g, const RotationMove & mv)
{
    check_vertex(g, mv.u);
    check_vertex(g, mv.v);
    if (mv.u == mv.v)
        throw TransformError("rotation needs u != v");
    if (mv.s == 0)
        throw TransformError("rotation needs at least one moved neighbour");
    if ((mv.s & ~g.row(mv.v)) != 0)
        throw TransformError("moved vertices must be neighbours of v");
    if (mv.s & (g.row(mv.u) | (1u << mv.u)))
        throw TransformError("moved vertices must avoid u and its neighbours");
    GraphBuilder b(g);
    for (Vertex w : to_vector(mv.s)) {
        b.remove_edge(mv.v, w);
        b.add_edge(mv.u, w);
    }
    Graph out = b.build();
    if (!is_connected(out))
        throw TransformError("rotation disconnects the graph");
    return out;
}

bool is_rho_increasing(const Graph & g, const RotationMove & mv)
{
    rotate_edges(g, mv);
    auto x = perron_vector(g);
    return x[mv.u] >= x[mv.v] - kPerronTieTolerance;
}

std::pair<Graph, Graph> graft_pair(const Graph & g, Vertex v, int k, int m)
{
    check_vertex(g, v);
    if (!(k >= m && m >= 1))
        throw TransformError("graft_pair needs k >= m >= 1");
    if (g.order() < 2 || !is_connected(g))
        throw TransformError("graft_pair needs a nontrivial connected graph");
    if (g.order() + k + m > kMaxVertices)
        throw TransformError("grafted graph exceeds 32 vertices");
    auto hang = [&](int a, int b) {
        GraphBuilder gb(g);
        gb.add_path(v, a);
        gb.add_path(v, b);
        return gb.build();
    };
    return {hang(k, m), hang(k + 1, m - 1)};
}

}  // namespace bicyclic
