#pragma once

#include "bicyclic/graph.hpp"

#include <utility>

namespace bicyclic {

class TransformError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Move the edges v-w (w in s) to u-w.
struct RotationMove {
    Vertex u = 0;
    Vertex v = 0;
    VertexSet s = 0;
};

/// Requires s nonempty, s inside N(v) and disjoint from N(u) + {u}, and the
/// result connected. Vertex and edge counts are preserved.
Graph rotate_edges(const Graph & g, const RotationMove & mv);

/// Perron entries within this distance count as equal.
inline constexpr double kPerronTieTolerance = 1e-12;

/// Whether the Perron hypothesis x_u >= x_v holds, i.e. the move is
/// guaranteed to raise the spectral radius.
bool is_rho_increasing(const Graph & g, const RotationMove & mv);

/// (G_{k,m}, G_{k+1,m-1}): g with two pendant paths of k and m new vertices
/// hung at v, then with lengths k+1 and m-1. Needs k >= m >= 1.
std::pair<Graph, Graph> graft_pair(const Graph & g, Vertex v, int k, int m);

}  // namespace bicyclic
