#pragma once

#include "bicyclic/graph.hpp"

#include <utility>
#include <vector>

namespace bicyclic {

struct IndependentSet {
    int size = 0;
    VertexSet witness = 0;
};

struct Matching {
    int size = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
};

struct InvariantSummary {
    int n = 0;
    int m = 0;
    int alpha = 0;        // independence number
    int alpha_prime = 0;  // matching number
    int beta = 0;         // vertex cover number
    int beta_prime = -1;  // edge cover number, -1 when an isolated vertex exists
    int pendants = 0;
    int v_prime = 0;
};

/// Exact maximum independent set. Branches on a maximum-degree vertex
/// (exclude, then include) and bounds with a greedy clique cover.
IndependentSet independence_number(const Graph & g);

/// Maximum matching by Edmonds' blossom algorithm.
Matching maximum_matching(const Graph & g);
int matching_number(const Graph & g);

/// Minimum vertex cover by its own branch and bound, not via n - alpha.
int vertex_cover_number(const Graph & g);

/// Minimum edge cover: a maximum matching extended by one edge per unmatched
/// vertex. Throws if g has an isolated vertex.
std::vector<std::pair<Vertex, Vertex>> minimum_edge_cover(const Graph & g);
int edge_cover_number(const Graph & g);

/// alpha(g) == edge cover number; g must be bipartite without isolated vertices.
bool is_koenig_consistent(const Graph & g);

VertexSet pendant_vertices(const Graph & g);
bool has_perfect_matching(const Graph & g);

/// Vertices of degree >= 2 with no pendant neighbour.
VertexSet v_prime_set(const Graph & g);

/// Right-hand side of the alpha = (n-2)/2 characterisation: base is an
/// infinity graph B(p,l,q) with l >= 2 and p, q odd, and G - V_c(G) has a
/// perfect matching.
bool alpha_floor_characterization(const Graph & g);

InvariantSummary summarize(const Graph & g);

}  // namespace bicyclic
