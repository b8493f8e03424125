#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bicyclic {

using Vertex = int;
using VertexSet = std::uint32_t;   // bit i set <=> vertex i in the set

inline constexpr int kMaxVertices = 32;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1 with at most 32 vertices.
/// Rows are bitsets; the object is an immutable value once built.
class Graph {
public:
    Graph() = default;

    int order() const noexcept { return n_; }
    int size() const noexcept;   // edge count

    bool adjacent(Vertex u, Vertex v) const noexcept { return (rows_[u] >> v) & 1u; }
    VertexSet neighbours(Vertex v) const;
    int degree(Vertex v) const;
    int max_degree() const noexcept;

    VertexSet all() const noexcept { return n_ == 32 ? ~0u : ((1u << n_) - 1u); }
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Induced subgraph on `keep`, relabelled in increasing vertex order.
    Graph induced(VertexSet keep) const;
    /// Graph with the vertices relabelled: vertex v becomes perm[v].
    Graph relabelled(const std::vector<Vertex> & perm) const;

    std::uint32_t row(Vertex v) const noexcept { return rows_[v]; }

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    friend Graph make_graph(int n, const std::vector<std::pair<Vertex, Vertex>> & edges);
    friend class GraphBuilder;

    int n_ = 0;
    std::array<std::uint32_t, kMaxVertices> rows_{};
};

/// Validates endpoints and loops; duplicate pairs collapse.
Graph make_graph(int n, const std::vector<std::pair<Vertex, Vertex>> & edges);

/// Incremental construction used by the family constructors.
class GraphBuilder {
public:
    GraphBuilder() = default;
    explicit GraphBuilder(const Graph & start);

    Vertex add_vertex();
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    /// Hangs a path of `length` new vertices from `at`; returns the far end.
    Vertex add_path(Vertex at, int length);

    int order() const noexcept { return g_.n_; }
    Graph build() const { return g_; }

private:
    Graph g_;
};

inline int popcount(VertexSet s) noexcept { return std::popcount(s); }
inline Vertex first_vertex(VertexSet s) noexcept { return std::countr_zero(s); }

bool is_connected(const Graph & g);
bool is_bicyclic(const Graph & g);
bool is_bipartite(const Graph & g);
bool has_isolated_vertex(const Graph & g);

/// Vertices lying on at least one cycle. Throws if g is disconnected.
VertexSet cycle_vertices(const Graph & g);

std::vector<Vertex> to_vector(VertexSet s);

// A few standard graphs used throughout tests and tools.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);

}  // namespace bicyclic
