#pragma once

#include "bicyclic/graph.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace bicyclic {

/// Isomorphism-invariant key: the adjacency rows of the canonically
/// relabelled graph. Two graphs are isomorphic iff their labels are equal.
struct CanonicalLabel {
    int n = 0;
    std::array<std::uint32_t, kMaxVertices> rows{};

    auto operator<=>(const CanonicalLabel &) const = default;
    bool operator==(const CanonicalLabel &) const = default;

    Graph graph() const;
};

struct CanonicalLabelHash {
    std::size_t operator()(const CanonicalLabel & c) const noexcept;
};

struct CanonicalResult {
    CanonicalLabel label;
    std::vector<Vertex> labelling;                  // vertex v -> canonical index
    std::vector<std::vector<Vertex>> automorphisms; // generators found during search
};

inline constexpr int kDefaultCanonicalBound = 32;

/// Exact canonical labelling by colour refinement plus individualisation,
/// pruned with the automorphisms discovered along the way.
CanonicalResult canonical_labelling(const Graph & g, int max_order = kDefaultCanonicalBound);

CanonicalLabel canonical_form(const Graph & g, int max_order = kDefaultCanonicalBound);

/// Graph relabelled into canonical order.
Graph canonical_graph(const Graph & g);

bool isomorphic(const Graph & a, const Graph & b);

}  // namespace bicyclic
