#pragma once

#include "bicyclic/families.hpp"
#include "bicyclic/graph.hpp"

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

namespace bicyclic {

class EnumerationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class EnumerationMode { Structured, Bruteforce };

inline constexpr int kMaxStructuredOrder = 16;
inline constexpr int kMaxBruteforceOrder = 10;

struct EnumerationConfig {
    int n = 0;
    EnumerationMode mode = EnumerationMode::Structured;
    std::optional<int> alpha;          // keep only graphs with this independence number
    std::ostream * progress = nullptr; // one line every 10^4 emitted graphs
};

using GraphSink = std::function<void(const Graph &)>;

/// Streams one canonically labelled representative per isomorphism class of
/// connected bicyclic graphs on cfg.n vertices. Returns the number emitted.
///
/// Structured mode walks the bases (every B(p,l,q) and P(l,p,q) that fits),
/// hangs rooted trees on the base vertices, and keeps one decoration per
/// orbit of the base's automorphism group. Order: B before P, then base
/// parameters, then canonical label.
std::size_t enumerate_bicyclic(const EnumerationConfig & cfg, const GraphSink & sink);

std::vector<Graph> enumerate_all(const EnumerationConfig & cfg);

/// Bases with at most n vertices in stream order.
std::vector<BaseKind> bicyclic_bases(int n);
Graph base_graph(const BaseKind & kind);

/// The graphs of one base, sorted by canonical label. The unit of parallel work.
std::vector<Graph> decorated_base(const BaseKind & kind, int n);

/// Independent oracle: every free tree on n vertices plus every pair of
/// extra edges, deduplicated by canonical form. 4 <= n <= 10.
std::vector<Graph> enumerate_bruteforce(int n);

/// Literal oracle: every (n+1)-subset of vertex pairs, connected ones kept,
/// deduplicated. Only practical for n <= 8.
std::vector<Graph> enumerate_labeled(int n);

/// Non-isomorphic trees on n vertices (leaf extension plus dedupe).
std::vector<Graph> free_trees(int n);

/// Number of non-isomorphic rooted trees with `size` vertices.
std::size_t rooted_tree_count(int size);

GraphSink restrict_alpha(int alpha, GraphSink next);

}  // namespace bicyclic
