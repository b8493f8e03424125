#pragma once

#include "bicyclic/graph.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bicyclic {

class FamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class FamilyKind {
    Infinity,  // B(p, l, q)
    Theta,     // P(l, p, q)
    F,
    Fprime,
    M,
    M1,
    M1prime,
    M2,
    M3,
    M3prime,
    M4,
    M5,
    M6,
    Bsharp,
};

/// A named parametric family member. Construction checks feasibility and
/// throws FamilyError naming the violated constraint.
///
/// Vertex roles in the built graphs:
///   bowtie B(3,1,3): 0 centre, {1,2} and {3,4} the two triangles
///   B(3,2,3):        0 and 3 the degree-3 vertices, {1,2} with 0, {4,5} with 3
///   K4-e:            0 and 1 the shared edge, 2 and 3 the degree-2 vertices
/// Hub attachments follow the base vertices, pendants first, then 2-paths.
class FamilySpec {
public:
    static FamilySpec infinity(int p, int l, int q);
    static FamilySpec theta(int l, int p, int q);
    static FamilySpec F(int n);
    static FamilySpec Fprime(int n);
    static FamilySpec M(int n, int alpha);
    static FamilySpec M1(int n, int alpha);
    static FamilySpec M1prime(int n, int alpha);
    static FamilySpec M2(int n, int alpha);
    static FamilySpec M3(int n, int alpha);
    static FamilySpec M3prime(int n, int alpha);
    static FamilySpec M4(int n, int alpha);
    static FamilySpec M5(int n, int alpha);
    static FamilySpec M6(int n, int alpha);
    static FamilySpec Bsharp(int n, int k);

    /// (kind, n, alpha) for the n/alpha-parametrised kinds; F/Fprime ignore alpha.
    static FamilySpec make(FamilyKind kind, int n, int alpha);
    /// Violated constraint for (kind, n, alpha), or nullopt when feasible.
    static std::optional<std::string> infeasibility(FamilyKind kind, int n, int alpha);

    FamilyKind kind() const noexcept { return kind_; }
    int order() const noexcept;
    int alpha() const noexcept { return params_[1]; }   // meaningful for M-type kinds
    const std::array<int, 3> & params() const noexcept { return params_; }
    std::string name() const;

    friend bool operator==(const FamilySpec &, const FamilySpec &) = default;

private:
    FamilySpec(FamilyKind kind, std::array<int, 3> params) : kind_(kind), params_(params) {}

    FamilyKind kind_;
    std::array<int, 3> params_;
};

std::string kind_name(FamilyKind kind);
FamilyKind parse_kind(const std::string & name);
/// The n/alpha families in display order.
const std::vector<FamilyKind> & alpha_families();

Graph infinity_graph(int p, int l, int q);
Graph theta_graph(int l, int p, int q);
Graph build_family(const FamilySpec & spec);

enum class BaseTag { B1, B2 };

struct BaseKind {
    BaseTag tag;
    /// B1: (p, l, q) with p <= q. B2: (l, p, q) with l <= p <= q.
    std::array<int, 3> params;

    friend bool operator==(const BaseKind &, const BaseKind &) = default;
    std::string name() const;
};

struct BaseResult {
    Graph base;
    BaseKind kind;
    VertexSet vertices;   // base vertices inside the original graph
};

/// Strip pendant vertices until the minimum degree is 2 and read off the
/// infinity/theta parameters. Throws if g is not bicyclic.
BaseResult base(const Graph & g);
BaseTag classify(const Graph & g);

}  // namespace bicyclic
