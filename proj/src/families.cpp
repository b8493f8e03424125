#include "bicyclic/families.hpp"

#include <algorithm>
#include <map>

namespace bicyclic {

namespace {

void require(bool ok, const std::string & what)
{
    if (!ok)
        throw FamilyError("infeasible parameters: " + what);
}

struct HubCounts {
    const char * pendant_rule;
    int pendant_offset;   // pendants = 2*alpha - n + offset
    const char * path_rule;
    int path_offset;      // 2-paths = n - alpha - offset
};

std::optional<HubCounts> hub_counts(FamilyKind kind)
{
    switch (kind) {
    case FamilyKind::M: return HubCounts{"2*alpha-n+1 >= 0", 1, "n-alpha-3 >= 0", 3};
    case FamilyKind::M1: return HubCounts{"2*alpha-n+1 >= 0", 1, "n-alpha-4 >= 0", 4};
    case FamilyKind::M1prime: return HubCounts{"2*alpha-n+1 >= 0", 1, "n-alpha-5 >= 0", 5};
    case FamilyKind::M2: return HubCounts{"2*alpha-n+1 >= 0", 1, "n-alpha-4 >= 0", 4};
    case FamilyKind::M3: return HubCounts{"2*alpha-n+1 >= 0", 1, "n-alpha-3 >= 0", 3};
    case FamilyKind::M3prime: return HubCounts{"2*alpha-n+1 >= 0", 1, "n-alpha-3 >= 0", 3};
    case FamilyKind::M4: return HubCounts{"2*alpha-n+2 >= 0", 2, "n-alpha-4 >= 0", 4};
    case FamilyKind::M5: return HubCounts{"2*alpha-n+2 >= 0", 2, "n-alpha-5 >= 0", 5};
    case FamilyKind::M6: return HubCounts{"2*alpha-n+2 >= 0", 2, "n-alpha-3 >= 0", 3};
    default: return std::nullopt;
    }
}

const std::map<std::string, FamilyKind> & kind_table()
{
    static const std::map<std::string, FamilyKind> table{
        {"B", FamilyKind::Infinity}, {"P", FamilyKind::Theta},   {"F", FamilyKind::F},
        {"Fprime", FamilyKind::Fprime}, {"M", FamilyKind::M},    {"M1", FamilyKind::M1},
        {"M1prime", FamilyKind::M1prime}, {"M2", FamilyKind::M2}, {"M3", FamilyKind::M3},
        {"M3prime", FamilyKind::M3prime}, {"M4", FamilyKind::M4}, {"M5", FamilyKind::M5},
        {"M6", FamilyKind::M6}, {"Bsharp", FamilyKind::Bsharp},
    };
    return table;
}

void bowtie_with(GraphBuilder & b)
{
    for (int i = 0; i < 5; ++i)
        b.add_vertex();
    b.add_edge(0, 1), b.add_edge(0, 2), b.add_edge(1, 2);
    b.add_edge(0, 3), b.add_edge(0, 4), b.add_edge(3, 4);
}

void two_triangles_joined(GraphBuilder & b)
{
    for (int i = 0; i < 6; ++i)
        b.add_vertex();
    b.add_edge(0, 1), b.add_edge(0, 2), b.add_edge(1, 2);
    b.add_edge(3, 4), b.add_edge(3, 5), b.add_edge(4, 5);
    b.add_edge(0, 3);
}

void k4_minus_edge(GraphBuilder & b)
{
    for (int i = 0; i < 4; ++i)
        b.add_vertex();
    b.add_edge(0, 1), b.add_edge(0, 2), b.add_edge(0, 3), b.add_edge(1, 2), b.add_edge(1, 3);
}

void decorate(GraphBuilder & b, Vertex hub, int pendants, int two_paths)
{
    for (int i = 0; i < pendants; ++i)
        b.add_path(hub, 1);
    for (int i = 0; i < two_paths; ++i)
        b.add_path(hub, 2);
}

}  // namespace

std::string kind_name(FamilyKind kind)
{
    for (const auto & [name, k] : kind_table())
        if (k == kind)
            return name;
    return "?";
}

FamilyKind parse_kind(const std::string & name)
{
    auto it = kind_table().find(name);
    if (it == kind_table().end())
        throw FamilyError("unknown family '" + name + "'");
    return it->second;
}

const std::vector<FamilyKind> & alpha_families()
{
    static const std::vector<FamilyKind> kinds{
        FamilyKind::M,  FamilyKind::M1, FamilyKind::M1prime, FamilyKind::M2, FamilyKind::M3,
        FamilyKind::M3prime, FamilyKind::M4, FamilyKind::M5, FamilyKind::M6,
    };
    return kinds;
}

FamilySpec FamilySpec::infinity(int p, int l, int q)
{
    require(p >= 3 && q >= 3, "B(p,l,q) needs p,q >= 3");
    require(l >= 1, "B(p,l,q) needs l >= 1");
    require(p + q + l - 2 <= kMaxVertices, "B(p,l,q) exceeds 32 vertices");
    return {FamilyKind::Infinity, {p, l, q}};
}

FamilySpec FamilySpec::theta(int l, int p, int q)
{
    require(0 <= l && l <= p && p <= q, "P(l,p,q) needs 0 <= l <= p <= q");
    require(p >= 1, "P(l,p,q) allows at most one zero path");
    require(l + p + q + 2 <= kMaxVertices, "P(l,p,q) exceeds 32 vertices");
    return {FamilyKind::Theta, {l, p, q}};
}

FamilySpec FamilySpec::F(int n)
{
    require(n % 2 == 0, "F(n) needs n even");
    require(n >= 8 && n <= kMaxVertices, "F(n) needs 8 <= n <= 32");
    return {FamilyKind::F, {n, (n - 2) / 2, 0}};
}

FamilySpec FamilySpec::Fprime(int n)
{
    require(n % 2 == 0, "Fprime(n) needs n even");
    require(n >= 8 && n <= kMaxVertices, "Fprime(n) needs 8 <= n <= 32");
    return {FamilyKind::Fprime, {n, (n - 2) / 2, 0}};
}

std::optional<std::string> FamilySpec::infeasibility(FamilyKind kind, int n, int alpha)
{
    if (n > kMaxVertices)
        return "n <= 32";
    auto counts = hub_counts(kind);
    if (!counts)
        return "kind is not parametrised by (n, alpha)";
    if (2 * alpha - n + counts->pendant_offset < 0)
        return counts->pendant_rule;
    if (n - alpha - counts->path_offset < 0)
        return counts->path_rule;
    return std::nullopt;
}

FamilySpec FamilySpec::make(FamilyKind kind, int n, int alpha)
{
    switch (kind) {
    case FamilyKind::F: return F(n);
    case FamilyKind::Fprime: return Fprime(n);
    case FamilyKind::Bsharp: return Bsharp(n, alpha);
    case FamilyKind::Infinity:
    case FamilyKind::Theta: throw FamilyError("B/P families take three shape parameters");
    default: break;
    }
    if (auto why = infeasibility(kind, n, alpha))
        throw FamilyError("infeasible parameters for " + kind_name(kind) + "(" + std::to_string(n) + "," +
                          std::to_string(alpha) + "): " + *why);
    return FamilySpec(kind, {n, alpha, 0});
}

FamilySpec FamilySpec::M(int n, int alpha) { return make(FamilyKind::M, n, alpha); }
FamilySpec FamilySpec::M1(int n, int alpha) { return make(FamilyKind::M1, n, alpha); }
FamilySpec FamilySpec::M1prime(int n, int alpha) { return make(FamilyKind::M1prime, n, alpha); }
FamilySpec FamilySpec::M2(int n, int alpha) { return make(FamilyKind::M2, n, alpha); }
FamilySpec FamilySpec::M3(int n, int alpha) { return make(FamilyKind::M3, n, alpha); }
FamilySpec FamilySpec::M3prime(int n, int alpha) { return make(FamilyKind::M3prime, n, alpha); }
FamilySpec FamilySpec::M4(int n, int alpha) { return make(FamilyKind::M4, n, alpha); }
FamilySpec FamilySpec::M5(int n, int alpha) { return make(FamilyKind::M5, n, alpha); }
FamilySpec FamilySpec::M6(int n, int alpha) { return make(FamilyKind::M6, n, alpha); }

FamilySpec FamilySpec::Bsharp(int n, int k)
{
    require(n <= kMaxVertices, "Bsharp(n,k) needs n <= 32");
    require(1 <= k && k <= n - 5, "Bsharp(n,k) needs 1 <= k <= n-5");
    return {FamilyKind::Bsharp, {n, k, 0}};
}

int FamilySpec::order() const noexcept
{
    switch (kind_) {
    case FamilyKind::Infinity: return params_[0] + params_[1] + params_[2] - 2;
    case FamilyKind::Theta: return params_[0] + params_[1] + params_[2] + 2;
    default: return params_[0];
    }
}

std::string FamilySpec::name() const
{
    auto p = [&](int i) { return std::to_string(params_[i]); };
    switch (kind_) {
    case FamilyKind::Infinity:
    case FamilyKind::Theta: return kind_name(kind_) + "(" + p(0) + "," + p(1) + "," + p(2) + ")";
    case FamilyKind::F:
    case FamilyKind::Fprime: return kind_name(kind_) + "(" + p(0) + ")";
    default: return kind_name(kind_) + "(" + p(0) + "," + p(1) + ")";
    }
}

Graph infinity_graph(int p, int l, int q)
{
    FamilySpec::infinity(p, l, q);
    GraphBuilder b;
    // First cycle through vertex 0, then the joining path 0 .. end, then the
    // second cycle through `end`.
    Vertex start = b.add_vertex();
    Vertex last = b.add_path(start, p - 1);
    b.add_edge(last, start);
    Vertex end = b.add_path(start, l - 1);
    Vertex close = b.add_path(end, q - 1);
    b.add_edge(close, end);
    return b.build();
}

Graph theta_graph(int l, int p, int q)
{
    FamilySpec::theta(l, p, q);
    GraphBuilder b;
    Vertex u = b.add_vertex();
    Vertex v = b.add_vertex();
    for (int len : {l, p, q}) {
        if (len == 0) {
            b.add_edge(u, v);
            continue;
        }
        Vertex tail = b.add_path(u, len);
        b.add_edge(tail, v);
    }
    return b.build();
}

Graph build_family(const FamilySpec & spec)
{
    const auto & pr = spec.params();
    const int n = spec.order();
    const int alpha = pr[1];
    GraphBuilder b;
    switch (spec.kind()) {
    case FamilyKind::Infinity: return infinity_graph(pr[0], pr[1], pr[2]);
    case FamilyKind::Theta: return theta_graph(pr[0], pr[1], pr[2]);
    case FamilyKind::F:
        two_triangles_joined(b);
        decorate(b, 0, 0, (n - 6) / 2);
        break;
    case FamilyKind::Fprime: {
        // B(3,3,3): triangles {0,1,2} and {4,5,6}, middle path vertex 3.
        for (int i = 0; i < 7; ++i)
            b.add_vertex();
        b.add_edge(0, 1), b.add_edge(0, 2), b.add_edge(1, 2);
        b.add_edge(4, 5), b.add_edge(4, 6), b.add_edge(5, 6);
        b.add_edge(0, 3), b.add_edge(3, 4);
        decorate(b, 3, 1, (n - 8) / 2);
        break;
    }
    case FamilyKind::M:
        bowtie_with(b);
        decorate(b, 0, 2 * alpha - n + 1, n - alpha - 3);
        break;
    case FamilyKind::M1:
        k4_minus_edge(b);
        decorate(b, 0, 2 * alpha - n + 1, n - alpha - 4);
        for (Vertex v : {1, 2, 3})
            b.add_path(v, 1);
        break;
    case FamilyKind::M1prime:
        bowtie_with(b);
        decorate(b, 0, 2 * alpha - n + 1, n - alpha - 5);
        for (Vertex v : {1, 2, 3, 4})
            b.add_path(v, 1);
        break;
    case FamilyKind::M2:
        bowtie_with(b);
        decorate(b, 0, 2 * alpha - n + 1, n - alpha - 4);
        b.add_path(3, 1);
        b.add_path(4, 1);
        break;
    case FamilyKind::M3:
        k4_minus_edge(b);
        decorate(b, 0, 2 * alpha - n + 1, n - alpha - 3);
        b.add_path(2, 1);
        break;
    case FamilyKind::M3prime:
        // hub is the degree-2 vertex 2; the shared-edge endpoint 0 takes one pendant
        k4_minus_edge(b);
        decorate(b, 2, 2 * alpha - n + 1, n - alpha - 3);
        b.add_path(0, 1);
        break;
    case FamilyKind::M4:
        bowtie_with(b);
        decorate(b, 1, 2 * alpha - n + 2, n - alpha - 4);
        b.add_path(2, 1);
        break;
    case FamilyKind::M5:
        two_triangles_joined(b);
        decorate(b, 0, 2 * alpha - n + 2, n - alpha - 5);
        b.add_path(1, 1);
        b.add_path(2, 1);
        break;
    case FamilyKind::M6:
        k4_minus_edge(b);
        decorate(b, 2, 2 * alpha - n + 2, n - alpha - 3);
        break;
    case FamilyKind::Bsharp: {
        const int k = pr[1];
        const int rest = n - 5;
        bowtie_with(b);
        // longer paths first
        for (int i = 0; i < k; ++i)
            b.add_path(0, rest / k + (i < rest % k ? 1 : 0));
        break;
    }
    }
    return b.build();
}

std::string BaseKind::name() const
{
    const char * prefix = tag == BaseTag::B1 ? "B(" : "P(";
    return prefix + std::to_string(params[0]) + "," + std::to_string(params[1]) + "," +
           std::to_string(params[2]) + ")";
}

namespace {

struct Branch {
    Vertex end;
    int internal;
};

// Follow the core from `from` through `first` along degree-2 vertices until a
// vertex of core degree >= 3 is reached.
Branch walk(const Graph & core, Vertex from, Vertex first)
{
    Vertex prev = from, cur = first;
    int internal = 0;
    while (core.degree(cur) == 2) {
        ++internal;
        VertexSet nb = core.row(cur) & ~(1u << prev);
        prev = cur;
        cur = first_vertex(nb);
    }
    return {cur, internal};
}

std::vector<Branch> branches(const Graph & core, Vertex v)
{
    std::vector<Branch> out;
    for (VertexSet r = core.row(v); r; r &= r - 1)
        out.push_back(walk(core, v, first_vertex(r)));
    return out;
}

}  // namespace

BaseResult base(const Graph & g)
{
    if (!is_bicyclic(g))
        throw GraphError("base requires a bicyclic graph");

    VertexSet keep = g.all();
    for (bool changed = true; changed;) {
        changed = false;
        for (VertexSet s = keep; s; s &= s - 1) {
            Vertex v = first_vertex(s);
            if (popcount(g.row(v) & keep) <= 1) {
                keep &= ~(1u << v);
                changed = true;
            }
        }
    }
    Graph core = g.induced(keep);

    std::vector<Vertex> branch_vertices;
    for (int v = 0; v < core.order(); ++v)
        if (core.degree(v) >= 3)
            branch_vertices.push_back(v);

    BaseResult out{core, {BaseTag::B1, {0, 0, 0}}, keep};
    if (branch_vertices.size() == 1) {
        // B(p,1,q): four branches, each cycle seen from both ends
        auto br = branches(core, branch_vertices[0]);
        std::vector<int> len;
        for (auto b : br)
            len.push_back(b.internal + 1);
        std::sort(len.begin(), len.end());
        out.kind = {BaseTag::B1, {len[0], 1, len[2]}};
        return out;
    }
    if (branch_vertices.size() != 2)
        throw GraphError("unexpected bicyclic core");

    Vertex u = branch_vertices[0], v = branch_vertices[1];
    auto bu = branches(core, u);
    int to_v = static_cast<int>(std::count_if(bu.begin(), bu.end(), [&](Branch b) { return b.end == v; }));
    if (to_v == 3) {
        std::array<int, 3> len{bu[0].internal, bu[1].internal, bu[2].internal};
        std::sort(len.begin(), len.end());
        out.kind = {BaseTag::B2, len};
        return out;
    }
    auto cycle_len = [&](const std::vector<Branch> & bs, Vertex self) {
        for (auto b : bs)
            if (b.end == self)
                return b.internal + 1;
        throw GraphError("unexpected bicyclic core");
    };
    int joining = 0;
    for (auto b : bu)
        if (b.end == v)
            joining = b.internal;
    int p = cycle_len(bu, u);
    int q = cycle_len(branches(core, v), v);
    out.kind = {BaseTag::B1, {std::min(p, q), joining + 2, std::max(p, q)}};
    return out;
}

BaseTag classify(const Graph & g)
{
    return base(g).kind.tag;
}

}  // namespace bicyclic
