#include "bicyclic/enumeration.hpp"

#include "bicyclic/canonical.hpp"
#include "bicyclic/invariants.hpp"

#include <algorithm>
#include <mutex>
#include <ostream>
#include <set>

namespace bicyclic {

namespace {

// Catalogue of non-isomorphic rooted trees, ids ordered by size. A tree is
// its multiset of child subtrees, stored as non-increasing child ids.
class RootedTrees {
public:
    static RootedTrees & instance()
    {
        static RootedTrees trees;
        return trees;
    }

    // Ensures every tree with up to `size` vertices is present.
    void grow(int size)
    {
        std::lock_guard lock(mutex_);
        while (built_ < size) {
            const int k = built_ + 1;
            const std::size_t start = sizes_.size();
            std::vector<int> children;
            extend(k - 1, static_cast<int>(start) - 1, children);
            first_.push_back(static_cast<int>(start));
            built_ = k;
        }
    }

    int size(int id) const { return sizes_[id]; }
    const std::vector<int> & children(int id) const { return children_[id]; }
    // ids of trees with exactly `size` vertices: [first(size), first(size+1))
    int first(int size) const { return first_[size - 1]; }
    int end(int size) const { return size < built_ ? first_[size] : static_cast<int>(sizes_.size()); }

private:
    RootedTrees() = default;

    void extend(int remaining, int max_id, std::vector<int> & children)
    {
        if (remaining == 0) {
            int total = 1;
            for (int c : children)
                total += sizes_[c];
            sizes_.push_back(total);
            children_.push_back(children);
            return;
        }
        for (int c = max_id; c >= 0; --c) {
            if (sizes_[c] > remaining)
                continue;
            children.push_back(c);
            extend(remaining - sizes_[c], c, children);
            children.pop_back();
        }
    }

    std::mutex mutex_;
    int built_ = 0;
    std::vector<int> sizes_;
    std::vector<std::vector<int>> children_;
    std::vector<int> first_;
};

void hang_tree(GraphBuilder & b, Vertex at, int id, const RootedTrees & trees)
{
    for (int c : trees.children(id)) {
        Vertex w = b.add_vertex();
        b.add_edge(at, w);
        hang_tree(b, w, c, trees);
    }
}

std::vector<std::vector<Vertex>> automorphisms(const Graph & g)
{
    const int n = g.order();
    std::vector<Vertex> order;
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (seen[s])
            continue;
        seen[s] = true;
        order.push_back(s);
        for (std::size_t i = order.size() - 1; i < order.size(); ++i)
            for (Vertex w : to_vector(g.row(order[i])))
                if (!seen[w]) {
                    seen[w] = true;
                    order.push_back(w);
                }
    }
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> image(n, -1);
    VertexSet used = 0;
    auto extend = [&](auto && self, int idx) -> void {
        if (idx == n) {
            out.push_back(image);
            return;
        }
        const Vertex v = order[idx];
        for (Vertex w = 0; w < n; ++w) {
            if ((used >> w) & 1u || g.degree(w) != g.degree(v))
                continue;
            bool ok = true;
            for (int j = 0; j < idx && ok; ++j)
                ok = g.adjacent(v, order[j]) == g.adjacent(w, image[order[j]]);
            if (!ok)
                continue;
            image[v] = w;
            used |= 1u << w;
            self(self, idx + 1);
            used &= ~(1u << w);
            image[v] = -1;
        }
    };
    extend(extend, 0);
    return out;
}

// Keeps d only if no automorphism maps it to a lexicographically smaller
// decoration, leaving one representative per orbit.
bool orbit_minimal(const std::vector<int> & d, const std::vector<std::vector<Vertex>> & auts)
{
    const std::size_t b = d.size();
    for (const auto & sigma : auts) {
        for (std::size_t i = 0; i < b; ++i) {
            int moved = d[sigma[i]];
            if (moved < d[i])
                return false;
            if (moved > d[i])
                break;
        }
    }
    return true;
}

void require_order(int n, int lo, int hi, const char * what)
{
    if (n < lo || n > hi)
        throw EnumerationError(std::string(what) + " needs " + std::to_string(lo) + " <= n <= " + std::to_string(hi)
                               + ", got " + std::to_string(n));
}

std::vector<Graph> graphs_of(const std::set<CanonicalLabel> & labels)
{
    std::vector<Graph> out;
    out.reserve(labels.size());
    for (const auto & l : labels)
        out.push_back(l.graph());
    return out;
}

}  // namespace

std::size_t rooted_tree_count(int size)
{
    if (size < 1)
        return 0;
    auto & trees = RootedTrees::instance();
    trees.grow(size);
    return static_cast<std::size_t>(trees.end(size) - trees.first(size));
}

std::vector<BaseKind> bicyclic_bases(int n)
{
    std::vector<BaseKind> out;
    for (int p = 3; p <= n; ++p)
        for (int l = 1; p + p + l - 2 <= n; ++l)
            for (int q = p; p + q + l - 2 <= n; ++q)
                out.push_back({BaseTag::B1, {p, l, q}});
    for (int l = 0; l <= n; ++l)
        for (int p = std::max(l, 1); l + p + p + 2 <= n; ++p)
            for (int q = p; l + p + q + 2 <= n; ++q)
                out.push_back({BaseTag::B2, {l, p, q}});
    return out;
}

Graph base_graph(const BaseKind & kind)
{
    auto [a, b, c] = kind.params;
    return kind.tag == BaseTag::B1 ? infinity_graph(a, b, c) : theta_graph(a, b, c);
}

std::vector<Graph> decorated_base(const BaseKind & kind, int n)
{
    const Graph core = base_graph(kind);
    const int b = core.order();
    if (b > n)
        return {};
    auto & trees = RootedTrees::instance();
    trees.grow(n - b + 1);
    const auto auts = automorphisms(core);

    std::vector<CanonicalLabel> labels;
    std::vector<int> d(b, 0);
    auto place = [&](auto && self, int i, int budget) -> void {
        if (i == b - 1) {
            for (int id = trees.first(budget + 1); id < trees.end(budget + 1); ++id) {
                d[i] = id;
                if (!orbit_minimal(d, auts))
                    continue;
                GraphBuilder gb(core);
                for (int v = 0; v < b; ++v)
                    hang_tree(gb, v, d[v], trees);
                labels.push_back(canonical_form(gb.build()));
            }
            return;
        }
        for (int s = 0; s <= budget; ++s)
            for (int id = trees.first(s + 1); id < trees.end(s + 1); ++id) {
                d[i] = id;
                self(self, i + 1, budget - s);
            }
    };
    place(place, 0, n - b);

    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    std::vector<Graph> out;
    out.reserve(labels.size());
    for (const auto & l : labels)
        out.push_back(l.graph());
    return out;
}

std::size_t enumerate_bicyclic(const EnumerationConfig & cfg, const GraphSink & sink)
{
    if (cfg.n < 4)
        throw EnumerationError("no bicyclic graph has fewer than 4 vertices");
    std::size_t emitted = 0;
    auto emit = [&](const Graph & g) {
        if (cfg.alpha && independence_number(g).size != *cfg.alpha)
            return;
        sink(g);
        ++emitted;
        if (cfg.progress && emitted % 10000 == 0)
            *cfg.progress << "enumerate n=" << cfg.n << ": " << emitted << " graphs" << std::endl;
    };
    if (cfg.mode == EnumerationMode::Bruteforce) {
        for (const Graph & g : enumerate_bruteforce(cfg.n))
            emit(g);
        return emitted;
    }
    require_order(cfg.n, 4, kMaxStructuredOrder, "structured enumeration");
    for (const BaseKind & kind : bicyclic_bases(cfg.n))
        for (const Graph & g : decorated_base(kind, cfg.n))
            emit(g);
    return emitted;
}

std::vector<Graph> enumerate_all(const EnumerationConfig & cfg)
{
    std::vector<Graph> out;
    enumerate_bicyclic(cfg, [&](const Graph & g) { out.push_back(g); });
    return out;
}

std::vector<Graph> free_trees(int n)
{
    require_order(n, 1, kMaxVertices, "free_trees");
    std::set<CanonicalLabel> level{canonical_form(make_graph(1, {}))};
    for (int k = 1; k < n; ++k) {
        std::set<CanonicalLabel> next;
        for (const auto & t : level) {
            const Graph g = t.graph();
            for (Vertex v = 0; v < k; ++v) {
                GraphBuilder b(g);
                b.add_edge(v, b.add_vertex());
                next.insert(canonical_form(b.build()));
            }
        }
        level = std::move(next);
    }
    return graphs_of(level);
}

std::vector<Graph> enumerate_bruteforce(int n)
{
    require_order(n, 4, kMaxBruteforceOrder, "brute-force enumeration");
    std::set<CanonicalLabel> seen;
    for (const Graph & tree : free_trees(n)) {
        std::vector<std::pair<Vertex, Vertex>> missing;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (!tree.adjacent(u, v))
                    missing.emplace_back(u, v);
        for (std::size_t i = 0; i < missing.size(); ++i)
            for (std::size_t j = i + 1; j < missing.size(); ++j) {
                GraphBuilder b(tree);
                b.add_edge(missing[i].first, missing[i].second);
                b.add_edge(missing[j].first, missing[j].second);
                seen.insert(canonical_form(b.build()));
            }
    }
    return graphs_of(seen);
}

std::vector<Graph> enumerate_labeled(int n)
{
    require_order(n, 4, 8, "labeled enumeration");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    const int total = static_cast<int>(pairs.size()), pick = n + 1;
    std::vector<int> idx(pick);
    for (int i = 0; i < pick; ++i)
        idx[i] = i;
    std::set<CanonicalLabel> seen;
    std::vector<std::pair<Vertex, Vertex>> edges(pick);
    while (true) {
        for (int i = 0; i < pick; ++i)
            edges[i] = pairs[idx[i]];
        Graph g = make_graph(n, edges);
        if (is_connected(g))
            seen.insert(canonical_form(g));
        int i = pick - 1;
        while (i >= 0 && idx[i] == total - pick + i)
            --i;
        if (i < 0)
            break;
        ++idx[i];
        for (int j = i + 1; j < pick; ++j)
            idx[j] = idx[j - 1] + 1;
    }
    return graphs_of(seen);
}

GraphSink restrict_alpha(int alpha, GraphSink next)
{
    return [alpha, next = std::move(next)](const Graph & g) {
        if (independence_number(g).size == alpha)
            next(g);
    };
}

}  // namespace bicyclic
