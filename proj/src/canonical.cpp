#include "bicyclic/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace bicyclic {

namespace {

using Colouring = std::vector<int>;

int colour_count(const Colouring & col)
{
    return col.empty() ? 0 : *std::max_element(col.begin(), col.end()) + 1;
}

// Refine to the coarsest equitable partition finer than `col`. New colours are
// ordered by (old colour, neighbour-colour counts), which keeps the result
// invariant under relabelling.
void refine(const Graph & g, Colouring & col)
{
    const int n = g.order();
    int k = colour_count(col);
    std::vector<int> sig(static_cast<std::size_t>(n) * (n + 1));
    std::vector<int> order(n);
    while (true) {
        const int width = k + 1;
        for (int v = 0; v < n; ++v) {
            int * s = &sig[static_cast<std::size_t>(v) * width];
            std::fill(s, s + width, 0);
            s[0] = col[v];
            for (VertexSet r = g.row(v); r; r &= r - 1)
                ++s[1 + col[first_vertex(r)]];
        }
        std::iota(order.begin(), order.end(), 0);
        auto less = [&](int a, int b) {
            const int * sa = &sig[static_cast<std::size_t>(a) * width];
            const int * sb = &sig[static_cast<std::size_t>(b) * width];
            return std::lexicographical_compare(sa, sa + width, sb, sb + width);
        };
        std::sort(order.begin(), order.end(), less);
        int next = 0;
        for (int i = 0; i < n; ++i) {
            if (i > 0 && less(order[i - 1], order[i]))
                ++next;
            col[order[i]] = next;
        }
        int nk = next + 1;
        if (nk == k)
            return;
        k = nk;
    }
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

class Search {
public:
    explicit Search(const Graph & g) : g_(g), n_(g.order()) {}

    CanonicalResult run()
    {
        Colouring col(n_, 0);
        std::vector<Vertex> path;
        descend(0, col, path);
        CanonicalResult out;
        out.label = best_key_;
        out.labelling = best_lab_;
        out.automorphisms = std::move(autos_);
        return out;
    }

private:
    // Returns the level to resume at after an automorphism was found, or -1.
    int descend(int level, Colouring col, std::vector<Vertex> & path)
    {
        refine(g_, col);
        int k = colour_count(col);
        if (k == n_)
            return leaf(col, path);

        std::vector<int> cell_size(k, 0);
        for (int c : col)
            ++cell_size[c];
        int target = -1;
        for (int c = 0; c < k; ++c)
            if (cell_size[c] > 1 && (target < 0 || cell_size[c] < cell_size[target]))
                target = c;

        std::vector<Vertex> explored;
        for (Vertex v = 0; v < n_; ++v) {
            if (col[v] != target)
                continue;
            if (!explored.empty() && pruned(v, explored, path))
                continue;
            explored.push_back(v);

            Colouring child = col;
            for (int & c : child)
                if (c > target)
                    ++c;
            for (Vertex u = 0; u < n_; ++u)
                if (col[u] == target && u != v)
                    child[u] = target + 1;

            path.push_back(v);
            int resume = descend(level + 1, std::move(child), path);
            path.pop_back();
            if (resume >= 0 && resume < level)
                return resume;
        }
        return -1;
    }

    // Is v in the orbit of an explored sibling under the automorphisms that
    // fix the current path pointwise?
    bool pruned(Vertex v, const std::vector<Vertex> & explored, const std::vector<Vertex> & path)
    {
        UnionFind uf(n_);
        bool any = false;
        for (const auto & a : autos_) {
            bool fixes = std::all_of(path.begin(), path.end(), [&](Vertex p) { return a[p] == p; });
            if (!fixes)
                continue;
            any = true;
            for (int i = 0; i < n_; ++i)
                uf.unite(i, a[i]);
        }
        if (!any)
            return false;
        int root = uf.find(v);
        return std::any_of(explored.begin(), explored.end(), [&](Vertex u) { return uf.find(u) == root; });
    }

    CanonicalLabel key_of(const Colouring & lab) const
    {
        CanonicalLabel key;
        key.n = n_;
        for (int u = 0; u < n_; ++u)
            for (VertexSet r = g_.row(u); r; r &= r - 1)
                key.rows[lab[u]] |= 1u << lab[first_vertex(r)];
        return key;
    }

    static int divergence(const std::vector<Vertex> & a, const std::vector<Vertex> & b)
    {
        std::size_t i = 0;
        while (i < a.size() && i < b.size() && a[i] == b[i])
            ++i;
        return static_cast<int>(i);
    }

    // Automorphism mapping the vertex labelled i under `from` to the vertex
    // labelled i under `to`.
    std::vector<Vertex> automorphism(const Colouring & from, const Colouring & to) const
    {
        std::vector<Vertex> inv(n_);
        for (int v = 0; v < n_; ++v)
            inv[to[v]] = v;
        std::vector<Vertex> a(n_);
        for (int v = 0; v < n_; ++v)
            a[v] = inv[from[v]];
        return a;
    }

    int leaf(const Colouring & lab, const std::vector<Vertex> & path)
    {
        CanonicalLabel key = key_of(lab);
        if (!have_) {
            have_ = true;
            first_key_ = best_key_ = key;
            first_lab_ = best_lab_ = lab;
            first_path_ = best_path_ = path;
            return -1;
        }
        if (key == first_key_) {
            autos_.push_back(automorphism(first_lab_, lab));
            return divergence(path, first_path_);
        }
        if (key == best_key_) {
            autos_.push_back(automorphism(best_lab_, lab));
            return divergence(path, best_path_);
        }
        if (key < best_key_) {
            best_key_ = key;
            best_lab_ = lab;
            best_path_ = path;
        }
        return -1;
    }

    const Graph & g_;
    int n_;
    bool have_ = false;
    CanonicalLabel first_key_, best_key_;
    Colouring first_lab_, best_lab_;
    std::vector<Vertex> first_path_, best_path_;
    std::vector<std::vector<Vertex>> autos_;
};

}  // namespace

Graph CanonicalLabel::graph() const
{
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int u = 0; u < n; ++u)
        for (VertexSet r = rows[u] >> (u + 1) << (u + 1); r; r &= r - 1)
            e.emplace_back(u, first_vertex(r));
    return make_graph(n, e);
}

std::size_t CanonicalLabelHash::operator()(const CanonicalLabel & c) const noexcept
{
    std::size_t h = static_cast<std::size_t>(c.n) * 0x9e3779b97f4a7c15ull;
    for (int i = 0; i < c.n; ++i)
        h = (h ^ c.rows[i]) * 0x100000001b3ull + (h >> 29);
    return h;
}

CanonicalResult canonical_labelling(const Graph & g, int max_order)
{
    if (g.order() > max_order)
        throw GraphError("canonical labelling limited to " + std::to_string(max_order) + " vertices");
    if (g.order() == 0)
        return {};
    return Search(g).run();
}

CanonicalLabel canonical_form(const Graph & g, int max_order)
{
    return canonical_labelling(g, max_order).label;
}

Graph canonical_graph(const Graph & g)
{
    return canonical_form(g).graph();
}

bool isomorphic(const Graph & a, const Graph & b)
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace bicyclic
