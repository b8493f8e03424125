#include "bicyclic/canonical.hpp"
#include "bicyclic/families.hpp"
#include "bicyclic/spectral.hpp"
#include "bicyclic/transforms.hpp"
#include "suites.hpp"

#include <doctest.h>

using namespace bicyclic;

TEST_CASE("rotation on a path fails the Perron hypothesis")
{
    // a-b-c, move c from b to a
    RotationMove mv{0, 1, 1u << 2};
    CHECK_FALSE(is_rho_increasing(path_graph(3), mv));
    Graph moved = rotate_edges(path_graph(3), mv);
    CHECK(isomorphic(moved, path_graph(3)));
}

TEST_CASE("rotation of a pendant onto the bowtie centre")
{
    GraphBuilder b(infinity_graph(3, 1, 3));
    Vertex leaf = b.add_vertex();
    b.add_edge(1, leaf);
    Graph g = b.build();
    RotationMove mv{0, 1, 1u << leaf};
    CHECK(is_rho_increasing(g, mv));
    Graph h = rotate_edges(g, mv);
    CHECK(h.order() == g.order());
    CHECK(h.size() == g.size());
    CHECK(h.degree(0) == 5);
    CHECK(compare_radii(h, g) == Order::Greater);
}

TEST_CASE("rotation preconditions")
{
    Graph g = infinity_graph(3, 1, 3);
    CHECK_THROWS_AS(rotate_edges(g, {0, 1, 0}), TransformError);
    CHECK_THROWS_AS(rotate_edges(g, {0, 1, 1u << 2}), TransformError);   // 2 already adjacent to 0
    CHECK_THROWS_AS(rotate_edges(g, {1, 3, 1u << 1}), TransformError);   // s contains u
    CHECK_THROWS_AS(rotate_edges(g, {0, 0, 1u << 1}), TransformError);
    CHECK_THROWS_AS(rotate_edges(g, {0, 7, 1u << 1}), TransformError);
    // 0-1-2-3: handing 1 over to 3 strands 0
    Graph p = path_graph(4);
    CHECK_THROWS_AS(rotate_edges(p, {3, 0, 1u << 1}), TransformError);
    CHECK_THROWS_AS(is_rho_increasing(p, {3, 0, 1u << 1}), TransformError);
    CHECK(rotate_edges(p, {3, 1, 1u << 0}).size() == 3);
}

TEST_CASE("graft pairs")
{
    auto [a, b] = graft_pair(path_graph(2), 0, 1, 1);
    CHECK(isomorphic(a, star_graph(3)));
    CHECK(isomorphic(b, path_graph(4)));
    CHECK(compare_radii(a, b) == Order::Greater);

    auto [c, d] = graft_pair(cycle_graph(3), 1, 2, 2);
    CHECK(c.order() == 7);
    CHECK(d.order() == 7);
    CHECK(compare_radii(c, d) == Order::Greater);

    CHECK_THROWS_AS(graft_pair(path_graph(2), 0, 1, 0), TransformError);
    CHECK_THROWS_AS(graft_pair(path_graph(2), 0, 1, 2), TransformError);
    CHECK_THROWS_AS(graft_pair(path_graph(2), 2, 1, 1), TransformError);
    CHECK_THROWS_AS(graft_pair(make_graph(1, {}), 0, 1, 1), TransformError);
}

TEST_CASE("rotation property on random instances")
{
    suites::Outcome o = suites::rotation(200, 31);
    CHECK(o.instances == 200);
    CHECK_MESSAGE(o.clean(), o.first_violation);
}

TEST_CASE("grafting property on random instances")
{
    suites::Outcome o = suites::grafting(100, 37);
    CHECK(o.instances == 100);
    CHECK_MESSAGE(o.clean(), o.first_violation);
}
