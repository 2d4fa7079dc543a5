#include "frugal/generators.hpp"
#include "frugal/graph.hpp"
#include "frugal/solvers.hpp"
#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace frugal;
using namespace testing_support;

TEST_CASE("graph construction normalises and rejects bad input")
{
    const Graph g(4, {{2, 1}, {1, 2}, {0, 3}});
    CHECK(g.num_edges() == 2);
    CHECK(g.edges() == std::vector<Edge>{{0, 3}, {1, 2}});
    CHECK(g.adjacent(2, 1));
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("neighbour lists are sorted and symmetric")
{
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(15, 0.3, rng);
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
            const auto nb = g.neighbours(v);
            CHECK(std::is_sorted(nb.begin(), nb.end()));
            CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
            for (Vertex w : nb)
                CHECK(adjacent_naive(g, w, v));
        }
    }
}

TEST_CASE("vertex sets are strictly increasing")
{
    const VertexSet s{5, 1, 3, 1};
    CHECK(s.size() == 3);
    CHECK(std::vector<Vertex>(s.begin(), s.end()) == std::vector<Vertex>{1, 3, 5});
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(2));
    CHECK(s.includes(VertexSet{1, 5}));
    CHECK_FALSE(s.includes(VertexSet{1, 2}));
}

TEST_CASE("max_degree")
{
    CHECK(max_degree(cycle(4)) == 2);
    CHECK(max_degree(Graph(5)) == 0);
    const Graph grid = grid_graph(3, 1);
    CHECK(max_degree(grid) == 4);
    for (Vertex v = 0; v < grid.num_vertices(); ++v)
        CHECK(grid.degree(v) == 3 * 3 - 2 * 2 - 1);
}

TEST_CASE("common_neighbourhood")
{
    const Graph k25 = complete_bipartite(2, 5);
    CHECK(common_neighbourhood(k25, VertexSet{0, 1}) == VertexSet{2, 3, 4, 5, 6});
    CHECK(common_neighbourhood(path(3), VertexSet{0, 2}) == VertexSet{1});
    CHECK_THROWS_AS(common_neighbourhood(k25, VertexSet{}), std::invalid_argument);

    Rng rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(8, 0.5, rng);
        const auto a = static_cast<Vertex>(rng.below(8));
        auto b = static_cast<Vertex>(rng.below(7));
        if (b >= a)
            ++b;
        std::vector<Vertex> expected;
        for (Vertex v = 0; v < 8; ++v)
            if (adjacent_naive(g, v, a) && adjacent_naive(g, v, b))
                expected.push_back(v);
        CHECK(common_neighbourhood(g, VertexSet{a, b}) == VertexSet(expected));
    }
}

TEST_CASE("common_neighbourhood shrinks as the set grows")
{
    Rng rng(21);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(12, 0.6, rng);
        std::vector<Vertex> ids;
        for (Vertex v = 0; v < 12; ++v)
            if (rng.uniform01() < 0.3)
                ids.push_back(v);
        if (ids.size() < 2)
            continue;
        const VertexSet big(ids);
        const VertexSet small(std::vector<Vertex>(ids.begin(), ids.end() - 1));
        CHECK(common_neighbourhood(g, small).includes(common_neighbourhood(g, big)));
    }
}

TEST_CASE("girth")
{
    CHECK(girth(cycle(7)) == 7);
    CHECK_FALSE(girth(path(6)).has_value());
    CHECK(girth(complete(4)) == 3);
    CHECK(girth(pg_incidence(2, 1)) == 6);

    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial)
        CHECK_FALSE(girth(random_tree(12, rng)).has_value());
}

TEST_CASE("girth agrees with exhaustive cycle checks")
{
    Rng rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(11, 0.25, rng);
        const auto gi = girth(g);
        // The shortest cycle has length gi, so C_{2t} is absent for 2t < gi.
        for (std::size_t t = 2; t <= 5; ++t)
            if (gi && 2 * t < *gi)
                CHECK(is_c2t_free(g, t));
        if (gi && *gi % 2 == 0)
            CHECK_FALSE(is_c2t_free(g, *gi / 2));
        if (is_c2t_free(g, 2) && !triangles_naive(g) && gi)
            CHECK(*gi >= 5);
    }
}

TEST_CASE("is_c2t_free")
{
    CHECK_FALSE(is_c2t_free(cycle(4), 2));
    CHECK(is_c2t_free(cycle(6), 2));
    CHECK_FALSE(is_c2t_free(cycle(6), 3));
    CHECK(is_c2t_free(pg_incidence(2, 1), 2));
    CHECK_FALSE(is_c2t_free(pg_incidence(2, 1), 3));
    CHECK_FALSE(is_c2t_free(complete(5), 2));
    Rng rng(4);
    for (int trial = 0; trial < 10; ++trial)
        for (std::size_t t = 2; t <= 4; ++t)
            CHECK(is_c2t_free(random_tree(10, rng), t));
    CHECK_THROWS_AS(is_c2t_free(cycle(4), 1), std::invalid_argument);
}

TEST_CASE("is_kst_free")
{
    CHECK_FALSE(is_kst_free(complete_bipartite(2, 3), 2, 3));
    CHECK_FALSE(is_kst_free(complete_bipartite(2, 3), 3, 2));
    CHECK(is_kst_free(complete_bipartite(2, 3), 3, 3));
    CHECK(is_kst_free(cycle(6), 2, 2));
    CHECK_FALSE(is_kst_free(complete(5), 2, 3));

    // grid(2,2) against a scan of all vertex pairs.
    const Graph grid = grid_graph(2, 2);
    bool has_c4 = false;
    for (Vertex a = 0; a < grid.num_vertices(); ++a)
        for (Vertex b = a + 1; b < grid.num_vertices(); ++b)
            has_c4 = has_c4 || common_neighbourhood(grid, VertexSet{a, b}).size() >= 2;
    CHECK(is_kst_free(grid, 2, 2) == !has_c4);
}

TEST_CASE("is_kst_free with s = 1 is a degree test")
{
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(10, 0.35, rng);
        for (std::size_t t = 1; t <= 6; ++t)
            CHECK(is_kst_free(g, 1, t) == (max_degree(g) < t));
    }
}

TEST_CASE("is_kst_free matches a pair and triple scan")
{
    Rng rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(9, 0.5, rng);
        const auto n = static_cast<Vertex>(g.num_vertices());
        std::size_t best2 = 0;
        std::size_t best3 = 0;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b) {
                best2 = std::max(best2, common_neighbourhood(g, VertexSet{a, b}).size());
                for (Vertex c = b + 1; c < n; ++c)
                    best3 = std::max(best3, common_neighbourhood(g, VertexSet{a, b, c}).size());
            }
        for (std::size_t t = 2; t <= 5; ++t) {
            CHECK(is_kst_free(g, 2, t) == (best2 < t));
            CHECK(is_kst_free(g, t, 2) == (best2 < t));
        }
        CHECK(is_kst_free(g, 3, 3) == (best3 < 3));
    }
}

TEST_CASE("is_pt_free")
{
    CHECK_FALSE(is_pt_free(path(4), 4));
    CHECK(is_pt_free(path(4), 5));
    CHECK(is_pt_free(Graph(6, {{0, 1}, {2, 3}, {4, 5}}), 3));
    Rng rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(10, 0.3, rng);
        const std::size_t longest = longest_path_vertices(g);
        for (std::size_t t = 2; t <= 10; ++t)
            CHECK(is_pt_free(g, t) == (longest < t));
    }
}

TEST_CASE("count_triangles_at")
{
    const Graph k4 = complete(4);
    for (Vertex v = 0; v < 4; ++v)
        CHECK(count_triangles_at(k4, v) == 3);
    const Graph bip = complete_bipartite(3, 4);
    for (Vertex v = 0; v < bip.num_vertices(); ++v)
        CHECK(count_triangles_at(bip, v) == 0);

    Rng rng(12);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(12 + trial % 19, 0.5, rng);
        std::size_t sum = 0;
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            sum += count_triangles_at(g, v);
        CHECK(sum % 3 == 0);
        CHECK(sum / 3 == triangles_naive(g));
    }
}

TEST_CASE("square")
{
    CHECK(square(cycle(4)) == complete(4));
    CHECK(square(Graph(5)) == Graph(5));
    const Graph c7sq = square(cycle(7));
    for (Vertex v = 0; v < 7; ++v) {
        CHECK(c7sq.degree(v) == 4);
        CHECK(c7sq.adjacent(v, (v + 2) % 7));
        CHECK_FALSE(c7sq.adjacent(v, (v + 3) % 7));
    }
}

TEST_CASE("chromatic number of the square equals the 1-frugal chromatic number")
{
    Rng rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph g = random_graph(6 + trial % 7, 0.3, rng);
        CHECK(exact_chromatic(square(g)) == exact_frugal_chromatic(g, 1));
    }
}

TEST_CASE("induced_subgraph renumbers densely")
{
    const Graph c6 = cycle(6);
    const Graph sub = induced_subgraph(c6, VertexSet{0, 1, 2, 4});
    CHECK(sub == Graph(4, {{0, 1}, {1, 2}}));
}

TEST_CASE("graph text format round-trips")
{
    Rng rng(2);
    const Graph g = random_graph(20, 0.2, rng);
    std::ostringstream out;
    write_graph(out, g);
    std::istringstream in(out.str());
    const Graph back = read_graph(in);
    CHECK(back == g);
    std::ostringstream again;
    write_graph(again, back);
    CHECK(again.str() == out.str());
}

TEST_CASE("graph reader accepts comments and rejects malformed input")
{
    std::istringstream ok("# header\n3 2  # n m\n0 1\n\n1 2 # last\n");
    CHECK(read_graph(ok) == path(3));

    for (const char* bad : {"3 2\n0 1\n", "3 1\n1 0\n", "3 1\n0 3\n", "3 2\n0 1\n0 1\n", "3 1\n0 1 2\n", "3 1\n0 1\n1 2\n", "", "3\n",
                            "3 1\n0 x\n"}) {
        std::istringstream in(bad);
        CHECK_THROWS_AS(read_graph(in), std::runtime_error);
    }
}
