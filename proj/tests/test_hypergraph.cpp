#include "frugal/generators.hpp"
#include "frugal/hypergraph.hpp"
#include "frugal/reduction.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

using namespace frugal;
using namespace testing_support;

namespace {

Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t max_size, Rng& rng)
{
    std::vector<VertexSet> edges;
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t size = 2 + rng.below(max_size - 1);
        std::vector<Vertex> ids;
        while (ids.size() < size) {
            const auto v = static_cast<Vertex>(rng.below(n));
            if (std::find(ids.begin(), ids.end(), v) == ids.end())
                ids.push_back(v);
        }
        edges.emplace_back(ids);
    }
    return Hypergraph(n, edges);
}

// Counts, for every ell-edge, how many ell-edges contain each s-subset by
// testing every s-subset of vertices directly.
std::size_t codegree_naive(const Hypergraph& h, std::size_t s, std::size_t ell)
{
    std::size_t best = 0;
    const auto n = h.num_vertices();
    std::vector<Vertex> pick;
    std::function<void(Vertex)> rec = [&](Vertex from) {
        if (pick.size() == s) {
            const VertexSet set(pick);
            std::size_t count = 0;
            for (const auto& e : h.edges())
                count += e.size() == ell && e.includes(set);
            best = std::max(best, count);
            return;
        }
        for (Vertex v = from; v < n; ++v) {
            pick.push_back(v);
            rec(v + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return best;
}

}  // namespace

TEST_CASE("hypergraph construction canonicalises edges")
{
    const Hypergraph h(4, {VertexSet{2, 1, 0}, VertexSet{0, 1, 2}, VertexSet{3, 0}});
    CHECK(h.num_edges() == 2);
    CHECK(h.edges()[0] == VertexSet{0, 1, 2});
    CHECK(h.edges()[1] == VertexSet{0, 3});
    CHECK(h.incident(0) == std::vector<std::size_t>{0, 1});
    CHECK(h.incident(3) == std::vector<std::size_t>{1});
    CHECK_THROWS_AS(Hypergraph(3, {VertexSet{1}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(3, {VertexSet{1, 3}}), std::invalid_argument);
}

TEST_CASE("colouring rejects colours outside the palette")
{
    CHECK_THROWS_AS(Colouring({0, 1, 2}, 2), std::invalid_argument);
    const Colouring c({0, 2, 2}, 4);
    CHECK(c.palette() == 4);
    CHECK(c.used() == 2);
}

TEST_CASE("rank")
{
    CHECK(rank(Hypergraph::from_graph(complete(3))) == 2);
    CHECK(rank(build_basic(star(3), 2)) == 3);
    CHECK(rank(Hypergraph(4, {VertexSet{0, 1}, VertexSet{0, 1, 2, 3}})) == 4);
    CHECK_THROWS_AS(rank(Hypergraph(3)), std::invalid_argument);
}

TEST_CASE("max_ell_degree")
{
    CHECK(max_ell_degree(Hypergraph::from_graph(complete(4)), 2) == 3);
    CHECK(max_ell_degree(Hypergraph(3, {VertexSet{0, 1, 2}}), 3) == 1);
    CHECK_THROWS_AS(max_ell_degree(Hypergraph(3, {VertexSet{0, 1, 2}}), 4), std::invalid_argument);
    CHECK_THROWS_AS(max_ell_degree(Hypergraph(3, {VertexSet{0, 1, 2}}), 1), std::invalid_argument);

    const Graph grid = grid_graph(2, 1);
    const Hypergraph h = build_basic(grid, 1);
    for (std::size_t ell = 2; ell <= rank(h); ++ell) {
        std::size_t best = 0;
        for (Vertex v = 0; v < h.num_vertices(); ++v) {
            std::size_t count = 0;
            for (const auto& e : h.edges())
                count += e.size() == ell && e.contains(v);
            best = std::max(best, count);
        }
        CHECK(max_ell_degree(h, ell) == best);
    }
}

TEST_CASE("max_codegree")
{
    const Hypergraph two(4, {VertexSet{0, 1, 2}, VertexSet{0, 1, 3}});
    CHECK(max_codegree(two, 2, 3) == 2);
    CHECK(max_codegree(two, 1, 3) == max_ell_degree(two, 3));
    CHECK_THROWS_AS(max_codegree(two, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(max_codegree(two, 0, 3), std::invalid_argument);

    Rng rng(10);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_graph(10, 0.4, rng);
        const Hypergraph h = build_basic(g, 2);
        if (h.num_edges() == 0 || rank(h) < 3)
            continue;
        CHECK(max_codegree(h, 2, 3) == codegree_naive(h, 2, 3));
    }
}

TEST_CASE("codegree is non-increasing in s and agrees with ell-degree at s = 1")
{
    Rng rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        const Hypergraph h = random_hypergraph(9, 25, 5, rng);
        const std::size_t r = rank(h);
        for (std::size_t ell = 2; ell <= r; ++ell) {
            CHECK(max_codegree(h, 1, ell) == max_ell_degree(h, ell));
            for (std::size_t s = 1; s + 1 < ell; ++s)
                CHECK(max_codegree(h, s, ell) >= max_codegree(h, s + 1, ell));
            for (std::size_t s = 1; s < ell; ++s)
                CHECK(max_codegree(h, s, ell) == codegree_naive(h, s, ell));
        }
    }
}

TEST_CASE("is_proper")
{
    const Hypergraph h = build_basic(complete_bipartite(2, 3), 2);
    std::vector<Colour> distinct(h.num_vertices());
    std::iota(distinct.begin(), distinct.end(), 0);
    CHECK(is_proper(h, Colouring(distinct, distinct.size())));
    CHECK_FALSE(is_proper(Hypergraph(3, {VertexSet{0, 1, 2}}), Colouring({0, 0, 0}, 1)));
    CHECK_THROWS_AS(is_proper(h, Colouring({0, 1}, 2)), std::invalid_argument);
}

TEST_CASE("is_proper agrees with a naive scan and is hereditary")
{
    Rng rng(123);
    for (int trial = 0; trial < 100; ++trial) {
        const Hypergraph h = random_hypergraph(8, 6, 4, rng);
        std::vector<Colour> c(8);
        for (auto& x : c)
            x = static_cast<Colour>(rng.below(3));
        const Colouring col(c, 3);
        const bool proper = is_proper(h, col);
        CHECK(proper == proper_naive(h, c));
        if (!proper)
            continue;
        auto edges = std::vector<VertexSet>(h.edges().begin(), h.edges().end());
        edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(rng.below(edges.size())));
        CHECK(is_proper(Hypergraph(8, edges), col));
    }
}

TEST_CASE("is_proper on a graph is the ordinary proper-colouring check")
{
    Rng rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_graph(9, 0.3, rng);
        std::vector<Colour> c(9);
        for (auto& x : c)
            x = static_cast<Colour>(rng.below(3));
        bool expected = true;
        for (const auto& [u, v] : g.edges())
            expected = expected && c[u] != c[v];
        CHECK(is_proper(Hypergraph::from_graph(g), Colouring(c, 3)) == expected);
    }
}

TEST_CASE("delta_star")
{
    CHECK(delta_star(Hypergraph::from_graph(complete(4))) == doctest::Approx(3.0));
    CHECK(delta_star(Hypergraph(3, {VertexSet{0, 1, 2}})) == doctest::Approx(1.0));

    const Hypergraph h = build_basic(grid_graph(3, 1), 2);
    double expected = 0.0;
    for (std::size_t ell = 2; ell <= rank(h); ++ell) {
        const auto d = static_cast<double>(max_ell_degree(h, ell));
        expected = std::max(expected, std::pow(d, 1.0 / static_cast<double>(ell - 1)));
    }
    CHECK(delta_star(h) == doctest::Approx(expected));
    // The 2-edges are exactly the rook graph, which is 4-regular.
    CHECK(max_ell_degree(h, 2) == 4);
}

TEST_CASE("hypergraph and colouring text formats round-trip")
{
    Rng rng(3);
    const Hypergraph h = random_hypergraph(10, 12, 4, rng);
    std::ostringstream out;
    write_hypergraph(out, h);
    std::istringstream in(out.str());
    CHECK(read_hypergraph(in) == h);

    const Colouring c({2, 0, 1, 1}, 3);
    std::ostringstream cout_;
    write_colouring(cout_, c);
    std::istringstream cin_(cout_.str());
    const Colouring back = read_colouring(cin_, 4);
    CHECK(std::vector<Colour>(back.colours().begin(), back.colours().end()) == std::vector<Colour>{2, 0, 1, 1});

    for (const char* bad : {"3 1\n0\n", "3 1\n0 3\n", "3 2\n0 1\n", "3 1\n1 0\n"}) {
        std::istringstream bin(bad);
        CHECK_THROWS_AS(read_hypergraph(bin), std::runtime_error);
    }
    for (const char* bad : {"0 1\n1 0\n", "0 1\n0 2\n", "0 1\n1 0\n2 0\n3 0\n"}) {
        std::istringstream bin(bad);
        CHECK_THROWS_AS(read_colouring(bin, 3), std::runtime_error);
    }
}
