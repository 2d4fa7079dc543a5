#pragma once

// Small graph builders and brute-force oracles shared by the test binaries.
// Everything here is deliberately naive so it can be trusted as a reference.

#include "frugal/graph.hpp"
#include "frugal/hypergraph.hpp"
#include "frugal/rng.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

namespace testing_support {

using frugal::Edge;
using frugal::Graph;
using frugal::Vertex;

inline Graph complete(std::size_t n)
{
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return Graph(n, e);
}

inline Graph cycle(std::size_t n)
{
    std::vector<Edge> e;
    for (Vertex v = 0; v < n; ++v)
        e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    return Graph(n, e);
}

inline Graph path(std::size_t n)
{
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < n; ++v)
        e.emplace_back(v, v + 1);
    return Graph(n, e);
}

// Centre 0, leaves 1..leaves.
inline Graph star(std::size_t leaves)
{
    std::vector<Edge> e;
    for (Vertex v = 1; v <= leaves; ++v)
        e.emplace_back(0, v);
    return Graph(leaves + 1, e);
}

// Left side 0..a-1, right side a..a+b-1.
inline Graph complete_bipartite(std::size_t a, std::size_t b)
{
    std::vector<Edge> e;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v)
            e.emplace_back(u, static_cast<Vertex>(a + v));
    return Graph(a + b, e);
}

inline Graph random_graph(std::size_t n, double p, frugal::Rng& rng)
{
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.uniform01() < p)
                e.emplace_back(u, v);
    return Graph(n, e);
}

inline Graph random_tree(std::size_t n, frugal::Rng& rng)
{
    std::vector<Edge> e;
    for (Vertex v = 1; v < n; ++v)
        e.emplace_back(static_cast<Vertex>(rng.below(v)), v);
    return Graph(n, e);
}

// Graph on n vertices whose edges are the set bits of `mask` over the
// lexicographic pair order.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask)
{
    std::vector<Edge> e;
    std::size_t bit = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++bit)
            if (mask >> bit & 1U)
                e.emplace_back(u, v);
    return Graph(n, e);
}

inline bool adjacent_naive(const Graph& g, Vertex u, Vertex v)
{
    const auto nb = g.neighbours(u);
    return std::find(nb.begin(), nb.end(), v) != nb.end();
}

inline std::size_t triangles_naive(const Graph& g)
{
    std::size_t count = 0;
    const auto n = static_cast<Vertex>(g.num_vertices());
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                if (adjacent_naive(g, a, b) && adjacent_naive(g, b, c) && adjacent_naive(g, a, c))
                    ++count;
    return count;
}

// Longest simple path, counted in vertices, by plain DFS from every vertex.
inline std::size_t longest_path_vertices(const Graph& g)
{
    const std::size_t n = g.num_vertices();
    std::vector<char> on(n, 0);
    std::size_t best = n == 0 ? 0 : 1;
    std::function<void(Vertex, std::size_t)> go = [&](Vertex v, std::size_t len) {
        best = std::max(best, len);
        for (Vertex w : g.neighbours(v)) {
            if (on[w])
                continue;
            on[w] = 1;
            go(w, len + 1);
            on[w] = 0;
        }
    };
    for (Vertex v = 0; v < n; ++v) {
        on[v] = 1;
        go(v, 1);
        on[v] = 0;
    }
    return best;
}

// Calls fn on every colouring of n vertices with colours < k, in
// lexicographic order, until fn returns true. Returns whether it did.
inline bool any_colouring(std::size_t n, std::size_t k, const std::function<bool(const std::vector<frugal::Colour>&)>& fn)
{
    std::vector<frugal::Colour> c(n, 0);
    while (true) {
        if (fn(c))
            return true;
        std::size_t i = 0;
        while (i < n && ++c[i] == k)
            c[i++] = 0;
        if (i == n)
            return false;
    }
}

inline bool frugal_naive(const Graph& g, const std::vector<frugal::Colour>& c, std::size_t beta)
{
    for (const auto& [u, v] : g.edges())
        if (c[u] == c[v])
            return false;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        for (Vertex a : g.neighbours(v)) {
            std::size_t same = 0;
            for (Vertex b : g.neighbours(v))
                same += c[b] == c[a];
            if (same > beta)
                return false;
        }
    }
    return true;
}

inline bool proper_naive(const frugal::Hypergraph& h, const std::vector<frugal::Colour>& c)
{
    for (const auto& e : h.edges()) {
        bool mono = true;
        for (Vertex v : e)
            mono = mono && c[v] == c[*e.begin()];
        if (mono)
            return false;
    }
    return true;
}

// Least k admitting a colouring accepted by `ok`, by trying every colouring.
inline std::size_t least_palette(std::size_t n, const std::function<bool(const std::vector<frugal::Colour>&)>& ok)
{
    for (std::size_t k = 1;; ++k)
        if (any_colouring(n, k, ok))
            return k;
}

}  // namespace testing_support
