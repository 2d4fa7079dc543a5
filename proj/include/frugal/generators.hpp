#pragma once

#include "frugal/graph.hpp"
#include "frugal/hypergraph.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace frugal {

/// Refuse generator requests whose vertex count exceeds this.
inline constexpr std::size_t default_generator_cap = 200'000;

/// Vertex set [n]^(beta+1), tuples adjacent iff they agree in some coordinate.
/// Vertex ids are the tuples read as base-n numbers, first coordinate most
/// significant. Regular of degree n^(beta+1) - (n-1)^(beta+1) - 1.
Graph grid_graph(std::size_t n, std::size_t beta, std::size_t max_vertices = 20'000);

/// True iff every colour class of c has at most beta vertices, which every
/// beta-frugal colouring of a grid graph must satisfy.
bool grid_colour_class_bound(const Graph& g, const Colouring& c, std::size_t beta);

/// Point-hyperplane incidence graph of PG(beta+1, q) for prime q. Points get
/// ids 0..N-1 and hyperplanes N..2N-1, where N = (q^(beta+2) - 1)/(q - 1);
/// both sides are listed in lexicographic order of their normalised vectors
/// (first non-zero coordinate equal to 1).
Graph pg_incidence(std::uint64_t q, std::size_t beta, std::size_t max_vertices = default_generator_cap);

bool is_prime(std::uint64_t q);

struct GnpSpec {
    std::size_t n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

/// Pairs (u, v), u < v, are visited in lexicographic order and kept when the
/// next uniform01() draw of Rng(seed) is below p.
Graph sample_gnp(const GnpSpec& spec);

struct PruneResult {
    Graph graph;
    /// original[i] is the id in the input graph of vertex i of `graph`.
    std::vector<Vertex> original;
    std::vector<Vertex> removed_high_degree;
    /// In deletion order.
    std::vector<Vertex> removed_for_cycles;
};

/// Drops every vertex whose degree in g is at least 10d, then deletes one
/// vertex from each remaining cycle shorter than girth_target (the one of
/// highest current degree, ties to the smaller id) until none is left.
PruneResult prune(const Graph& g, double d, std::size_t girth_target);

}  // namespace frugal
