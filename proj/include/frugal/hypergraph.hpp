#pragma once

#include "frugal/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace frugal {

using Colour = std::uint32_t;

/// Hypergraph on vertices 0..n-1. Edges have at least two vertices, are
/// stored sorted, and are kept in lexicographic (canonical) order without
/// duplicates; inserting the same set twice is harmless.
class Hypergraph {
public:
    Hypergraph() = default;
    explicit Hypergraph(std::size_t n) : n_(n), incidence_(n) {}
    /// Throws std::invalid_argument for edges with fewer than two vertices or
    /// out-of-range ids.
    Hypergraph(std::size_t n, std::vector<VertexSet> edges);

    /// The graph's edges as 2-edges.
    static Hypergraph from_graph(const Graph& g);

    std::size_t num_vertices() const { return n_; }
    std::size_t num_edges() const { return edges_.size(); }
    std::span<const VertexSet> edges() const { return edges_; }

    /// Indices (into edges()) of the edges containing v, ascending.
    const std::vector<std::size_t>& incident(Vertex v) const { return incidence_[v]; }

    /// Sub-hypergraph keeping only the edges of the given size.
    Hypergraph layer(std::size_t size) const;

    bool operator==(const Hypergraph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    void index();

    std::size_t n_ = 0;
    std::vector<VertexSet> edges_;
    std::vector<std::vector<std::size_t>> incidence_;
};

/// Total vertex colouring with colours drawn from 0..k-1.
class Colouring {
public:
    Colouring() = default;
    /// Throws std::invalid_argument if some colour is >= k.
    Colouring(std::vector<Colour> colours, std::size_t k);

    std::size_t size() const { return colours_.size(); }
    std::size_t palette() const { return k_; }
    Colour operator[](Vertex v) const { return colours_[v]; }
    std::span<const Colour> colours() const { return colours_; }
    /// Number of distinct colours actually used.
    std::size_t used() const;

    bool operator==(const Colouring&) const = default;

private:
    std::vector<Colour> colours_;
    std::size_t k_ = 0;
};

/// Maximum edge size. Throws on an edgeless hypergraph.
std::size_t rank(const Hypergraph& h);

/// Maximum, over vertices, of the number of `ell`-edges containing the vertex.
/// Requires 2 <= ell <= rank(h).
std::size_t max_ell_degree(const Hypergraph& h, std::size_t ell);

/// Maximum, over s-sets S, of the number of `ell`-edges containing S.
/// Requires 1 <= s < ell <= rank(h). Cost is bounded by sum_e C(|e|, s).
std::size_t max_codegree(const Hypergraph& h, std::size_t s, std::size_t ell);

/// True iff no edge is monochromatic. Throws if c does not cover every vertex.
bool is_proper(const Hypergraph& h, const Colouring& c);

/// max over 2 <= ell <= rank of max_ell_degree(h, ell)^(1/(ell-1)).
double delta_star(const Hypergraph& h);

// Text format: "n m" header, then m lines listing each edge's vertices ascending.
Hypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);

// Colouring file: one "v c" line per vertex, every vertex exactly once. The
// palette of a colouring read back is one more than its largest colour.
Colouring read_colouring(std::istream& in, std::size_t n);
void write_colouring(std::ostream& out, const Colouring& c);

}  // namespace frugal
