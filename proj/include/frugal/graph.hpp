#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace frugal {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Strictly increasing list of vertex ids.
class VertexSet {
public:
    VertexSet() = default;
    /// Sorts and deduplicates.
    explicit VertexSet(std::vector<Vertex> ids);
    VertexSet(std::initializer_list<Vertex> ids);

    static VertexSet from_sorted_unique(std::vector<Vertex> ids);

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    bool contains(Vertex v) const;
    /// True iff every member of `other` is a member of this set.
    bool includes(const VertexSet& other) const;

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }
    Vertex operator[](std::size_t i) const { return ids_[i]; }
    std::span<const Vertex> ids() const { return ids_; }

    auto operator<=>(const VertexSet&) const = default;

private:
    std::vector<Vertex> ids_;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
/// Immutable once constructed.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);
    /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
    /// Repeated edges (in either orientation) are merged.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges);

    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t num_edges() const { return num_edges_; }
    std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const;

    /// Edges as (u, v) with u < v, lexicographically ordered.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t num_edges_ = 0;
};

std::size_t max_degree(const Graph& g);

/// Vertices adjacent to every member of `s`. Throws on empty `s`.
VertexSet common_neighbourhood(const Graph& g, const VertexSet& s);

/// Length of a shortest cycle, or nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

/// Exhaustive search; intended for graphs up to ~30 vertices.
bool is_c2t_free(const Graph& g, std::size_t t);

/// True iff g contains no K_{s,t} subgraph (either side orientation).
bool is_kst_free(const Graph& g, std::size_t s, std::size_t t);

/// True iff g contains no path on t vertices. Exhaustive DFS.
bool is_pt_free(const Graph& g, std::size_t t);

/// Number of edges spanned by N(v).
std::size_t count_triangles_at(const Graph& g, Vertex v);

/// Graph on the same vertices joining pairs at distance 1 or 2.
Graph square(const Graph& g);

/// Induced subgraph on `keep`, relabelled 0..|keep|-1 in the order of `keep`.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

// Text format: "n m" header, then m lines "u v" with u < v. '#' starts a comment.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

}  // namespace frugal
