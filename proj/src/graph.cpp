#include "frugal/graph.hpp"

#include "text_io.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

namespace frugal {

VertexSet::VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids))
{
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet::VertexSet(std::initializer_list<Vertex> ids) : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet VertexSet::from_sorted_unique(std::vector<Vertex> ids)
{
    VertexSet s;
    s.ids_ = std::move(ids);
    return s;
}

bool VertexSet::contains(Vertex v) const
{
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

bool VertexSet::includes(const VertexSet& other) const
{
    return std::includes(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end());
}

Graph::Graph(std::size_t n) : adj_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adj_(n)
{
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        num_edges_ += list.size();
    }
    num_edges_ /= 2;
}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
{
}

bool Graph::adjacent(Vertex u, Vertex v) const
{
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < adj_.size(); ++u)
        for (Vertex v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::size_t max_degree(const Graph& g)
{
    std::size_t best = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

VertexSet common_neighbourhood(const Graph& g, const VertexSet& s)
{
    if (s.empty())
        throw std::invalid_argument("common_neighbourhood: empty vertex set");
    for (Vertex v : s)
        if (v >= g.num_vertices())
            throw std::invalid_argument("common_neighbourhood: vertex out of range");

    auto first = g.neighbours(s[0]);
    std::vector<Vertex> acc(first.begin(), first.end());
    std::vector<Vertex> next;
    for (std::size_t i = 1; i < s.size() && !acc.empty(); ++i) {
        auto nb = g.neighbours(s[i]);
        next.clear();
        std::set_intersection(acc.begin(), acc.end(), nb.begin(), nb.end(), std::back_inserter(next));
        acc.swap(next);
    }
    return VertexSet::from_sorted_unique(std::move(acc));
}

std::optional<std::size_t> girth(const Graph& g)
{
    const std::size_t n = g.num_vertices();
    constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();
    std::size_t best = unseen;
    std::vector<std::size_t> dist(n, unseen);
    std::vector<Vertex> parent(n);
    std::vector<Vertex> touched;
    std::deque<Vertex> queue;

    for (Vertex root = 0; root < n; ++root) {
        for (Vertex v : touched)
            dist[v] = unseen;
        touched.clear();
        queue.clear();

        dist[root] = 0;
        parent[root] = root;
        touched.push_back(root);
        queue.push_back(root);
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            // Any cycle found from here on is at least 2*dist[u] long.
            if (best != unseen && 2 * dist[u] >= best)
                break;
            for (Vertex w : g.neighbours(u)) {
                if (dist[w] == unseen) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push_back(w);
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == unseen)
        return std::nullopt;
    return best;
}

namespace {

// Looks for a cycle of exactly `length` vertices whose smallest vertex is `start`.
bool cycle_through(const Graph& g, Vertex start, Vertex v, std::size_t depth, std::size_t length, std::vector<char>& on_path)
{
    if (depth == length)
        return g.adjacent(v, start);
    for (Vertex w : g.neighbours(v)) {
        if (w <= start || on_path[w])
            continue;
        on_path[w] = 1;
        bool found = cycle_through(g, start, w, depth + 1, length, on_path);
        on_path[w] = 0;
        if (found)
            return true;
    }
    return false;
}

bool path_from(const Graph& g, Vertex v, std::size_t depth, std::size_t length, std::vector<char>& on_path)
{
    if (depth == length)
        return true;
    for (Vertex w : g.neighbours(v)) {
        if (on_path[w])
            continue;
        on_path[w] = 1;
        bool found = path_from(g, w, depth + 1, length, on_path);
        on_path[w] = 0;
        if (found)
            return true;
    }
    return false;
}

// Extends a chosen set (implicitly, via its running common neighbourhood) by
// vertices greater than `last` until `remaining` more have been chosen.
bool dense_subset(const Graph& g, Vertex last, std::size_t remaining, const std::vector<Vertex>& common, std::size_t need)
{
    if (remaining == 0)
        return common.size() >= need;
    std::vector<Vertex> next;
    for (Vertex v = last + 1; v < g.num_vertices(); ++v) {
        auto nb = g.neighbours(v);
        next.clear();
        std::set_intersection(common.begin(), common.end(), nb.begin(), nb.end(), std::back_inserter(next));
        if (next.size() < need)
            continue;
        if (dense_subset(g, v, remaining - 1, next, need))
            return true;
    }
    return false;
}

}  // namespace

bool is_c2t_free(const Graph& g, std::size_t t)
{
    if (t < 2)
        throw std::invalid_argument("is_c2t_free: t must be at least 2");
    const std::size_t length = 2 * t;
    if (length > g.num_vertices())
        return true;
    std::vector<char> on_path(g.num_vertices(), 0);
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        on_path[s] = 1;
        bool found = cycle_through(g, s, s, 1, length, on_path);
        on_path[s] = 0;
        if (found)
            return false;
    }
    return true;
}

bool is_kst_free(const Graph& g, std::size_t s, std::size_t t)
{
    if (s < 1 || t < 1)
        throw std::invalid_argument("is_kst_free: s and t must be positive");
    // An s-set with t common neighbours and a t-set with s common neighbours
    // witness the same subgraph, so scanning the smaller side covers both.
    const std::size_t pick = std::min(s, t);
    const std::size_t need = std::max(s, t);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) < need)
            continue;
        auto nb = g.neighbours(v);
        std::vector<Vertex> common(nb.begin(), nb.end());
        if (dense_subset(g, v, pick - 1, common, need))
            return false;
    }
    return true;
}

bool is_pt_free(const Graph& g, std::size_t t)
{
    if (t < 2)
        throw std::invalid_argument("is_pt_free: t must be at least 2");
    if (t > g.num_vertices())
        return true;
    std::vector<char> on_path(g.num_vertices(), 0);
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
        on_path[s] = 1;
        bool found = path_from(g, s, 1, t, on_path);
        on_path[s] = 0;
        if (found)
            return false;
    }
    return true;
}

std::size_t count_triangles_at(const Graph& g, Vertex v)
{
    if (v >= g.num_vertices())
        throw std::invalid_argument("count_triangles_at: vertex out of range");
    auto nv = g.neighbours(v);
    std::size_t twice = 0;
    for (Vertex u : nv) {
        auto nu = g.neighbours(u);
        std::vector<Vertex> shared;
        std::set_intersection(nv.begin(), nv.end(), nu.begin(), nu.end(), std::back_inserter(shared));
        twice += shared.size();
    }
    return twice / 2;
}

Graph square(const Graph& g)
{
    std::vector<Edge> edges;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        std::set<Vertex> reach;
        for (Vertex u : g.neighbours(v)) {
            reach.insert(u);
            for (Vertex w : g.neighbours(u))
                reach.insert(w);
        }
        for (Vertex w : reach)
            if (v < w)
                edges.emplace_back(v, w);
    }
    return Graph(g.num_vertices(), edges);
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep)
{
    constexpr Vertex absent = std::numeric_limits<Vertex>::max();
    std::vector<Vertex> relabel(g.num_vertices(), absent);
    Vertex next = 0;
    for (Vertex v : keep)
        relabel[v] = next++;
    std::vector<Edge> edges;
    for (Vertex v : keep)
        for (Vertex w : g.neighbours(v))
            if (v < w && relabel[w] != absent)
                edges.emplace_back(relabel[v], relabel[w]);
    return Graph(keep.size(), edges);
}

Graph read_graph(std::istream& in)
{
    std::vector<std::uint64_t> fields;
    std::size_t line_no = 0;
    if (!detail::next_record(in, fields, line_no))
        throw std::runtime_error("graph file: missing 'n m' header");
    if (fields.size() != 2)
        detail::parse_error(line_no, "header must be 'n m'");
    const auto n = fields[0];
    const auto m = fields[1];
    if (n > std::numeric_limits<Vertex>::max())
        detail::parse_error(line_no, "vertex count too large");

    std::vector<Edge> edges;
    edges.reserve(m);
    std::set<Edge> seen;
    for (std::uint64_t i = 0; i < m; ++i) {
        if (!detail::next_record(in, fields, line_no))
            throw std::runtime_error("graph file: expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        if (fields.size() != 2)
            detail::parse_error(line_no, "edge line must be 'u v'");
        if (!(fields[0] < fields[1] && fields[1] < n))
            detail::parse_error(line_no, "edge must satisfy 0 <= u < v < n");
        Edge e{static_cast<Vertex>(fields[0]), static_cast<Vertex>(fields[1])};
        if (!seen.insert(e).second)
            detail::parse_error(line_no, "duplicate edge");
        edges.push_back(e);
    }
    if (detail::next_record(in, fields, line_no))
        detail::parse_error(line_no, "trailing data after the declared edges");
    return Graph(n, edges);
}

void write_graph(std::ostream& out, const Graph& g)
{
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
}

}  // namespace frugal
