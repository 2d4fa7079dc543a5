#include "frugal/hypergraph.hpp"

#include "subsets.hpp"
#include "text_io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace frugal {

Hypergraph::Hypergraph(std::size_t n, std::vector<VertexSet> edges) : n_(n), edges_(std::move(edges))
{
    for (const auto& e : edges_) {
        if (e.size() < 2)
            throw std::invalid_argument("hypergraph edges need at least two distinct vertices");
        if (e[e.size() - 1] >= n_)
            throw std::invalid_argument("hypergraph edge vertex out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    index();
}

Hypergraph Hypergraph::from_graph(const Graph& g)
{
    std::vector<VertexSet> edges;
    edges.reserve(g.num_edges());
    for (auto [u, v] : g.edges())
        edges.push_back(VertexSet::from_sorted_unique({u, v}));
    return Hypergraph(g.num_vertices(), std::move(edges));
}

Hypergraph Hypergraph::layer(std::size_t size) const
{
    std::vector<VertexSet> kept;
    for (const auto& e : edges_)
        if (e.size() == size)
            kept.push_back(e);
    return Hypergraph(n_, std::move(kept));
}

void Hypergraph::index()
{
    incidence_.assign(n_, {});
    for (std::size_t i = 0; i < edges_.size(); ++i)
        for (Vertex v : edges_[i])
            incidence_[v].push_back(i);
}

Colouring::Colouring(std::vector<Colour> colours, std::size_t k) : colours_(std::move(colours)), k_(k)
{
    for (Colour c : colours_)
        if (c >= k_)
            throw std::invalid_argument("colour " + std::to_string(c) + " outside palette of size " + std::to_string(k_));
}

std::size_t Colouring::used() const
{
    std::vector<Colour> sorted(colours_);
    std::sort(sorted.begin(), sorted.end());
    return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

std::size_t rank(const Hypergraph& h)
{
    if (h.num_edges() == 0)
        throw std::invalid_argument("rank: hypergraph has no edges");
    std::size_t r = 0;
    for (const auto& e : h.edges())
        r = std::max(r, e.size());
    return r;
}

std::size_t max_ell_degree(const Hypergraph& h, std::size_t ell)
{
    const std::size_t r = rank(h);
    if (ell < 2 || ell > r)
        throw std::invalid_argument("max_ell_degree: need 2 <= ell <= rank");
    std::vector<std::size_t> count(h.num_vertices(), 0);
    for (const auto& e : h.edges())
        if (e.size() == ell)
            for (Vertex v : e)
                ++count[v];
    return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

std::size_t max_codegree(const Hypergraph& h, std::size_t s, std::size_t ell)
{
    const std::size_t r = rank(h);
    if (!(1 <= s && s < ell && ell <= r))
        throw std::invalid_argument("max_codegree: need 1 <= s < ell <= rank");
    if (s == 1)
        return max_ell_degree(h, ell);

    std::unordered_map<std::vector<Vertex>, std::size_t, detail::VectorHash> count;
    std::size_t best = 0;
    for (const auto& e : h.edges()) {
        if (e.size() != ell)
            continue;
        detail::for_each_subset(e.ids(), s, [&](const std::vector<Vertex>& sub) {
            best = std::max(best, ++count[sub]);
            return true;
        });
    }
    return best;
}

bool is_proper(const Hypergraph& h, const Colouring& c)
{
    if (c.size() != h.num_vertices())
        throw std::invalid_argument("is_proper: colouring does not cover every vertex");
    for (const auto& e : h.edges()) {
        const Colour first = c[e[0]];
        bool mono = std::all_of(e.begin(), e.end(), [&](Vertex v) { return c[v] == first; });
        if (mono)
            return false;
    }
    return true;
}

double delta_star(const Hypergraph& h)
{
    const std::size_t r = rank(h);
    if (r < 2)
        throw std::invalid_argument("delta_star: rank must be at least 2");
    double best = 0.0;
    for (std::size_t ell = 2; ell <= r; ++ell) {
        const auto d = static_cast<double>(max_ell_degree(h, ell));
        best = std::max(best, std::pow(d, 1.0 / static_cast<double>(ell - 1)));
    }
    return best;
}

Hypergraph read_hypergraph(std::istream& in)
{
    std::vector<std::uint64_t> fields;
    std::size_t line_no = 0;
    if (!detail::next_record(in, fields, line_no))
        throw std::runtime_error("hypergraph file: missing 'n m' header");
    if (fields.size() != 2)
        detail::parse_error(line_no, "header must be 'n m'");
    const auto n = fields[0];
    const auto m = fields[1];
    if (n > std::numeric_limits<Vertex>::max())
        detail::parse_error(line_no, "vertex count too large");

    std::vector<VertexSet> edges;
    edges.reserve(m);
    for (std::uint64_t i = 0; i < m; ++i) {
        if (!detail::next_record(in, fields, line_no))
            throw std::runtime_error("hypergraph file: expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        if (fields.size() < 2)
            detail::parse_error(line_no, "an edge needs at least two vertices");
        std::vector<Vertex> ids;
        for (std::size_t j = 0; j < fields.size(); ++j) {
            if (fields[j] >= n)
                detail::parse_error(line_no, "vertex out of range");
            if (j > 0 && fields[j] <= fields[j - 1])
                detail::parse_error(line_no, "edge vertices must be strictly ascending");
            ids.push_back(static_cast<Vertex>(fields[j]));
        }
        edges.push_back(VertexSet::from_sorted_unique(std::move(ids)));
    }
    if (detail::next_record(in, fields, line_no))
        detail::parse_error(line_no, "trailing data after the declared edges");
    return Hypergraph(n, std::move(edges));
}

void write_hypergraph(std::ostream& out, const Hypergraph& h)
{
    out << h.num_vertices() << ' ' << h.num_edges() << '\n';
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i)
            out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

Colouring read_colouring(std::istream& in, std::size_t n)
{
    constexpr Colour unset = std::numeric_limits<Colour>::max();
    std::vector<Colour> colours(n, unset);
    std::vector<std::uint64_t> fields;
    std::size_t line_no = 0;
    std::size_t seen = 0;
    Colour largest = 0;
    while (detail::next_record(in, fields, line_no)) {
        if (fields.size() != 2)
            detail::parse_error(line_no, "colouring line must be 'v c'");
        if (fields[0] >= n)
            detail::parse_error(line_no, "vertex out of range");
        if (fields[1] >= unset)
            detail::parse_error(line_no, "colour too large");
        auto& slot = colours[fields[0]];
        if (slot != unset)
            detail::parse_error(line_no, "vertex coloured twice");
        slot = static_cast<Colour>(fields[1]);
        largest = std::max(largest, slot);
        ++seen;
    }
    if (seen != n)
        throw std::runtime_error("colouring file: " + std::to_string(n - seen) + " vertices left uncoloured");
    return Colouring(std::move(colours), n == 0 ? 0 : static_cast<std::size_t>(largest) + 1);
}

void write_colouring(std::ostream& out, const Colouring& c)
{
    for (Vertex v = 0; v < c.size(); ++v)
        out << v << ' ' << c[v] << '\n';
}

}  // namespace frugal
