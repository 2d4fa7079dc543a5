#include "frugal/reduction.hpp"

#include "subsets.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace frugal {

namespace {

using SubsetCounts = std::unordered_map<std::vector<Vertex>, std::size_t, detail::VectorHash>;
using SubsetSet = std::unordered_set<std::vector<Vertex>, detail::VectorHash>;

// For every s-set S with a common neighbour, |N(S)| = number of v with S in N(v).
SubsetCounts common_neighbourhood_sizes(const Graph& g, std::size_t s)
{
    SubsetCounts counts;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        detail::for_each_subset(g.neighbours(v), s, [&](const std::vector<Vertex>& sub) {
            ++counts[sub];
            return true;
        });
    return counts;
}

bool independent(const Graph& g, const std::vector<Vertex>& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j]))
                return false;
    return true;
}

// True iff some subset of `s` with size in [2, max_size] lies in `edges`.
bool contains_edge(const std::vector<Vertex>& s, std::size_t max_size, const SubsetSet& edges)
{
    for (std::size_t size = 2; size <= max_size && size <= s.size(); ++size) {
        bool clean = detail::for_each_subset(s, size, [&](const std::vector<Vertex>& sub) { return !edges.contains(sub); });
        if (!clean)
            return true;
    }
    return false;
}

std::vector<VertexSet> sorted_sets(std::vector<std::vector<Vertex>> raw)
{
    std::sort(raw.begin(), raw.end());
    std::vector<VertexSet> out;
    out.reserve(raw.size());
    for (auto& s : raw)
        out.push_back(VertexSet::from_sorted_unique(std::move(s)));
    return out;
}

// Assembles E(G), the extra small edges, and every (beta+1)-subset of a
// neighbourhood that avoids all of those. Cost is sum_v C(deg v, beta+1).
Hypergraph assemble(const Graph& g, std::size_t beta, const std::vector<VertexSet>& extra, bool filter_large)
{
    SubsetSet small;
    std::vector<VertexSet> edges;
    for (auto [u, v] : g.edges()) {
        small.insert({u, v});
        edges.push_back(VertexSet::from_sorted_unique({u, v}));
    }
    for (const auto& e : extra) {
        small.emplace(e.begin(), e.end());
        edges.push_back(e);
    }

    SubsetSet large;
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        detail::for_each_subset(g.neighbours(v), beta + 1, [&](const std::vector<Vertex>& sub) {
            if (!large.contains(sub) && !(filter_large && contains_edge(sub, beta, small)))
                large.insert(sub);
            return true;
        });
    for (const auto& s : large)
        edges.push_back(VertexSet::from_sorted_unique(s));
    return Hypergraph(g.num_vertices(), std::move(edges));
}

}  // namespace

ReductionParams::ReductionParams(std::size_t beta, std::size_t t, double delta) : beta_(beta), t_(t), delta_(delta)
{
    if (beta < 2)
        throw std::invalid_argument("ReductionParams: beta must be at least 2");
    if (t < 2)
        throw std::invalid_argument("ReductionParams: t must be at least 2");
    if (!(delta >= 0.0) || !std::isfinite(delta))
        throw std::invalid_argument("ReductionParams: delta must be finite and non-negative");
}

ReductionParams ReductionParams::for_graph(const Graph& g, std::size_t beta, std::size_t t)
{
    return ReductionParams(beta, t, static_cast<double>(max_degree(g)));
}

double ReductionParams::f() const
{
    return std::pow(delta_, epsilon());
}

double ReductionParams::alpha_s(std::size_t s) const
{
    if (s < 1 || s > beta_)
        throw std::invalid_argument("alpha_s: need 1 <= s <= beta");
    if (s == 1)
        return delta_;
    // (beta+1-s)/beta - 1/(4 beta^2) over the common denominator 4 beta^2.
    const auto den = static_cast<double>(epsilon_denominator());
    const auto num = static_cast<double>(4 * beta_ * (beta_ + 1 - s) - 1);
    return std::pow(delta_, num / den);
}

Hypergraph build_basic(const Graph& g, std::size_t beta)
{
    if (beta < 1)
        throw std::invalid_argument("build_basic: beta must be at least 1");
    return assemble(g, beta, {}, false);
}

std::vector<VertexSet> find_special_pairs(const Graph& g, std::size_t alpha)
{
    if (alpha < 1)
        throw std::invalid_argument("find_special_pairs: alpha must be at least 1");
    std::vector<std::vector<Vertex>> raw;
    for (const auto& [pair, common] : common_neighbourhood_sizes(g, 2))
        if (common > alpha && !g.adjacent(pair[0], pair[1]))
            raw.push_back(pair);
    return sorted_sets(std::move(raw));
}

std::vector<std::size_t> special_pair_degrees(const Graph& g, std::size_t alpha)
{
    std::vector<std::size_t> sigma(g.num_vertices(), 0);
    for (const auto& pair : find_special_pairs(g, alpha)) {
        ++sigma[pair[0]];
        ++sigma[pair[1]];
    }
    return sigma;
}

Hypergraph build_cycle_reduction(const Graph& g, const ReductionParams& params)
{
    return assemble(g, params.beta(), find_special_pairs(g, params.alpha()), true);
}

std::vector<VertexSet> find_special_sets(const Graph& g, const ReductionParams& params)
{
    SubsetSet committed;
    std::vector<VertexSet> out;
    for (std::size_t s = 2; s <= params.beta(); ++s) {
        const double threshold = params.alpha_s(s);
        std::vector<std::vector<Vertex>> found;
        for (const auto& [set, common] : common_neighbourhood_sizes(g, s)) {
            if (!(static_cast<double>(common) > threshold))
                continue;
            if (!independent(g, set))
                continue;
            if (contains_edge(set, s - 1, committed))
                continue;
            found.push_back(set);
        }
        std::sort(found.begin(), found.end());
        for (auto& set : found) {
            committed.insert(set);
            out.push_back(VertexSet::from_sorted_unique(std::move(set)));
        }
    }
    return out;
}

Hypergraph build_kbt_reduction(const Graph& g, const ReductionParams& params)
{
    return assemble(g, params.beta(), find_special_sets(g, params), true);
}

double preset_f(FPreset preset, double delta, std::size_t beta, std::size_t t)
{
    if (beta < 1 || t < 1)
        throw std::invalid_argument("preset_f: beta and t must be positive");
    const auto b = static_cast<double>(beta);
    const auto tt = static_cast<double>(t);
    switch (preset) {
    case FPreset::K2t:
        return std::pow(delta, 1.0 / b) / tt;
    case FPreset::Cycle:
        return std::pow(delta, 1.0 / b) / (2.0 * tt);
    case FPreset::Kbt:
        return std::pow(delta, 1.0 / (4.0 * b * b));
    }
    throw std::invalid_argument("preset_f: unknown preset");
}

double Certificate::codegree_bound(std::size_t s, std::size_t ell) const
{
    return std::pow(delta_star, static_cast<double>(ell - s)) / f;
}

double Certificate::triangle_bound() const
{
    return delta_star * delta_star / f;
}

Certificate certify(const Hypergraph& h, double f)
{
    if (!(f > 1.0))
        throw std::invalid_argument("certify: f must exceed 1");
    Certificate cert;
    cert.rank = rank(h);
    if (cert.rank < 3)
        throw std::invalid_argument("certify: rank must be at least 3");
    cert.f = f;
    cert.delta_star = delta_star(h);

    cert.verdict_a = true;
    for (std::size_t ell = 3; ell <= cert.rank; ++ell)
        for (std::size_t s = 2; s < ell; ++s) {
            const std::size_t observed = max_codegree(h, s, ell);
            cert.codegree_table[{s, ell}] = observed;
            if (!(static_cast<double>(observed) <= cert.codegree_bound(s, ell)))
                cert.verdict_a = false;
        }

    std::vector<Edge> pairs;
    for (const auto& e : h.edges())
        if (e.size() == 2)
            pairs.emplace_back(e[0], e[1]);
    const Graph layer(h.num_vertices(), pairs);
    for (Vertex v = 0; v < layer.num_vertices(); ++v)
        cert.triangle_max = std::max(cert.triangle_max, count_triangles_at(layer, v));
    cert.verdict_b = static_cast<double>(cert.triangle_max) <= cert.triangle_bound();
    return cert;
}

void write_certificate(std::ostream& out, const Certificate& cert)
{
    const auto flags = out.flags();
    const auto precision = out.precision();
    out << std::setprecision(6);
    out << "rank " << cert.rank << '\n';
    out << "delta_star " << cert.delta_star << '\n';
    out << "f " << cert.f << '\n';
    for (const auto& [key, observed] : cert.codegree_table) {
        const double bound = cert.codegree_bound(key.first, key.second);
        out << "codegree s=" << key.first << " ell=" << key.second << " observed=" << observed << " bound=" << bound << ' '
            << (static_cast<double>(observed) <= bound ? "pass" : "fail") << '\n';
    }
    out << "triangles observed=" << cert.triangle_max << " bound=" << cert.triangle_bound() << ' '
        << (cert.verdict_b ? "pass" : "fail") << '\n';
    out << "verdict_a " << (cert.verdict_a ? "true" : "false") << '\n';
    out << "verdict_b " << (cert.verdict_b ? "true" : "false") << '\n';
    out.flags(flags);
    out.precision(precision);
}

}  // namespace frugal
