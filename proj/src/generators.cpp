#include "frugal/generators.hpp"

#include "frugal/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace frugal {

namespace {

// Returns base^exp, or nullopt-like max() on overflow past `cap`.
std::uint64_t capped_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap)
{
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (r > cap / std::max<std::uint64_t>(base, 1))
            return std::numeric_limits<std::uint64_t>::max();
        r *= base;
    }
    return r;
}

}  // namespace

Graph grid_graph(std::size_t n, std::size_t beta, std::size_t max_vertices)
{
    if (n < 2)
        throw std::invalid_argument("grid_graph: n must be at least 2");
    if (beta < 1)
        throw std::invalid_argument("grid_graph: beta must be at least 1");
    const std::size_t dims = beta + 1;
    const std::uint64_t count = capped_pow(n, dims, max_vertices);
    if (count > max_vertices)
        throw std::invalid_argument("grid_graph: n^(beta+1) exceeds the cap of " + std::to_string(max_vertices) + " vertices");

    std::vector<std::vector<std::size_t>> coords(count, std::vector<std::size_t>(dims));
    for (std::size_t v = 0; v < count; ++v) {
        std::size_t x = v;
        for (std::size_t d = dims; d-- > 0;) {
            coords[v][d] = x % n;
            x /= n;
        }
    }
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < count; ++u)
        for (std::size_t v = u + 1; v < count; ++v)
            for (std::size_t d = 0; d < dims; ++d)
                if (coords[u][d] == coords[v][d]) {
                    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
                    break;
                }
    return Graph(count, edges);
}

bool grid_colour_class_bound(const Graph& g, const Colouring& c, std::size_t beta)
{
    if (c.size() != g.num_vertices())
        throw std::invalid_argument("grid_colour_class_bound: colouring does not cover every vertex");
    std::map<Colour, std::size_t> class_size;
    for (Colour x : c.colours())
        if (++class_size[x] > beta)
            return false;
    return true;
}

bool is_prime(std::uint64_t q)
{
    if (q < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

Graph pg_incidence(std::uint64_t q, std::size_t beta, std::size_t max_vertices)
{
    if (!is_prime(q))
        throw std::invalid_argument("pg_incidence: q must be prime");
    if (beta < 1)
        throw std::invalid_argument("pg_incidence: beta must be at least 1");
    const std::size_t dim = beta + 2;
    const std::uint64_t total = capped_pow(q, dim, std::numeric_limits<std::uint64_t>::max() / 4);
    if (total == std::numeric_limits<std::uint64_t>::max() || 2 * ((total - 1) / (q - 1)) > max_vertices)
        throw std::invalid_argument("pg_incidence: instance exceeds the cap of " + std::to_string(max_vertices) + " vertices");

    // Normalised representatives of the 1-dimensional subspaces, in
    // lexicographic order. The same list indexes hyperplanes by normal vector.
    std::vector<std::vector<std::uint64_t>> reps;
    std::vector<std::uint64_t> vec(dim, 0);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t x = code;
        for (std::size_t d = dim; d-- > 0;) {
            vec[d] = x % q;
            x /= q;
        }
        auto lead = std::find_if(vec.begin(), vec.end(), [](std::uint64_t a) { return a != 0; });
        if (lead != vec.end() && *lead == 1)
            reps.push_back(vec);
    }

    const std::size_t side = reps.size();
    std::vector<Edge> edges;
    for (std::size_t p = 0; p < side; ++p)
        for (std::size_t h = 0; h < side; ++h) {
            std::uint64_t dot = 0;
            for (std::size_t d = 0; d < dim; ++d)
                dot = (dot + reps[p][d] * reps[h][d]) % q;
            if (dot == 0)
                edges.emplace_back(static_cast<Vertex>(p), static_cast<Vertex>(side + h));
        }
    return Graph(2 * side, edges);
}

Graph sample_gnp(const GnpSpec& spec)
{
    if (!(spec.p >= 0.0 && spec.p <= 1.0))
        throw std::invalid_argument("sample_gnp: p must lie in [0, 1]");
    Rng rng(spec.seed);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < spec.n; ++u)
        for (std::size_t v = u + 1; v < spec.n; ++v)
            if (rng.uniform01() < spec.p)
                edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return Graph(spec.n, edges);
}

namespace {

class PruneState {
public:
    PruneState(const Graph& g, std::vector<char> alive) : g_(g), alive_(std::move(alive)), degree_(g.num_vertices(), 0)
    {
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            if (alive_[v])
                for (Vertex w : g.neighbours(v))
                    degree_[v] += alive_[w] ? 1 : 0;
        dist_.assign(g.num_vertices(), unseen);
        parent_.resize(g.num_vertices());
        branch_.resize(g.num_vertices());
    }

    bool alive(Vertex v) const { return alive_[v]; }

    void remove(Vertex v)
    {
        alive_[v] = 0;
        for (Vertex w : g_.neighbours(v))
            if (alive_[w])
                --degree_[w];
    }

    // Vertices of a shortest cycle through root, if one is shorter than
    // `limit`. BFS depth (limit-1)/2 suffices: both halves of such a cycle
    // are at most that long.
    std::vector<Vertex> short_cycle_through(Vertex root, std::size_t limit)
    {
        if (limit <= 3)
            return {};
        const std::size_t depth = (limit - 1) / 2;
        for (Vertex v : visited_)
            dist_[v] = unseen;
        visited_.clear();

        dist_[root] = 0;
        parent_[root] = root;
        branch_[root] = root;
        visited_.push_back(root);
        std::size_t best = limit;
        Vertex best_u = root, best_w = root;
        for (std::size_t i = 0; i < visited_.size(); ++i) {
            const Vertex u = visited_[i];
            for (Vertex w : g_.neighbours(u)) {
                if (!alive_[w] || w == parent_[u])
                    continue;
                if (dist_[w] == unseen) {
                    if (dist_[u] == depth)
                        continue;
                    dist_[w] = dist_[u] + 1;
                    parent_[w] = u;
                    branch_[w] = (u == root) ? w : branch_[u];
                    visited_.push_back(w);
                } else if (u != root && w != root && branch_[u] != branch_[w]) {
                    const std::size_t len = dist_[u] + dist_[w] + 1;
                    if (len < best) {
                        best = len;
                        best_u = u;
                        best_w = w;
                    }
                }
            }
        }
        if (best >= limit)
            return {};
        std::vector<Vertex> cycle;
        for (Vertex x = best_u; x != root; x = parent_[x])
            cycle.push_back(x);
        cycle.push_back(root);
        for (Vertex x = best_w; x != root; x = parent_[x])
            cycle.push_back(x);
        return cycle;
    }

    Vertex pick_victim(const std::vector<Vertex>& cycle) const
    {
        Vertex victim = cycle.front();
        for (Vertex v : cycle)
            if (degree_[v] > degree_[victim] || (degree_[v] == degree_[victim] && v < victim))
                victim = v;
        return victim;
    }

    const std::vector<char>& alive_flags() const { return alive_; }

private:
    static constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();

    const Graph& g_;
    std::vector<char> alive_;
    std::vector<std::size_t> degree_;
    std::vector<std::size_t> dist_;
    std::vector<Vertex> parent_;
    std::vector<Vertex> branch_;
    std::vector<Vertex> visited_;
};

}  // namespace

PruneResult prune(const Graph& g, double d, std::size_t girth_target)
{
    if (!(d > 0.0))
        throw std::invalid_argument("prune: d must be positive");
    const std::size_t n = g.num_vertices();
    PruneResult result;
    std::vector<char> alive(n, 1);
    for (Vertex v = 0; v < n; ++v)
        if (static_cast<double>(g.degree(v)) >= 10.0 * d) {
            alive[v] = 0;
            result.removed_high_degree.push_back(v);
        }

    // Deletions never create cycles, so once no short cycle passes through a
    // root it stays that way; one sweep over roots clears them all.
    PruneState state(g, std::move(alive));
    for (Vertex root = 0; root < n; ++root) {
        while (state.alive(root)) {
            auto cycle = state.short_cycle_through(root, girth_target);
            if (cycle.empty())
                break;
            const Vertex victim = state.pick_victim(cycle);
            state.remove(victim);
            result.removed_for_cycles.push_back(victim);
        }
    }

    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
        if (state.alive_flags()[v])
            keep.push_back(v);
    result.original = keep;
    result.graph = induced_subgraph(g, VertexSet::from_sorted_unique(std::move(keep)));
    return result;
}

}  // namespace frugal
