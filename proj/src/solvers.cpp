#include "frugal/solvers.hpp"

#include "frugal/rng.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>
#include <set>

namespace frugal {

namespace {

constexpr Colour uncoloured = std::numeric_limits<Colour>::max();

std::vector<Vertex> by_descending(std::vector<std::size_t> key)
{
    std::vector<Vertex> order(key.size());
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return key[a] > key[b]; });
    return order;
}

bool monochromatic(const VertexSet& e, const std::vector<Colour>& colour)
{
    const Colour first = colour[e[0]];
    return std::all_of(e.begin(), e.end(), [&](Vertex v) { return colour[v] == first; });
}

// Branch and bound over a fixed vertex order. Colours are opened in first-use
// order; a branch is cut once the palette it needs can no longer beat the
// incumbent. `allowed(v, c)` tests c at v given the assignment so far;
// `assign`/`unassign` maintain whatever state `allowed` reads.
struct ColourSearch {
    std::vector<Vertex> order;
    std::function<bool(Vertex, Colour)> allowed;
    std::function<void(Vertex, Colour)> assign;
    std::function<void(Vertex, Colour)> unassign;
    std::size_t lower_bound = 0;

    std::vector<Colour> current;
    std::vector<Colour> best_colours;
    std::size_t best = 0;

    void run(std::size_t n)
    {
        current.assign(n, uncoloured);
        best = n + 1;
        descend(0, 0);
    }

    // Returns true once the incumbent matches the lower bound.
    bool descend(std::size_t depth, std::size_t used)
    {
        if (depth == order.size()) {
            best = used;
            best_colours = current;
            return best <= lower_bound;
        }
        const Vertex v = order[depth];
        // c may reuse an open colour or open colour `used`; either way the
        // palette must stay below the incumbent, which can shrink mid-loop.
        for (std::size_t c = 0; c <= used && std::max(used, c + 1) < best; ++c) {
            const auto colour = static_cast<Colour>(c);
            if (!allowed(v, colour))
                continue;
            current[v] = colour;
            assign(v, colour);
            const bool done = descend(depth + 1, std::max(used, c + 1));
            unassign(v, colour);
            current[v] = uncoloured;
            if (done)
                return true;
        }
        return false;
    }
};

void check_cap(std::size_t n, const ExactLimits& limits)
{
    if (n > limits.max_vertices)
        throw InstanceTooLarge("exact solver refuses " + std::to_string(n) + " vertices (cap " + std::to_string(limits.max_vertices) + ")");
}

bool is_tree(const Graph& p)
{
    if (p.num_vertices() == 0 || p.num_edges() + 1 != p.num_vertices())
        return false;
    std::vector<char> seen(p.num_vertices(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex w : p.neighbours(v))
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == p.num_vertices();
}

}  // namespace

SolveOutcome greedy_colour(const Hypergraph& h, std::size_t k)
{
    if (k < 1)
        throw std::invalid_argument("greedy_colour: k must be at least 1");
    const std::size_t n = h.num_vertices();
    std::vector<std::size_t> two_degree(n, 0);
    for (const auto& e : h.edges())
        if (e.size() == 2) {
            ++two_degree[e[0]];
            ++two_degree[e[1]];
        }

    std::vector<Colour> colour(n, uncoloured);
    std::vector<char> forbidden(k);
    for (Vertex v : by_descending(two_degree)) {
        std::fill(forbidden.begin(), forbidden.end(), 0);
        for (std::size_t idx : h.incident(v)) {
            const auto& e = h.edges()[idx];
            Colour shared = uncoloured;
            bool blocks = true;
            for (Vertex u : e) {
                if (u == v)
                    continue;
                if (colour[u] == uncoloured || (shared != uncoloured && colour[u] != shared)) {
                    blocks = false;
                    break;
                }
                shared = colour[u];
            }
            if (blocks && shared < k)
                forbidden[shared] = 1;
        }
        auto free = std::find(forbidden.begin(), forbidden.end(), 0);
        if (free == forbidden.end())
            return SolverFailure{SolverFailure::Kind::Blocked, v, 0};
        colour[v] = static_cast<Colour>(free - forbidden.begin());
    }
    return SolverResult{Colouring(std::move(colour), k), k, 0, 0};
}

SolveOutcome resample_colour(const Hypergraph& h, std::size_t k, std::uint64_t seed, std::size_t max_rounds)
{
    if (k < 2)
        throw std::invalid_argument("resample_colour: k must be at least 2");
    const std::size_t n = h.num_vertices();
    Rng rng(seed);
    std::vector<Colour> colour(n);
    for (auto& c : colour)
        c = static_cast<Colour>(rng.below(k));

    std::set<std::size_t> bad;
    for (std::size_t i = 0; i < h.num_edges(); ++i)
        if (monochromatic(h.edges()[i], colour))
            bad.insert(i);

    std::size_t rounds = 0;
    while (!bad.empty()) {
        if (rounds == max_rounds)
            return SolverFailure{SolverFailure::Kind::Timeout, std::nullopt, rounds};
        const VertexSet& e = h.edges()[*bad.begin()];
        for (Vertex v : e)
            colour[v] = static_cast<Colour>(rng.below(k));
        for (Vertex v : e)
            for (std::size_t idx : h.incident(v)) {
                if (monochromatic(h.edges()[idx], colour))
                    bad.insert(idx);
                else
                    bad.erase(idx);
            }
        ++rounds;
    }
    return SolverResult{Colouring(std::move(colour), k), k, rounds, seed};
}

SolverResult exact_colour(const Hypergraph& h, ExactLimits limits)
{
    const std::size_t n = h.num_vertices();
    check_cap(n, limits);
    if (n == 0)
        return SolverResult{Colouring({}, 0), 0, 0, 0};

    std::vector<std::size_t> degree(n);
    for (Vertex v = 0; v < n; ++v)
        degree[v] = h.incident(v).size();

    ColourSearch search;
    search.order = by_descending(degree);
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i)
        position[search.order[i]] = i;

    // Each edge is checked once, when its last vertex in the order is coloured.
    std::vector<std::vector<std::size_t>> closes(n);
    for (std::size_t i = 0; i < h.num_edges(); ++i) {
        const auto& e = h.edges()[i];
        Vertex last = *std::max_element(e.begin(), e.end(), [&](Vertex a, Vertex b) { return position[a] < position[b]; });
        closes[last].push_back(i);
    }

    search.lower_bound = h.num_edges() > 0 ? 2 : 1;
    search.allowed = [&](Vertex v, Colour c) {
        for (std::size_t idx : closes[v]) {
            const auto& e = h.edges()[idx];
            if (std::all_of(e.begin(), e.end(), [&](Vertex u) { return u == v || search.current[u] == c; }))
                return false;
        }
        return true;
    };
    search.assign = [](Vertex, Colour) {};
    search.unassign = [](Vertex, Colour) {};
    search.run(n);
    return SolverResult{Colouring(search.best_colours, search.best), search.best, 0, 0};
}

std::size_t exact_hypergraph_chromatic(const Hypergraph& h, ExactLimits limits)
{
    return exact_colour(h, limits).palette_size;
}

SolverResult exact_frugal_colour(const Graph& g, std::size_t beta, ExactLimits limits)
{
    if (beta < 1)
        throw std::invalid_argument("exact_frugal_colour: beta must be at least 1");
    const std::size_t n = g.num_vertices();
    check_cap(n, limits);
    if (n == 0)
        return SolverResult{Colouring({}, 0), 0, 0, 0};

    std::vector<std::size_t> degree(n);
    for (Vertex v = 0; v < n; ++v)
        degree[v] = g.degree(v);

    // load[w * n + c]: coloured neighbours of w carrying colour c.
    std::vector<std::size_t> load(n * n, 0);
    ColourSearch search;
    search.order = by_descending(degree);
    const std::size_t delta = max_degree(g);
    search.lower_bound = delta == 0 ? 1 : (delta + beta - 1) / beta + 1;
    search.allowed = [&](Vertex v, Colour c) {
        for (Vertex w : g.neighbours(v)) {
            if (search.current[w] == c)
                return false;
            if (load[w * n + c] >= beta)
                return false;
        }
        return true;
    };
    search.assign = [&](Vertex v, Colour c) {
        for (Vertex w : g.neighbours(v))
            ++load[w * n + c];
    };
    search.unassign = [&](Vertex v, Colour c) {
        for (Vertex w : g.neighbours(v))
            --load[w * n + c];
    };
    search.run(n);
    return SolverResult{Colouring(search.best_colours, search.best), search.best, 0, 0};
}

std::size_t exact_frugal_chromatic(const Graph& g, std::size_t beta, ExactLimits limits)
{
    return exact_frugal_colour(g, beta, limits).palette_size;
}

std::size_t exact_chromatic(const Graph& g, ExactLimits limits)
{
    return exact_hypergraph_chromatic(Hypergraph::from_graph(g), limits);
}

FrugalCheck verify_frugal(const Graph& g, const Colouring& c, std::size_t beta)
{
    if (c.size() != g.num_vertices())
        throw std::invalid_argument("verify_frugal: colouring does not cover every vertex");
    FrugalCheck result;
    for (auto [u, v] : g.edges())
        if (c[u] == c[v]) {
            result.ok = false;
            result.edge = Edge{u, v};
            return result;
        }
    std::vector<Colour> seen;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        seen.clear();
        for (Vertex w : g.neighbours(v))
            seen.push_back(c[w]);
        std::sort(seen.begin(), seen.end());
        for (std::size_t i = 0; i < seen.size();) {
            std::size_t j = i;
            while (j < seen.size() && seen[j] == seen[i])
                ++j;
            if (j - i > beta) {
                result.ok = false;
                result.overload = FrugalCheck::Overload{v, seen[i], j - i};
                return result;
            }
            i = j;
        }
    }
    return result;
}

bool verify_avoiding(const Graph& g, const Colouring& c, const Graph& pattern)
{
    if (pattern.num_edges() < 2 || !is_tree(pattern))
        throw std::invalid_argument("verify_avoiding: pattern must be a tree with at least two edges");
    if (c.size() != g.num_vertices())
        throw std::invalid_argument("verify_avoiding: colouring does not cover every vertex");
    for (auto [u, v] : g.edges())
        if (c[u] == c[v])
            return false;

    // BFS order of the pattern from vertex 0; parity decides which of the two
    // colours a pattern vertex must carry.
    const std::size_t k = pattern.num_vertices();
    std::vector<Vertex> order{0};
    std::vector<Vertex> parent(k, 0);
    std::vector<std::size_t> parity(k, 0);
    std::vector<char> seen(k, 0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Vertex w : pattern.neighbours(order[i]))
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = order[i];
                parity[w] = 1 - parity[order[i]];
                order.push_back(w);
            }

    std::vector<Vertex> image(k);
    std::vector<char> used(g.num_vertices(), 0);
    Colour side[2] = {uncoloured, uncoloured};

    std::function<bool(std::size_t)> embed = [&](std::size_t depth) -> bool {
        if (depth == k)
            return true;
        const Vertex p = order[depth];
        const std::size_t want = parity[p];
        const bool opens = side[want] == uncoloured;
        for (Vertex x : g.neighbours(image[parent[p]])) {
            if (used[x] || (!opens && c[x] != side[want]))
                continue;
            used[x] = 1;
            image[p] = x;
            if (opens)
                side[want] = c[x];
            const bool found = embed(depth + 1);
            if (opens)
                side[want] = uncoloured;
            used[x] = 0;
            if (found)
                return true;
        }
        return false;
    };

    for (Vertex r = 0; r < g.num_vertices(); ++r) {
        image[0] = r;
        used[r] = 1;
        side[0] = c[r];
        const bool found = embed(1);
        used[r] = 0;
        side[0] = uncoloured;
        if (found)
            return false;
    }
    return true;
}

Graph star_pattern(std::size_t leaves)
{
    std::vector<Edge> edges;
    for (Vertex i = 1; i <= leaves; ++i)
        edges.emplace_back(0, i);
    return Graph(leaves + 1, edges);
}

Graph path_pattern(std::size_t vertices)
{
    std::vector<Edge> edges;
    for (Vertex i = 1; i < vertices; ++i)
        edges.emplace_back(i - 1, i);
    return Graph(vertices, edges);
}

}  // namespace frugal
