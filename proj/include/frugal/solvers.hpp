#pragma once

#include "frugal/graph.hpp"
#include "frugal/hypergraph.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace frugal {

struct SolverResult {
    Colouring colouring;
    std::size_t palette_size = 0;
    /// Resampling rounds; 0 for greedy and exact solvers.
    std::size_t iterations = 0;
    std::uint64_t seed = 0;
};

struct SolverFailure {
    enum class Kind {
        Blocked,  ///< greedy: every colour was forbidden at `vertex`
        Timeout,  ///< resampling: round budget spent, no verdict on existence
    };
    Kind kind;
    std::optional<Vertex> vertex;
    std::size_t iterations = 0;
};

using SolveOutcome = std::variant<SolverResult, SolverFailure>;

/// Refusal raised by the exact solvers when an instance exceeds the cap.
class InstanceTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExactLimits {
    std::size_t max_vertices = 14;
};

/// Greedy with vertices ordered by descending 2-degree (ties by id). Colour c
/// is forbidden at v when some edge through v is otherwise entirely coloured c.
SolveOutcome greedy_colour(const Hypergraph& h, std::size_t k);

/// Moser-Tardos style resampling: uniform random start, then repeatedly
/// resample the vertices of the first monochromatic edge in canonical order.
/// A pure function of its arguments. Throws std::invalid_argument if k < 2.
SolveOutcome resample_colour(const Hypergraph& h, std::size_t k, std::uint64_t seed, std::size_t max_rounds);

/// Minimum-palette proper colouring by branch and bound.
SolverResult exact_colour(const Hypergraph& h, ExactLimits limits = {});
std::size_t exact_hypergraph_chromatic(const Hypergraph& h, ExactLimits limits = {});

/// Minimum-palette beta-frugal colouring of g, searched directly on g.
SolverResult exact_frugal_colour(const Graph& g, std::size_t beta, ExactLimits limits = {});
std::size_t exact_frugal_chromatic(const Graph& g, std::size_t beta, ExactLimits limits = {});

/// Ordinary chromatic number.
std::size_t exact_chromatic(const Graph& g, ExactLimits limits = {});

struct FrugalCheck {
    bool ok = true;
    /// First monochromatic edge, if the colouring is improper.
    std::optional<Edge> edge;
    /// A vertex whose neighbourhood holds `count` > beta vertices of `colour`.
    struct Overload {
        Vertex centre;
        Colour colour;
        std::size_t count;
    };
    std::optional<Overload> overload;

    explicit operator bool() const { return ok; }
};

FrugalCheck verify_frugal(const Graph& g, const Colouring& c, std::size_t beta);

/// True iff c is proper on g and no subgraph copy of the tree `pattern` uses
/// exactly two colours. Throws std::invalid_argument if `pattern` is not a
/// tree with at least two edges.
bool verify_avoiding(const Graph& g, const Colouring& c, const Graph& pattern);

/// K_{1,leaves}
Graph star_pattern(std::size_t leaves);
/// Path on `vertices` vertices.
Graph path_pattern(std::size_t vertices);

}  // namespace frugal
