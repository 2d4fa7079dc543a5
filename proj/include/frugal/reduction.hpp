#pragma once

#include "frugal/graph.hpp"
#include "frugal/hypergraph.hpp"

#include <cstddef>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

namespace frugal {

/// Frugality, forbidden-pattern parameter, and the degree scale the
/// thresholds are computed from.
///
/// The exponent epsilon = 1/(4 beta^2) is kept as an exact rational and only
/// turned into a float when a threshold is evaluated.
class ReductionParams {
public:
    /// Throws std::invalid_argument unless beta >= 2, t >= 2 and delta >= 0.
    ReductionParams(std::size_t beta, std::size_t t, double delta);
    /// Uses the maximum degree of g as delta.
    static ReductionParams for_graph(const Graph& g, std::size_t beta, std::size_t t);

    std::size_t beta() const { return beta_; }
    std::size_t t() const { return t_; }
    double delta() const { return delta_; }

    std::size_t epsilon_denominator() const { return 4 * beta_ * beta_; }
    double epsilon() const { return 1.0 / static_cast<double>(epsilon_denominator()); }
    /// delta^epsilon
    double f() const;
    /// Common-neighbourhood threshold for special pairs in the cycle reduction.
    std::size_t alpha() const { return 2 * t_; }
    /// delta for s = 1, delta^((beta+1-s)/beta - epsilon) for 2 <= s <= beta.
    double alpha_s(std::size_t s) const;

private:
    std::size_t beta_;
    std::size_t t_;
    double delta_;
};

/// Edges of g plus every (beta+1)-subset of a neighbourhood. Its proper
/// colourings are exactly the beta-frugal colourings of g.
Hypergraph build_basic(const Graph& g, std::size_t beta);

/// Non-adjacent pairs with strictly more than `alpha` common neighbours,
/// in lexicographic order.
std::vector<VertexSet> find_special_pairs(const Graph& g, std::size_t alpha);

/// |sigma(u)| for every vertex: how many special pairs contain u.
std::vector<std::size_t> special_pair_degrees(const Graph& g, std::size_t alpha);

/// Edges of g, special pairs for alpha = 2t, and the (beta+1)-subsets of
/// neighbourhoods that contain none of those 2-edges.
Hypergraph build_cycle_reduction(const Graph& g, const ReductionParams& params);

/// Independent s-sets (2 <= s <= beta) with more than alpha_s common
/// neighbours that contain no smaller special set. Ordered by size, then
/// lexicographically.
std::vector<VertexSet> find_special_sets(const Graph& g, const ReductionParams& params);

/// Edges of g, all special sets, and the (beta+1)-subsets of neighbourhoods
/// containing none of the smaller edges.
Hypergraph build_kbt_reduction(const Graph& g, const ReductionParams& params);

enum class FPreset {
    K2t,    ///< delta^(1/beta) / t
    Cycle,  ///< delta^(1/beta) / (2t)
    Kbt,    ///< delta^(1/(4 beta^2))
};

double preset_f(FPreset preset, double delta, std::size_t beta, std::size_t t);

/// Observed sparsity data of a hypergraph checked against the codegree and
/// triangle hypotheses for a given f.
struct Certificate {
    std::size_t rank = 0;
    double delta_star = 0.0;
    double f = 0.0;
    /// (s, ell) -> maximum (s, ell)-codegree, for 2 <= s < ell <= rank.
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> codegree_table;
    /// Maximum number of triangles at a vertex of the 2-edge layer.
    std::size_t triangle_max = 0;
    bool verdict_a = false;
    bool verdict_b = false;

    /// delta_star^(ell - s) / f
    double codegree_bound(std::size_t s, std::size_t ell) const;
    /// delta_star^2 / f
    double triangle_bound() const;
};

/// Throws std::invalid_argument if f <= 1 or rank(h) < 3.
Certificate certify(const Hypergraph& h, double f);

/// One line per (s, ell) with observed codegree, bound and pass/fail, then the
/// triangle line and the two verdicts.
void write_certificate(std::ostream& out, const Certificate& cert);

}  // namespace frugal
