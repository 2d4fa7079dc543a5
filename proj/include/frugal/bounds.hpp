#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace frugal {

/// A named bound evaluation. When an instance is checked against a bound,
/// `limit` holds the bound and `value` the observed quantity.
struct BoundReport {
    std::string name;
    std::vector<std::pair<std::string, double>> inputs;
    double value = 0.0;
    std::optional<double> limit;
    std::optional<bool> satisfied;
};

/// Raised when a bound is evaluated outside the range where it is claimed.
class PreconditionViolation : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// (t-2) n / 2: edge bound for graphs without a path on t vertices.
double erdos_gallai_bound(std::size_t t, std::size_t n);

/// (t-1)^(1/s) (a-s+1) b^(1-1/s) + (s-1) b. Requires a >= s >= 2, b >= t >= 2.
double kst_bound(std::size_t a, std::size_t b, std::size_t s, std::size_t t);

/// x - x^(n+1)/(e (n+1)!) - log(sum_{i<=n} x^i/i!), which is non-negative on
/// 0 <= x <= 1. Requires n >= 1.
double partial_exp_log_gap(double x, std::size_t n);

/// P[Bin(trials, p) <= beta], summed in long double from log-space terms.
long double binomial_cdf(std::size_t trials, long double p, std::size_t beta);

/// Compares P[Bin(t, p) <= beta] with exp(-(tp)^(beta+1) / (4 (beta+1)!)).
/// Requires 1/d < tp < 1 and beta p <= (tp)^(beta+1) (1/e - 1/4) / (beta+1)!,
/// throwing PreconditionViolation otherwise.
BoundReport binomial_tail_bound_check(std::size_t t, double p, std::size_t beta, double d);

/// (4^(beta+5) (beta+1)!)^(-1/beta) d^(1+1/beta) / (log d)^(1/beta), natural log.
double randomgraph_k(double d, std::size_t beta);

/// (1/100) (4^(beta+5) (beta+1)!)^(-1/beta)
double c_beta(std::size_t beta);

/// t delta / (alpha - t) with alpha = 2t, which simplifies to delta.
double sigma_bound_cycle(std::size_t t, double delta);

/// Reference line e^3/beta * delta^(1+1/beta); displayed only.
double hmr_upper_reference(double delta, std::size_t beta);

void write_reports_text(std::ostream& out, const std::vector<BoundReport>& reports);
void write_reports_csv(std::ostream& out, const std::vector<BoundReport>& reports);

}  // namespace frugal
