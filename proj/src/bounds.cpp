#include "frugal/bounds.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <sstream>

namespace frugal {

namespace {

// log(4^(beta+5) (beta+1)!)
double log_randomgraph_denominator(std::size_t beta)
{
    const auto b = static_cast<double>(beta);
    return (b + 5.0) * std::log(4.0) + std::lgamma(b + 2.0);
}

std::string format_number(double x)
{
    std::ostringstream os;
    os << std::setprecision(6) << x;
    return os.str();
}

std::string format_inputs(const BoundReport& r)
{
    std::string out;
    for (const auto& [key, value] : r.inputs) {
        if (!out.empty())
            out += ';';
        out += key + '=' + format_number(value);
    }
    return out;
}

}  // namespace

double erdos_gallai_bound(std::size_t t, std::size_t n)
{
    if (t < 2)
        throw PreconditionViolation("erdos_gallai_bound: t must be at least 2");
    return static_cast<double>(t - 2) * static_cast<double>(n) / 2.0;
}

double kst_bound(std::size_t a, std::size_t b, std::size_t s, std::size_t t)
{
    if (!(a >= s && s >= 2 && b >= t && t >= 2))
        throw PreconditionViolation("kst_bound: need a >= s >= 2 and b >= t >= 2");
    const auto sd = static_cast<double>(s);
    const auto bd = static_cast<double>(b);
    return std::pow(static_cast<double>(t - 1), 1.0 / sd) * static_cast<double>(a - s + 1) * std::pow(bd, 1.0 - 1.0 / sd)
        + static_cast<double>(s - 1) * bd;
}

double partial_exp_log_gap(double x, std::size_t n)
{
    if (!(x >= 0.0 && x <= 1.0))
        throw PreconditionViolation("partial_exp_log_gap: x must lie in [0, 1]");
    if (n < 1)
        throw PreconditionViolation("partial_exp_log_gap: n must be at least 1");
    // log1p keeps the tiny-x end accurate; the sum excludes the leading 1.
    double term = 1.0;
    double tail = 0.0;
    for (std::size_t i = 1; i <= n; ++i) {
        term *= x / static_cast<double>(i);
        tail += term;
    }
    const double next = term * x / static_cast<double>(n + 1);
    return x - next / std::numbers::e - std::log1p(tail);
}

long double binomial_cdf(std::size_t trials, long double p, std::size_t beta)
{
    if (!(p >= 0.0L && p <= 1.0L))
        throw PreconditionViolation("binomial_cdf: p must lie in [0, 1]");
    if (beta >= trials)
        return 1.0L;
    if (p == 0.0L)
        return 1.0L;
    if (p == 1.0L)
        return 0.0L;
    const long double log_p = std::log(p);
    const long double log_q = std::log1p(-p);
    const auto n = static_cast<long double>(trials);
    long double sum = 0.0L;
    for (std::size_t i = 0; i <= beta; ++i) {
        const auto k = static_cast<long double>(i);
        const long double log_term = std::lgamma(n + 1.0L) - std::lgamma(k + 1.0L) - std::lgamma(n - k + 1.0L) + k * log_p + (n - k) * log_q;
        sum += std::exp(log_term);
    }
    return sum;
}

BoundReport binomial_tail_bound_check(std::size_t t, double p, std::size_t beta, double d)
{
    if (beta < 1)
        throw PreconditionViolation("binomial_tail_bound_check: beta must be at least 1");
    if (!(d > 0.0) || !(p > 0.0 && p < 1.0) || t == 0)
        throw PreconditionViolation("binomial_tail_bound_check: need d > 0, 0 < p < 1, t >= 1");
    const long double tp = static_cast<long double>(t) * p;
    if (!(1.0L / d < tp && tp < 1.0L)) {
        std::ostringstream os;
        os << "binomial_tail_bound_check: need 1/d < tp < 1, got tp = " << static_cast<double>(tp) << " and 1/d = " << 1.0 / d;
        throw PreconditionViolation(os.str());
    }
    const long double factorial = std::tgamma(static_cast<long double>(beta) + 2.0L);
    const long double power = std::pow(tp, static_cast<long double>(beta + 1));
    const long double slack = power * (1.0L / std::numbers::e_v<long double> - 0.25L) / factorial;
    if (!(static_cast<long double>(beta) * p <= slack)) {
        std::ostringstream os;
        os << "binomial_tail_bound_check: need beta*p <= (tp)^(beta+1)(1/e - 1/4)/(beta+1)!, got " << static_cast<double>(beta * p)
           << " > " << static_cast<double>(slack);
        throw PreconditionViolation(os.str());
    }

    const long double exact = binomial_cdf(t, p, beta);
    const long double bound = std::exp(-power / (4.0L * factorial));

    BoundReport report;
    report.name = "binomial_tail";
    report.inputs = {{"t", static_cast<double>(t)}, {"p", p}, {"beta", static_cast<double>(beta)}, {"d", d}};
    report.value = static_cast<double>(exact);
    report.limit = static_cast<double>(bound);
    report.satisfied = exact <= bound;
    return report;
}

double randomgraph_k(double d, std::size_t beta)
{
    if (!(d > 1.0))
        throw PreconditionViolation("randomgraph_k: d must exceed 1");
    if (beta < 1)
        throw PreconditionViolation("randomgraph_k: beta must be at least 1");
    const auto b = static_cast<double>(beta);
    return std::exp(-log_randomgraph_denominator(beta) / b) * std::pow(d, 1.0 + 1.0 / b) / std::pow(std::log(d), 1.0 / b);
}

double c_beta(std::size_t beta)
{
    if (beta < 1)
        throw PreconditionViolation("c_beta: beta must be at least 1");
    return std::exp(-log_randomgraph_denominator(beta) / static_cast<double>(beta)) / 100.0;
}

double sigma_bound_cycle(std::size_t t, double delta)
{
    if (t < 2)
        throw PreconditionViolation("sigma_bound_cycle: t must be at least 2");
    if (!(delta >= 1.0))
        throw PreconditionViolation("sigma_bound_cycle: delta must be at least 1");
    const auto td = static_cast<double>(t);
    const double alpha = 2.0 * td;
    return td * delta / (alpha - td);
}

double hmr_upper_reference(double delta, std::size_t beta)
{
    const auto b = static_cast<double>(beta);
    return std::exp(3.0) / b * std::pow(delta, 1.0 + 1.0 / b);
}

void write_reports_text(std::ostream& out, const std::vector<BoundReport>& reports)
{
    std::size_t name_width = 4;
    for (const auto& r : reports)
        name_width = std::max(name_width, r.name.size());
    out << std::left << std::setw(static_cast<int>(name_width)) << "name" << "  " << std::setw(14) << "value" << std::setw(14) << "limit"
        << std::setw(10) << "satisfied" << "inputs" << '\n';
    for (const auto& r : reports) {
        out << std::setw(static_cast<int>(name_width)) << r.name << "  " << std::setw(14) << format_number(r.value) << std::setw(14)
            << (r.limit ? format_number(*r.limit) : "-") << std::setw(10) << (r.satisfied ? (*r.satisfied ? "yes" : "no") : "-")
            << format_inputs(r) << '\n';
    }
    out << std::right;
}

void write_reports_csv(std::ostream& out, const std::vector<BoundReport>& reports)
{
    out << "name,inputs,value,limit,satisfied\n";
    for (const auto& r : reports)
        out << r.name << ',' << format_inputs(r) << ',' << format_number(r.value) << ',' << (r.limit ? format_number(*r.limit) : "") << ','
            << (r.satisfied ? (*r.satisfied ? "true" : "false") : "") << '\n';
}

}  // namespace frugal
