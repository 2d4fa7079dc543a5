// frugal: command-line front end for generation, reduction, certification,
// colouring, verification, bound evaluation, and experiment pipelines.
//
// Exit codes: 0 success, 1 usage error, 2 instance failure, 3 verification failure.

#include "frugal/bounds.hpp"
#include "frugal/generators.hpp"
#include "frugal/graph.hpp"
#include "frugal/hypergraph.hpp"
#include "frugal/pipeline.hpp"
#include "frugal/reduction.hpp"
#include "frugal/solvers.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace frugal;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_instance = 2;
constexpr int exit_verify = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InstanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <typename Fn>
auto with_input(const std::string& path, Fn&& fn)
{
    std::ifstream in(path);
    if (!in)
        throw InstanceError("cannot open '" + path + "'");
    try {
        return fn(in);
    } catch (const std::runtime_error& e) {
        throw InstanceError(path + ": " + e.what());
    }
}

Graph load_graph(const std::string& path)
{
    return with_input(path, [](std::istream& in) { return read_graph(in); });
}

Hypergraph load_hypergraph(const std::string& path)
{
    return with_input(path, [](std::istream& in) { return read_hypergraph(in); });
}

// Writes to `path`, or stdout when empty or "-".
template <typename Fn>
void with_output(const std::string& path, Fn&& fn)
{
    if (path.empty() || path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw InstanceError("cannot write '" + path + "'");
    fn(out);
}

std::optional<FPreset> parse_preset(const std::string& name)
{
    if (name == "k2t")
        return FPreset::K2t;
    if (name == "cycle")
        return FPreset::Cycle;
    if (name == "kbt")
        return FPreset::Kbt;
    return std::nullopt;
}

Hypergraph reduce_graph(const Graph& g, const std::string& kind, std::size_t beta, std::size_t t, std::optional<double> delta)
{
    if (kind == "basic")
        return build_basic(g, beta);
    const ReductionParams params = delta ? ReductionParams(beta, t, *delta) : ReductionParams::for_graph(g, beta, t);
    if (kind == "cycle")
        return build_cycle_reduction(g, params);
    if (kind == "kbt")
        return build_kbt_reduction(g, params);
    throw UsageError("unknown reduction kind '" + kind + "'");
}

// --- generate --------------------------------------------------------------

struct GenerateOptions {
    std::string kind;
    std::size_t n = 0;
    std::size_t beta = 1;
    std::uint64_t q = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::string prune;
    std::string out;
    std::size_t girth_cap = 5000;
};

int run_generate(const GenerateOptions& o)
{
    InstanceSpec spec;
    spec.kind = o.kind;
    spec.id = o.kind;
    spec.params["beta"] = std::to_string(o.beta);
    if (o.kind == "grid") {
        spec.params["n"] = std::to_string(o.n);
    } else if (o.kind == "pg") {
        spec.params["q"] = std::to_string(o.q);
    } else {
        std::ostringstream p;
        p.precision(17);
        p << o.p;
        spec.params["n"] = std::to_string(o.n);
        spec.params["p"] = p.str();
        spec.params["seed"] = std::to_string(o.seed);
        if (!o.prune.empty())
            spec.params["prune"] = o.prune;
    }
    Graph g;
    try {
        g = generate_instance(spec, o.beta, default_generator_cap);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    with_output(o.out, [&](std::ostream& out) { write_graph(out, g); });
    std::ostream& summary = (o.out.empty() || o.out == "-") ? std::cerr : std::cout;
    summary << "n=" << g.num_vertices() << " m=" << g.num_edges() << " max_degree=" << max_degree(g);
    if (g.num_vertices() <= o.girth_cap) {
        auto gi = girth(g);
        summary << " girth=" << (gi ? std::to_string(*gi) : std::string("inf"));
    }
    summary << '\n';
    return exit_ok;
}

// --- reduce / certify ------------------------------------------------------

struct ReduceOptions {
    std::string graph;
    std::string kind = "basic";
    std::size_t beta = 2;
    std::size_t t = 2;
    std::optional<double> delta;
    std::string out;
    bool certify = false;
    std::optional<double> f;
    std::string f_preset;
    std::string report;
};

double resolve_f(std::optional<double> f, const std::string& preset, double delta, std::size_t beta, std::size_t t)
{
    if (f)
        return *f;
    if (preset.empty())
        throw UsageError("certification needs --f or --f-preset");
    auto p = parse_preset(preset);
    if (!p)
        throw UsageError("unknown f preset '" + preset + "'");
    return preset_f(*p, delta, beta, t);
}

int certify_and_report(const Hypergraph& h, double f, const std::string& report)
{
    Certificate cert;
    try {
        cert = certify(h, f);
    } catch (const std::invalid_argument& e) {
        throw InstanceError(e.what());
    }
    with_output(report, [&](std::ostream& out) { write_certificate(out, cert); });
    return cert.verdict_a && cert.verdict_b ? exit_ok : exit_verify;
}

int run_reduce(const ReduceOptions& o)
{
    const Graph g = load_graph(o.graph);
    Hypergraph h;
    try {
        h = reduce_graph(g, o.kind, o.beta, o.t, o.delta);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    with_output(o.out, [&](std::ostream& out) { write_hypergraph(out, h); });
    if (!o.certify)
        return exit_ok;
    const double delta = o.delta.value_or(static_cast<double>(max_degree(g)));
    const double f = resolve_f(o.f, o.f_preset, delta, o.beta, o.t);
    // Keep the hypergraph alone on stdout unless the report has its own file.
    const std::string report = o.report.empty() && (o.out.empty() || o.out == "-") ? std::string("/dev/stderr") : o.report;
    return certify_and_report(h, f, report);
}

struct CertifyOptions {
    std::string hypergraph;
    std::optional<double> f;
    std::string f_preset;
    double delta = 0.0;
    std::size_t beta = 2;
    std::size_t t = 2;
    std::string out;
};

int run_certify(const CertifyOptions& o)
{
    const Hypergraph h = load_hypergraph(o.hypergraph);
    return certify_and_report(h, resolve_f(o.f, o.f_preset, o.delta, o.beta, o.t), o.out);
}

// --- color -----------------------------------------------------------------

struct ColorOptions {
    std::string hypergraph;
    std::string graph;
    std::string reduction = "basic";
    std::string algo = "greedy";
    std::size_t k = 0;
    std::uint64_t seed = 0;
    std::size_t max_rounds = 100000;
    std::size_t beta = 2;
    std::size_t t = 2;
    std::size_t exact_cap = 14;
    std::string out;
};

int run_color(const ColorOptions& o)
{
    if (o.hypergraph.empty() == o.graph.empty())
        throw UsageError("give exactly one of --hypergraph or --graph");
    std::optional<Graph> g;
    Hypergraph h;
    if (!o.graph.empty()) {
        g = load_graph(o.graph);
        try {
            h = reduce_graph(*g, o.reduction, o.beta, o.t, std::nullopt);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    } else {
        h = load_hypergraph(o.hypergraph);
    }

    std::optional<SolverResult> result;
    try {
        if (o.algo == "exact") {
            result = exact_colour(h, ExactLimits{o.exact_cap});
        } else {
            if (o.k == 0)
                throw UsageError("--k is required for greedy and resample");
            SolveOutcome outcome = o.algo == "greedy" ? greedy_colour(h, o.k) : resample_colour(h, o.k, o.seed, o.max_rounds);
            if (auto* failure = std::get_if<SolverFailure>(&outcome)) {
                if (failure->kind == SolverFailure::Kind::Blocked)
                    std::cerr << "greedy blocked at vertex " << *failure->vertex << " with k=" << o.k << '\n';
                else
                    std::cerr << "resampling gave up after " << failure->iterations << " rounds with k=" << o.k << '\n';
                return exit_instance;
            }
            result = std::get<SolverResult>(std::move(outcome));
        }
    } catch (const InstanceTooLarge& e) {
        throw InstanceError(e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    if (!is_proper(h, result->colouring)) {
        std::cerr << "internal error: solver returned an improper colouring\n";
        return exit_verify;
    }
    if (g && o.reduction == "basic" && !verify_frugal(*g, result->colouring, o.beta)) {
        std::cerr << "internal error: colouring is not " << o.beta << "-frugal\n";
        return exit_verify;
    }
    with_output(o.out, [&](std::ostream& out) { write_colouring(out, result->colouring); });
    std::cerr << "palette=" << result->palette_size << " used=" << result->colouring.used() << " rounds=" << result->iterations << '\n';
    return exit_ok;
}

// --- verify ----------------------------------------------------------------

struct VerifyOptions {
    std::string graph;
    std::string colouring;
    std::size_t beta = 2;
    std::string pattern;
    std::size_t size = 0;
};

int run_verify(const VerifyOptions& o)
{
    const Graph g = load_graph(o.graph);
    const Colouring c = with_input(o.colouring, [&](std::istream& in) { return read_colouring(in, g.num_vertices()); });

    if (!o.pattern.empty()) {
        Graph pattern;
        if (o.pattern == "star")
            pattern = star_pattern(o.size);
        else if (o.pattern == "path")
            pattern = path_pattern(o.size);
        else
            throw UsageError("unknown pattern '" + o.pattern + "'");
        bool ok = false;
        try {
            ok = verify_avoiding(g, c, pattern);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        std::cout << (ok ? "ok" : "violation: two-coloured copy of the pattern") << '\n';
        return ok ? exit_ok : exit_verify;
    }

    const FrugalCheck check = verify_frugal(g, c, o.beta);
    if (check) {
        std::cout << "ok: " << o.beta << "-frugal with " << c.used() << " colours\n";
        return exit_ok;
    }
    if (check.edge)
        std::cout << "violation: monochromatic edge " << check.edge->first << ' ' << check.edge->second << '\n';
    else
        std::cout << "violation: vertex " << check.overload->centre << " sees colour " << check.overload->colour << ' '
                  << check.overload->count << " times\n";
    return exit_verify;
}

// --- bounds ----------------------------------------------------------------

struct BoundsOptions {
    std::vector<std::string> names;
    std::size_t t = 2;
    std::size_t n = 0;
    std::size_t a = 2;
    std::size_t b = 2;
    std::size_t s = 2;
    double x = 0.0;
    double p = 0.0;
    std::size_t beta = 1;
    double d = 2.0;
    double delta = 1.0;
    std::string graph;
    std::string format = "text";
};

BoundReport evaluate_bound(const std::string& name, const BoundsOptions& o)
{
    BoundReport r;
    r.name = name;
    const auto num = [](std::size_t v) { return static_cast<double>(v); };
    if (name == "eg") {
        std::size_t n = o.n;
        std::optional<Graph> g;
        if (!o.graph.empty()) {
            g = load_graph(o.graph);
            n = g->num_vertices();
        }
        r.inputs = {{"t", num(o.t)}, {"n", num(n)}};
        r.value = erdos_gallai_bound(o.t, n);
        if (g) {
            // Observed edge count against the bound; only meaningful for P_t-free input.
            r.limit = r.value;
            r.value = num(g->num_edges());
            r.satisfied = !is_pt_free(*g, o.t) || r.value <= *r.limit;
        }
    } else if (name == "kst") {
        r.inputs = {{"a", num(o.a)}, {"b", num(o.b)}, {"s", num(o.s)}, {"t", num(o.t)}};
        r.value = kst_bound(o.a, o.b, o.s, o.t);
    } else if (name == "gap") {
        r.inputs = {{"x", o.x}, {"n", num(o.n)}};
        r.value = partial_exp_log_gap(o.x, o.n);
        r.satisfied = r.value >= -1e-12;
    } else if (name == "tail") {
        r = binomial_tail_bound_check(o.t, o.p, o.beta, o.d);
    } else if (name == "k") {
        r.inputs = {{"d", o.d}, {"beta", num(o.beta)}};
        r.value = randomgraph_k(o.d, o.beta);
    } else if (name == "cbeta") {
        r.inputs = {{"beta", num(o.beta)}};
        r.value = c_beta(o.beta);
    } else if (name == "sigma") {
        r.inputs = {{"t", num(o.t)}, {"delta", o.delta}};
        r.value = sigma_bound_cycle(o.t, o.delta);
    } else if (name == "hmr") {
        r.inputs = {{"delta", o.delta}, {"beta", num(o.beta)}};
        r.value = hmr_upper_reference(o.delta, o.beta);
    } else {
        throw UsageError("unknown bound '" + name + "'");
    }
    return r;
}

int run_bounds(const BoundsOptions& o)
{
    std::vector<BoundReport> reports;
    try {
        for (const auto& name : o.names)
            reports.push_back(evaluate_bound(name, o));
    } catch (const PreconditionViolation& e) {
        throw UsageError(e.what());
    }
    if (o.format == "csv")
        write_reports_csv(std::cout, reports);
    else
        write_reports_text(std::cout, reports);
    for (const auto& r : reports)
        if (r.satisfied && !*r.satisfied)
            return exit_verify;
    return exit_ok;
}

// --- pipeline --------------------------------------------------------------

struct PipelineOptions {
    std::string config;
    std::string out;
};

int run_pipeline_command(const PipelineOptions& o)
{
    std::string path = o.config;
    if (path.empty())
        if (const char* env = std::getenv("FRUGAL_CONFIG"))
            path = env;
    if (path.empty())
        throw UsageError("pipeline needs --config or FRUGAL_CONFIG");
    Config config;
    try {
        config = load_config(path);
    } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
    }
    const auto records = run_pipeline(config);
    const std::string out = o.out.empty() ? config.output : o.out;
    with_output(out, [&](std::ostream& os) { write_records_csv(os, records); });
    for (const auto& r : records)
        if (!r.success)
            return exit_instance;
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"frugal: beta-frugal colouring via auxiliary hypergraphs"};
    app.require_subcommand(1);

    GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "Generate a graph instance");
    generate->add_option("--kind", gen.kind, "grid | pg | gnp")->required()->check(CLI::IsMember({"grid", "pg", "gnp"}));
    generate->add_option("--n", gen.n, "grid side length or G(n,p) vertex count");
    generate->add_option("--beta", gen.beta, "grid dimension minus one, or PG(beta+1, q)");
    generate->add_option("--q", gen.q, "prime field size for pg");
    generate->add_option("--p", gen.p, "edge probability for gnp");
    generate->add_option("--seed", gen.seed, "RNG seed for gnp");
    generate->add_option("--prune", gen.prune, "d,g: drop degree >= 10d and cycles shorter than g");
    generate->add_option("--out", gen.out, "output file (default stdout)");
    generate->add_option("--girth-cap", gen.girth_cap, "report girth only up to this many vertices");

    ReduceOptions red;
    auto* reduce_cmd = app.add_subcommand("reduce", "Build an auxiliary hypergraph");
    reduce_cmd->add_option("--graph", red.graph)->required();
    reduce_cmd->add_option("--kind", red.kind, "basic | cycle | kbt")->check(CLI::IsMember({"basic", "cycle", "kbt"}));
    reduce_cmd->add_option("--beta", red.beta);
    reduce_cmd->add_option("--t", red.t);
    reduce_cmd->add_option("--delta", red.delta, "degree scale for thresholds (default: max degree)");
    reduce_cmd->add_option("--out", red.out);
    reduce_cmd->add_flag("--certify", red.certify, "also emit a certificate report");
    reduce_cmd->add_option("--f", red.f);
    reduce_cmd->add_option("--f-preset", red.f_preset, "k2t | cycle | kbt");
    reduce_cmd->add_option("--report", red.report, "certificate report file (default stderr)");

    CertifyOptions cer;
    auto* certify_cmd = app.add_subcommand("certify", "Check codegree and triangle hypotheses");
    certify_cmd->add_option("--hypergraph", cer.hypergraph)->required();
    certify_cmd->add_option("--f", cer.f);
    certify_cmd->add_option("--f-preset", cer.f_preset, "k2t | cycle | kbt");
    certify_cmd->add_option("--delta", cer.delta);
    certify_cmd->add_option("--beta", cer.beta);
    certify_cmd->add_option("--t", cer.t);
    certify_cmd->add_option("--out", cer.out);

    ColorOptions col;
    auto* color = app.add_subcommand("color", "Colour a hypergraph, or a graph through a reduction");
    color->add_option("--hypergraph", col.hypergraph);
    color->add_option("--graph", col.graph);
    color->add_option("--reduction", col.reduction, "basic | cycle | kbt")->check(CLI::IsMember({"basic", "cycle", "kbt"}));
    color->add_option("--algo", col.algo)->check(CLI::IsMember({"greedy", "resample", "exact"}));
    color->add_option("--k", col.k);
    color->add_option("--seed", col.seed);
    color->add_option("--max-rounds", col.max_rounds);
    color->add_option("--beta", col.beta);
    color->add_option("--t", col.t);
    color->add_option("--exact-cap", col.exact_cap);
    color->add_option("--out", col.out);

    VerifyOptions ver;
    auto* verify = app.add_subcommand("verify", "Check a colouring for frugality or a forbidden two-coloured tree");
    verify->add_option("--graph", ver.graph)->required();
    verify->add_option("--colouring", ver.colouring)->required();
    verify->add_option("--beta", ver.beta);
    verify->add_option("--pattern", ver.pattern, "star | path")->check(CLI::IsMember({"star", "path"}));
    verify->add_option("--size", ver.size, "star leaves or path vertices");

    BoundsOptions bnd;
    auto* bounds = app.add_subcommand("bounds", "Evaluate closed-form bounds");
    bounds->add_option("--bound", bnd.names, "eg | kst | gap | tail | k | cbeta | sigma | hmr (repeatable)")->required();
    bounds->add_option("--t", bnd.t);
    bounds->add_option("--n", bnd.n);
    bounds->add_option("--a", bnd.a);
    bounds->add_option("--b", bnd.b);
    bounds->add_option("--s", bnd.s);
    bounds->add_option("--x", bnd.x);
    bounds->add_option("--p", bnd.p);
    bounds->add_option("--beta", bnd.beta);
    bounds->add_option("--d", bnd.d);
    bounds->add_option("--delta", bnd.delta);
    bounds->add_option("--graph", bnd.graph, "graph to check against eg");
    bounds->add_option("--format", bnd.format)->check(CLI::IsMember({"text", "csv"}));

    PipelineOptions pip;
    auto* pipeline = app.add_subcommand("pipeline", "Run an experiment config and emit CSV records");
    pipeline->add_option("--config", pip.config, "config file (default: $FRUGAL_CONFIG)");
    pipeline->add_option("--out", pip.out, "CSV output (default: config 'output' or stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*generate)
            return run_generate(gen);
        if (*reduce_cmd)
            return run_reduce(red);
        if (*certify_cmd)
            return run_certify(cer);
        if (*color)
            return run_color(col);
        if (*verify)
            return run_verify(ver);
        if (*bounds)
            return run_bounds(bnd);
        if (*pipeline)
            return run_pipeline_command(pip);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const InstanceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_instance;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_instance;
    }
    return exit_usage;
}
