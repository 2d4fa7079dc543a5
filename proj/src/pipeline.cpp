#include "frugal/pipeline.hpp"

#include "frugal/generators.hpp"
#include "frugal/hypergraph.hpp"
#include "frugal/reduction.hpp"
#include "frugal/solvers.hpp"

#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace frugal {

namespace {

std::string trim(const std::string& s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::uint64_t to_unsigned(const std::string& key, const std::string& value)
{
    std::size_t used = 0;
    unsigned long long x = 0;
    try {
        if (!value.empty() && value.front() == '-')
            throw std::invalid_argument(value);
        x = std::stoull(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != value.size())
        throw std::invalid_argument(key + ": expected a non-negative integer, got '" + value + "'");
    return x;
}

double to_double(const std::string& key, const std::string& value)
{
    std::size_t used = 0;
    double x = 0;
    try {
        x = std::stod(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != value.size())
        throw std::invalid_argument(key + ": expected a number, got '" + value + "'");
    return x;
}

bool to_bool(const std::string& key, const std::string& value)
{
    if (value == "true" || value == "1" || value == "yes")
        return true;
    if (value == "false" || value == "0" || value == "no")
        return false;
    throw std::invalid_argument(key + ": expected true or false, got '" + value + "'");
}

const std::string& require(const InstanceSpec& spec, const std::string& key)
{
    auto it = spec.params.find(key);
    if (it == spec.params.end())
        throw std::invalid_argument("instance " + spec.id + ": missing parameter '" + key + "'");
    return it->second;
}

std::optional<std::string> lookup(const InstanceSpec& spec, const std::string& key)
{
    auto it = spec.params.find(key);
    if (it == spec.params.end())
        return std::nullopt;
    return it->second;
}

std::optional<double> f_for(const Config& config, double delta)
{
    if (config.f == "k2t")
        return preset_f(FPreset::K2t, delta, config.beta, config.t);
    if (config.f == "cycle")
        return preset_f(FPreset::Cycle, delta, config.beta, config.t);
    if (config.f == "kbt")
        return preset_f(FPreset::Kbt, delta, config.beta, config.t);
    return to_double("f", config.f);
}

Hypergraph reduce(const Graph& g, const Config& config)
{
    if (config.reduction == "basic")
        return build_basic(g, config.beta);
    if (config.reduction == "cycle")
        return build_cycle_reduction(g, ReductionParams::for_graph(g, config.beta, config.t));
    if (config.reduction == "kbt")
        return build_kbt_reduction(g, ReductionParams::for_graph(g, config.beta, config.t));
    throw std::invalid_argument("unknown reduction '" + config.reduction + "'");
}

void store_colouring(const Config& config, const std::string& instance, const std::string& algorithm, const Colouring& c)
{
    if (config.colouring_dir.empty())
        return;
    std::filesystem::create_directories(config.colouring_dir);
    std::ofstream out(std::filesystem::path(config.colouring_dir) / (instance + "." + algorithm + ".col"));
    write_colouring(out, c);
}

// Least palette at which resampling succeeds for some configured seed, by
// doubling hi up to cap until it succeeds, then bisecting. Success is
// assumed monotone in k.
struct ResampleSearch {
    const Hypergraph& h;
    const Config& config;

    std::optional<SolverResult> attempt(std::size_t k) const
    {
        for (std::uint64_t seed : config.seeds) {
            auto outcome = resample_colour(h, k, seed, config.max_rounds);
            if (auto* result = std::get_if<SolverResult>(&outcome))
                return *result;
        }
        return std::nullopt;
    }

    std::optional<SolverResult> least(std::size_t lo, std::size_t hi, std::size_t cap) const
    {
        auto best = attempt(hi);
        while (!best && hi < cap) {
            lo = hi + 1;
            hi = std::min(2 * hi, cap);
            best = attempt(hi);
        }
        if (!best)
            return std::nullopt;
        while (lo < hi) {
            const std::size_t mid = lo + (hi - lo) / 2;
            if (auto r = attempt(mid)) {
                best = std::move(r);
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        return best;
    }
};

std::vector<ExperimentRecord> run_instance(const Config& config, const InstanceSpec& spec)
{
    using clock = std::chrono::steady_clock;
    ExperimentRecord base;
    base.instance = spec.id;
    base.kind = spec.kind;
    base.beta = config.beta;
    base.t = config.t;
    base.reduction = config.reduction;

    std::vector<ExperimentRecord> out;
    auto fail = [&](const std::string& algorithm, const std::string& why) {
        ExperimentRecord r = base;
        r.algorithm = algorithm;
        r.note = why;
        out.push_back(r);
        return out;
    };

    Graph g;
    Hypergraph h;
    try {
        g = generate_instance(spec, config.beta, config.generator_cap);
        base.n = g.num_vertices();
        base.max_degree = max_degree(g);
        h = reduce(g, config);
    } catch (const std::exception& e) {
        return fail("none", e.what());
    }
    if (h.num_edges() > 0)
        base.delta_star = delta_star(h);

    try {
        const double f = *f_for(config, static_cast<double>(base.max_degree));
        base.f = f;
        if (f > 1.0 && h.num_edges() > 0 && rank(h) >= 3) {
            const Certificate cert = certify(h, f);
            base.verdict_a = cert.verdict_a;
            base.verdict_b = cert.verdict_b;
        }
    } catch (const std::exception& e) {
        base.note = e.what();
    }

    if (g.num_vertices() <= config.exact_cap) {
        try {
            base.exact_chi = exact_frugal_chromatic(g, config.beta, ExactLimits{config.exact_cap});
        } catch (const std::exception& e) {
            base.note = e.what();
        }
    }

    auto finish = [&](ExperimentRecord r, const Colouring* colouring, clock::time_point start) {
        if (colouring) {
            if (verify_frugal(g, *colouring, config.beta)) {
                store_colouring(config, r.instance, r.algorithm, *colouring);
            } else {
                r.success = false;
                r.note = "verification failed";
            }
        }
        if (config.record_time)
            r.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
        out.push_back(std::move(r));
    };

    const std::size_t n = g.num_vertices();
    const std::size_t greedy_budget = std::max<std::size_t>(n, 1);
    std::size_t greedy_k = greedy_budget;
    {
        const auto start = clock::now();
        ExperimentRecord r = base;
        r.algorithm = "greedy";
        auto outcome = greedy_colour(h, greedy_budget);
        if (auto* result = std::get_if<SolverResult>(&outcome)) {
            greedy_k = std::max<std::size_t>(result->colouring.used(), 1);
            r.k = greedy_k;
            r.success = true;
            const Colouring tight(std::vector<Colour>(result->colouring.colours().begin(), result->colouring.colours().end()), greedy_k);
            finish(r, &tight, start);
        } else {
            r.note = "greedy blocked";
            finish(r, nullptr, start);
        }
    }

    {
        const auto start = clock::now();
        ExperimentRecord r = base;
        r.algorithm = "resample";
        std::size_t lo = 2;
        if (base.max_degree > 0)
            lo = std::max(lo, (base.max_degree + config.beta - 1) / config.beta + 1);
        const std::size_t hi = std::max(greedy_k, lo);
        const ResampleSearch search{h, config};
        const std::size_t cap = std::max(n, hi);
        if (auto result = search.least(lo, hi, cap)) {
            r.k = result->palette_size;
            r.rounds = result->iterations;
            r.success = true;
            finish(r, &result->colouring, start);
        } else {
            r.k = cap;
            r.note = "resampling timed out up to " + std::to_string(cap) + " colours";
            finish(r, nullptr, start);
        }
    }

    if (n <= config.exact_cap) {
        const auto start = clock::now();
        ExperimentRecord r = base;
        r.algorithm = "exact";
        try {
            SolverResult result = exact_colour(h, ExactLimits{config.exact_cap});
            r.k = result.palette_size;
            r.success = true;
            finish(r, &result.colouring, start);
        } catch (const std::exception& e) {
            r.note = e.what();
            finish(r, nullptr, start);
        }
    }
    return out;
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

template <typename T>
std::string optional_field(const std::optional<T>& v)
{
    if (!v)
        return {};
    std::ostringstream os;
    if constexpr (std::is_same_v<T, bool>)
        os << (*v ? "true" : "false");
    else
        os << std::setprecision(6) << *v;
    return os.str();
}

}  // namespace

InstanceSpec parse_instance(const std::string& text)
{
    std::istringstream in(text);
    InstanceSpec spec;
    if (!(in >> spec.kind))
        throw std::invalid_argument("instance: missing kind");
    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("instance: expected key=value, got '" + token + "'");
        const std::string key = token.substr(0, eq);
        const std::string value = token.substr(eq + 1);
        if (key == "id")
            spec.id = value;
        else if (!spec.params.emplace(key, value).second)
            throw std::invalid_argument("instance: repeated key '" + key + "'");
    }
    if (spec.id.empty()) {
        spec.id = spec.kind;
        for (const auto& [key, value] : spec.params)
            spec.id += "-" + key + value;
    }
    return spec;
}

Config parse_config(std::istream& in)
{
    Config config;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "beta")
                config.beta = to_unsigned(key, value);
            else if (key == "t")
                config.t = to_unsigned(key, value);
            else if (key == "reduction") {
                if (value != "basic" && value != "cycle" && value != "kbt")
                    throw std::invalid_argument("reduction: expected basic, cycle or kbt");
                config.reduction = value;
            } else if (key == "f") {
                if (value != "k2t" && value != "cycle" && value != "kbt")
                    to_double(key, value);
                config.f = value;
            } else if (key == "seeds") {
                config.seeds.clear();
                std::istringstream list(value);
                std::string item;
                while (std::getline(list, item, ','))
                    config.seeds.push_back(to_unsigned(key, trim(item)));
            } else if (key == "max_rounds")
                config.max_rounds = to_unsigned(key, value);
            else if (key == "exact_cap")
                config.exact_cap = to_unsigned(key, value);
            else if (key == "generator_cap")
                config.generator_cap = to_unsigned(key, value);
            else if (key == "workers")
                config.workers = to_unsigned(key, value);
            else if (key == "record_time")
                config.record_time = to_bool(key, value);
            else if (key == "output")
                config.output = value;
            else if (key == "colouring_dir")
                config.colouring_dir = value;
            else if (key == "instance")
                config.instances.push_back(parse_instance(value));
            else
                throw std::invalid_argument("unknown key '" + key + "'");
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("config line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (config.seeds.empty())
        throw std::runtime_error("config: seeds must not be empty");
    if (config.exact_cap == 0 || config.generator_cap == 0 || config.workers == 0)
        throw std::runtime_error("config: caps and workers must be positive");
    if (config.beta < 1)
        throw std::runtime_error("config: beta must be at least 1");
    return config;
}

Config load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file '" + path + "'");
    return parse_config(in);
}

Graph generate_instance(const InstanceSpec& spec, std::size_t beta_default, std::size_t generator_cap)
{
    auto beta_of = [&] {
        auto b = lookup(spec, "beta");
        return b ? to_unsigned("beta", *b) : beta_default;
    };
    if (spec.kind == "grid")
        return grid_graph(to_unsigned("n", require(spec, "n")), beta_of(), generator_cap);
    if (spec.kind == "pg")
        return pg_incidence(to_unsigned("q", require(spec, "q")), beta_of(), generator_cap);
    if (spec.kind == "gnp") {
        GnpSpec gnp;
        gnp.n = to_unsigned("n", require(spec, "n"));
        if (gnp.n > generator_cap)
            throw std::invalid_argument("gnp: n exceeds the generator cap");
        gnp.p = to_double("p", require(spec, "p"));
        if (auto seed = lookup(spec, "seed"))
            gnp.seed = to_unsigned("seed", *seed);
        Graph g = sample_gnp(gnp);
        if (auto pr = lookup(spec, "prune")) {
            const auto comma = pr->find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("prune: expected 'd,g'");
            const double d = to_double("prune", pr->substr(0, comma));
            const auto girth_target = to_unsigned("prune", pr->substr(comma + 1));
            g = prune(g, d, girth_target).graph;
        }
        return g;
    }
    if (spec.kind == "file") {
        std::ifstream in(require(spec, "path"));
        if (!in)
            throw std::invalid_argument("cannot open graph file '" + require(spec, "path") + "'");
        return read_graph(in);
    }
    throw std::invalid_argument("unknown instance kind '" + spec.kind + "'");
}

std::vector<ExperimentRecord> run_pipeline(const Config& config)
{
    const std::size_t count = config.instances.size();
    std::vector<std::vector<ExperimentRecord>> slots(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++)
            slots[i] = run_instance(config, config.instances[i]);
    };
    const std::size_t threads = std::min(config.workers, count);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < threads; ++i)
            pool.emplace_back(worker);
    }

    std::vector<ExperimentRecord> records;
    for (auto& slot : slots)
        for (auto& r : slot)
            records.push_back(std::move(r));
    return records;
}

void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records)
{
    out << "instance,kind,n,max_degree,beta,t,reduction,delta_star,f,verdict_a,verdict_b,algorithm,k,success,exact_chi,rounds,wall_ms,note\n";
    for (const auto& r : records) {
        out << csv_field(r.instance) << ',' << r.kind << ',' << r.n << ',' << r.max_degree << ',' << r.beta << ',' << r.t << ','
            << r.reduction << ',' << optional_field(r.delta_star) << ',' << optional_field(r.f) << ',' << optional_field(r.verdict_a)
            << ',' << optional_field(r.verdict_b) << ',' << r.algorithm << ',' << optional_field(r.k) << ','
            << (r.success ? "true" : "false") << ',' << optional_field(r.exact_chi) << ',' << r.rounds << ','
            << optional_field(r.wall_ms) << ',' << csv_field(r.note) << '\n';
    }
}

}  // namespace frugal
