#pragma once

#include "frugal/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace frugal {

/// One generated instance: a kind (grid, pg, gnp, file) plus its parameters,
/// spelled the same way as the `generate` flags.
struct InstanceSpec {
    std::string id;
    std::string kind;
    std::map<std::string, std::string> params;
};

/// Flat key-value experiment configuration.
///
///     # comment
///     beta = 2
///     t = 2
///     reduction = cycle          # basic | cycle | kbt
///     f = cycle                  # k2t | cycle | kbt | <number>
///     seeds = 1, 2, 3
///     max_rounds = 20000
///     exact_cap = 12
///     generator_cap = 20000
///     workers = 2
///     record_time = false
///     output = results.csv
///     colouring_dir = colourings
///     instance = pg q=3 beta=1
///     instance = gnp n=200 p=0.04 seed=7 prune=4,6 id=sparse
///
/// `instance` may repeat; a grid/pg instance without its own beta uses the
/// top-level beta.
struct Config {
    std::size_t beta = 2;
    std::size_t t = 2;
    std::string reduction = "cycle";
    std::string f = "cycle";
    std::vector<std::uint64_t> seeds{1};
    std::size_t max_rounds = 20'000;
    std::size_t exact_cap = 12;
    std::size_t generator_cap = 20'000;
    std::size_t workers = 1;
    bool record_time = false;
    std::string output;
    std::string colouring_dir;
    std::vector<InstanceSpec> instances;
};

/// Throws std::runtime_error naming the offending line.
Config parse_config(std::istream& in);
Config load_config(const std::string& path);

/// Parses "kind key=value ..." as used on `instance` lines.
InstanceSpec parse_instance(const std::string& text);

/// Builds the graph an instance describes. Throws std::invalid_argument on
/// bad parameters.
Graph generate_instance(const InstanceSpec& spec, std::size_t beta_default, std::size_t generator_cap);

struct ExperimentRecord {
    std::string instance;
    std::string kind;
    std::size_t n = 0;
    std::size_t max_degree = 0;
    std::size_t beta = 0;
    std::size_t t = 0;
    std::string reduction;
    std::optional<double> delta_star;
    std::optional<double> f;
    std::optional<bool> verdict_a;
    std::optional<bool> verdict_b;
    std::string algorithm;
    std::optional<std::size_t> k;
    bool success = false;
    std::optional<std::size_t> exact_chi;
    std::size_t rounds = 0;
    std::optional<double> wall_ms;
    std::string note;
};

/// Runs every instance of the config. Records come back grouped by instance
/// in config order, whatever order the workers finish in.
std::vector<ExperimentRecord> run_pipeline(const Config& config);

void write_records_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);

}  // namespace frugal
