#ifndef EQDSATUR_BENCH_HPP
#define EQDSATUR_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eqdsatur/search.hpp"

namespace eqdsatur {

// One row of the benchmark CSV: one (instance, config) run.
struct BenchRow {
    std::string instance;
    int n = 0;
    std::string source;  // "d=<density>,seed=<s>" or the instance file path
    std::string group;   // aggregation key: "n=<n>,d=<density>" or file stem
    std::string config;
    int lb0 = 0, ub0 = 0;
    Status status = Status::Optimal;
    std::optional<int> chi_eq;
    int lb_final = 0, ub_final = 0;
    double rel_gap = 0.0;  // 100*(UB-LB)/UB, 0 when optimal
    uint64_t nodes = 0;
    double time_s = 0.0;
};

struct AggregateRow {
    std::string group;
    std::string config;
    int count = 0;
    double solved_pct = 0.0;
    double mean_gap = 0.0;                   // over all instances in the group
    std::optional<double> mean_time_solved;  // empty when nothing was solved
};

// Suite specification: one group per line, either
//   random <n> <density> <count> <seed_base>
// or
//   file <path>
// Blank lines and lines starting with '#' are skipped.
struct SuiteEntry {
    enum class Kind { Random, File };
    Kind kind = Kind::Random;
    int n = 0;
    double density = 0.0;
    int count = 0;
    uint64_t seed_base = 0;
    std::string path;
};

std::vector<SuiteEntry> parse_suite(std::istream& in);
std::vector<SuiteEntry> parse_suite_file(const std::string& path);

// Config labels: "<strategy>-<order>[-<pruning>]" with strategy in
// {brelaz, sewell, pass}, order in {index, size}, pruning in
// {equity, trivial} (default equity); aliases eqds1 = pass-index and
// eqds2 = pass-size.
SolverConfig config_from_label(const std::string& label);

// Runs every instance under every config, optionally across `jobs` threads.
// Row order is deterministic (suite order x config order) regardless of the
// parallelism degree.
std::vector<BenchRow> run_suite(const std::vector<SuiteEntry>& suite,
    const std::vector<std::string>& config_labels, double time_limit,
    int jobs);

std::vector<AggregateRow> aggregate(const std::vector<BenchRow>& rows);

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out);
void print_aggregate(const std::vector<AggregateRow>& rows, std::ostream& out);

double relative_gap(Status status, int lb, int ub);

}  // namespace eqdsatur

#endif
