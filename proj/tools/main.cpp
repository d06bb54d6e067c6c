// Command-line front end: exact equitable-coloring solves and benchmark
// sweeps over random or DIMACS instances.

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "eqdsatur/bench.hpp"
#include "eqdsatur/coloring.hpp"
#include "eqdsatur/graph.hpp"
#include "eqdsatur/search.hpp"

namespace {

using namespace eqdsatur;

// `n=<n>,d=<density>,seed=<s>`
Graph parse_random_spec(const std::string& spec) {
    int n = -1;
    double density = -1.0;
    uint64_t seed = 0;
    bool have_seed = false;
    std::istringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("bad --random spec item: " + item);
        const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
        if (key == "n") n = std::stoi(value);
        else if (key == "d") density = std::stod(value);
        else if (key == "seed") { seed = std::stoull(value); have_seed = true; }
        else throw std::runtime_error("bad --random spec key: " + key);
    }
    if (n < 1 || density < 0.0 || !have_seed)
        throw std::runtime_error("--random needs n=<n>,d=<density>,seed=<s>");
    return random_graph(n, density, seed);
}

int run_solve(const std::string& dimacs_path, const std::string& random_spec,
    const std::string& strategy, const std::string& order,
    const std::string& pruning, double time_limit, bool print_coloring) {
    if (dimacs_path.empty() && random_spec.empty())
        throw std::runtime_error("give either --dimacs <path> or --random <spec>");
    Graph g = dimacs_path.empty() ? parse_random_spec(random_spec)
                                  : parse_dimacs_file(dimacs_path);
    std::string instance = dimacs_path.empty() ? "--random " + random_spec
                                               : dimacs_path;

    SolverConfig cfg = config_from_label(strategy + "-" + order + "-" + pruning);
    cfg.time_limit = time_limit;
    SolveResult res = solve(g, cfg);

    std::cout << "instance:   " << instance << "\n"
              << "vertices:   " << g.num_vertices() << "\n"
              << "edges:      " << g.num_edges() << "\n"
              << "config:     " << strategy << "-" << order << "-" << pruning << "\n"
              << "initial:    LB=" << res.lb_initial << " UB=" << res.ub_initial << "\n"
              << "status:     " << to_string(res.status) << "\n";
    if (res.status == Status::Optimal) {
        std::cout << "chi_eq:     " << res.chi_eq << "\n";
    } else {
        std::cout << "bounds:     LB=" << res.lb_final << " UB=" << res.ub_final
                  << " (gap " << relative_gap(res.status, res.lb_final, res.ub_final)
                  << "%)\n";
    }
    std::cout << "nodes:      " << res.nodes << "\n"
              << "time:       " << res.wall_time << " s\n";
    if (print_coloring) write_coloring(res.incumbent, std::cout);
    return res.status == Status::Optimal ? 0 : 2;
}

int run_bench(const std::string& suite_path, const std::string& configs_csv,
    const std::string& out_path, double time_limit, int jobs) {
    auto suite = parse_suite_file(suite_path);
    std::vector<std::string> labels;
    std::istringstream ss(configs_csv);
    std::string label;
    while (std::getline(ss, label, ','))
        if (!label.empty()) labels.push_back(label);
    if (labels.empty()) throw std::runtime_error("--configs is empty");

    auto rows = run_suite(suite, labels, time_limit, jobs);
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write CSV: " + out_path);
    write_csv(rows, out);
    print_aggregate(aggregate(rows), std::cout);
    std::cout << "wrote " << rows.size() << " rows to " << out_path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equitable graph coloring solver"};
    app.require_subcommand(1);

    auto* solve_cmd = app.add_subcommand("solve", "solve one instance");
    std::string dimacs_path, random_spec;
    std::string strategy = "pass", order = "size", pruning = "equity";
    double time_limit = 7200.0;
    bool print_coloring = false;
    auto* dimacs_opt =
        solve_cmd->add_option("--dimacs", dimacs_path, "DIMACS .col instance");
    solve_cmd->add_option("--random", random_spec, "random instance n=<n>,d=<d>,seed=<s>")
        ->excludes(dimacs_opt);
    solve_cmd->add_option("--strategy", strategy, "vertex selection")
        ->check(CLI::IsMember({"brelaz", "sewell", "pass"}));
    solve_cmd->add_option("--order", order, "color order")
        ->check(CLI::IsMember({"index", "size"}));
    solve_cmd->add_option("--pruning", pruning, "pruning mode")
        ->check(CLI::IsMember({"equity", "trivial"}));
    solve_cmd->add_option("--time-limit", time_limit, "seconds");
    solve_cmd->add_flag("--print-coloring", print_coloring, "emit the coloring");

    auto* bench_cmd = app.add_subcommand("bench", "run a benchmark suite");
    std::string suite_path, configs = "pass-size", out_path = "bench.csv";
    double bench_time_limit = 7200.0;
    int jobs = int(std::thread::hardware_concurrency());
    bench_cmd->add_option("--suite", suite_path, "suite spec file")->required();
    bench_cmd->add_option("--configs", configs, "comma-separated config labels");
    bench_cmd->add_option("--out", out_path, "CSV output path");
    bench_cmd->add_option("--time-limit", bench_time_limit, "per-instance seconds");
    bench_cmd->add_option("--jobs", jobs, "parallel solves");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // normalize CLI11's exit codes: 0 for --help, 1 for any input error
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (solve_cmd->parsed())
            return run_solve(dimacs_path, random_spec, strategy, order, pruning,
                time_limit, print_coloring);
        return run_bench(suite_path, configs, out_path, bench_time_limit, jobs);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
