#include "eqdsatur/bench.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "eqdsatur/graph.hpp"

namespace eqdsatur {

std::vector<SuiteEntry> parse_suite(std::istream& in) {
    std::vector<SuiteEntry> suite;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind) || kind[0] == '#') continue;
        SuiteEntry entry;
        if (kind == "random") {
            entry.kind = SuiteEntry::Kind::Random;
            if (!(ls >> entry.n >> entry.density >> entry.count >> entry.seed_base)
                || entry.n < 1 || entry.density < 0.0 || entry.density > 1.0
                || entry.count < 1)
                throw std::runtime_error("suite parse error at line "
                    + std::to_string(line_no)
                    + ": want `random <n> <density> <count> <seed_base>`");
        } else if (kind == "file") {
            entry.kind = SuiteEntry::Kind::File;
            if (!(ls >> entry.path))
                throw std::runtime_error("suite parse error at line "
                    + std::to_string(line_no) + ": want `file <path>`");
        } else {
            throw std::runtime_error("suite parse error at line "
                + std::to_string(line_no) + ": unknown entry `" + kind + "`");
        }
        suite.push_back(std::move(entry));
    }
    return suite;
}

std::vector<SuiteEntry> parse_suite_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open suite file: " + path);
    return parse_suite(in);
}

SolverConfig config_from_label(const std::string& label) {
    std::string s = label;
    if (s == "eqds1") s = "pass-index";
    if (s == "eqds2") s = "pass-size";
    std::vector<std::string> parts;
    std::istringstream ls(s);
    std::string part;
    while (std::getline(ls, part, '-')) parts.push_back(part);
    if (parts.size() < 2 || parts.size() > 3)
        throw std::runtime_error("bad config label: " + label);

    SolverConfig cfg;
    if (parts[0] == "brelaz") cfg.strategy = Strategy::Brelaz;
    else if (parts[0] == "sewell") cfg.strategy = Strategy::Sewell;
    else if (parts[0] == "pass") cfg.strategy = Strategy::Pass;
    else throw std::runtime_error("bad strategy in config label: " + label);

    if (parts[1] == "index") cfg.color_order = ColorOrder::Index;
    else if (parts[1] == "size") cfg.color_order = ColorOrder::SizeAsc;
    else throw std::runtime_error("bad color order in config label: " + label);

    if (parts.size() == 3) {
        if (parts[2] == "equity") cfg.pruning = Pruning::Equity;
        else if (parts[2] == "trivial") cfg.pruning = Pruning::Trivial;
        else throw std::runtime_error("bad pruning in config label: " + label);
    }
    return cfg;
}

double relative_gap(Status status, int lb, int ub) {
    if (status == Status::Optimal) return 0.0;
    return 100.0 * double(ub - lb) / double(ub);
}

namespace {

std::string format_density(double d) {
    std::ostringstream os;
    os << d;
    return os.str();
}

struct Task {
    std::string instance;
    std::string source;
    std::string group;
    std::string config_label;
    const Graph* graph;
};

BenchRow run_task(const Task& task, double time_limit) {
    SolverConfig cfg = config_from_label(task.config_label);
    cfg.time_limit = time_limit;
    SolveResult res = solve(*task.graph, cfg);

    BenchRow row;
    row.instance = task.instance;
    row.n = task.graph->num_vertices();
    row.source = task.source;
    row.group = task.group;
    row.config = task.config_label;
    row.lb0 = res.lb_initial;
    row.ub0 = res.ub_initial;
    row.status = res.status;
    if (res.status == Status::Optimal) row.chi_eq = res.chi_eq;
    row.lb_final = res.lb_final;
    row.ub_final = res.ub_final;
    row.rel_gap = relative_gap(res.status, res.lb_final, res.ub_final);
    row.nodes = res.nodes;
    row.time_s = res.wall_time;
    return row;
}

std::string file_stem(const std::string& path) {
    size_t slash = path.find_last_of("/\\");
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    size_t dot = name.find_last_of('.');
    return dot == std::string::npos ? name : name.substr(0, dot);
}

}  // namespace

std::vector<BenchRow> run_suite(const std::vector<SuiteEntry>& suite,
    const std::vector<std::string>& config_labels, double time_limit,
    int jobs) {
    for (const auto& label : config_labels) config_from_label(label);  // validate early

    // materialize instances up front, serially
    std::vector<Graph> graphs;
    std::vector<Task> tasks;
    for (const auto& entry : suite) {
        if (entry.kind == SuiteEntry::Kind::Random) {
            for (int i = 0; i < entry.count; ++i) {
                const uint64_t seed = entry.seed_base + uint64_t(i);
                graphs.push_back(random_graph(entry.n, entry.density, seed));
                std::ostringstream name, group;
                name << "rand-n" << entry.n << "-d" << format_density(entry.density)
                     << "-s" << seed;
                group << "n=" << entry.n << ",d=" << format_density(entry.density);
                for (const auto& label : config_labels)
                    tasks.push_back(Task{name.str(), format_density(entry.density),
                        group.str(), label, nullptr});
            }
        } else {
            graphs.push_back(parse_dimacs_file(entry.path));
            for (const auto& label : config_labels)
                tasks.push_back(Task{file_stem(entry.path), entry.path,
                    file_stem(entry.path), label, nullptr});
        }
    }
    // graphs vector is stable now; wire up pointers (configs share an instance)
    {
        size_t g = 0, t = 0;
        while (t < tasks.size()) {
            for (size_t c = 0; c < config_labels.size(); ++c) tasks[t++].graph = &graphs[g];
            ++g;
        }
    }

    std::vector<BenchRow> rows(tasks.size());
    if (jobs < 1) jobs = 1;
    if (jobs == 1) {
        for (size_t i = 0; i < tasks.size(); ++i) rows[i] = run_task(tasks[i], time_limit);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
                rows[i] = run_task(tasks[i], time_limit);
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return rows;
}

std::vector<AggregateRow> aggregate(const std::vector<BenchRow>& rows) {
    // group keys in first-appearance order
    std::vector<std::pair<std::string, std::string>> keys;
    std::map<std::pair<std::string, std::string>, std::vector<const BenchRow*>> buckets;
    for (const auto& row : rows) {
        auto key = std::make_pair(row.group, row.config);
        if (!buckets.count(key)) keys.push_back(key);
        buckets[key].push_back(&row);
    }
    std::vector<AggregateRow> out;
    for (const auto& key : keys) {
        const auto& bucket = buckets[key];
        AggregateRow agg;
        agg.group = key.first;
        agg.config = key.second;
        agg.count = int(bucket.size());
        int solved = 0;
        double gap_sum = 0.0, time_solved_sum = 0.0;
        for (const BenchRow* row : bucket) {
            gap_sum += row->rel_gap;
            if (row->status == Status::Optimal) {
                ++solved;
                time_solved_sum += row->time_s;
            }
        }
        agg.solved_pct = 100.0 * solved / agg.count;
        agg.mean_gap = gap_sum / agg.count;
        if (solved > 0) agg.mean_time_solved = time_solved_sum / solved;
        out.push_back(std::move(agg));
    }
    return out;
}

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
    out << "instance,n,source,config,status,lb0,ub0,lb,ub,chi_eq,rel_gap,nodes,time_s\n";
    for (const auto& row : rows) {
        out << row.instance << ',' << row.n << ',' << row.source << ','
            << row.config << ',' << to_string(row.status) << ',' << row.lb0
            << ',' << row.ub0 << ',' << row.lb_final << ',' << row.ub_final << ',';
        if (row.chi_eq) out << *row.chi_eq;
        out << ',' << row.rel_gap << ',' << row.nodes << ','
            << std::fixed << std::setprecision(3) << row.time_s << "\n";
        out.unsetf(std::ios_base::floatfield);
        out << std::setprecision(6);
    }
}

void print_aggregate(const std::vector<AggregateRow>& rows, std::ostream& out) {
    out << std::left << std::setw(22) << "group" << std::setw(16) << "config"
        << std::right << std::setw(6) << "runs" << std::setw(10) << "%solved"
        << std::setw(10) << "gap" << std::setw(12) << "time" << "\n";
    for (const auto& row : rows) {
        out << std::left << std::setw(22) << row.group << std::setw(16)
            << row.config << std::right << std::setw(6) << row.count
            << std::setw(10) << std::fixed << std::setprecision(1)
            << row.solved_pct << std::setw(10) << std::setprecision(2)
            << row.mean_gap;
        if (row.mean_time_solved)
            out << std::setw(12) << std::setprecision(2) << *row.mean_time_solved;
        else
            out << std::setw(12) << "-";
        out << "\n";
        out.unsetf(std::ios_base::floatfield);
        out << std::setprecision(6);
    }
}

}  // namespace eqdsatur
