#include <doctest.h>

#include <stdexcept>

#include <sstream>

#include "eqdsatur/bench.hpp"

using namespace eqdsatur;

namespace {

// minimal CSV split; the format never quotes fields
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (line.empty() || line.back() == ',') fields.push_back("");
        rows.push_back(std::move(fields));
    }
    return rows;
}

std::string csv_without_time(const std::vector<BenchRow>& rows) {
    auto copy = rows;
    for (auto& row : copy) row.time_s = 0.0;
    std::ostringstream out;
    write_csv(copy, out);
    return out.str();
}

}  // namespace

TEST_SUITE("bench") {

TEST_CASE("config labels") {
    SolverConfig c = config_from_label("eqds1");
    CHECK(c.strategy == Strategy::Pass);
    CHECK(c.color_order == ColorOrder::Index);
    CHECK(c.pruning == Pruning::Equity);
    c = config_from_label("eqds2");
    CHECK(c.color_order == ColorOrder::SizeAsc);
    c = config_from_label("brelaz-index-trivial");
    CHECK(c.strategy == Strategy::Brelaz);
    CHECK(c.pruning == Pruning::Trivial);
    CHECK_THROWS_AS(config_from_label("fast"), std::runtime_error);
    CHECK_THROWS_AS(config_from_label("pass-up"), std::runtime_error);
    CHECK_THROWS_AS(config_from_label("pass-index-buggy"), std::runtime_error);
}

TEST_CASE("suite parsing") {
    std::istringstream in(
        "# comment\n"
        "\n"
        "random 8 0.5 3 100\n"
        "file instances/queen8_8.col\n");
    auto suite = parse_suite(in);
    REQUIRE(suite.size() == 2);
    CHECK(suite[0].kind == SuiteEntry::Kind::Random);
    CHECK(suite[0].n == 8);
    CHECK(suite[0].density == 0.5);
    CHECK(suite[0].count == 3);
    CHECK(suite[0].seed_base == 100);
    CHECK(suite[1].kind == SuiteEntry::Kind::File);
    CHECK(suite[1].path == "instances/queen8_8.col");

    std::istringstream bad("random 8 0.5\n");
    CHECK_THROWS_AS(parse_suite(bad), std::runtime_error);
    std::istringstream unknown("sweep 1 2 3\n");
    CHECK_THROWS_AS(parse_suite(unknown), std::runtime_error);
}

TEST_CASE("relative gap convention") {
    CHECK(relative_gap(Status::Optimal, 3, 5) == 0.0);
    CHECK(relative_gap(Status::TimeLimit, 3, 5) == doctest::Approx(40.0));
    CHECK(relative_gap(Status::NodeLimit, 5, 5) == 0.0);
}

TEST_CASE("single edgeless instance solves instantly") {
    std::vector<SuiteEntry> suite{{SuiteEntry::Kind::Random, 6, 0.0, 1, 1, ""}};
    auto rows = run_suite(suite, {"eqds2"}, 60.0, 1);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].status == Status::Optimal);
    CHECK(rows[0].chi_eq == 1);
    CHECK(rows[0].rel_gap == 0.0);
    auto agg = aggregate(rows);
    REQUIRE(agg.size() == 1);
    CHECK(agg[0].solved_pct == 100.0);
    CHECK(agg[0].mean_gap == 0.0);
    REQUIRE(agg[0].mean_time_solved.has_value());
    CHECK(*agg[0].mean_time_solved < 1.0);
}

TEST_CASE("aggregates are recomputable from the row CSV") {
    std::vector<SuiteEntry> suite{
        {SuiteEntry::Kind::Random, 10, 0.5, 4, 50, ""},
        {SuiteEntry::Kind::Random, 12, 0.3, 3, 60, ""},
    };
    auto rows = run_suite(suite, {"eqds1", "eqds2"}, 60.0, 2);
    REQUIRE(rows.size() == 14);

    std::ostringstream out;
    write_csv(rows, out);
    auto csv = parse_csv(out.str());
    REQUIRE(csv.size() == 15);  // header + rows
    CHECK(csv[0][0] == "instance");
    REQUIRE(csv[1].size() == 13);

    // recompute group stats from the CSV text alone and compare
    auto agg = aggregate(rows);
    for (const auto& a : agg) {
        int count = 0, solved = 0;
        double gap_sum = 0.0;
        for (size_t i = 1; i < csv.size(); ++i) {
            const auto& f = csv[i];
            const std::string group = "n=" + f[1] + ",d=" + f[2];
            if (group != a.group || f[3] != a.config) continue;
            ++count;
            if (f[4] == "OPTIMAL") ++solved;
            gap_sum += std::stod(f[10]);
        }
        CHECK(count == a.count);
        CHECK(100.0 * solved / count == doctest::Approx(a.solved_pct));
        CHECK(gap_sum / count == doctest::Approx(a.mean_gap));
    }
}

TEST_CASE("limit rows carry gaps and empty chi cells") {
    // a vanishing time limit forces TIME_LIMIT on any instance that is not
    // closed at initialization
    std::vector<SuiteEntry> suite{{SuiteEntry::Kind::Random, 30, 0.5, 2, 424242, ""}};
    auto rows = run_suite(suite, {"eqds2"}, 1e-9, 1);
    REQUIRE(rows.size() == 2);
    for (const auto& row : rows) {
        CHECK(row.status == Status::TimeLimit);
        CHECK(!row.chi_eq.has_value());
        CHECK(row.rel_gap > 0.0);
        CHECK(row.rel_gap == relative_gap(row.status, row.lb_final, row.ub_final));
    }
    std::ostringstream out;
    write_csv(rows, out);
    auto csv = parse_csv(out.str());
    REQUIRE(csv.size() == 3);
    CHECK(csv[1][4] == "TIME_LIMIT");
    CHECK(csv[1][9] == "");  // chi_eq column

    auto agg = aggregate(rows);
    REQUIRE(agg.size() == 1);
    CHECK(agg[0].solved_pct == 0.0);
    CHECK(!agg[0].mean_time_solved.has_value());
    std::ostringstream table;
    print_aggregate(agg, table);
    CHECK(table.str().find("-") != std::string::npos);
}

TEST_CASE("reruns are identical apart from wall time") {
    std::vector<SuiteEntry> suite{{SuiteEntry::Kind::Random, 12, 0.5, 3, 7, ""}};
    auto a = run_suite(suite, {"eqds1", "eqds2"}, 60.0, 1);
    auto b = run_suite(suite, {"eqds1", "eqds2"}, 60.0, 1);
    CHECK(csv_without_time(a) == csv_without_time(b));
}

TEST_CASE("parallel execution matches serial row for row") {
    std::vector<SuiteEntry> suite{
        {SuiteEntry::Kind::Random, 14, 0.4, 4, 11, ""},
        {SuiteEntry::Kind::Random, 10, 0.7, 2, 22, ""},
    };
    auto serial = run_suite(suite, {"eqds1", "eqds2"}, 60.0, 1);
    auto parallel = run_suite(suite, {"eqds1", "eqds2"}, 60.0, 4);
    CHECK(csv_without_time(serial) == csv_without_time(parallel));
}

}  // TEST_SUITE
