#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CommandResult {
    int exit_code;
    std::string output;
};

// run the solver binary through the shell, capturing stdout+stderr
CommandResult run_cli(const std::string& args) {
    const std::string tmp = std::string(CLI_BIN) + ".out";
    const std::string cmd = std::string(CLI_BIN) + " " + args + " > " + tmp + " 2>&1";
    const int raw = std::system(cmd.c_str());
    std::ifstream in(tmp);
    std::stringstream buf;
    buf << in.rdbuf();
    std::remove(tmp.c_str());
    return CommandResult{WEXITSTATUS(raw), buf.str()};
}

std::string instance(const std::string& name) {
    return std::string(TEST_INSTANCE_DIR) + "/" + name;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("solve on a random edgeless instance") {
    auto res = run_cli("solve --random n=5,d=0.0,seed=1");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("chi_eq:     1") != std::string::npos);
}

TEST_CASE("solve on a random complete instance") {
    auto res = run_cli("solve --random n=5,d=1.0,seed=1");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("chi_eq:     5") != std::string::npos);
}

TEST_CASE("print-coloring emits the s-header format") {
    auto res = run_cli("solve --random n=4,d=0.0,seed=1 --print-coloring");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("s 1\n1 1\n2 1\n3 1\n4 1\n") != std::string::npos);
}

TEST_CASE("solve a DIMACS fixture with explicit config") {
    auto res = run_cli("solve --dimacs " + instance("myciel3.col")
        + " --strategy pass --order size --pruning equity");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("OPTIMAL") != std::string::npos);
    CHECK(res.output.find("chi_eq:     4") != std::string::npos);
}

TEST_CASE("input errors exit with 1") {
    CHECK(run_cli("solve --dimacs /nonexistent.col").exit_code == 1);
    CHECK(run_cli("solve --random n=5,d=2.0,seed=1").exit_code == 1);
    CHECK(run_cli("solve --random banana").exit_code == 1);
    CHECK(run_cli("solve").exit_code == 1);
    CHECK(run_cli("solve --random n=5,d=0.5,seed=1 --strategy warp").exit_code == 1);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("hitting the time limit exits with 2") {
    auto res = run_cli("solve --dimacs " + instance("myciel5.col")
        + " --time-limit 0.000001");
    CHECK(res.exit_code == 2);
    CHECK(res.output.find("TIME_LIMIT") != std::string::npos);
}

TEST_CASE("bench runs a suite and writes the CSV") {
    const std::string dir = std::string(CLI_BIN) + ".benchdir";
    REQUIRE(std::system(("mkdir -p " + dir).c_str()) == 0);
    const std::string suite_path = dir + "/suite.txt";
    const std::string csv_path = dir + "/out.csv";
    {
        std::ofstream suite(suite_path);
        suite << "random 8 0.5 3 900\n";
        suite << "file " << instance("myciel3.col") << "\n";
    }
    auto res = run_cli("bench --suite " + suite_path
        + " --configs eqds1,eqds2 --out " + csv_path + " --jobs 2 --time-limit 60");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("group") != std::string::npos);

    std::ifstream csv(csv_path);
    REQUIRE(csv.good());
    std::string line;
    int lines = 0;
    while (std::getline(csv, line)) ++lines;
    CHECK(lines == 1 + 4 * 2);  // header + (3 random + 1 file) x 2 configs
    CHECK(std::system(("rm -rf " + dir).c_str()) == 0);
}

TEST_CASE("bench with a broken suite exits with 1") {
    const std::string suite_path = std::string(CLI_BIN) + ".bad_suite";
    {
        std::ofstream suite(suite_path);
        suite << "randomish 8\n";
    }
    CHECK(run_cli("bench --suite " + suite_path + " --out /dev/null").exit_code == 1);
    std::remove(suite_path.c_str());
}

}  // TEST_SUITE
