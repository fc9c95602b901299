#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oloa/cli.hpp"

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = oloa::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::istringstream in(line);
    std::string cell;
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    return cells;
}

} // namespace

TEST_CASE("eval m 0 prints the 12-digit value and the branch tag") {
    RunResult r = run_cli({"eval", "m", "0"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("1.13033070075") != std::string::npos);
    REQUIRE(r.out.find("below") != std::string::npos);
}

TEST_CASE("eval with --method both shows both routes and their gap") {
    RunResult r = run_cli({"eval", "m", "0.5", "--method", "both"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("direct") != std::string::npos);
    REQUIRE(r.out.find("closed") != std::string::npos);
    REQUIRE(r.out.find("abs_diff") != std::string::npos);
    REQUIRE(r.out.find("1.39590693182") != std::string::npos);
}

TEST_CASE("eval l prints the Laplace transform of digamma") {
    RunResult r = run_cli({"eval", "l", "1"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("0.266086442630") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"eval", "m", "abc"}).code == 2);
    CHECK(run_cli({"eval", "q", "1"}).code == 2);
    CHECK(run_cli({"eval", "m", "-1"}).code == 2);
    CHECK(run_cli({"verify", "--id", "NOPE"}).code == 2);
    CHECK(run_cli({"verify", "--all", "--id", "GR-4331"}).code == 2);
    CHECK(run_cli({"table", "--from", "2", "--to", "1", "--step", "0.1"}).code == 2);
    CHECK(run_cli({"table", "--from", "0.1"}).code == 2);
    CHECK_FALSE(run_cli({"frobnicate"}).err.empty());
}

TEST_CASE("help is success, not a usage error") {
    RunResult r = run_cli({"--help"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.find("eval") != std::string::npos);
}

TEST_CASE("verify --id emits a machine-readable verdict") {
    RunResult r = run_cli({"verify", "--id", "EULER-1", "--format", "json"});
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(j["id"] == "EULER-1");
    REQUIRE(j["pass"] == true);
    REQUIRE(j["tol"] == 1e-9);
    REQUIRE(j.contains("lhs"));
    REQUIRE(j.contains("rhs"));
    REQUIRE(j.contains("discrepancy"));
    REQUIRE(j.contains("elapsed_ms"));
}

TEST_CASE("verify --all reports the whole catalog") {
    RunResult r = run_cli({"verify", "--all", "--format", "json"});
    REQUIRE(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(j["total"] == 28);
    REQUIRE(j["passed"] == 28);
    REQUIRE(j["failed"] == 0);
    REQUIRE(j["results"].size() == 28);

    RunResult t = run_cli({"verify"});
    REQUIRE(t.code == 0);
    auto lines = lines_of(t.out);
    REQUIRE(lines.size() == 29);
    REQUIRE(lines.back() == "passed 28/28");
    for (std::size_t i = 0; i + 1 < lines.size(); ++i)
        REQUIRE(lines[i].substr(0, 5) == "PASS ");
}

TEST_CASE("verify text output is byte-identical across runs") {
    RunResult a = run_cli({"verify", "--all"});
    RunResult b = run_cli({"verify", "--all"});
    REQUIRE(a.out == b.out);
    REQUIRE(a.code == b.code);
}

TEST_CASE("table reproduces the 40-point grid with tight branch agreement") {
    RunResult r = run_cli({"table", "--from", "0.05", "--to", "2.0", "--step", "0.05"});
    REQUIRE(r.code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 41);
    REQUIRE(lines[0] == "a,m_direct,m_closed,branch,abs_diff");

    int flips = 0;
    std::string prev;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto cells = split_csv(lines[i]);
        REQUIRE(cells.size() == 5);
        double diff = std::strtod(cells[4].c_str(), nullptr);
        INFO(lines[i]);
        REQUIRE(diff <= 1e-6);
        if (!prev.empty() && cells[3] != prev) {
            ++flips;
            REQUIRE(cells[0] == "0.7");   // first grid point above ln 2
            REQUIRE(cells[3] == "above");
        }
        prev = cells[3];
    }
    REQUIRE(flips == 1);

    RunResult again = run_cli({"table", "--from", "0.05", "--to", "2.0", "--step", "0.05"});
    REQUIRE(again.out == r.out);
}

TEST_CASE("table --include-cusp inserts the ln 2 row") {
    RunResult r = run_cli({"table", "--from", "0.6", "--to", "0.8", "--step",
                           "0.1", "--include-cusp"});
    REQUIRE(r.code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 5);
    auto cusp = split_csv(lines[2]);
    REQUIRE(cusp[0] == "0.6931471806");
    REQUIRE(cusp[3] == "at");

    // without the flag the uniform grid stays uniform
    RunResult plain = run_cli({"table", "--from", "0.6", "--to", "0.8", "--step", "0.1"});
    REQUIRE(lines_of(plain.out).size() == 4);
}

TEST_CASE("table --out writes the same bytes to a file") {
    const char* path = "cli_table_test_tmp.csv";
    RunResult file_run = run_cli({"table", "--from", "0.5", "--to", "0.7",
                                  "--step", "0.1", "--out", path});
    REQUIRE(file_run.code == 0);
    REQUIRE(file_run.out.empty());
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream content;
    content << in.rdbuf();
    in.close();
    std::remove(path);
    RunResult stdout_run = run_cli({"table", "--from", "0.5", "--to", "0.7",
                                    "--step", "0.1"});
    REQUIRE(content.str() == stdout_run.out);
}

TEST_CASE("jump prints both one-sided slopes and their difference") {
    RunResult r = run_cli({"jump"});
    REQUIRE(r.code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 3);
    REQUIRE(lines[0].substr(0, 7) == "left = ");
    REQUIRE(lines[1].substr(0, 8) == "right = ");
    REQUIRE(lines[2].substr(0, 7) == "jump = ");
    double left = std::strtod(lines[0].c_str() + 7, nullptr);
    double right = std::strtod(lines[1].c_str() + 8, nullptr);
    double jump = std::strtod(lines[2].c_str() + 7, nullptr);
    REQUIRE(std::fabs(left - 0.5991699006) < 1e-9);
    REQUIRE(std::fabs(right + 3.4008300994) < 1e-9);
    REQUIRE(std::fabs(jump - 4.0) < 1e-3);
}

TEST_CASE("catalog lists all identities") {
    RunResult r = run_cli({"catalog"});
    REQUIRE(r.code == 0);
    auto lines = lines_of(r.out);
    REQUIRE(lines.size() == 28);
    REQUIRE(lines[0].find("GR-4331") != std::string::npos);
    REQUIRE(lines[27].find("MOMENT614") != std::string::npos);
}

TEST_CASE("OLOA_ABS_TOL environment override") {
    unsetenv("OLOA_ABS_TOL");
    RunResult base = run_cli({"table", "--from", "0.5", "--to", "0.5", "--step", "1"});

    // a valid value is honored (grossly loosened tolerance changes the grid values)
    setenv("OLOA_ABS_TOL", "100.0", 1);
    RunResult loose = run_cli({"table", "--from", "0.5", "--to", "0.5", "--step", "1"});

    // garbage is ignored
    setenv("OLOA_ABS_TOL", "not-a-number", 1);
    RunResult garbage = run_cli({"table", "--from", "0.5", "--to", "0.5", "--step", "1"});
    unsetenv("OLOA_ABS_TOL");

    REQUIRE(base.code == 0);
    REQUIRE(loose.code == 0);
    REQUIRE(garbage.out == base.out);
    REQUIRE(loose.out != base.out);

    setenv("OLOA_ABS_TOL", "1e-6", 1);
    RunResult v = run_cli({"verify", "--id", "GR-4331", "--format", "json"});
    unsetenv("OLOA_ABS_TOL");
    REQUIRE(v.code != 2);
    nlohmann::json j = nlohmann::json::parse(v.out);
    REQUIRE(j["tol"] == 1e-10);
}
