#include "cli.hpp"
#include "output.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace fs = std::filesystem;
using heatcouple::cli::run_cli;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path fresh_dir(const std::string& name) {
    const fs::path p = fs::temp_directory_path() / ("heatcouple_cli_" + name);
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

std::map<std::string, std::string> directory_contents(const fs::path& dir) {
    std::map<std::string, std::string> files;
    for (const auto& e : fs::directory_iterator(dir)) files[e.path().filename().string()] = slurp(e.path());
    return files;
}

}  // namespace

TEST(Cli, HelpExitsZero) {
    const auto top = invoke({"--help"});
    EXPECT_EQ(top.code, 0);
    EXPECT_NE(top.out.find("compare"), std::string::npos);
    const auto sub = invoke({"run", "--help"});
    EXPECT_EQ(sub.code, 0);
    EXPECT_NE(sub.out.find("--scheme"), std::string::npos);
}

TEST(Cli, MissingSubcommandAndUnknownFlagAreValidationErrors) {
    EXPECT_EQ(invoke({}).code, 1);
    EXPECT_EQ(invoke({"run", "--bogus", "1"}).code, 1);
    EXPECT_EQ(invoke({"run", "--nodes", "abc"}).code, 1);
}

TEST(Cli, InvalidConfigurationExitsOne) {
    const fs::path dir = fresh_dir("invalid");
    const auto r = invoke({"run", "--dt", "0.003", "--out-dir", dir.string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("integer multiple"), std::string::npos) << r.err;
    EXPECT_EQ(invoke({"run", "--scheme", "magic", "--out-dir", dir.string()}).code, 1);
    EXPECT_EQ(invoke({"run", "--solver", "lu", "--out-dir", dir.string()}).code, 1);
    EXPECT_EQ(invoke({"run", "--nodes", "2", "--out-dir", dir.string()}).code, 1);
    EXPECT_EQ(invoke({"run", "--snapshots", "0.7", "--out-dir", dir.string()}).code, 1);
}

TEST(Cli, SolverFailureExitsTwo) {
    const fs::path dir = fresh_dir("solver_failure");
    const auto r = invoke({"run", "--newton-max-iters", "1", "--newton-tol", "1e-15", "--nodes", "20",
                           "--t-end", "0.01", "--out-dir", dir.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("step 1"), std::string::npos) << r.err;
}

TEST(Cli, RunWritesProfilesSummaryAndTiming) {
    const fs::path dir = fresh_dir("run");
    const auto r = invoke({"run", "--scheme", "explicit", "--nodes", "30", "--dt", "0.01", "--t-end", "0.1",
                           "--snapshots", "0.05", "--out-dir", dir.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    for (const char* name : {"explicit_dt0.01_t0.csv", "explicit_dt0.01_t0.05.csv", "explicit_dt0.01_t0.1.csv",
                             "summary.txt", "timing.txt"})
        EXPECT_TRUE(fs::exists(dir / name)) << name;

    const auto rows = lines_of(slurp(dir / "explicit_dt0.01_t0.1.csv"));
    ASSERT_EQ(rows.size(), 31u);
    EXPECT_EQ(rows[0], "x,temperature,diffusivity");
    EXPECT_EQ(rows[1].substr(0, 2), "0,");
    EXPECT_EQ(rows[30].substr(0, 2), "1,");

    // Initial profile: left node at t_l, every other node at t_r.
    const auto init = lines_of(slurp(dir / "explicit_dt0.01_t0.csv"));
    EXPECT_EQ(init[1], "0,0.10000000000000001,0.0010000000000000002");
    EXPECT_EQ(init[2].substr(init[2].find(',')), ",2,8");
}

TEST(Cli, SummaryTotalsEqualSnapshotSums) {
    const fs::path dir = fresh_dir("totals");
    ASSERT_EQ(invoke({"run", "--scheme", "implicit", "--nodes", "30", "--dt", "0.01", "--t-end", "0.1",
                      "--snapshots", "0.03,0.06", "--out-dir", dir.string()})
                  .code,
              0);
    const auto rows = lines_of(slurp(dir / "summary.txt"));
    std::map<std::string, long> totals;
    std::size_t i = 0;
    while (i < rows.size() && rows[i] != "# totals") ++i;
    for (++i; i < rows.size() && !rows[i].empty(); ++i) {
        const auto colon = rows[i].find(": ");
        totals[rows[i].substr(0, colon)] = std::stol(rows[i].substr(colon + 2));
    }
    while (i < rows.size() && rows[i].rfind("time,", 0) != 0) ++i;
    std::vector<long> sums(5, 0);
    std::size_t snapshots = 0;
    for (++i; i < rows.size() && !rows[i].empty(); ++i, ++snapshots) {
        std::istringstream row(rows[i]);
        std::string cell;
        std::getline(row, cell, ',');
        std::getline(row, cell, ',');
        for (long& s : sums) {
            std::getline(row, cell, ',');
            s += std::stol(cell);
        }
    }
    EXPECT_EQ(snapshots, 4u);
    EXPECT_EQ(sums[0], totals["steps"]);
    EXPECT_EQ(totals["steps"], 10);
    EXPECT_EQ(sums[1], totals["newton_iterations"]);
    EXPECT_EQ(sums[2], totals["outer_iterations"]);
    EXPECT_EQ(sums[3], totals["linear_solves"]);
    EXPECT_EQ(sums[4], totals["linear_iterations"]);
    EXPECT_GT(totals["outer_iterations"], 0);
}

TEST(Cli, RunIsByteDeterministic) {
    const fs::path a = fresh_dir("det_a");
    const fs::path b = fresh_dir("det_b");
    const std::vector<std::string> common{"run", "--nodes", "40", "--dt", "0.005", "--t-end", "0.05",
                                          "--snapshots", "0.025"};
    auto args_a = common, args_b = common;
    args_a.insert(args_a.end(), {"--out-dir", a.string()});
    args_b.insert(args_b.end(), {"--out-dir", b.string()});
    ASSERT_EQ(invoke(args_a).code, 0);
    ASSERT_EQ(invoke(args_b).code, 0);
    auto fa = directory_contents(a);
    auto fb = directory_contents(b);
    fa.erase("timing.txt");
    fb.erase("timing.txt");
    EXPECT_EQ(fa, fb);
}

TEST(Cli, CompareWritesTableAndChecks) {
    const fs::path dir = fresh_dir("compare");
    const auto r = invoke({"compare", "--nodes", "30", "--t-end", "0.05", "--dt-list", "0.01,0.005",
                           "--serial", "--out-dir", dir.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines_of(slurp(dir / "comparison.csv"));
    ASSERT_EQ(rows.size(), 9u);
    EXPECT_EQ(rows[0], "scheme,dt,l1,l2,linf,steps,newton_iterations,outer_iterations,linear_solves,"
                       "linear_iterations");
    EXPECT_TRUE(fs::exists(dir / "full_dt0.005_t0.05.csv"));
    EXPECT_TRUE(fs::exists(dir / "one-way_dt0.01_t0.05.csv"));
    const std::string summary = slurp(dir / "summary.txt");
    EXPECT_NE(summary.find("# ordering checks"), std::string::npos);
}

TEST(Cli, CompareSingleSchemeReportsSkippedChecks) {
    const fs::path dir = fresh_dir("compare_full");
    const auto r = invoke({"compare", "--nodes", "30", "--t-end", "0.05", "--scheme-list", "full",
                           "--out-dir", dir.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const std::string summary = slurp(dir / "summary.txt");
    EXPECT_EQ(summary.find("PASS:"), std::string::npos);
    EXPECT_EQ(summary.find("FAIL:"), std::string::npos);
    EXPECT_NE(summary.find("SKIPPED:"), std::string::npos);
    EXPECT_NE(summary.find("full: "), std::string::npos);
}

TEST(Cli, ConvergenceWritesOrderTable) {
    const fs::path dir = fresh_dir("convergence");
    const auto r = invoke({"convergence", "--nodes", "30", "--gamma", "0.01", "--t-end", "0.1",
                           "--dt-ladder", "0.01,0.005,0.0025", "--out-dir", dir.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines_of(slurp(dir / "convergence.csv"));
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0], "dt,linf_diff_to_next,order");
    EXPECT_TRUE(fs::exists(dir / "full_dt0.0025_t0.1.csv"));
}

TEST(Cli, ConvergenceLadderTooShortExitsOne) {
    const fs::path dir = fresh_dir("convergence_short");
    const auto r = invoke({"convergence", "--dt-ladder", "0.01,0.005", "--out-dir", dir.string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("need >= 3"), std::string::npos) << r.err;
}

TEST(Output, ProfileFileNamesUseShortestDecimals) {
    using heatcouple::Scheme;
    EXPECT_EQ(heatcouple::cli::profile_file_name(Scheme::FullCoupling, 0.001, 0.5), "full_dt0.001_t0.5.csv");
    EXPECT_EQ(heatcouple::cli::profile_file_name(Scheme::OneWay, 0.01, 0.0), "one-way_dt0.01_t0.csv");
    EXPECT_EQ(heatcouple::cli::format_shortest(0.1), "0.1");
}
