#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hybridcd/cli.hpp"
#include "hybridcd/graph_json.hpp"

using namespace hcd;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("hybridcd_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    void write(const std::string& name, const std::string& text) const { std::ofstream(dir_ / name) << text; }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, HelpExitsZero) {
    CliRun r = cli({"--help"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("discover"), std::string::npos);
}

TEST_F(Cli, NoSubcommandIsUsageError) { EXPECT_EQ(cli({}).code, kExitUsage); }

TEST_F(Cli, SimulateWritesDataAndTruth) {
    CliRun r = cli({"simulate", "--structure", "diamond", "--seed", "3", "--T", "250", "--out", path("a")});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    std::string csv = slurp(path("a.csv"));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "X,Y,Z,W");
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 251);
    Json truth = Json::parse(slurp(path("a.truth.json")));
    EXPECT_EQ(truth["type"], "scg");
    EXPECT_TRUE(fs::exists(path("a.wcg.json")));

    ASSERT_EQ(cli({"simulate", "--structure", "diamond", "--seed", "3", "--T", "250", "--out", path("b")}).code, 0);
    EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
    EXPECT_EQ(slurp(path("a.truth.json")), slurp(path("b.truth.json")));
}

TEST_F(Cli, SimulateRicker) {
    CliRun r = cli({"simulate", "--structure", "ricker", "--species", "6", "--T", "100", "--out", path("sub/r")});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    std::string csv = slurp(path("sub/r.csv"));
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "S1,S2,S3,S4,S5,S6");
    EXPECT_FALSE(fs::exists(path("sub/r.wcg.json")));
}

TEST_F(Cli, DiscoverAndEvaluateFork) {
    ASSERT_EQ(cli({"simulate", "--structure", "fork", "--seed", "1", "--out", path("f")}).code, 0);
    CliRun d = cli({"discover", "--input", path("f.csv"), "--method", "cbnb-w", "--gamma", "3", "--out", path("res.json")});
    ASSERT_EQ(d.code, kExitOk) << d.err;
    Json res = Json::parse(slurp(path("res.json")));
    EXPECT_EQ(res["method"], "cbnb-w");
    EXPECT_TRUE(res.contains("diagnostics"));

    CliRun e = cli({"evaluate", "--pred", path("res.json"), "--truth", path("f.truth.json")});
    ASSERT_EQ(e.code, kExitOk) << e.err;
    Json score = Json::parse(e.out);
    EXPECT_GE(score["f1"].get<double>(), 0.5);
    EXPECT_TRUE(score.contains("tp"));
}

TEST_F(Cli, DiscoverPrintsToStdoutWithoutOut) {
    ASSERT_EQ(cli({"simulate", "--structure", "v-structure", "--T", "300", "--out", path("v")}).code, 0);
    CliRun d = cli({"discover", "--input", path("v.csv"), "--method", "nbcb-e", "--gamma", "2"});
    ASSERT_EQ(d.code, kExitOk) << d.err;
    EXPECT_EQ(Json::parse(d.out)["method"], "nbcb-e");
}

TEST_F(Cli, SingleColumnDataset) {
    std::string text = "A\n";
    for (int t = 0; t < 200; ++t) text += std::to_string(std::sin(0.7 * t) + 0.01 * (t % 7)) + "\n";
    write("one.csv", text);
    CliRun d = cli({"discover", "--input", path("one.csv"), "--gamma", "2"});
    ASSERT_EQ(d.code, kExitOk) << d.err;
    EXPECT_TRUE(Json::parse(d.out)["scg"]["edges"].empty());
}

TEST_F(Cli, ConstantColumnIsDegenerate) {
    std::string text = "A,B\n";
    for (int t = 0; t < 100; ++t) text += std::to_string(std::cos(0.3 * t)) + ",5\n";
    write("flat.csv", text);
    CliRun d = cli({"discover", "--input", path("flat.csv"), "--gamma", "2"});
    EXPECT_EQ(d.code, kExitDegenerate);
    EXPECT_NE(d.err.find("B"), std::string::npos) << d.err;
}

TEST_F(Cli, MalformedCsvIsDataError) {
    write("bad.csv", "A,B\n1,2\n3,oops\n");
    CliRun d = cli({"discover", "--input", path("bad.csv")});
    EXPECT_EQ(d.code, kExitData);
    EXPECT_NE(d.err.find("line 3"), std::string::npos) << d.err;
    EXPECT_EQ(cli({"discover", "--input", path("missing.csv")}).code, kExitData);
}

TEST_F(Cli, UnknownValuesAreUsageErrors) {
    write("ok.csv", "A,B\n1,2\n3,4\n");
    EXPECT_EQ(cli({"discover", "--input", path("ok.csv"), "--method", "pcmci"}).code, kExitUsage);
    EXPECT_EQ(cli({"discover", "--input", path("ok.csv"), "--alpha", "2"}).code, kExitUsage);
    EXPECT_EQ(cli({"simulate", "--structure", "ring", "--out", path("x")}).code, kExitUsage);
    EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
}

TEST_F(Cli, BenchSingleSeed) {
    CliRun b = cli({"bench", "--method", "nbcb-w", "--structure", "fork", "--seeds", "1", "--T", "300", "--gamma", "2",
                 "--out", path("bench.csv")});
    ASSERT_EQ(b.code, kExitOk) << b.err;
    EXPECT_NE(b.out.find("nbcb-w"), std::string::npos);
    std::string csv = slurp(path("bench.csv"));
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
}

TEST_F(Cli, ConfigFileSuppliesOptions) {
    ASSERT_EQ(cli({"simulate", "--structure", "fork", "--T", "300", "--out", path("c")}).code, 0);
    write("run.ini", "[discover]\nmethod=nbcb-e\ngamma=2\ninput=" + path("c.csv") + "\n");
    CliRun d = cli({"--config", path("run.ini"), "discover"});
    ASSERT_EQ(d.code, kExitOk) << d.err;
    EXPECT_EQ(Json::parse(d.out)["method"], "nbcb-e");
}
