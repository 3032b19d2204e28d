#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "slideocam/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "slideocam");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = slideocam::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("slideocam_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
        std::ofstream(path("base.yaml")) << "p: 50\nn: 1\nm: 2\ne: 9\na4: 10\n";
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ProfileWritesBothFiles) {
    const auto r = run({"profile", "--config", path("base.yaml"), "--svg", path("out.svg"), "--csv", path("out.csv")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(fs::file_size(path("out.svg")) > 0);
    EXPECT_TRUE(fs::file_size(path("out.csv")) > 0);
    EXPECT_NE(r.out.find("extended angle: delta = -1.23364601377"), std::string::npos);
    EXPECT_NE(r.out.find("max |mu|: 6.06"), std::string::npos);
    EXPECT_NE(r.out.find("tan mu = "), std::string::npos);
    EXPECT_NE(r.out.find("shaft clearance FAIL"), std::string::npos);
}

TEST_F(CliTest, RepeatedRunsAreByteIdentical) {
    for (const char* sub : {"profile", "pitch"}) {
        ASSERT_EQ(run({sub, "--config", path("base.yaml"), "--svg", path("a.svg"), "--csv", path("a.csv")}).code, 0);
        ASSERT_EQ(run({sub, "--config", path("base.yaml"), "--svg", path("b.svg"), "--csv", path("b.csv")}).code, 0);
        EXPECT_EQ(slurp(path("a.svg")), slurp(path("b.svg"))) << sub;
        EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv"))) << sub;
    }
}

TEST_F(CliTest, BaselineIsUsedWithoutConfig) {
    const auto a = run({"delta"});
    const auto b = run({"delta", "--config", path("base.yaml")});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("iterations"), std::string::npos);
    EXPECT_NE(a.out.find("residual"), std::string::npos);
}

TEST_F(CliTest, InfeasibleDesignExitsOne) {
    const auto r = run({"feasibility", "--config", path("base.yaml"), "--set", "a4=30"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("a4 < p/(2n)"), std::string::npos);
    EXPECT_NE(r.err.find("feasibility"), std::string::npos);
}

TEST_F(CliTest, FeasibleDesignExitsZero) {
    const auto r = run({"feasibility", "--set", "e=20"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("feasibility: feasible"), std::string::npos);
    EXPECT_EQ(run({"feasibility", "--set", "e=14", "--set", "a4=5", "--require-convex"}).code, 1);
}

TEST_F(CliTest, ValidationFailuresExitOne) {
    EXPECT_EQ(run({"profile", "--set", "a4=-1"}).code, 1);
    EXPECT_EQ(run({"profile", "--set", "bogus=1"}).code, 1);
    EXPECT_EQ(run({"profile", "--samples", "8"}).code, 1);
    EXPECT_EQ(run({"profile", "--config", path("missing.yaml")}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"sweep", "--param", "radius", "--values", "1,2"}).code, 1);
    EXPECT_EQ(run({"sweep", "--param", "n", "--values", "1.5"}).code, 1);

    std::ofstream(path("broken.yaml")) << "p: 50\nn: [1\n";
    const auto r = run({"profile", "--config", path("broken.yaml")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("export-io"), std::string::npos);
    EXPECT_NE(r.err.find("line "), std::string::npos);
}

TEST_F(CliTest, UnwritableOutputExitsOne) {
    EXPECT_EQ(run({"profile", "--csv", path("no/such/dir/out.csv")}).code, 1);
}

TEST_F(CliTest, SolverFailuresExitTwo) {
    const auto root = run({"profile", "--set", "a4=30"});
    EXPECT_EQ(root.code, 2);
    EXPECT_NE(root.err.find("geometry-solver"), std::string::npos);
    const auto singular = run({"delta", "--set", "eta=0.15915494309189535"});
    EXPECT_EQ(singular.code, 2);
    EXPECT_NE(singular.err.find("cam-core"), std::string::npos);
}

TEST_F(CliTest, RequireConvexRejectsNonConvexProfile) {
    const auto r = run({"profile", "--require-convex"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("not convex"), std::string::npos);
    EXPECT_EQ(run({"profile", "--require-convex", "--set", "e=20", "--set", "a4=5"}).code, 0);
}

TEST_F(CliTest, SweepProducesMonotoneMaxPressure) {
    const auto r = run({"sweep", "--param", "eta", "--values", "0.32,0.4,0.8,1,1.5,2,5", "--csv", path("s.csv")});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(slurp(path("s.csv")));
    std::string line;
    double previous = -1;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line.rfind("eta,", 0) == 0) continue;
        std::vector<std::string> cols;
        std::stringstream ss(line);
        for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
        ASSERT_GE(cols.size(), 7u);
        const double mu = std::stod(cols[6]);
        EXPECT_GT(mu, previous) << line;
        previous = mu;
        ++rows;
    }
    EXPECT_EQ(rows, 7);
}

TEST_F(CliTest, PressureWarnsAboutGuidelines) {
    const auto high = run({"pressure", "--set", "n=2", "--set", "e=13", "--set", "a4=4"});
    EXPECT_EQ(high.code, 0);
    EXPECT_NE(high.out.find("30 deg"), std::string::npos);
    EXPECT_NE(high.out.find("20 deg"), std::string::npos);
    const auto single = run({"pressure", "--set", "m=1"});
    EXPECT_NE(single.out.find("90 deg"), std::string::npos);
}

TEST_F(CliTest, RegionWritesRaster) {
    const auto r = run({"region", "--set", "region.eta_cells=20", "--set", "region.a4_cells=10", "--csv",
                        path("r.csv"), "--svg", path("r.svg")});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(slurp(path("r.csv")).find("a4\\eta"), std::string::npos);
    EXPECT_NE(slurp(path("r.svg")).find("<svg"), std::string::npos);
}

TEST_F(CliTest, HelpExitsZero) { EXPECT_EQ(run({"--help"}).code, 0); }

#ifdef SLIDEOCAM_CLI_PATH
TEST_F(CliTest, ExecutableMatchesInProcessRun) {
    const std::string cmd = std::string(SLIDEOCAM_CLI_PATH) + " delta > " + path("exe.txt");
    ASSERT_EQ(std::system(cmd.c_str()), 0);
    EXPECT_EQ(slurp(path("exe.txt")), run({"delta"}).out);
    const std::string bad = std::string(SLIDEOCAM_CLI_PATH) + " profile --set a4=30 2>/dev/null >/dev/null";
    EXPECT_EQ(WEXITSTATUS(std::system(bad.c_str())), 2);
}
#endif
