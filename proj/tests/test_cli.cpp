#include <cstdio>
#include <cstdlib>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct CmdResult {
    int status = -1;
    std::string out;
};

// Runs the installed command line tool and captures stdout. Pass a prefix to
// set environment variables for the child.
CmdResult run(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + QTEM_CLI_PATH " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {};
    CmdResult res;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof(buf), pipe)) > 0)
        res.out.append(buf, got);
    const int rc = pclose(pipe);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

CmdResult run_merged(const std::string& args) { return run(args + " 2>&1"); }

std::string first_cell(const std::string& csv) {
    return csv.substr(0, csv.find(','));
}

} // namespace

TEST(CliDumpMatrixTest, CsvCarriesFullPrecision) {
    const CmdResult r =
        run("dump-matrix --kind mass_NN --corners \"0,0 1,0 0,1\"");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(first_cell(r.out), "0.016666666666666666");

    const CmdResult u =
        run("dump-matrix --kind UU --corners \"0,0 1,0 0,1\" --format csv");
    ASSERT_EQ(u.status, 0);
    EXPECT_EQ(std::stod(first_cell(u.out)), 1.0 / 12.0);
}

TEST(CliDumpMatrixTest, JsonFormHasKindAndEntries) {
    const CmdResult r = run(
        "dump-matrix --kind stiff_xx --corners \"0,0 2,0 0,1\" --format json");
    ASSERT_EQ(r.status, 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("kind"), "stiff_xx");
    EXPECT_DOUBLE_EQ(j.at("area").get<double>(), 1.0);
    ASSERT_EQ(j.at("entries").size(), 6u);
    ASSERT_EQ(j.at("entries")[0].size(), 6u);
}

TEST(CliDumpMatrixTest, DegenerateCornersFailCleanly) {
    const CmdResult r =
        run_merged("dump-matrix --kind mass_NN --corners \"0,0 1,1 2,2\"");
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("DegenerateTriangle"), std::string::npos);
}

TEST(CliDumpMatrixTest, UnknownKindIsUsageError) {
    const CmdResult r =
        run_merged("dump-matrix --kind bogus --corners \"0,0 1,0 0,1\"");
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.out.find("unknown matrix kind"), std::string::npos);
}

TEST(CliParseTest, MissingSubcommandIsUsageError) {
    EXPECT_EQ(run_merged("").status, 2);
}

TEST(CliParseTest, OutOfRangeLevelCountIsUsageError) {
    EXPECT_EQ(run_merged("convergence --levels 2").status, 2);
}

TEST(CliVerifyTest, SmallRunPasses) {
    const CmdResult r = run("verify --triangles 5 --seed 3");
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("verify: PASS"), std::string::npos);
}

TEST(CliVerifyTest, JsonReportParsesAndPasses) {
    const CmdResult r = run("verify --triangles 5 --seed 3 --report json");
    ASSERT_EQ(r.status, 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("triangles"), 5);
    EXPECT_EQ(j.at("seed"), 3);
    EXPECT_EQ(j.at("kinds").size(), 16u);
    EXPECT_TRUE(j.at("pass").get<bool>());
    EXPECT_EQ(j.at("dVx_dVx_entry33").at("candidate_l3sq_c1sq_b3sq_matches"), 5);
}

TEST(CliVerifyTest, OutputIsDeterministic) {
    const std::string args = "verify --triangles 20 --seed 7";
    const CmdResult a = run(args);
    const CmdResult b = run(args);
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);

    const CmdResult one = run(args, "QTEM_THREADS=1 ");
    const CmdResult four = run(args, "QTEM_THREADS=4 ");
    ASSERT_EQ(one.status, 0);
    ASSERT_EQ(four.status, 0);
    EXPECT_EQ(one.out, four.out);
    EXPECT_EQ(a.out, one.out);
}

TEST(CliWaveguideTest, PrintsComputedAgainstAnalyticCutoffs) {
    const CmdResult r =
        run("waveguide --nx 4 --ny 2 --n-modes 2 --mode-type te");
    ASSERT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("computed_kc"), std::string::npos);
    EXPECT_NE(r.out.find("analytic_kc"), std::string::npos);
    EXPECT_NE(r.out.find("rel_err"), std::string::npos);
    // first te cutoff of the 2 x 1 default section is pi/2
    EXPECT_NE(r.out.find("1.570"), std::string::npos);
}

TEST(CliWaveguideTest, RunsAreReproducible) {
    const std::string args = "waveguide --nx 4 --ny 2 --n-modes 3";
    const CmdResult a = run(args);
    const CmdResult b = run(args);
    ASSERT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
}
