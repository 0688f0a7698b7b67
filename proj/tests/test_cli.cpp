// Runs the acmtool binary and inspects exit codes and reports.

#include "support.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#ifndef ACM_TOOL_PATH
#error "ACM_TOOL_PATH must be defined"
#endif

namespace {

using nlohmann::json;

struct ToolRun {
    int code = -1;
    std::string out;
};

ToolRun run(const std::string& args) {
    const std::string cmd = std::string(ACM_TOOL_PATH) + " " + args + " 2>/dev/null";
    ToolRun r;
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fx(const std::string& name) { return acmtest::fixture(name); }

json run_json(const std::string& args) { return json::parse(run("--json " + args).out); }

std::string temp_manifest(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("acmtool_test_" + name + ".json");
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST(Cli, CheckExample2Passes) {
    const ToolRun r = run("check " + fx("example2"));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("[kenmotsu] pass"), std::string::npos);
    EXPECT_NE(r.out.find("a = -4"), std::string::npos);
}

TEST(Cli, CheckExample3) {
    const ToolRun r = run("check " + fx("example3"));
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("[almost-contact] pass"), std::string::npos);
    EXPECT_NE(r.out.find("[kenmotsu] fail"), std::string::npos);
    EXPECT_NE(r.out.find("kappa = -2, mu = -2"), std::string::npos);
    const json j = run_json("check " + fx("example3"));
    EXPECT_EQ(j["nullity"]["kappa"], "-2");
    EXPECT_EQ(j["nullity"]["mu"], "-2");
    EXPECT_EQ(j["nullity"]["identities"]["passed"], true);
}

TEST(Cli, CheckSelectedGroups) {
    EXPECT_EQ(run("check " + fx("example3") + " --checks almost-contact,almost-kenmotsu,nullity").code, 0);
    EXPECT_EQ(run("check " + fx("example3") + " --checks kenmotsu").code, 1);
    EXPECT_EQ(run("check " + fx("example3") + " --checks bogus").code, 2);
}

TEST(Cli, CheckFlatCurvatureZero) {
    const json j = run_json("tables " + fx("flat") + " --what ricci");
    for (const auto& row : j["S"])
        for (const auto& c : row) EXPECT_EQ(c, "0");
    EXPECT_EQ(j["r"], "0");
    EXPECT_EQ(run("check " + fx("flat") + " --checks almost-contact").code, 0);
}

TEST(Cli, TablesConnection) {
    const json nz = run_json("tables " + fx("example2") + " --what conn");
    EXPECT_EQ(nz["entries"].size(), 8u);
    const json all = run_json("tables " + fx("example2") + " --what conn --all");
    ASSERT_EQ(all["entries"].size(), 25u);
    EXPECT_EQ(all["entries"][0]["value"], json({{"e5", "-1"}}));
    EXPECT_EQ(all["entries"][24]["value"], json::object());
    const ToolRun text = run("tables " + fx("example2") + " --what conn");
    EXPECT_NE(text.out.find("nabla_e1 e1 = -e5"), std::string::npos);
}

TEST(Cli, TablesCurvature) {
    const ToolRun r = run("tables " + fx("example3") + " --what riem");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("R(e1,e3)e3 = -4*e1"), std::string::npos);
    EXPECT_NE(r.out.find("R(e1,e3)e1 = 4*e3"), std::string::npos);
    EXPECT_TRUE(run_json("tables " + fx("flat") + " --what riem")["entries"].empty());
}

TEST(Cli, TablesOther) {
    EXPECT_EQ(run_json("tables " + fx("example2") + " --what star")["r_star"], "-4");
    const json h = run_json("tables " + fx("example3") + " --what h");
    EXPECT_EQ(h["spectrum"], json({"-1", "0", "1"}));
    EXPECT_EQ(run_json("tables " + fx("example3") + " --what brackets")["entries"].size(), 1u);
}

TEST(Cli, SolitonSolve) {
    const json j = run_json("soliton " + fx("example2") + " --solve --p 2");
    EXPECT_EQ(j["solve"]["lambda_tilde"], "0");
    EXPECT_EQ(j["solve"]["mu"], "0");
    EXPECT_EQ(j["solve"]["lambda"], "p/2 + 1/5");
    EXPECT_EQ(j["solve"]["classification"]["kind"], "expanding");
    EXPECT_EQ(run("soliton " + fx("example2") + " --solve").code, 0);
    EXPECT_EQ(run("soliton " + fx("example3") + " --solve").code, 1);
}

TEST(Cli, SolitonVerify) {
    const json j = run_json("soliton " + fx("example3") + " --verify --lambda-tilde -4 --mu 4");
    const json& t = j["verify"]["residual_table"];
    EXPECT_EQ(t[0]["i"], 1);
    EXPECT_EQ(t[0]["j"], 1);
    EXPECT_EQ(t[0]["value"], "-8");
    EXPECT_EQ(j["verify"]["is_soliton"], false);
    // constants fall back to the manifest
    EXPECT_EQ(run_json("soliton " + fx("example3") + " --verify")["verify"]["residual"], 8.0);
    EXPECT_EQ(run("soliton " + fx("example2") + " --verify --lambda-tilde 0 --mu 0").code, 0);
    EXPECT_EQ(run("soliton " + fx("example2") + " --verify --lambda-tilde 0").code, 2);
    EXPECT_EQ(run("soliton " + fx("example2") + " --verify").code, 2);
}

TEST(Cli, InputErrors) {
    EXPECT_EQ(run("check /nonexistent.json").code, 2);
    EXPECT_EQ(run("check " + temp_manifest("malformed", "{\"name\": ")).code, 2);
    const std::string no_potential = temp_manifest(
        "nopot", acmtest::manifest_text("[\"x\",\"y\",\"z\"]", "[[\"1\",\"0\",\"0\"],[\"0\",\"1\",\"0\"],[\"0\",\"0\",\"1\"]]",
                                        "[[\"1\",\"0\",\"0\"],[\"0\",\"1\",\"0\"],[\"0\",\"0\",\"1\"]]",
                                        "[[\"0\",\"1\",\"0\"],[\"-1\",\"0\",\"0\"],[\"0\",\"0\",\"0\"]]", "2"));
    EXPECT_EQ(run("soliton " + no_potential + " --solve").code, 2);
    const std::string singular = temp_manifest(
        "singular", acmtest::manifest_text("[\"x\",\"y\",\"z\"]", "[[\"1\",\"0\",\"0\"],[\"0\",\"1\",\"0\"],[\"1\",\"1\",\"0\"]]",
                                           "[[\"1\",\"0\",\"0\"],[\"0\",\"1\",\"0\"],[\"0\",\"0\",\"1\"]]",
                                           "[[\"0\",\"1\",\"0\"],[\"-1\",\"0\",\"0\"],[\"0\",\"0\",\"0\"]]", "2"));
    EXPECT_EQ(run("check " + singular).code, 2);
    EXPECT_EQ(run("tables " + fx("flat") + " --what nothing").code, 2);
    EXPECT_EQ(run("").code, 2);
}

TEST(Cli, GlobalFlagsAndDeterminism) {
    const json j = run_json("--seed 5 --samples 20 --tol 1e-8 check " + fx("example2"));
    EXPECT_EQ(j["sampling"]["seed"], 5);
    EXPECT_EQ(j["sampling"]["points"], 20);
    EXPECT_EQ(j["sampling"]["tol"], 1e-8);
    EXPECT_EQ(j["tool"], "acmtool");
    EXPECT_EQ(j["manifest"]["hash"], acmtest::manifest("example2").hash);
    // flags after the subcommand too
    EXPECT_EQ(run_json("check " + fx("example2") + " --seed 5 --samples 20")["sampling"]["points"], 20);
    const std::string a = run("--json --seed 11 check " + fx("example1")).out;
    const std::string b = run("--json --seed 11 check " + fx("example1")).out;
    EXPECT_EQ(a, b);
    EXPECT_NE(a, run("--json --seed 12 check " + fx("example1")).out);
}

TEST(Cli, EveryFixtureCompletesEveryCommand) {
    for (const char* f : {"example1", "example2", "example2_gradient", "example3", "flat", "eta_einstein"}) {
        EXPECT_LE(run("check " + fx(f)).code, 1) << f;
        for (const char* w : {"brackets", "conn", "riem", "ricci", "star", "h"})
            EXPECT_EQ(run("tables " + fx(f) + " --what " + w).code, 0) << f << " " << w;
    }
    for (const char* f : {"example1", "example2", "example2_gradient", "example3", "flat"})
        EXPECT_LE(run("soliton " + fx(f) + " --solve").code, 1) << f;
}
