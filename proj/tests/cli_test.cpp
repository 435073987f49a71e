#include "cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = crnkit::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
    std::ifstream in(std::string(CRNKIT_GOLDEN_DIR) + "/" + name);
    EXPECT_TRUE(in) << name;
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

nlohmann::json run_json(std::vector<std::string> args) {
    args.push_back("--json");
    const Result r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    return nlohmann::json::parse(r.out);
}

struct GoldenCase {
    std::string file;
    std::vector<std::string> args;
};

}  // namespace

TEST(CliGolden, MatchesByteForByte) {
    const std::vector<GoldenCase> cases{
        {"analyze-lee.txt", {"analyze", "fixture:lee"}},
        {"analyze-fal.txt", {"analyze", "fixture:fal"}},
        {"analyze-maclean.txt", {"analyze", "fixture:maclean"}},
        {"analyze-schmitz.txt", {"analyze", "fixture:schmitz"}},
        {"fid-fal.txt", {"fid", "fixture:fal"}},
        {"fid-maclean.txt", {"fid", "fixture:maclean"}},
        {"fid-schmitz.txt", {"fid", "fixture:schmitz"}},
        {"csen-lee-fal.txt", {"compare", "csen", "fixture:lee", "fixture:fal"}},
        {"csen-schmitz-maclean.txt", {"compare", "csen", "fixture:schmitz", "fixture:maclean"}},
        {"csen-fal-maclean.txt", {"compare", "csen", "fixture:fal", "fixture:maclean"}},
        {"core-schmitz-augmented-maclean.txt", {"compare", "core", "fixture:schmitz-augmented", "fixture:maclean"}},
        {"core-fal-maclean.txt", {"compare", "core", "fixture:fal", "fixture:maclean"}},
        {"concordance-schmitz.txt", {"concordance", "fixture:schmitz"}},
        {"scenario-lee-inflow.txt", {"scenario", "lee-inflow"}},
        {"scenario-schmitz-gmak.txt", {"scenario", "schmitz-gmak"}},
    };
    for (const auto& c : cases) {
        const Result r = run(c.args);
        EXPECT_EQ(r.code, 0) << c.file << ": " << r.err;
        EXPECT_EQ(r.out, golden(c.file)) << c.file;
    }
}

TEST(CliGolden, M3crAugmentedSchmitzMaclean) {
    const Result r = run({"compare", "m3cr", "fixture:schmitz-augmented", "fixture:maclean"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, golden("m3cr-schmitz-augmented-maclean.txt"));
}

TEST(CliJson, AnalyzeMaclean) {
    const auto j = run_json({"analyze", "fixture:maclean"});
    EXPECT_EQ(j["numbers"]["deficiency"], 4);
    EXPECT_EQ(j["numbers"]["species"], 19);
    EXPECT_EQ(j["flags"]["weaklyReversible"], false);
    EXPECT_EQ(j["kineticSubspaceCoincides"], "yes");
}

TEST(CliJson, FidBlockCounts) {
    EXPECT_EQ(run_json({"fid", "fixture:schmitz"})["blocks"].size(), 4u);
    EXPECT_EQ(run_json({"fid", "fixture:fal"})["blocks"].size(), 8u);
    const auto m = run_json({"fid", "fixture:maclean"});
    EXPECT_EQ(m["blocks"].size(), 7u);
    EXPECT_EQ(m["independent"], true);
    EXPECT_EQ(m["blockRankSum"], 14);
}

TEST(CliJson, ConcordanceWitness) {
    const auto j = run_json({"concordance", "fixture:schmitz"});
    EXPECT_EQ(j["verdict"], "discordant");
    EXPECT_EQ(j["witness"]["verified"], true);
    EXPECT_EQ(j["witness"]["alpha"].size(), 17u);
    EXPECT_EQ(j["witness"]["sigma"].size(), 11u);
    EXPECT_EQ(j["positiveDependent"]["holds"], true);
    EXPECT_EQ(j["conservative"]["holds"], false);
}

TEST(CliJson, EquilibriaFal) {
    const auto j = run_json({"equilibria", "fal", "--samples", "100", "--seed", "7"});
    EXPECT_LT(j["residual"]["max"].get<double>(), 1e-9);
    EXPECT_LT(j["residual"]["blockMax"].get<double>(), 1e-9);
    EXPECT_EQ(j["acr"], nlohmann::json::array({"A26"}));
}

TEST(CliJson, EquilibriaSchmitz) {
    const auto j = run_json({"equilibria", "schmitz", "--samples", "100", "--seed", "7"});
    EXPECT_LT(j["residual"]["max"].get<double>(), 1e-9);
    EXPECT_TRUE(j["acr"].empty());
}

TEST(CliJson, DeterministicAndRoundTrips) {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"analyze", "fixture:lee", "--json"},
          std::vector<std::string>{"compare", "csen", "fixture:lee", "fixture:fal", "--json"},
          std::vector<std::string>{"equilibria", "maclean", "--samples", "20", "--json"}}) {
        const Result a = run(args);
        const Result b = run(args);
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(nlohmann::ordered_json::parse(a.out).dump(2) + "\n", a.out);
    }
}

TEST(CliErrors, ExitCodes) {
    EXPECT_EQ(run({"analyze", "missing.crn"}).code, crnkit::cli::exit_input);
    EXPECT_EQ(run({"analyze", "fixture:nope"}).code, crnkit::cli::exit_input);
    EXPECT_EQ(run({"equilibria", "bogus"}).code, crnkit::cli::exit_input);
    EXPECT_EQ(run({"equilibria", "fal", "--samples", "1"}).code, crnkit::cli::exit_input);
    EXPECT_EQ(run({"scenario", "nope"}).code, crnkit::cli::exit_input);
    EXPECT_EQ(run({"frobnicate"}).code, crnkit::cli::exit_input);
    EXPECT_EQ(run({"compare", "csen", "fixture:lee"}).code, crnkit::cli::exit_input);

    const Result unknown = run({"concordance", "fixture:maclean", "--budget", "3"});
    EXPECT_EQ(unknown.code, crnkit::cli::exit_unknown);
    EXPECT_NE(unknown.out.find("unknown"), std::string::npos);

    const Result missing = run({"analyze", "missing.crn"});
    EXPECT_NE(missing.err.find("error: "), std::string::npos);
}

TEST(CliErrors, ParseErrorReportsLine) {
    const std::string path = ::testing::TempDir() + "bad.crn";
    std::ofstream(path) << "A -> B\nC ->> D\n";
    const Result r = run({"analyze", path});
    EXPECT_EQ(r.code, crnkit::cli::exit_input);
    EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST(CliErrors, BudgetFromEnvironment) {
    ::setenv("CRNKIT_BUDGET", "x", 1);
    EXPECT_EQ(run({"concordance", "fixture:schmitz"}).code, crnkit::cli::exit_input);
    ::setenv("CRNKIT_BUDGET", "3", 1);
    EXPECT_EQ(run({"concordance", "fixture:maclean"}).code, crnkit::cli::exit_unknown);
    ::unsetenv("CRNKIT_BUDGET");
}
