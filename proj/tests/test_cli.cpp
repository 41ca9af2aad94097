#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using rtk::cli::dispatch;
using rtk::cli::ordered_json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

auto run(const std::vector<std::string> & args) -> Run
{
    std::ostringstream out, err;
    int code = dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

auto golden_path(const std::string & name) -> fs::path { return fs::path(RTK_GOLDEN_DIR) / name; }

auto slurp(const fs::path & path) -> std::string
{
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// RTK_UPDATE_GOLDEN=1 rewrites the fixture instead of comparing.
auto updating() -> bool
{
    auto * v = std::getenv("RTK_UPDATE_GOLDEN");
    return v && std::string(v) == "1";
}

void expect_golden_json(const std::string & name, const std::string & output)
{
    auto actual = rtk::cli::strip_timing(ordered_json::parse(output));
    auto path = golden_path(name + ".json");
    if (updating()) {
        std::ofstream(path) << actual.dump(2) << "\n";
        return;
    }
    ASSERT_TRUE(fs::exists(path)) << path;
    EXPECT_EQ(actual, ordered_json::parse(slurp(path))) << actual.dump(2);
}

void expect_golden_text(const std::string & name, const std::string & output)
{
    auto path = golden_path(name);
    if (updating()) {
        std::ofstream(path) << output;
        return;
    }
    ASSERT_TRUE(fs::exists(path)) << path;
    EXPECT_EQ(output, slurp(path));
}

class ScratchDir {
public:
    ScratchDir()
        : path_(fs::temp_directory_path() / ("rtk-cli-" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                             "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name()))
    {
        fs::remove_all(path_);
        fs::create_directories(path_);
    }
    ~ScratchDir() { fs::remove_all(path_); }
    auto file(const std::string & name) const -> std::string { return (path_ / name).string(); }

private:
    fs::path path_;
};

} // namespace

struct GoldenCase {
    std::string name;
    std::vector<std::string> args;
};

void PrintTo(const GoldenCase & c, std::ostream * os) { *os << c.name; }

class GoldenJson : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(GoldenJson, MatchesFixture)
{
    ::unsetenv("RTK_CI");
    auto r = run(GetParam().args);
    ASSERT_EQ(r.code, 0) << r.err;
    expect_golden_json(GetParam().name, r.out);
}

INSTANTIATE_TEST_SUITE_P(
    Subcommands, GoldenJson,
    ::testing::Values(
        GoldenCase{"construct_k4_union", {"construct", "k4-union", "--n", "8"}},
        GoldenCase{"construct_h", {"construct", "h", "--forest", "S1,2", "--n", "7", "--c", "1"}},
        GoldenCase{"construct_h_prime", {"construct", "h-prime", "--forest", "S3", "--n", "6", "--i", "0"}},
        GoldenCase{"construct_rainbow_free_clique_none", {"construct", "rainbow-free-clique", "--c", "5", "--l", "4"}},
        GoldenCase{"construct_boolean_cube", {"construct", "boolean-cube", "--k", "2"}},
        GoldenCase{"oracle_rainbow_p3_n4", {"oracle", "--mode", "rainbow", "--n", "4", "--pattern", "P3"}},
        GoldenCase{"oracle_classical_m2_n5", {"oracle", "--mode", "classical", "--n", "5", "--pattern", "M2"}},
        GoldenCase{"verify_two_thirds_sweep",
                   {"verify", "two-thirds", "--seed", "7", "--trials", "200", "--n-max", "9"}},
        GoldenCase{"verify_theta_sweep", {"verify", "theta", "--seed", "7", "--trials", "100", "--n-max", "8"}},
        GoldenCase{"verify_degree_lemma", {"verify", "degree-lemma", "--n-max", "5"}},
        GoldenCase{"verify_falsify_p4",
                   {"verify", "falsify", "--pattern", "P4", "--n", "8", "--bound", "sharp", "--seed", "1", "--trials",
                    "50"}},
        GoldenCase{"table_h_edge_count",
                   {"table", "h-edge-count", "--forest", "M2", "--forest", "S2,2", "--n-min", "6", "--n-max", "8"}},
        GoldenCase{"table_best_c", {"table", "best-c", "--forest", "M3", "--forest", "S2,2", "--forest", "S1,2,3"}},
        GoldenCase{"table_ex_rainbow", {"table", "ex-rainbow", "--pattern", "M2", "--n-min", "2", "--n-max", "6"}}),
    [](const auto & info) { return info.param.name; });

TEST(Cli, SearchOnConstructedFiles)
{
    ScratchDir dir;
    auto k44 = dir.file("k44.cg");
    auto built = run({"construct", "k44-union", "--n", "8", "--output", k44});
    ASSERT_EQ(built.code, 0) << built.err;
    EXPECT_TRUE(fs::exists(k44 + ".json"));
    auto sidecar = ordered_json::parse(slurp(k44 + ".json"));
    EXPECT_EQ(sidecar["edges"].size(), 16u);
    EXPECT_EQ(sidecar["predicted_edge_count"], 16);

    auto p4 = run({"search", "--pattern", "P4", "--input", k44});
    ASSERT_EQ(p4.code, 0) << p4.err;
    expect_golden_json("search_k44_p4", p4.out);

    auto p3 = run({"search", "--pattern", "P3", "--input", k44});
    ASSERT_EQ(p3.code, 0);
    expect_golden_json("search_k44_p3", p3.out);

    auto longest = run({"search", "--longest", "--input", k44});
    ASSERT_EQ(longest.code, 0);
    EXPECT_EQ(ordered_json::parse(longest.out)["length"], 3);

    auto split = dir.file("split.g");
    ASSERT_EQ(run({"construct", "split-graph", "--n", "5", "--k", "1", "--output", split}).code, 0);
    auto copy = run({"search", "--pattern", "S4", "--input", split});
    ASSERT_EQ(copy.code, 0);
    auto doc = ordered_json::parse(copy.out);
    EXPECT_EQ(doc["rainbow"], false);
    EXPECT_EQ(doc["found"], true);
}

TEST(Cli, VerifyOnInputFiles)
{
    ScratchDir dir;
    auto k4 = dir.file("k4.cg");
    ASSERT_EQ(run({"construct", "k4-union", "--n", "12", "--output", k4}).code, 0);
    auto r = run({"verify", "two-thirds", "--input", k4});
    ASSERT_EQ(r.code, 0) << r.err;
    expect_golden_json("verify_two_thirds_k4_union", r.out);

    auto cycle = dir.file("cycle.g");
    ASSERT_EQ(run({"construct", "bounded-degree", "--m", "7", "--d", "2", "--output", cycle}).code, 0);
    auto lemma = run({"verify", "degree-lemma", "--input", cycle, "--d", "2", "--max-degree", "2", "--eps", "0.5"});
    ASSERT_EQ(lemma.code, 0) << lemma.err;
    EXPECT_EQ(ordered_json::parse(lemma.out)["verdict"], "PASS");
}

TEST(Cli, OracleWritesWitness)
{
    ScratchDir dir;
    auto path = dir.file("witness.cg");
    auto r = run({"oracle", "--n", "4", "--pattern", "P3", "--emit-witness", path});
    ASSERT_EQ(r.code, 0) << r.err;
    auto parsed = rtk::parse_graph_text(slurp(path));
    ASSERT_TRUE(parsed.colors);
    auto cg = rtk::assign_colors(parsed.graph, *parsed.colors);
    EXPECT_EQ(cg.size(), 6u);
    EXPECT_FALSE(rtk::find_rainbow_path(cg, 3));
}

TEST(Cli, TextAndCsvFormats)
{
    auto text = run({"construct", "k4-union", "--n", "4", "--format", "text"});
    ASSERT_EQ(text.code, 0);
    expect_golden_text("construct_k4_union.txt", text.out);
    auto parsed = rtk::parse_graph_text(text.out);
    EXPECT_EQ(parsed.graph.size(), 6u);

    auto csv = run({"--format", "csv", "table", "llp", "--forest", "S1,1", "--forest", "S2", "--n-min", "3", "--n-max",
                    "6"});
    ASSERT_EQ(csv.code, 0) << csv.err;
    expect_golden_text("table_llp.csv", csv.out);

    auto edges = run({"construct", "split-graph", "--n", "3", "--k", "1", "--format", "csv"});
    ASSERT_EQ(edges.code, 0);
    expect_golden_text("construct_split_graph.csv", edges.out);

    auto summary = run({"oracle", "--n", "3", "--pattern", "M2", "--format", "text"});
    ASSERT_EQ(summary.code, 0);
    EXPECT_NE(summary.out.find("value"), std::string::npos);
}

TEST(Cli, ExitCodes)
{
    ::unsetenv("RTK_CI");
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"construct", "k4-union"}).code, 2);
    EXPECT_EQ(run({"construct", "k4-union", "--n", "6"}).code, 2);
    EXPECT_EQ(run({"construct", "nonsense", "--n", "6"}).code, 2);
    EXPECT_EQ(run({"oracle", "--n", "4", "--pattern", "Q3"}).code, 2);
    EXPECT_EQ(run({"oracle", "--n", "4", "--pattern", "P3", "--mode", "both"}).code, 2);
    EXPECT_EQ(run({"oracle", "--n", "6", "--pattern", "P3", "--budget", "3"}).code, 3);
    EXPECT_EQ(run({"oracle", "--n", "12", "--pattern", "P3"}).code, 2);
    EXPECT_EQ(run({"search", "--pattern", "P3", "--input", "/nonexistent/graph.cg"}).code, 3);
    EXPECT_EQ(run({"verify", "falsify", "--pattern", "P3", "--n", "6", "--seed", "1"}).code, 2);
    EXPECT_EQ(run({"verify", "sideways"}).code, 2);
    EXPECT_EQ(run({"table", "nope"}).code, 2);
    EXPECT_EQ(run({"--format", "yaml", "table", "best-c"}).code, 2);
    EXPECT_EQ(run({"--version"}).code, 0);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, PatternErrorsShowTheGrammar)
{
    auto r = run({"oracle", "--n", "4", "--pattern", "X9"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("M<k>"), std::string::npos) << r.err;
}

TEST(Cli, MalformedGraphFilesAreUsageErrors)
{
    ScratchDir dir;
    auto bad = dir.file("bad.g");
    std::ofstream(bad) << "n 3\ne 0 1\ne 0 7\n";
    auto r = run({"search", "--pattern", "P1", "--input", bad});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, ImproperInputOnlyAcceptedByTheta)
{
    // a monochromatic path is not proper; the color-degree variant accepts it
    ScratchDir dir;
    auto improper = dir.file("improper.cg");
    std::ofstream(improper) << "n 3\ne 0 1 0\ne 1 2 0\n";
    EXPECT_EQ(run({"verify", "two-thirds", "--input", improper}).code, 2);
    EXPECT_EQ(run({"verify", "theta", "--input", improper}).code, 0);
}

TEST(Cli, CiModeRequiresSeed)
{
    ::setenv("RTK_CI", "1", 1);
    EXPECT_EQ(run({"verify", "two-thirds", "--trials", "5"}).code, 2);
    EXPECT_EQ(run({"verify", "falsify", "--pattern", "P3", "--n", "12", "--trials", "5"}).code, 2);
    EXPECT_EQ(run({"verify", "two-thirds", "--trials", "5", "--seed", "3"}).code, 0);
    // deterministic commands are unaffected
    EXPECT_EQ(run({"verify", "degree-lemma", "--n-max", "4"}).code, 0);
    ::unsetenv("RTK_CI");
}

TEST(Cli, SeededRunsAreByteIdentical)
{
    std::vector<std::string> args = {"verify", "two-thirds", "--seed", "11", "--trials", "300", "--palette", "fresh"};
    auto a = ordered_json::parse(run(args).out);
    auto b = ordered_json::parse(run(args).out);
    EXPECT_EQ(rtk::cli::strip_timing(a).dump(), rtk::cli::strip_timing(b).dump());
    args.push_back("--jobs");
    args.push_back("2");
    auto c = ordered_json::parse(run(args).out);
    EXPECT_EQ(rtk::cli::strip_timing(a).dump(), rtk::cli::strip_timing(c).dump());
}
