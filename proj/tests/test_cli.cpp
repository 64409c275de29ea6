#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "kostka/kostka_engine.hpp"
#include "kostka/text_format.hpp"

using namespace kostka;
using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, ComputeExample) {
    const auto r = run_cli({"compute", "--shape", "2,1", "--content", "1,1,1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2\n");
}

TEST(Cli, ComputeSkewAndShow) {
    const auto r = run_cli({"compute", "--shape", "2,1", "--skew-inner", "1", "--content", "1,1", "--show"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2\n\n. 1\n2\n\n. 2\n1\n");
}

TEST(Cli, CoversExample) {
    const auto r = run_cli({"covers", "--mu", "3,1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "(2,2)  [row-move i=1]\n");
    EXPECT_EQ(run_cli({"covers", "--mu", "2,1"}).out, "(1,1,1)  [column-move i=1 j=3]\n");
}

TEST(Cli, ChainWithTransfers) {
    const auto r = run_cli({"chain", "--mu", "3,2,1", "--nu", "2,2,2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "(3,2,1)\n(2,2,2)  [column-move i=1 j=3]  via (2,3,1)\n");
}

TEST(Cli, ChainErrorsAreBadInput) {
    auto r = run_cli({"chain", "--mu", "3,3", "--nu", "4,1,1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("not comparable"), std::string::npos);
    r = run_cli({"chain", "--mu", "3", "--nu", "2"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("different size"), std::string::npos);
}

TEST(Cli, ClassesBreakdown) {
    const auto r = run_cli({"classes", "--shape", "2,1", "--content", "2,1", "--i", "1", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc["nu"], "1,2");
    EXPECT_EQ(doc["total_mu"], "1");
    EXPECT_EQ(doc["total_nu"], "1");
    for (const auto& c : doc["classes"])
        EXPECT_LE(std::stol(c["count_mu"].get<std::string>()), std::stol(c["count_nu"].get<std::string>()));
}

TEST(Cli, MalformedInputExitsTwoAndNamesArgument) {
    auto r = run_cli({"compute", "--shape", "1,2", "--content", "3"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--shape"), std::string::npos);

    r = run_cli({"compute", "--shape", "2,1", "--content", "1,x"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--content"), std::string::npos);

    r = run_cli({"compute", "--shape", "2,1", "--content", "1,1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--content"), std::string::npos);

    r = run_cli({"compute", "--shape", "2", "--skew-inner", "3", "--content", "1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--skew-inner"), std::string::npos);

    EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"covers"}).code, 2);
    EXPECT_EQ(run_cli({"matrix", "--n", "3", "--format", "xml"}).code, 2);
    EXPECT_EQ(run_cli({"classes", "--shape", "2,1", "--content", "0,3", "--i", "1"}).code, 2);
}

TEST(Cli, VerifySucceedsSmall) {
    const auto r = run_cli({"verify", "--max-n", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("total violations: 0"), std::string::npos);

    const auto j = run_cli({"verify", "--max-n", "3", "--format", "json"});
    EXPECT_EQ(j.code, 0);
    EXPECT_TRUE(json::parse(j.out)["violations"].empty());
}

TEST(Cli, ExitCodeForViolations) {
    EXPECT_EQ(cli::exit_code_for({Report{"a", 1, {}}}), cli::kExitOk);
    EXPECT_EQ(cli::exit_code_for({Report{"a", 1, {}}, Report{"b", 1, {{"c", "d"}}}}), cli::kExitViolation);
}

TEST(Cli, ComputeJsonRoundTrips) {
    const auto r = run_cli({"compute", "--shape", "3,2", "--skew-inner", "1", "--content", "2,2", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto doc = json::parse(r.out);
    const SkewShape shape(parse_partition(doc["shape"].get<std::string>()),
                          parse_partition(doc["skew_inner"].get<std::string>()));
    EXPECT_EQ(Count(doc["kostka"].get<std::string>()),
              kostka::kostka(shape, parse_composition(doc["content"].get<std::string>())));
    const auto again = run_cli({"compute", "--shape", doc["shape"], "--skew-inner", doc["skew_inner"], "--content",
                                doc["content"], "--format", "json"});
    EXPECT_EQ(again.out, r.out);
}

TEST(Cli, MatrixJsonRoundTrips) {
    const auto r = run_cli({"matrix", "--n", "6", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto doc = json::parse(r.out);
    EXPECT_EQ(doc["n"], 6);
    const auto m = kostka_matrix(6);
    ASSERT_EQ(doc["partitions"].size(), m.dimension());
    for (std::size_t a = 0; a < m.dimension(); ++a) {
        EXPECT_EQ(parse_partition(doc["partitions"][a].get<std::string>()), m.order[a]);
        for (std::size_t b = 0; b < m.dimension(); ++b)
            EXPECT_EQ(Count(doc["matrix"][a][b].get<std::string>()), m.values[a][b]);
    }
}

TEST(Cli, MatrixCsv) {
    const auto r = run_cli({"matrix", "--n", "3", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "\"lambda\\mu\",\"3\",\"2,1\",\"1,1,1\"\n"
              "\"3\",1,1,1\n"
              "\"2,1\",0,1,2\n"
              "\"1,1,1\",0,0,1\n");
}

TEST(Cli, CoversAndChainJson) {
    const auto c = json::parse(run_cli({"covers", "--mu", "2,1", "--format", "json"}).out);
    ASSERT_EQ(c["covers"].size(), 1u);
    EXPECT_EQ(c["covers"][0]["nu"], "1,1,1");
    EXPECT_EQ(c["covers"][0]["move"]["kind"], "column");
    EXPECT_EQ(c["covers"][0]["move"]["j"], 3);

    const auto ch = json::parse(run_cli({"chain", "--mu", "4", "--nu", "1,1,1,1", "--format", "json"}).out);
    ASSERT_EQ(ch["chain"].size(), 5u);
    EXPECT_EQ(ch["chain"][4]["partition"], "1,1,1,1");
    EXPECT_EQ(ch["chain"][4]["transfers"].size(), 2u);
}

TEST(Cli, BenchIsDeterministicAndClean) {
    const auto a = run_cli({"bench", "--seed", "7", "--samples", "40", "--max-cells", "6", "--format", "json"});
    ASSERT_EQ(a.code, 0) << a.err;
    const auto doc = json::parse(a.out);
    EXPECT_EQ(doc["mismatches"], 0);
    EXPECT_EQ(doc["samples"], 40);
}
