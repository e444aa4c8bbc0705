#include <gtest/gtest.h>

#include <hullkit/cli.hpp>

#include <filesystem>
#include <fstream>

#include "test_support.hpp"

using namespace hullkit;
using namespace testing_support;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = std::filesystem::temp_directory_path() /
               ("hullkit_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        std::filesystem::create_directories(dir_);
    }
    void TearDown() override { std::filesystem::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) {
        const auto path = (dir_ / name).string();
        std::ofstream(path) << text;
        return path;
    }
    std::string write_code(const std::string& name, const LinearCode& c) { return write(name, to_json(c).dump()); }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    std::filesystem::path dir_;
};

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_F(Cli, ConstructFullField) {
    const CliRun r = run({"construct", "--q", "3", "--family", "full-field", "--k", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["status"], "found");
    EXPECT_EQ(j["n"], 9);
    EXPECT_EQ(j["k"], 2);
    EXPECT_EQ(j["distance"], 8);
    const LinearCode c = code_from_json(j["code"]);
    EXPECT_TRUE(same_code(c, rs(3, 2)));
}

TEST_F(Cli, ConstructIsDeterministicPerSeed) {
    const std::vector<std::string> args = {"construct", "--q", "3", "--family", "q2plus1", "--k", "3", "--seed", "7"};
    const CliRun a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
    EXPECT_TRUE(a.code == 0 || a.code == 2);
    if (a.code == 0) {
        const LinearCode c = code_from_json(json::parse(a.out)["code"]);
        EXPECT_TRUE(is_hermitian_self_orthogonal(c));
        EXPECT_EQ(c.n(), 10u);
    }
}

TEST_F(Cli, ConstructExitCodes) {
    EXPECT_EQ(run({"construct", "--q", "3", "--family", "full-field"}).code, 1);
    EXPECT_EQ(run({"construct", "--q", "3", "--family", "nope", "--k", "1"}).code, 1);
    EXPECT_EQ(run({"construct", "--q", "6", "--family", "full-field", "--k", "1"}).code, 1);
    const CliRun r = run({"construct", "--q", "5", "--family", "q2plus1", "--k", "3", "--budget", "1", "--seed", "1"});
    EXPECT_EQ(r.code, 2) << r.err;
    EXPECT_EQ(json::parse(r.out)["status"], "not_found_within_budget");
    EXPECT_EQ(run({"construct", "--q", "3", "--family", "full-field", "--k", "2", "--format", "tsv"}).code, 1);
}

TEST_F(Cli, ConstructPretty) {
    const CliRun r = run({"construct", "--q", "5", "--family", "subgroup", "--k", "2", "--m", "3", "--format", "pretty"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("subgroup q=5 [8, 2, 7] status=found", 0), 0u) << r.out;
}

TEST_F(Cli, Dial) {
    const std::string in = write_code("rs.json", rs(3, 2));
    const CliRun one = run({"dial", "--in", in, "--h", "1"});
    ASSERT_EQ(one.code, 0) << one.err;
    const json j = json::parse(one.out);
    EXPECT_EQ(j["achieved_h"], 1);
    const LinearCode dialed = code_from_json(j["code"]);
    EXPECT_EQ(hull(dialed, DualKind::hermitian()).dim, 1u);

    const json ident = json::parse(run({"dial", "--in", in, "--h", "2"}).out);
    for (const auto& v : ident["v"]) EXPECT_EQ(v, json::parse("[1,0]"));

    const CliRun bad = run({"dial", "--in", in, "--h", "5"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("BadTarget"), std::string::npos) << bad.err;
    EXPECT_EQ(run({"dial", "--in", in}).code, 1);
}

TEST_F(Cli, DialRoundTripsThroughHull) {
    const std::string in = write_code("rs.json", rs(4, 3));
    const CliRun d = run({"dial", "--in", in, "--h", "1", "--seed", "3"});
    ASSERT_EQ(d.code, 0);
    const std::string dialed = write("dialed.json", json::parse(d.out)["code"].dump());
    const CliRun h = run({"hull", "--in", dialed});
    ASSERT_EQ(h.code, 0) << h.err;
    EXPECT_EQ(json::parse(h.out)["dim"], 1);
    EXPECT_EQ(run({"dial", "--in", in, "--h", "1", "--seed", "3"}).out, d.out);
}

TEST_F(Cli, EaqecSweepTsv) {
    const std::string in = write_code("rs.json", rs(3, 2));
    const CliRun r = run({"eaqec", "--in", in});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 4u);
    EXPECT_EQ(ls[0], "q\tn\tk_q\td\tc\tfamily\twitnessed\tmds\tgate");
    EXPECT_EQ(ls[1].substr(0, 10), "3\t9\t7\t3\t2\t");
    EXPECT_EQ(ls[2].substr(0, 10), "3\t9\t6\t3\t1\t");
    EXPECT_EQ(ls[3].substr(0, 10), "3\t9\t5\t3\t0\t");
    for (std::size_t i = 1; i < 4; ++i) EXPECT_NE(ls[i].find("\tyes\tyes\tpass"), std::string::npos) << ls[i];
}

TEST_F(Cli, EaqecSingleAndJson) {
    const std::string in = write_code("rs.json", rs(3, 2));
    const CliRun r = run({"eaqec", "--in", in, "--l", "1", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    ASSERT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["k_q"], 6);
    EXPECT_EQ(j[0]["c"], 1);
    EXPECT_EQ(j[0]["mds"], "yes");
    EXPECT_EQ(j[0]["hull_dim"], 1);

    const CliRun v = run({"verify", "--in", write("p.json", j[0].dump())});
    EXPECT_EQ(v.code, 0) << v.err;
    EXPECT_EQ(json::parse(v.out)["status"], "pass");
}

TEST_F(Cli, EaqecRejectsNonSquareField) {
    const FieldSpec f = make_field(3, 3);
    const LinearCode c(FieldMatrix::from_rows(f, {std::vector<FieldElement>(4, f.one())}));
    const CliRun r = run({"eaqec", "--in", write_code("c.json", c)});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("OddExtension"), std::string::npos) << r.err;
}

TEST_F(Cli, Table) {
    const CliRun a = run({"table", "--q", "3", "--max-rows", "100"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, run({"table", "--q", "3", "--max-rows", "100"}).out);
    const auto ls = lines(a.out);
    EXPECT_EQ(ls.size(), 1 + enumerate_table1(3).size());
    EXPECT_EQ(ls[0], "q\tn\tk_q\td\tc\tfamily\twitnessed\tmds\tgate");
    EXPECT_EQ(lines(run({"table", "--q", "3", "--max-rows", "5"}).out).size(), 6u);

    EXPECT_EQ(run({"table", "--q", "2"}).code, 1);
    EXPECT_EQ(run({"table"}).code, 1);
    const CliRun t8 = run({"table", "--q", "8"});
    ASSERT_EQ(t8.code, 0);
    EXPECT_NE(t8.out.find("8\t65\t58\t8\t7\tq2plus1-char2"), std::string::npos);
}

TEST_F(Cli, TableJsonAndPretty) {
    const json j = json::parse(run({"table", "--q", "4", "--format", "json", "--max-rows", "3"}).out);
    ASSERT_EQ(j.size(), 3u);
    for (const auto& row : j) {
        EXPECT_EQ(row["q"], 4);
        EXPECT_EQ(row["distance"], "unverified-distance");
    }
    const CliRun p = run({"table", "--q", "4", "--format", "pretty", "--max-rows", "1"});
    EXPECT_EQ(p.out.rfind("[[", 0), 0u);
}

TEST_F(Cli, Verify) {
    const CliRun pass = run({"verify", "--q", "3", "--n", "9", "--k", "6", "--d", "3", "--c", "1"});
    EXPECT_EQ(pass.code, 0);
    EXPECT_EQ(json::parse(pass.out)["status"], "pass");
    EXPECT_EQ(json::parse(pass.out)["mds"], true);

    const CliRun fail = run({"verify", "--q", "3", "--n", "9", "--k", "7", "--d", "3", "--c", "1"});
    EXPECT_EQ(fail.code, 1);
    EXPECT_EQ(json::parse(fail.out)["status"], "fail");

    const CliRun gate = run({"verify", "--q", "3", "--n", "9", "--k", "2", "--d", "8", "--c", "7", "--format", "pretty"});
    EXPECT_EQ(gate.code, 0);
    EXPECT_EQ(gate.out, "gate-not-applicable\n");

    const std::string w = write_code("w.json", dial_hull(rs(3, 2), 1).code);
    const CliRun wit = run({"verify", "--q", "3", "--n", "9", "--k", "6", "--d", "3", "--c", "1", "--witness", w});
    EXPECT_EQ(wit.code, 0) << wit.err;
    EXPECT_EQ(json::parse(wit.out)["witness_hull"], 1);
    EXPECT_EQ(run({"verify", "--q", "3", "--n", "9", "--k", "7", "--d", "3", "--c", "2", "--witness", w}).code, 1);
    EXPECT_EQ(run({"verify", "--q", "3", "--n", "9"}).code, 1);
}

TEST_F(Cli, Distance) {
    const std::string in = write_code("rs.json", rs(3, 2));
    const json d = json::parse(run({"distance", "--in", in}).out);
    EXPECT_EQ(d["d"], 8);
    EXPECT_EQ(d["mds"], true);
    for (const char* method : {"auto", "messages", "dependencies"}) {
        const CliRun r = run({"distance", "--in", in, "--dual", "--method", method});
        ASSERT_EQ(r.code, 0) << r.err;
        EXPECT_EQ(json::parse(r.out)["d"], 3);
        EXPECT_EQ(json::parse(r.out)["k"], 7);
    }
    EXPECT_EQ(run({"distance", "--in", in, "--dual", "--kind", "galois", "--l", "0", "--format", "pretty"}).out, "[9, 7, 3]\n");
    EXPECT_EQ(run({"distance", "--in", in, "--method", "guess"}).code, 1);
    EXPECT_EQ(run({"distance", "--in", in, "--dual", "--kind", "galois"}).code, 1);
    const CliRun capped = run({"distance", "--in", in, "--method", "messages", "--cap", "10"});
    EXPECT_EQ(capped.code, 1);
    EXPECT_NE(capped.err.find("TooLargeToEnumerate"), std::string::npos) << capped.err;
}

TEST_F(Cli, Hull) {
    const std::string in = write_code("rs.json", rs(3, 2));
    const json h = json::parse(run({"hull", "--in", in}).out);
    EXPECT_EQ(h["dim"], 2);
    EXPECT_EQ(h["kind"], DualKind::hermitian().name());
    EXPECT_EQ(matrix_from_json(gf9(), h["basis"]).rows(), 2u);
    EXPECT_EQ(json::parse(run({"hull", "--in", in, "--kind", "euclidean"}).out)["dim"], 2);
    EXPECT_EQ(run({"hull", "--in", in, "--kind", "galois", "--l", "2"}).code, 1);
    EXPECT_EQ(run({"hull", "--in", in, "--kind", "other"}).code, 1);
    EXPECT_EQ(run({"hull", "--in", write("bad.json", "{not json")}).code, 1);
    EXPECT_EQ(run({"hull", "--in", path("missing.json")}).code, 1);
}

TEST_F(Cli, OutputFile) {
    const std::string out = path("table.tsv");
    const CliRun r = run({"table", "--q", "3", "--out", out});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(out);
    std::stringstream buf;
    buf << f.rdbuf();
    EXPECT_EQ(buf.str(), run({"table", "--q", "3"}).out);
    EXPECT_FALSE(std::filesystem::exists(out + ".tmp"));
}

TEST_F(Cli, ConstructOutputFeedsOtherCommands) {
    const CliRun c = run({"construct", "--q", "4", "--family", "q2plus1", "--k", "2"});
    ASSERT_EQ(c.code, 0) << c.err;
    const json code_json = json::parse(c.out)["code"];
    EXPECT_EQ(to_json(code_from_json(code_json)), code_json);
    const CliRun e = run({"eaqec", "--in", write("whole.json", c.out), "--format", "json"});
    ASSERT_EQ(e.code, 0) << e.err;
    EXPECT_EQ(json::parse(e.out).size(), 3u);
    const CliRun d = run({"dial", "--in", write("whole.json", c.out), "--h", "0"});
    ASSERT_EQ(d.code, 0) << d.err;
    EXPECT_EQ(json::parse(run({"hull", "--in", write("dialed.json", d.out)}).out)["dim"], 0);
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"table", "--q", "3", "--format", "xml"}).code, 1);
    const CliRun help = run({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("construct"), std::string::npos);
}
