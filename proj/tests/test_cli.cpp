#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli_app.hpp"

using hurwitz::Json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = hurwitz::cli::run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content)
{
    const auto path = std::filesystem::temp_directory_path() / ("hurwitz_cli_" + name);
    std::ofstream(path) << content;
    return path.string();
}

} // namespace

TEST(Cli, TwistSingleVariable)
{
    const auto r = run({"twist", "--n", "1", "--alpha", "x1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["twist"], "x1y1");
    EXPECT_TRUE(r.json()["properties"]["all"].get<bool>());
    EXPECT_EQ(r.json()["seed"], 0);
    EXPECT_EQ(run({"twist", "--n", "1", "--alpha", "x1", "--format", "text"}).out, "x1y1\nproperties: all hold\n");
}

TEST(Cli, TwistAlphaO)
{
    const auto r = run({"twist", "--n", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["alpha"], "x1x2x3+x1x2+x1x3+x2x3+x1+x2+x3");
    EXPECT_TRUE(r.json()["properties"]["all"].get<bool>());
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({"twist", "--n", "3", "--alpha", "x1x4"}).code, 2);
    EXPECT_EQ(run({"twist", "--n", "3", "--alpha", "x1x2x3x1+"}).code, 2);
    EXPECT_EQ(run({"twist", "--n", "2", "--alpha", "x1x2x3"}).code, 2);
    EXPECT_EQ(run({"nonsense"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"twist", "--n", "3", "--format", "xml"}).code, 2);
    EXPECT_EQ(run({"maxset", "--n", "5", "--all-forms"}).code, 2);
    EXPECT_EQ(run({"hadamard", "paley13"}).code, 2);
    EXPECT_EQ(run({"verify", "/nonexistent/identity.json"}).code, 2);
}

TEST(Cli, CheckForm)
{
    auto r = run({"checkform", "--table", "0001"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["anf"], "x1x2");
    // x1x2x3x4 has degree 4.
    r = run({"checkform", "--table", "0000000000000001"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.json()["degree"], 4);
    r = run({"checkform", "--n", "5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["degree"], 3);
}

TEST(Cli, MaxsetSeven)
{
    const auto r = run({"maxset", "--n", "7"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.json();
    EXPECT_EQ(j["n"], 7);
    EXPECT_EQ(j["alpha"], "alpha_O");
    EXPECT_EQ(j["max"], 16);
    EXPECT_EQ(j["witness"].size(), 16u);
    EXPECT_EQ(j["witness"][0], "0000000");
    EXPECT_TRUE(j["exact"].get<bool>());
}

TEST(Cli, MaxsetAllFormsAtFour)
{
    const auto r = run({"maxset", "--n", "4", "--all-forms", "--threads", "4"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["global_max"], 8);
    EXPECT_EQ(r.json()["forms"], 16384);
}

TEST(Cli, MaxsetBudgetExceeded)
{
    const auto r = run({"maxset", "--n", "64"});
    EXPECT_EQ(r.code, 3);
    const auto j = r.json();
    EXPECT_FALSE(j["exact"].get<bool>());
    EXPECT_TRUE(j["lower_bound"].get<bool>());
    EXPECT_EQ(j["max"], 128);
    const auto tiny = run({"maxset", "--n", "8", "--alpha", "x1x2x3+x4x5x6+x2x7x8+x1x5+x3x8+x6", "--budget", "1"});
    EXPECT_EQ(tiny.code, 3);
}

TEST(Cli, Construct)
{
    auto r = run({"construct", "--n", "6"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["size"], 12);
    EXPECT_EQ(r.json()["rho"], 12);
    EXPECT_TRUE(r.json()["hurwitzian"].get<bool>());
    r = run({"construct", "--hadamard", "paley11"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.json()["n"], 11);
    EXPECT_EQ(r.json()["size"], 24);
    EXPECT_EQ(run({"construct", "--n", "6", "--method", "mod3"}).code, 2);
}

TEST(Cli, HadamardFromFile)
{
    const auto path = temp_file("h4.txt", "++++\n+-+-\n++--\n+--+\n");
    auto r = run({"hadamard", path});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["order"], 4);
    const auto bad = temp_file("hbad.txt", "++\n++\n");
    EXPECT_EQ(run({"hadamard", bad}).code, 2);
    r = run({"hadamard", "paley11"});
    EXPECT_EQ(r.json()["hurwitzian_set"]["size"], 24);
}

TEST(Cli, IdentityOctonions)
{
    const auto r = run({"identity", "--n", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.json()["verified"].get<bool>());
    EXPECT_EQ(r.json()["size"], Json::parse("[8,8,8]"));
}

TEST(Cli, IdentityMutated)
{
    const auto r = run({"identity", "--n", "3", "--mutate", "1", "--seed", "7"});
    EXPECT_EQ(r.code, 1);
    EXPECT_FALSE(r.json()["verified"].get<bool>());
    EXPECT_EQ(r.json()["seed"], 7);
}

TEST(Cli, IdentityHadamard)
{
    const auto r = run({"identity", "--n", "11", "--hadamard", "paley11"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.json()["size"], Json::parse("[24,2048,2048]"));
    EXPECT_EQ(run({"identity", "--n", "12"}).code, 3);
    EXPECT_EQ(run({"identity", "--n", "6", "--budget", "10"}).code, 3);
}

TEST(Cli, VerifyRoundTrip)
{
    for (std::string emit : {"json", "text"}) {
        const auto r = run({"identity", "--n", "2", "--emit", emit, "--format", emit == "json" ? "json" : "text"});
        ASSERT_EQ(r.code, 0);
        std::string content = emit == "json" ? r.json()["identity"].dump() : r.out.substr(0, r.out.find("size ["));
        const auto path = temp_file("id." + emit, content);
        const auto v = run({"verify", path});
        EXPECT_EQ(v.code, 0) << v.err;
        EXPECT_EQ(v.json()["size"], Json::parse("[4,4,4]"));
    }
    const auto path = temp_file("bad_id.txt", "c0 = a0*b0 + a1*b1\nc1 = a0*b1 + a1*b0\n");
    EXPECT_EQ(run({"verify", path}).code, 1);
}

TEST(Cli, Quadruples)
{
    auto r = run({"quadruples", "--a", "full", "--b", "full", "--n", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.json()["hypothesis_holds"].get<bool>());
    const auto a = temp_file("a3.txt", "# three vectors\n000\n001\n010\n");
    const auto b = temp_file("b4.txt", "0000\n0001\n");
    EXPECT_EQ(run({"quadruples", "--a", a, "--b", b}).code, 2);
    r = run({"quadruples", "--a", a, "--b", "full", "--n", "3", "--ordered"});
    EXPECT_EQ(r.json()["counting"], "ordered");
    r = run({"quadruples", "--sweep", "1-4", "--a", "full", "--b", "full", "--csv"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,size_a,size_b,sumset_size,proper_count,hypothesis_holds,ratio");
}

TEST(Cli, DeterministicOutput)
{
    const std::vector<std::vector<std::string>> cmds = {
        {"maxset", "--n", "6"},
        {"maxset", "--n", "5", "--alpha", "x1x2x3+x4x5+x1"},
        {"identity", "--n", "4", "--mutate", "3", "--seed", "11", "--emit", "json"},
        {"twist", "--n", "12", "--seed", "5"},
        {"quadruples", "--n", "5"},
    };
    for (const auto& c : cmds) {
        const auto first = run(c);
        const auto second = run(c);
        EXPECT_EQ(first.out, second.out);
        EXPECT_EQ(first.code, second.code);
    }
}
