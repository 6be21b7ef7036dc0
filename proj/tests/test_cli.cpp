#include <crcforge/cli.hpp>
#include <crcforge/code_file.hpp>
#include <crcforge/constructions.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace crcforge;
namespace fs = std::filesystem;

namespace {
    struct Run {
        int status;
        std::string out;
        std::string err;
    };

    auto cli(std::vector<std::string> args) -> Run
    {
        std::ostringstream out, err;
        int status = run_cli(args, out, err);
        return {status, out.str(), err.str()};
    }

    class TempDir {
    public:
        TempDir()
        {
            auto info = ::testing::UnitTest::GetInstance()->current_test_info();
            _path = fs::temp_directory_path() / ("crcforge-" + std::string(info->test_suite_name()) + "-" + info->name());
            fs::remove_all(_path);
            fs::create_directories(_path);
        }
        ~TempDir() { fs::remove_all(_path); }
        auto file(const std::string & name) const -> std::string { return (_path / name).string(); }

    private:
        fs::path _path;
    };

    void write(const std::string & path, const std::string & text)
    {
        std::ofstream{path, std::ios::binary} << text;
    }
}

TEST(CodeFile, RoundTripIsByteStable)
{
    CodeFile file{build_c(6, 5), {{"note", "x"}, {"a", 1}}};
    auto text = serialize_code_file(file);
    auto parsed = parse_code_file(text);
    EXPECT_EQ(parsed.code, file.code);
    EXPECT_EQ(parsed.meta, file.meta);
    EXPECT_EQ(serialize_code_file(parsed), text);
    EXPECT_EQ(text.find('\r'), std::string::npos);
}

TEST(CodeFile, UnsortedInputIsCanonicalized)
{
    auto parsed = parse_code_file(R"({"format":"crc-code.v1","n":2,"q":3,"codewords":[[2,2],[0,1]]})");
    EXPECT_EQ(parsed.code.size(), 2U);
    auto text = serialize_code_file(parsed);
    EXPECT_LT(text.find("[0,1]"), text.find("[2,2]"));
}

TEST(CodeFile, RejectsMalformedInput)
{
    const char * bad[] = {
        "not json",
        "[]",
        R"({"format":"crc-code.v2","n":2,"q":3,"codewords":[]})",
        R"({"format":"crc-code.v1","n":2,"q":3,"codewords":[],"extra":1})",
        R"({"format":"crc-code.v1","n":2.5,"q":3,"codewords":[]})",
        R"({"format":"crc-code.v1","n":2,"q":3,"codewords":[[0,3]]})",
        R"({"format":"crc-code.v1","n":2,"q":3,"codewords":[[0,1,2]]})",
        R"({"format":"crc-code.v1","n":2,"q":3,"codewords":[[0,1],[0,1]]})",
        R"({"format":"crc-code.v1","n":2,"q":3,"codewords":[],"meta":[]})",
        R"({"format":"crc-code.v1","n":2,"q":3})",
    };
    for (const char * text : bad) {
        try {
            parse_code_file(text);
            ADD_FAILURE() << text;
        }
        catch (const Error & e) {
            EXPECT_EQ(e.code(), Errc::format_error) << text;
        }
    }
}

TEST(Cli, ConstructThenVerify)
{
    TempDir dir;
    auto path = dir.file("c65.code.json");
    auto c = cli({"construct", "c", "--q", "6", "--t", "5", "-o", path});
    ASSERT_EQ(c.status, 0) << c.err;
    auto v = cli({"verify", path, "--expect-gamma", "5", "--expect-index", "2"});
    EXPECT_EQ(v.status, 0) << v.out;
    EXPECT_NE(v.out.find("gamma: 5"), std::string::npos);
    auto wrong = cli({"verify", path, "--expect-gamma", "4"});
    EXPECT_EQ(wrong.status, 1);

    auto meta = read_code_file(path).meta;
    EXPECT_EQ(meta["construction"]["kind"], "c");
    EXPECT_EQ(meta["certificate"]["intersection_array"]["gamma"][0], 5);
}

TEST(Cli, ConstructWarnsOnUnnormalizedGamma)
{
    auto r = cli({"construct", "a", "--q", "4", "--gamma", "6"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
    EXPECT_NE(r.out.find("crc-code.v1"), std::string::npos);
}

TEST(Cli, ConstructRejectsBadParameters)
{
    EXPECT_EQ(cli({"construct", "d", "--q", "8", "--r", "4", "--s", "4", "--t", "4", "--a", "2", "--b", "2", "--c", "3"}).status, 2);
    EXPECT_EQ(cli({"construct", "c", "--q", "6"}).status, 2);
    EXPECT_EQ(cli({"construct", "b", "--q", "4", "--variant", "3"}).status, 2);
}

TEST(Cli, FeasibilityExitCodes)
{
    auto odd = cli({"params", "feasible", "--n", "3", "--q", "7", "--gamma", "3", "--index", "2"});
    EXPECT_EQ(odd.status, 1);
    EXPECT_NE(odd.out.find("odd"), std::string::npos);
    auto ok = cli({"params", "feasible", "--q", "8", "--gamma", "7"});
    EXPECT_EQ(ok.status, 0);
    EXPECT_NE(ok.out.find("witness"), std::string::npos);
    EXPECT_EQ(cli({"params", "feasible", "--q", "6", "--gamma", "9"}).status, 2);
    EXPECT_EQ(cli({"params", "feasible", "--n", "2", "--q", "8", "--gamma", "7"}).status, 1);
}

TEST(Cli, ParamsSolveAndLambda)
{
    auto s = cli({"params", "solve-c1", "--q", "8", "--gamma", "7"});
    EXPECT_EQ(s.status, 0);
    EXPECT_NE(s.out.find("2 4 6 2 3 2 7"), std::string::npos);
    EXPECT_EQ(cli({"params", "solve-c1", "--q", "4", "--gamma", "1"}).status, 1);
    auto l = cli({"params", "lambda", "--n", "3", "--q", "6", "--i", "2"});
    EXPECT_EQ(l.status, 0);
    EXPECT_NE(l.out.find("= 3,"), std::string::npos);
}

TEST(Cli, MalformedFileIsUsageError)
{
    TempDir dir;
    auto path = dir.file("malformed.json");
    write(path, "{\"format\": \"crc-code.v1\", \"n\": 3");
    auto r = cli({"verify", path});
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.err.find("format"), std::string::npos);
    EXPECT_EQ(cli({"verify", dir.file("missing.json")}).status, 2);
}

TEST(Cli, NonCrcVerifiesAsFailure)
{
    TempDir dir;
    auto path = dir.file("bad.json");
    write(path, R"({"format":"crc-code.v1","n":3,"q":3,"codewords":[[0,0,0],[0,1,1],[1,1,0],[1,0,1]]})");
    auto r = cli({"verify", path});
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.out.find("witness"), std::string::npos);
}

TEST(Cli, ReduceExtendComplement)
{
    TempDir dir;
    auto a = dir.file("a.json");
    ASSERT_EQ(cli({"construct", "a", "--q", "4", "--gamma", "2", "-o", a}).status, 0);
    auto reduced = dir.file("r.json");
    ASSERT_EQ(cli({"reduce", a, "-o", reduced}).status, 0);
    EXPECT_EQ(read_code_file(reduced).code.space(), (Space{2, 4}));
    auto extended = dir.file("e.json");
    ASSERT_EQ(cli({"extend", reduced, "--at", "1", "-o", extended}).status, 0);
    EXPECT_EQ(read_code_file(extended).code, read_code_file(a).code);
    EXPECT_EQ(cli({"extend", reduced, "--at", "4"}).status, 2);
    auto comp = dir.file("c.json");
    ASSERT_EQ(cli({"complement", a, "-o", comp}).status, 0);
    EXPECT_EQ(read_code_file(comp).code, read_code_file(a).code.complement());
    EXPECT_EQ(cli({"verify", comp, "--expect-gamma", "6", "--expect-beta", "2"}).status, 0);
}

TEST(Cli, AnalyzeIsDeterministic)
{
    TempDir dir;
    auto path = dir.file("d.json");
    ASSERT_EQ(cli({"construct", "d", "--q", "8", "--r", "4", "--s", "4", "--t", "4", "--a", "1", "--b", "1", "--c", "1", "-o", path}).status, 0);
    auto first = cli({"analyze", path, "--cliques", "--derivatives"});
    auto second = cli({"analyze", path, "--cliques", "--derivatives"});
    EXPECT_EQ(first.status, 0);
    EXPECT_EQ(first.out, second.out);
    EXPECT_NE(first.out.find("strong clique property: yes"), std::string::npos);
    EXPECT_EQ(first.out.find("unclassified="), std::string::npos);
}

TEST(Cli, SearchEmitsFilesAndIndex)
{
    TempDir dir;
    auto out = dir.file("codes");
    auto r = cli({"search", "--n", "3", "--q", "2", "--emit", out});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find("codes found: 22"), std::string::npos) << r.out;
    std::ifstream index{fs::path(out) / "index.json"};
    auto doc = nlohmann::json::parse(index);
    ASSERT_EQ(doc.size(), 22U);
    auto first = read_code_file((fs::path(out) / doc[0]["file"].get<std::string>()).string());
    EXPECT_EQ(first.code.space(), (Space{3, 2}));
    EXPECT_EQ(cli({"search", "--n", "3", "--q", "5"}).status, 2);
}

TEST(Cli, TableAndUsage)
{
    auto t = cli({"table", "--q-max", "8"});
    EXPECT_EQ(t.status, 0);
    EXPECT_NE(t.out.find("\n8 "), std::string::npos);
    EXPECT_EQ(cli({}).status, 2);
    EXPECT_EQ(cli({"frobnicate"}).status, 2);
    EXPECT_EQ(cli({"--help"}).status, 0);
}
