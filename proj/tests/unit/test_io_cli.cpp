#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ringlex/cli.hpp"
#include "ringlex/errors.hpp"
#include "ringlex/fixtures.hpp"
#include "ringlex/io.hpp"

using namespace ringlex;

namespace {

struct CliRun {
    int code;
    std::string out, err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& text) {
    const auto p = std::filesystem::temp_directory_path() / ("ringlex_test_" + name);
    std::ofstream(p) << text;
    return p.string();
}

}  // namespace

TEST(VectorFile, HeaderCommentsAndCanonical) {
    const auto f = parse_vector_file("# comment\nring=f2u n=3\n1u0  # first\n\nv01\n");
    EXPECT_EQ(f.ring.kind(), RingKind::F2u);
    EXPECT_EQ(f.n, 3);
    EXPECT_EQ(f.vectors.size(), 2u);
    EXPECT_TRUE(parse_vector_file("ring=z4 n=5\ncanonical\n").canonical);
}

TEST(VectorFile, Errors) {
    EXPECT_THROW(parse_vector_file(""), ParseError);
    EXPECT_THROW(parse_vector_file("ring=z8 n=3\n"), ParseError);
    EXPECT_THROW(parse_vector_file("ring=z4 n=3\n12\n"), ParseError);
    EXPECT_THROW(parse_vector_file("ring=z4 n=3\n1u2\n"), ParseError);
    EXPECT_THROW(parse_vector_file("ring=z4 n=2\ncanonical\n10\n"), ParseError);
    EXPECT_THROW(parse_vector_file("n=2\n10\n"), ParseError);
}

TEST(BasisFile, ValidatesBasis) {
    EXPECT_EQ(parse_basis_file("ring=z4 n=2\n13\n01\n").n(), 2);
    EXPECT_THROW(parse_basis_file("ring=z4 n=2\n20\n01\n"), InvalidBasis);
    EXPECT_THROW(parse_basis_file("ring=z4 n=2\n10\n"), InvalidBasis);
    const Basis b = parse_basis_file("ring=f2u n=3\ncanonical\n");
    EXPECT_EQ(parse_basis_file(format_basis_file(b)), b);
}

TEST(RandomBasis, SeededAndValid) {
    const ChainRing z = make_z4();
    EXPECT_EQ(random_basis(z, 6, 9), random_basis(z, 6, 9));
    EXPECT_NE(random_basis(z, 6, 9), random_basis(z, 6, 10));
    for (std::uint64_t s = 0; s < 20; ++s) EXPECT_TRUE(generates_module(z, 5, random_basis(z, 5, s).vectors()));
}

TEST(Fixtures, ParseType) {
    EXPECT_EQ(parse_type("4^1 2^3"), (std::pair<int, int>{1, 3}));
    EXPECT_EQ(parse_type("4^4"), (std::pair<int, int>{4, 0}));
    EXPECT_EQ(parse_type("2^2"), (std::pair<int, int>{0, 2}));
    EXPECT_THROW(parse_type("8^1"), ParseError);
}

TEST(Fixtures, ParserRejectsBadRows) {
    const std::string head = "ring = z4\ncriterion = self-inner-zero\n";
    EXPECT_THROW(parse_fixture_table(head + "[row 1]\nn = 2\n", "9"), ParseError);
    EXPECT_THROW(parse_fixture_table(head + "[row 1]\nn = 2\nn = 2\n", "9"), ParseError);
    EXPECT_THROW(parse_fixture_table(head + "[row 1]\nn = 2\nbasis = canonical\ngenerators = 20\ntype = 2^1\n"
                                            "d_L = 2\ncolour = red\n", "9"),
                 ParseError);
    EXPECT_THROW(parse_fixture_table(head + "[row 1]\nn = 2\nbasis = canonical\ngenerators = 20\ntype = 2^1\n"
                                            "d_L = 2\nerratum.d_L = 3\n", "9"),
                 ParseError);
}

TEST(Fixtures, ErratumOnCleanRowFails) {
    // printed row is consistent, so a correction must not be accepted
    const std::string text =
        "ring = z4\ncriterion = self-inner-zero\n[row 1]\nn = 2\nbasis = canonical\ngenerators = 20 02\n"
        "type = 2^2\nd_L = 2\nerratum.d_L = 4\nerratum.note = test\n";
    const auto t = parse_fixture_table(text, "9");
    ASSERT_TRUE(audit_row(t, t.rows[0]).clean());
    const auto o = verify_row(t, t.rows[0]);
    EXPECT_FALSE(o.pass);
}

TEST(Fixtures, CleanRowPassesVerbatim) {
    const std::string text =
        "ring = z4\ncriterion = self-inner-zero\n[row 1]\nn = 2\nbasis = canonical\ngenerators = 20 02\n"
        "type = 2^2\nd_L = 2\n";
    const auto t = parse_fixture_table(text, "9");
    const auto o = verify_row(t, t.rows[0]);
    EXPECT_TRUE(o.pass) << o.first_difference;
    EXPECT_TRUE(o.verbatim);
}

TEST(Cli, BuildJson) {
    const CliRun r = run({"build", "--ring", "z4", "--n", "4", "--basis", "canonical", "--criterion", "self-inner-zero",
                       "--out", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["report"]["type"], "4^1 2^3");
    EXPECT_EQ(j["build"]["generators"].size(), 4u);
    EXPECT_EQ(j["build"]["generators"][3]["vector"], "1111");
}

TEST(Cli, BasisFileAndMismatch) {
    const auto path = temp_file("basis.txt", "ring=z4 n=2\n13\n01\n");
    EXPECT_EQ(run({"build", "--basis", path, "--criterion", "lee-even"}).code, 0);
    EXPECT_EQ(run({"build", "--basis", path, "--n", "3", "--criterion", "lee-even"}).code, kExitParse);
    const auto bad = temp_file("bad_basis.txt", "ring=z4 n=2\n20\n02\n");
    EXPECT_EQ(run({"build", "--basis", bad, "--criterion", "lee-even"}).code, kExitInvalidBasis);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, kExitParse);
    EXPECT_EQ(run({"build", "--frobnicate"}).code, kExitParse);
    EXPECT_EQ(run({"build", "--ring", "z4", "--n", "4", "--basis", "canonical", "--criterion", "min-lee"}).code,
              kExitParse);  // missing delta
    EXPECT_EQ(run({"build", "--ring", "z4", "--n", "10", "--basis", "canonical", "--criterion", "lee-even", "--cap",
                   "100"})
                  .code,
              kExitCap);
    EXPECT_EQ(run({"gray", "--ring", "z4", "--n", "2", "--basis", "canonical", "--criterion", "min-lee", "--delta",
                   "9"})
                  .code,
              kExitCap);
    EXPECT_EQ(run({"build", "--ring", "z4", "--n", "4", "--basis", "canonical", "--criterion", "lee-even", "--prop9"})
                  .code,
              kExitParse);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, AnalyzeGenerators) {
    const auto path = temp_file("gens.txt", "ring=z4 n=8\n10003121\n01001231\n00103332\n00012311\n");
    const CliRun r = run({"analyze", "--generators", path, "--out", "json", "--dual"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["report"]["d_L"], 6);
    EXPECT_EQ(j["report"]["self_dual"], true);
}

TEST(Cli, GrayReport) {
    const auto path = temp_file("octa.txt", "ring=z4 n=8\n10003121\n01001231\n00103332\n00012311\n");
    const CliRun r = run({"gray", "--generators", path, "--out", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["gray"]["min_distance"], 6);
    EXPECT_EQ(j["gray"]["linear"], false);
    EXPECT_EQ(j["gray"]["gilbert_ball"], 6885);
}

TEST(Cli, RandBasisIsDeterministic) {
    const CliRun a = run({"rand-basis", "--ring", "f2u", "--n", "5", "--seed", "3"});
    const CliRun b = run({"rand-basis", "--ring", "f2u", "--n", "5", "--seed", "3"});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NO_THROW(parse_basis_file(a.out));
}

TEST(Cli, VerifySingleRow) {
    const CliRun r = run({"verify-fixtures", "--table", "1", "--row", "1", "--out", "json"});
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(nlohmann::json::parse(r.out)["passed"], 1);
    EXPECT_EQ(run({"verify-fixtures", "--table", "99"}).code, kExitParse);
}
