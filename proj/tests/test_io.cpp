#include "generators.hpp"
#include "support.hpp"

#include <cstdio>
#include <sys/wait.h>

using namespace tourney;

TEST(MatchList, SingleEncounter)
{
    const auto p = parse_match_list("A,B,1,0\n");
    EXPECT_EQ(p.size(), 2u);
    EXPECT_EQ(p.t(0, 1), 1);
    EXPECT_EQ(p.t(1, 0), 0);
}

TEST(MatchList, RepeatedPairsAccumulate)
{
    const auto p = parse_match_list("A,B,0.5,0.5\nA,B,0.5,0.5\n");
    EXPECT_EQ(p.t(0, 1), 1);
    EXPECT_EQ(p.t(1, 0), 1);
    EXPECT_EQ(derive(p).matches(0, 1), 2);
}

TEST(MatchList, FirstExampleEncounters)
{
    const auto p = parse_match_list("i,j,tij,tji\n"
                                    "X1,X5,1,0\n"
                                    "X2,X3,0.5,0.5  # drawn\n"
                                    "X3,X4,1,0\n"
                                    "X3,X5,0,1\n"
                                    "X4,X5,1,0\n");
    const auto expected = example_fixture(1).problem("T");
    EXPECT_EQ(p.labels(), (std::vector< std::string >{"X1", "X5", "X2", "X3", "X4"}));
    // Labels appear in first-appearance order, so compare after reordering.
    const Permutation to_fixture({0, 4, 1, 2, 3});
    EXPECT_EQ(permute(p, to_fixture), expected);
}

TEST(MatchList, LabelsDirectiveKeepsIdleObjects)
{
    const auto p = parse_match_list("labels: A B C\nB,C,2,1\n");
    EXPECT_EQ(p.labels(), (std::vector< std::string >{"A", "B", "C"}));
    EXPECT_EQ(derive(p).degrees[0], 0);
    EXPECT_EQ(p.t(1, 2), 2);
}

TEST(MatchList, ErrorsCarryLineNumbers)
{
    auto message = [](std::string_view text) {
        try
        {
            parse_match_list(text);
        }
        catch (const Error& e)
        {
            return std::make_pair(e.code(), std::string(e.what()));
        }
        return std::make_pair(ErrorCode::UnknownExample, std::string());
    };
    auto [code, what] = message("A,B,1,0\nA,B,1\n");
    EXPECT_EQ(code, ErrorCode::ParseError);
    EXPECT_NE(what.find("line 2"), std::string::npos) << what;
    EXPECT_EQ(message("A,B,x,0\n").first, ErrorCode::ParseError);
    EXPECT_EQ(message("A,A,1,0\n").first, ErrorCode::DiagonalNonZero);
    EXPECT_EQ(message("A,B,-1,2\n").first, ErrorCode::NegativeEntry);
    EXPECT_EQ(message("A,B,0.5,0\n").first, ErrorCode::NonIntegerPairSum);
    EXPECT_EQ(message("A,B,0,0\n").first, ErrorCode::ParseError);
    EXPECT_EQ(message("A,B,0.1234567,0\n").first, ErrorCode::ParseError);
    EXPECT_EQ(message("A,B,1,0\n").first, ErrorCode::UnknownExample);
}

TEST(MatrixFile, ParsesSmallMatrix)
{
    const auto p = parse_matrix("2\n0 1\n0 0\n");
    EXPECT_EQ(p.tournament(), (Matrix{{0, 1}, {0, 0}}));
    EXPECT_EQ(parse_matrix("3\n0 1.5 0.5\n0.5 0 3\n1/2 0 0\n"), example_fixture(4).problem("T"));
}

TEST(MatrixFile, Errors)
{
    EXPECT_EQ(error_of([] { parse_matrix("2\n0 1\n1 1\n"); }), ErrorCode::DiagonalNonZero);
    EXPECT_EQ(error_of([] { parse_matrix("2\n0 1\n"); }), ErrorCode::DimensionMismatch);
    EXPECT_EQ(error_of([] { parse_matrix("2\n0 1 0\n0 0\n"); }), ErrorCode::DimensionMismatch);
    EXPECT_EQ(error_of([] { parse_matrix("x\n"); }), ErrorCode::ParseError);
    EXPECT_EQ(error_of([] { parse_matrix("1\n0\n"); }), ErrorCode::FewerThanTwoObjects);
    EXPECT_EQ(error_of([] { parse_matrix("labels: A B C\n2\n0 1\n0 0\n"); }), ErrorCode::DimensionMismatch);
}

TEST(Render, CopelandFairBetsLines)
{
    const auto p   = example_fixture(5).problem("T");
    const auto out = render_rating(copeland_fair_bets(p), p.labels());
    EXPECT_EQ(out, "X3\t9/19\t0.4737\nX1\t-1/19\t-0.0526\nX2\t-8/19\t-0.4211\nX3 > X1 > X2\n");
    EXPECT_EQ(render_rating(copeland_fair_bets(p), p.labels(), true), "X3\t9/19\nX1\t-1/19\nX2\t-8/19\nX3 > X1 > X2\n");
}

TEST(Render, FlatRatingIsOneTier)
{
    const RatingVector f{Method::Score, vec({"0", "0", "0", "0"})};
    const auto         out = render_rating(f, default_labels(4));
    EXPECT_NE(out.find("X1 = X2 = X3 = X4\n"), std::string::npos);
}

TEST(Render, DecimalsOfGeneralizedRowSum)
{
    const auto p   = example_fixture(1).problem("T");
    const auto out = render_rating(generalized_row_sum(p, Epsilon(Rational(1))), p.labels());
    for (const char* cell : {"2.4242", "-0.2424", "-0.4848", "-0.5455", "-1.1515"})
        EXPECT_NE(out.find(std::string("\t") + cell + "\n"), std::string::npos) << cell;
}

TEST(IoProperty, MatrixRoundTrip)
{
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial)
    {
        const auto p = gen::problem(rng, 2 + trial % 6, 4);
        EXPECT_EQ(parse_matrix(render_matrix(p)), p);
    }
    const auto named = build_problem({"alpha", "beta"}, {{"alpha", "beta", Rational(7, 3)}, {"beta", "alpha", Rational(2, 3)}});
    EXPECT_EQ(parse_matrix(render_matrix(named)), named);
}

namespace
{
struct Run
{
    int         status = -1;
    std::string out;
};

Run cli(const std::string& args)
{
    const std::string command = std::string(TOURNEY_CLI) + " " + args + " 2>/dev/null";
    Run               run;
    FILE*             pipe = popen(command.c_str(), "r");
    if (!pipe)
        return run;
    char buffer[4096];
    while (const auto got = std::fread(buffer, 1, sizeof buffer, pipe))
        run.out.append(buffer, got);
    const int raw = pclose(pipe);
    run.status    = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return run;
}

std::string data(const char* name) { return std::string(TOURNEY_DATA) + "/" + name; }
} // namespace

TEST(Cli, RankPrintsRating)
{
    const auto run = cli("rank --method cfb " + data("example5_T.txt"));
    EXPECT_EQ(run.status, 0);
    EXPECT_NE(run.out.find("X3 > X1 > X2"), std::string::npos) << run.out;
    const auto matches = cli("rank --method score --format matches " + data("example1.matches"));
    EXPECT_EQ(matches.status, 0);
    EXPECT_NE(matches.out.find("X1\t1\t1.0000"), std::string::npos) << matches.out;
}

TEST(Cli, RankIsByteDeterministic)
{
    const auto a = cli("rank --method grs --epsilon 1/3 " + data("example1.txt"));
    const auto b = cli("rank --method grs --epsilon 1/3 " + data("example1.txt"));
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ExitStatuses)
{
    EXPECT_EQ(cli("audit --axiom CS --method ls " + data("example2_T.txt") + " " + data("example2_T2.txt")).status, 1);
    EXPECT_EQ(cli("audit --axiom CS --method score " + data("example2_T.txt") + " " + data("example2_T2.txt")).status, 0);
    EXPECT_EQ(cli("audit --axiom IIR --method fb " + data("example8_T.txt") + " " + data("example8_T2.txt")).status, 1);
    EXPECT_EQ(cli("audit --axiom NEU --method ls --sigma 2,1,4,3 " + data("example7_T.txt")).status, 0);
    EXPECT_EQ(cli("rank --method fb " + data("example1.txt")).status, 3);
    EXPECT_EQ(cli("rank --method grs " + data("example1.txt")).status, 2);
    EXPECT_EQ(cli("rank --method nope " + data("example1.txt")).status, 2);
    EXPECT_EQ(cli("rank --method score /nonexistent/file").status, 2);
    EXPECT_EQ(cli("reproduce --example 3").status, 0);
    EXPECT_EQ(cli("reproduce --example 9").status, 2);
    EXPECT_EQ(cli("search --axiom CS --method score --max-n 3 --max-matches 1").status, 0);
    EXPECT_EQ(cli("search --axiom CS --method ls --min-n 4 --max-n 4 --max-matches 1 --max-hits 1").status, 1);
}
