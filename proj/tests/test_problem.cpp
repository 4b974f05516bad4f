#include "generators.hpp"
#include "support.hpp"

using namespace tourney;

namespace
{
const RankingProblem& example(int id, const char* name = "T")
{
    static std::map< int, ExampleFixture > cache;
    auto it = cache.find(id);
    if (it == cache.end())
        it = cache.emplace(id, example_fixture(id)).first;
    return it->second.problem(name);
}
} // namespace

TEST(Problem, RejectsInvalidTournaments)
{
    EXPECT_EQ(error_of([] { RankingProblem({"A"}, Matrix(1, 1)); }), ErrorCode::FewerThanTwoObjects);
    EXPECT_EQ(error_of([] { RankingProblem({"A", "B"}, Matrix(3, 3)); }), ErrorCode::DimensionMismatch);
    EXPECT_EQ(error_of([] { RankingProblem({"A", "B"}, Matrix{{1, 0}, {0, 0}}); }), ErrorCode::DiagonalNonZero);
    EXPECT_EQ(error_of([] { RankingProblem({"A", "B"}, Matrix{{0, -1}, {2, 0}}); }), ErrorCode::NegativeEntry);
    EXPECT_EQ(error_of([] { RankingProblem({"A", "B"}, Matrix{{0, Rational(1, 2)}, {0, 0}}); }),
              ErrorCode::NonIntegerPairSum);
}

TEST(Problem, BuildAccumulatesContributions)
{
    const auto p = build_problem({"A", "B", "C"}, {{"A", "B", 1}, {"A", "B", Rational(1, 2)}, {"B", "A", Rational(1, 2)}});
    EXPECT_EQ(p.t(0, 1), Rational(3, 2));
    EXPECT_EQ(p.t(1, 0), Rational(1, 2));
    EXPECT_EQ(derive(p).max_matches, 2);
    EXPECT_EQ(error_of([] { build_problem({"A", "B"}, {{"A", "Z", 1}}); }), ErrorCode::UnknownLabel);
    EXPECT_EQ(error_of([] { build_problem({"A", "A"}, {}); }), ErrorCode::UnknownLabel);
}

TEST(Problem, ResultsAndMatchesOfFirstExample)
{
    const auto d = derive(example(1));
    EXPECT_EQ(d.results(0, 4), 1);
    EXPECT_EQ(d.results(4, 0), -1);
    EXPECT_EQ(d.results(1, 2), 0);
    EXPECT_EQ(d.results(2, 4), -1);
    EXPECT_EQ(d.matches(1, 2), 1);
    EXPECT_EQ(d.matches(0, 1), 0);
    EXPECT_EQ(d.max_matches, 1);
    const std::vector< Integer > degrees{1, 1, 3, 2, 3};
    EXPECT_EQ(d.degrees, degrees);
    EXPECT_EQ(d.laplacian(2, 2), 3);
    EXPECT_EQ(d.laplacian(2, 3), -1);
}

TEST(Problem, MaxMatchesOfSummedProblem)
{
    EXPECT_EQ(derive(example(2, "T")).max_matches, 2);
    EXPECT_EQ(derive(example(2, "T'")).max_matches, 1);
    EXPECT_EQ(derive(example(2, "T''")).max_matches, 3);
}

TEST(Problem, StructurePredicates)
{
    EXPECT_TRUE(is_connected(example(1)));
    EXPECT_FALSE(is_irreducible(example(1)));
    EXPECT_FALSE(is_round_robin(example(1)));
    EXPECT_TRUE(is_irreducible(example(3)));
    EXPECT_TRUE(is_round_robin(example(3)));
    EXPECT_TRUE(is_round_robin(example(8)));

    const RankingProblem split({"A", "B", "C", "D"}, Matrix{{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    EXPECT_FALSE(is_connected(split));
    EXPECT_FALSE(is_irreducible(split));

    const RankingProblem drawn({"A", "B"}, Matrix{{0, Rational(1, 2)}, {Rational(1, 2), 0}});
    EXPECT_TRUE(is_flat(drawn));
    EXPECT_TRUE(is_irreducible(drawn));
    EXPECT_FALSE(is_flat(example(1)));
}

TEST(Problem, SumAndNegate)
{
    const auto& t  = example(5, "T");
    const auto& t2 = example(5, "T'");
    EXPECT_EQ(sum_problems(t, t2), example(5, "T''"));
    EXPECT_EQ(negate(negate(t)), t);
    EXPECT_EQ(derive(negate(t)).results, -derive(t).results);
    const RankingProblem other({"P", "Q", "R"}, Matrix(3, 3));
    EXPECT_EQ(error_of([&] { sum_problems(t, other); }), ErrorCode::LabelMismatch);
}

TEST(Problem, PermutationSwapsPairs)
{
    const Permutation sigma({1, 0, 3, 2});
    const auto        moved = permute(example(7, "T"), sigma);
    EXPECT_EQ(moved.tournament(), example(7, "T'").tournament());
    EXPECT_EQ(moved.labels()[0], "X2");
    EXPECT_EQ(error_of([] { Permutation({0, 0, 1}); }), ErrorCode::DimensionMismatch);
    EXPECT_EQ(sigma.inverse(), sigma);
}

TEST(ProblemProperty, DerivedStructureInvariants)
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 150; ++trial)
    {
        const auto p = gen::problem(rng, 2 + trial % 5, 3);
        const auto d = derive(p);
        const auto n = p.size();
        EXPECT_EQ(d.results.transposed(), -d.results);
        EXPECT_EQ(d.matches.transposed(), d.matches);
        EXPECT_TRUE(is_zero(d.laplacian * ones(n)));
        EXPECT_EQ(sum(score(p).ratings), 0);
        for (std::size_t i = 0; i < n; ++i)
        {
            EXPECT_EQ(Rational(d.degrees[i]), d.laplacian(i, i));
            for (std::size_t j = 0; j < n; ++j)
            {
                EXPECT_TRUE(is_integer(d.matches(i, j)));
                EXPECT_LE(abs(d.results(i, j)), d.matches(i, j));
            }
        }
        EXPECT_EQ(from_results_matches(p.labels(), d.results, d.matches), p);
        EXPECT_EQ(negate(negate(p)), p);
        EXPECT_EQ(derive(sum_problems(p, negate(p))).results, Matrix::zero(n));
        if (is_irreducible(p))
        {
            EXPECT_TRUE(is_connected(p));
        }
    }
}

TEST(ProblemProperty, PermutationRoundTrip)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial)
    {
        const auto p     = gen::problem(rng, 3 + trial % 3, 2);
        const auto sigma = gen::permutation(rng, p.size());
        EXPECT_EQ(permute(permute(p, sigma), sigma.inverse()), p);
        EXPECT_EQ(is_connected(permute(p, sigma)), is_connected(p));
        EXPECT_EQ(is_irreducible(permute(p, sigma)), is_irreducible(p));
        EXPECT_EQ(score(permute(p, sigma)).ratings, permute(score(p).ratings, sigma));
    }
}
