#include "oracle.hpp"
#include "support.hpp"

#include <random>

using namespace tourney;

TEST(Rational, ParsesFractionsIntegersDecimals)
{
    EXPECT_EQ(*parse_rational("3/4"), Rational(3, 4));
    EXPECT_EQ(*parse_rational("-2"), Rational(-2));
    EXPECT_EQ(*parse_rational("0.125"), Rational(1, 8));
    EXPECT_EQ(*parse_rational("-1.5"), Rational(-3, 2));
    EXPECT_EQ(*parse_rational("6/8"), Rational(3, 4));
}

TEST(Rational, RejectsMalformed)
{
    EXPECT_FALSE(parse_rational(""));
    EXPECT_FALSE(parse_rational("1/0"));
    EXPECT_FALSE(parse_rational("a"));
    EXPECT_FALSE(parse_rational("1.2.3"));
    EXPECT_FALSE(parse_rational("0.1234567"));
    EXPECT_TRUE(parse_rational("0.123456"));
}

TEST(Rational, DecimalRoundsHalfToEven)
{
    EXPECT_EQ(to_decimal(Rational(1, 3)), "0.3333");
    EXPECT_EQ(to_decimal(Rational(-2, 3)), "-0.6667");
    EXPECT_EQ(to_decimal(Rational(1, 20000)), "0.0000");
    EXPECT_EQ(to_decimal(Rational(3, 20000)), "0.0002");
    EXPECT_EQ(to_decimal(Rational(-1, 20000)), "0.0000");
    EXPECT_EQ(to_decimal(Rational(4)), "4.0000");
    EXPECT_EQ(to_string(Rational(-10, 57)), "-10/57");
    EXPECT_EQ(to_string(Rational(4)), "4");
}

TEST(Matrix, SolveSmallSystem)
{
    Matrix a{{2, 1}, {1, 3}};
    EXPECT_VEC_EQ(solve(a, vec({"3", "5"})), vec({"4/5", "7/5"}));
}

TEST(Matrix, SolveNeedsPivoting)
{
    Matrix a{{0, 1, 0}, {1, 0, 0}, {0, 0, 2}};
    EXPECT_VEC_EQ(solve(a, vec({"1", "2", "3"})), vec({"2", "1", "3/2"}));
}

TEST(Matrix, SolveSingularThrows)
{
    Matrix a{{1, 2}, {2, 4}};
    EXPECT_EQ(error_of([&] { solve(a, vec({"1", "2"})); }), ErrorCode::SingularMatrix);
}

TEST(Matrix, NullspaceOfRankDeficient)
{
    Matrix a{{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}};
    const auto v = nullspace_1d(a);
    EXPECT_TRUE(is_zero(a * v));
    EXPECT_FALSE(is_zero(v));
    EXPECT_EQ(v[0], v[1]);
    EXPECT_EQ(v[1], v[2]);
}

TEST(Matrix, NullspaceRankErrors)
{
    EXPECT_EQ(error_of([] { nullspace_1d(Matrix::identity(3)); }), ErrorCode::FullRank);
    EXPECT_EQ(error_of([] { nullspace_1d(Matrix::zero(3)); }), ErrorCode::RankTooLow);
}

TEST(Matrix, SolveAgreesWithCramerOnRandomSystems)
{
    std::mt19937_64                    rng(11);
    std::uniform_int_distribution<int> cell(-5, 5);
    int                                checked = 0;
    for (int trial = 0; trial < 200; ++trial)
    {
        const std::size_t n = 1 + trial % 5;
        Matrix            a(n, n);
        Vector            y(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            y[i] = Rational(cell(rng), 1 + std::abs(cell(rng)));
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = cell(rng);
        }
        if (oracle::det(a) == 0)
            continue;
        const Vector b = a * y;
        EXPECT_VEC_EQ(solve(a, b), y);
        EXPECT_VEC_EQ(oracle::cramer(a, b), y);
        ++checked;
    }
    EXPECT_GT(checked, 150);
}

TEST(Matrix, NullspaceAgreesWithAdjugate)
{
    std::mt19937_64                    rng(5);
    std::uniform_int_distribution<int> cell(-4, 4);
    for (int trial = 0; trial < 100; ++trial)
    {
        const std::size_t n = 2 + trial % 4;
        // Last row is a combination of the others, so rank <= n-1.
        Matrix a(n, n);
        for (std::size_t i = 0; i + 1 < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) = cell(rng);
        for (std::size_t j = 0; j < n; ++j)
            a(n - 1, j) = a(0, j) - 2 * a(n - 2, j);
        const auto adj = oracle::adjugate_kernel(a);
        if (adj.empty())
            continue;
        const auto v = nullspace_1d(a);
        EXPECT_TRUE(is_zero(a * v));
        // Parallel: v_i adj_j == v_j adj_i.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                EXPECT_EQ(v[i] * adj[j], v[j] * adj[i]);
    }
}
