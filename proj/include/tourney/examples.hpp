#ifndef TOURNEY_EXAMPLES_HPP
#define TOURNEY_EXAMPLES_HPP

#include "tourney/error.hpp"
#include "tourney/methods.hpp"
#include "tourney/problem.hpp"
#include "tourney/rational.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace tourney
{

/// A printed table column: the method evaluated on one of the fixture's problems, and the
/// values exactly as printed (rationals, or 4-decimal strings when `decimal`).
struct TableColumn
{
    std::string                name;
    Method                     method;
    std::size_t                problem = 0;
    std::optional< Rational >  epsilon;
    bool                       decimal = false;
    std::vector< std::string > printed;
};

struct NamedProblem
{
    std::string    name;
    RankingProblem problem;
};

/// Read-only copy of one worked example: its tournament matrices (plus their sum when the
/// example uses it) and the printed table columns.
struct ExampleFixture
{
    int                         id = 0;
    std::string                 table;
    std::vector< NamedProblem > problems;
    std::vector< TableColumn >  columns;

    [[nodiscard]] const RankingProblem& problem(std::string_view name) const
    {
        for (const auto& p : problems)
            if (p.name == name)
                return p.problem;
        throw Error(ErrorCode::UnknownExample, "fixture has no problem '" + std::string(name) + "'");
    }
};

namespace detail
{
inline RankingProblem fixture_matrix(std::initializer_list< std::initializer_list< const char* > > rows)
{
    const std::size_t n = rows.size();
    Matrix            t(n, n);
    std::size_t       i = 0;
    for (const auto& row : rows)
    {
        std::size_t j = 0;
        for (const auto* cell : row)
            t(i, j++) = rational(cell);
        ++i;
    }
    return RankingProblem(default_labels(n), std::move(t));
}

inline std::vector< NamedProblem > with_sum(RankingProblem a, RankingProblem b)
{
    RankingProblem s = sum_problems(a, b);
    return {{"T", std::move(a)}, {"T'", std::move(b)}, {"T''", std::move(s)}};
}

// Fair bets family columns over T, T' and T'' (in that order), each as fb, dfb, Cfb.
inline std::vector< TableColumn > fair_bets_columns(std::vector< std::vector< std::string > > printed, std::size_t problems)
{
    static const char* const suffix[] = {"(T)", "(T')", "(T'')"};
    const Method             methods[] = {Method::FairBets, Method::DualFairBets, Method::CopelandFairBets};
    std::vector< TableColumn > out;
    std::size_t                k = 0;
    for (std::size_t p = 0; p < problems; ++p)
        for (auto m : methods)
        {
            const std::string name = std::string(m == Method::FairBets ? "fb" : m == Method::DualFairBets ? "dfb" : "Cfb") +
                                     suffix[p];
            out.push_back({name, m, p, std::nullopt, false, printed.at(k++)});
        }
    return out;
}
} // namespace detail

inline ExampleFixture example_fixture(int id)
{
    using detail::fixture_matrix;
    using detail::with_sum;
    ExampleFixture fx;
    fx.id = id;
    switch (id)
    {
    case 1: {
        fx.table = "Table 1";
        fx.problems.push_back({"T", fixture_matrix({{"0", "0", "0", "0", "1"},
                                                    {"0", "0", "0.5", "0", "0"},
                                                    {"0", "0.5", "0", "1", "0"},
                                                    {"0", "0", "0", "0", "1"},
                                                    {"0", "0", "1", "0", "0"}})});
        auto col = [&](const char* name, Rational eps, std::vector< std::string > printed) {
            fx.columns.push_back({std::string("x(") + name + ")", Method::GeneralizedRowSum, 0, eps, true, std::move(printed)});
        };
        col("1/100", Rational(1, 100), {"1.0296", "-0.0001", "-0.0099", "-0.0100", "-1.0096"});
        col("1/4", Rational(1, 4), {"1.7165", "-0.0613", "-0.2452", "-0.2759", "-1.1341"});
        col("1/3", Rational(1, 3), {"2.2649", "-0.1917", "-0.4314", "-0.4878", "-1.1540"});
        col("1", Rational(1), {"2.4242", "-0.2424", "-0.4848", "-0.5455", "-1.1515"});
        col("5", Rational(5), {"3.4369", "-0.6819", "-0.8183", "-0.8609", "-1.0757"});
        fx.columns.push_back({"x(0) = s", Method::Score, 0, std::nullopt, false, {"1", "0", "0", "0", "-1"}});
        fx.columns.push_back({"x(inf) = mn q", Method::LeastSquares, 0, std::nullopt, false, {"4", "-1", "-1", "-1", "-1"}});
        break;
    }
    case 2:
        fx.problems = with_sum(fixture_matrix({{"0", "0", "0", "1"}, {"0", "0", "1", "0"}, {"1", "1", "0", "0"}, {"1", "1", "0", "0"}}),
                               fixture_matrix({{"0", "1", "0", "0"}, {"0", "0", "0", "1"}, {"1", "1", "0", "0"}, {"1", "0", "0", "0"}}));
        break;
    case 3:
        fx.table    = "Table 2";
        fx.problems = with_sum(fixture_matrix({{"0", "0.5", "0.5", "0.5"},
                                               {"0.5", "0", "1", "0.5"},
                                               {"0.5", "0", "0", "0.5"},
                                               {"0.5", "0.5", "0.5", "0"}}),
                               fixture_matrix({{"0", "1", "0.5", "0.5"},
                                               {"0", "0", "0.5", "0.5"},
                                               {"0.5", "0.5", "0", "0"},
                                               {"0.5", "0.5", "1", "0"}}));
        fx.columns  = detail::fair_bets_columns({{"1/4", "3/8", "1/8", "1/4"},
                                                 {"-1/4", "-1/8", "-3/8", "-1/4"},
                                                 {"0", "1/4", "-1/4", "0"},
                                                 {"3/8", "1/8", "1/8", "3/8"},
                                                 {"-1/8", "-3/8", "-3/8", "-1/8"},
                                                 {"1/4", "-1/4", "-1/4", "1/4"},
                                                 {"163/512", "117/512", "75/512", "157/512"},
                                                 {"-101/512", "-115/512", "-205/512", "-91/512"},
                                                 {"31/256", "1/256", "-65/256", "33/256"}},
                                                3);
        break;
    case 4:
        fx.problems.push_back({"T", fixture_matrix({{"0", "1.5", "0.5"}, {"0.5", "0", "3"}, {"0.5", "0", "0"}})});
        fx.problems.push_back({"2T", sum_problems(fx.problems[0].problem, fx.problems[0].problem)});
        break;
    case 5:
        fx.table    = "Table 3";
        fx.problems = with_sum(fixture_matrix({{"0", "3", "0"}, {"0", "0", "1"}, {"4", "0", "0"}}),
                               fixture_matrix({{"0", "1", "2"}, {"2", "0", "0"}, {"2", "1", "0"}}));
        fx.columns  = detail::fair_bets_columns({{"3/19", "4/19", "12/19"},
                                                 {"-1/3", "-1/3", "-1/3"},
                                                 {"-10/57", "-7/57", "17/57"},
                                                 {"2/7", "2/7", "3/7"},
                                                 {"-6/15", "-5/15", "-4/15"},
                                                 {"-12/105", "-5/105", "17/105"},
                                                 {"7/29", "6/29", "16/29"},
                                                 {"-2/6", "-3/6", "-1/6"},
                                                 {"-16/174", "-51/174", "67/174"}},
                                                3);
        break;
    case 6:
        fx.table    = "Table 4";
        fx.problems = with_sum(fixture_matrix({{"0", "0", "1", "0"},
                                               {"1", "0", "1", "0.5"},
                                               {"0", "0", "0", "1"},
                                               {"1", "0.5", "0", "0"}}),
                               fixture_matrix({{"0", "0", "0.5", "0.5"},
                                               {"1", "0", "0.5", "1"},
                                               {"0.5", "0.5", "0", "0"},
                                               {"0.5", "0", "1", "0"}}));
        fx.columns  = detail::fair_bets_columns({{"1/17", "10/17", "2/17", "4/17"},
                                                 {"-6/19", "-1/19", "-7/19", "-5/19"},
                                                 {"-83/323", "173/323", "-81/323", "-9/323"},
                                                 {"5/64", "39/64", "11/64", "9/64"},
                                                 {"-23/64", "-5/64", "-25/64", "-11/64"},
                                                 {"-9/32", "17/32", "-7/32", "-1/32"},
                                                 {"17/236", "145/236", "31/236", "43/236"},
                                                 {"-79/244", "-15/244", "-97/244", "-53/244"},
                                                 {"-906/3599", "1990/3599", "-958/3599", "-126/3599"}},
                                                3);
        break;
    case 7:
        fx.table = "Table 5";
        fx.problems.push_back({"T", fixture_matrix({{"0", "0.5", "0", "0.5"},
                                                    {"0.5", "0", "0.5", "0"},
                                                    {"0", "0.5", "0", "0"},
                                                    {"0.5", "0", "1", "0"}})});
        fx.problems.push_back({"T'", fixture_matrix({{"0", "0.5", "0", "0.5"},
                                                     {"0.5", "0", "0.5", "0"},
                                                     {"0", "0.5", "0", "1"},
                                                     {"0.5", "0", "0", "0"}})});
        fx.columns = detail::fair_bets_columns({{"5/16", "3/16", "1/16", "7/16"},
                                                {"-3/16", "-5/16", "-7/16", "-1/16"},
                                                {"1/8", "-1/8", "-3/8", "3/8"},
                                                {"3/16", "5/16", "7/16", "1/16"},
                                                {"-5/16", "-3/16", "-1/16", "-7/16"},
                                                {"-1/8", "1/8", "3/8", "-3/8"}},
                                               2);
        break;
    case 8:
        fx.table = "Table 6";
        fx.problems.push_back({"T", fixture_matrix({{"0", "1", "0", "0.5"},
                                                    {"0", "0", "0.5", "1"},
                                                    {"1", "0.5", "0", "0"},
                                                    {"0.5", "0", "1", "0"}})});
        fx.problems.push_back({"T'", fixture_matrix({{"0", "1", "0", "0.5"},
                                                     {"0", "0", "0.5", "1"},
                                                     {"1", "0.5", "0", "1"},
                                                     {"0.5", "0", "0", "0"}})});
        fx.columns = detail::fair_bets_columns({{"1/4", "1/4", "1/4", "1/4"},
                                                {"-1/4", "-1/4", "-1/4", "-1/4"},
                                                {"0", "0", "0", "0"},
                                                {"5/32", "7/32", "19/32", "1/32"},
                                                {"-7/32", "-5/32", "-1/32", "-19/32"},
                                                {"-1/16", "1/16", "9/16", "-9/16"}},
                                               2);
        break;
    default: throw Error(ErrorCode::UnknownExample, "examples are numbered 1..8, got " + std::to_string(id));
    }
    return fx;
}

/// One recomputed value compared with what the example states.
struct ReproCheck
{
    std::string name;
    std::string expected;
    std::string actual;
    bool        pass    = false;
    bool        skipped = false;
};

struct ReproResult
{
    int                       id = 0;
    std::vector< ReproCheck > checks;

    [[nodiscard]] bool passed() const
    {
        for (const auto& c : checks)
            if (!c.pass && !c.skipped)
                return false;
        return true;
    }
    [[nodiscard]] std::size_t count(bool pass) const
    {
        std::size_t k = 0;
        for (const auto& c : checks)
            if (!c.skipped && c.pass == pass)
                ++k;
        return k;
    }

    [[nodiscard]] std::string text() const
    {
        std::string out;
        for (const auto& c : checks)
        {
            out += "Example " + std::to_string(id) + ": " + c.name + " expected " + c.expected + " got " + c.actual;
            out += c.skipped ? "  SKIPPED (reducible; extension out of scope)\n" : c.pass ? "  PASS\n" : "  FAIL\n";
        }
        out += "Example " + std::to_string(id) + ": " + std::to_string(count(true)) + " passed, " +
               std::to_string(count(false)) + " failed" + (passed() ? "  PASS\n" : "  FAIL\n");
        return out;
    }
};

namespace detail
{
class Recorder
{
public:
    explicit Recorder(ReproResult& r) : r_(r) {}

    void exact(std::string name, const Rational& expected, const Rational& actual)
    {
        r_.checks.push_back({std::move(name), to_string(expected), to_string(actual), expected == actual, false});
    }
    void decimal(std::string name, const std::string& printed, const Rational& actual)
    {
        const auto shown = to_decimal(actual, 4);
        r_.checks.push_back({std::move(name), printed, shown, shown == printed, false});
    }
    void within(std::string name, const Rational& expected, const Rational& actual, const Rational& tol)
    {
        r_.checks.push_back({std::move(name), to_decimal(expected, 4), to_decimal(actual, 6), abs(expected - actual) <= tol, false});
    }
    void truth(std::string name, bool ok)
    {
        r_.checks.push_back({std::move(name), "true", ok ? "true" : "false", ok, false});
    }
    void skipped(std::string name, std::string expected, std::string actual)
    {
        r_.checks.push_back({std::move(name), std::move(expected), std::move(actual), false, true});
    }

private:
    ReproResult& r_;
};

inline void table_columns(const ExampleFixture& fx, Recorder& rec)
{
    for (const auto& col : fx.columns)
    {
        const auto& p = fx.problems.at(col.problem).problem;
        MethodSpec  spec{col.method, col.epsilon ? EpsilonChoice::of(*col.epsilon) : EpsilonChoice::reasonable()};
        Vector      values = rate(p, spec).ratings;
        // The least-squares column of Table 1 is printed as the grs limit, mn q.
        if (fx.id == 1 && col.method == Method::LeastSquares)
        {
            const auto d = derive(p);
            values       = Rational(d.max_matches * Integer(p.size())) * values;
        }
        for (std::size_t i = 0; i < col.printed.size(); ++i)
        {
            const auto name = fx.table + " " + col.name + " " + p.labels()[i];
            if (col.decimal)
                rec.decimal(name, col.printed[i], values[i]);
            else
                rec.exact(name, rational(col.printed[i]), values[i]);
        }
    }
}

inline Rational poly(const Rational& x, std::initializer_list< int > coeffs)
{
    Rational acc = 0, power = 1;
    for (int c : coeffs)
    {
        acc += c * power;
        power *= x;
    }
    return acc;
}
} // namespace detail

/// Recomputes every value a worked example states and compares it with the printed value:
/// exactly for rationals, at 4 decimals for decimal tables.
inline ReproResult reproduce(int id)
{
    const ExampleFixture fx = example_fixture(id);
    ReproResult          result;
    result.id = id;
    detail::Recorder rec(result);
    detail::table_columns(fx, rec);

    switch (id)
    {
    case 1: {
        const auto& p = fx.problem("T");
        const auto  d = derive(p);
        rec.truth("printed results matrix A", d.results == Matrix{{0, 0, 0, 0, 1},
                                                                   {0, 0, 0, 0, 0},
                                                                   {0, 0, 0, 1, -1},
                                                                   {0, 0, -1, 0, 1},
                                                                   {-1, 0, 1, -1, 0}});
        rec.truth("printed matches matrix M", d.matches == Matrix{{0, 0, 0, 0, 1},
                                                                   {0, 0, 1, 0, 0},
                                                                   {0, 1, 0, 1, 1},
                                                                   {0, 0, 1, 0, 1},
                                                                   {1, 0, 1, 1, 0}});
        rec.exact("reasonable epsilon", Rational(1, 3), reasonable_epsilon(p).value());
        try
        {
            const auto fb = fair_bets(p);
            rec.truth("fair bets rejects the reducible problem", false);
        }
        catch (const Error& e)
        {
            rec.skipped("fair bets", "ReducibleProblem", std::string(to_string(e.code())));
        }
        break;
    }
    case 2: {
        const auto& p = fx.problem("T");
        const auto& q = fx.problem("T'");
        const auto& r = fx.problem("T''");
        rec.exact("m", 2, Rational(derive(p).max_matches));
        rec.exact("m'", 1, Rational(derive(q).max_matches));
        rec.exact("m''", 3, Rational(derive(r).max_matches));
        for (const Rational& eps : {Rational(1, 4), Rational(1), Rational(2)})
        {
            const auto  e   = to_string(eps);
            const auto  x   = generalized_row_sum(p, Epsilon(eps));
            const auto  xp  = generalized_row_sum(q, Epsilon(eps));
            const auto  xpp = generalized_row_sum(r, Epsilon(eps));
            const auto  f1  = -detail::poly(eps, {1, 14, 56, 64}) / detail::poly(eps, {1, 12, 44, 48});
            const auto  f3  = -detail::poly(eps, {0, 2, 44, 240}) / detail::poly(eps, {1, 22, 154, 340});
            rec.exact("x1(" + e + ")", f1, x[0]);
            rec.exact("x2(" + e + ")", f1, x[1]);
            rec.exact("x1(" + e + ")'", -1, xp[0]);
            rec.exact("x2(" + e + ")'", -1, xp[1]);
            rec.exact("x1(" + e + ")'' - x2(" + e + ")''", f3, xpp[0] - xpp[1]);
        }
        const auto lq = least_squares(p), lqp = least_squares(q), lqpp = least_squares(r);
        rec.exact("q1", Rational(-1, 6), lq[0]);
        rec.exact("q2", Rational(-1, 6), lq[1]);
        rec.exact("q1'", Rational(-1, 4), lqp[0]);
        rec.exact("q2'", Rational(-1, 4), lqp[1]);
        rec.exact("q1'' - q2''", Rational(-1, 17), lqpp[0] - lqpp[1]);
        break;
    }
    case 4: {
        const auto& p = fx.problem("T");
        rec.exact("reasonable epsilon", Rational(1, 3), reasonable_epsilon(p).value());
        const auto x = generalized_row_sum(p, Epsilon(Rational(1, 3)));
        const char* const exact[] = {"2", "2", "-4"};
        for (std::size_t i = 0; i < 3; ++i)
            rec.exact("x(1/3) " + p.labels()[i], rational(exact[i]), x[i]);
        const auto        x2 = generalized_row_sum(fx.problem("2T"), Epsilon(Rational(1, 3)));
        const char* const printed[] = {"4.5352", "3.9437", "-8.4789"};
        for (std::size_t i = 0; i < 3; ++i)
            rec.within("x(1/3)(2A,2M) " + p.labels()[i], rational(printed[i]), x2[i], Rational(1, 10000));
        break;
    }
    case 5:
    case 6:
        rec.truth("M = M'", derive(fx.problem("T")).matches == derive(fx.problem("T'")).matches);
        break;
    case 7: {
        const auto& p = fx.problem("T");
        const auto& q = fx.problem("T'");
        for (const Rational& eps : {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2)})
        {
            const auto     e     = to_string(eps);
            const Rational value = eps / (1 + 2 * eps);
            const auto     x     = generalized_row_sum(p, Epsilon(eps));
            const auto     xp    = generalized_row_sum(q, Epsilon(eps));
            rec.exact("x1(" + e + ")", value, x[0]);
            rec.exact("x2(" + e + ")'", value, xp[1]);
            rec.exact("x1(" + e + ")'", -value, xp[0]);
            rec.exact("x2(" + e + ")", -value, x[1]);
        }
        const auto lq = least_squares(p), lqp = least_squares(q);
        rec.exact("q1", Rational(1, 8), lq[0]);
        rec.exact("q2'", Rational(1, 8), lqp[1]);
        rec.exact("q1'", Rational(-1, 8), lqp[0]);
        rec.exact("q2", Rational(-1, 8), lq[1]);
        rec.truth("sigma = (X1 X2)(X3 X4) maps T onto T'",
                  permute(p, Permutation({1, 0, 3, 2})).tournament() == q.tournament());
        break;
    }
    case 8: rec.truth("both problems are round-robin", is_round_robin(fx.problem("T")) && is_round_robin(fx.problem("T'"))); break;
    default: break;
    }
    return result;
}

} // namespace tourney

#endif // TOURNEY_EXAMPLES_HPP
