#ifndef TOURNEY_METHODS_HPP
#define TOURNEY_METHODS_HPP

#include "tourney/error.hpp"
#include "tourney/matrix.hpp"
#include "tourney/problem.hpp"
#include "tourney/rational.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tourney
{

enum class Method
{
    Score,
    GeneralizedRowSum,
    LeastSquares,
    FairBets,
    DualFairBets,
    CopelandFairBets,
};

inline constexpr Method all_methods[] = {Method::Score,    Method::GeneralizedRowSum, Method::LeastSquares,
                                         Method::FairBets, Method::DualFairBets,      Method::CopelandFairBets};

/// Short CLI identifier: score, grs, ls, fb, dfb, cfb.
constexpr std::string_view to_string(Method m)
{
    switch (m)
    {
    case Method::Score: return "score";
    case Method::GeneralizedRowSum: return "grs";
    case Method::LeastSquares: return "ls";
    case Method::FairBets: return "fb";
    case Method::DualFairBets: return "dfb";
    case Method::CopelandFairBets: return "cfb";
    }
    return "?";
}

inline std::optional< Method > parse_method(std::string_view text)
{
    for (auto m : all_methods)
        if (to_string(m) == text)
            return m;
    return std::nullopt;
}

/// Strictly positive parameter of the generalized row sum.
class Epsilon
{
public:
    explicit Epsilon(Rational value) : value_(std::move(value))
    {
        if (value_ <= 0)
            throw Error(ErrorCode::NonPositiveEpsilon, "epsilon must be positive, got " + to_string(value_));
    }
    [[nodiscard]] const Rational& value() const noexcept { return value_; }

    friend bool operator==(const Epsilon&, const Epsilon&) = default;

private:
    Rational value_;
};

/// Either a fixed epsilon or the reasonable upper bound 1/[m(n-2)] of whichever problem is rated.
/// The two differ under summation: the bound halves when m doubles.
struct EpsilonChoice
{
    std::optional< Epsilon > fixed; // nullopt: reasonable bound

    static EpsilonChoice reasonable() { return {}; }
    static EpsilonChoice of(Rational value) { return {Epsilon(std::move(value))}; }

    [[nodiscard]] std::string describe() const { return fixed ? to_string(fixed->value()) : "reasonable"; }
};

/// A rating method together with its parameter (only used by the generalized row sum).
struct MethodSpec
{
    Method        method = Method::Score;
    EpsilonChoice epsilon;

    [[nodiscard]] std::string describe() const
    {
        std::string out(to_string(method));
        if (method == Method::GeneralizedRowSum)
            out += "(eps=" + epsilon.describe() + ")";
        return out;
    }
};

struct RatingVector
{
    Method method;
    Vector ratings;

    [[nodiscard]] std::size_t size() const noexcept { return ratings.size(); }
    const Rational& operator[](std::size_t i) const { return ratings[i]; }

    friend bool operator==(const RatingVector&, const RatingVector&) = default;
};

/// s = A e.
inline RatingVector score(const RankingProblem& problem)
{
    return {Method::Score, derive(problem).results.row_sums()};
}

/// 1/[m(n-2)]. Undefined for n = 2 and for problems without any comparison.
inline Epsilon reasonable_epsilon(const RankingProblem& problem)
{
    const auto n = problem.size();
    if (n <= 2)
        throw Error(ErrorCode::UndefinedForSmallN, "the reasonable epsilon bound needs at least three objects");
    const Integer m = derive(problem).max_matches;
    if (m == 0)
        throw Error(ErrorCode::NoComparisons, "the problem contains no comparisons");
    return Epsilon(Rational(Integer(1), m * Integer(n - 2)));
}

inline Epsilon resolve(const EpsilonChoice& choice, const RankingProblem& problem)
{
    return choice.fixed ? *choice.fixed : reasonable_epsilon(problem);
}

/// Unique solution of (I + eps L) x = (1 + eps m n) s. I + eps L is positive definite, so the
/// system is always solvable.
inline RatingVector generalized_row_sum(const RankingProblem& problem, const Epsilon& eps)
{
    const auto     d = derive(problem);
    const auto     n = problem.size();
    const Rational e = eps.value();
    const Vector   s = d.results.row_sums();
    const Matrix   system = Matrix::identity(n) + e * d.laplacian;
    const Rational scale  = 1 + e * Rational(d.max_matches) * Rational(n);
    return {Method::GeneralizedRowSum, solve(system, scale * s)};
}

/// L q = s with e'q = 0; unique iff the comparison multigraph is connected.
inline RatingVector least_squares(const RankingProblem& problem)
{
    if (!is_connected(problem))
        throw Error(ErrorCode::DisconnectedProblem, "least squares needs a connected comparison multigraph");

    const auto   d = derive(problem);
    const auto   n = problem.size();
    const Vector s = d.results.row_sums();

    // The last Laplacian row is minus the sum of the others; swap it for the normalization.
    Matrix system = d.laplacian;
    Vector rhs    = s;
    for (std::size_t j = 0; j < n; ++j)
        system(n - 1, j) = 1;
    rhs[n - 1] = 0;

    Vector q = solve(system, rhs);
    if (d.laplacian * q != s || sum(q) != 0)
        throw Error(ErrorCode::SingularMatrix, "least squares residual check failed");
    return {Method::LeastSquares, std::move(q)};
}

/// Positive fixed point of F^-1 T (F = diag of losses) normalized to sum one, i.e. the
/// nullspace of T - F. Unique iff the problem is irreducible.
inline RatingVector fair_bets(const RankingProblem& problem)
{
    if (!is_irreducible(problem))
        throw Error(ErrorCode::ReducibleProblem, "fair bets needs an irreducible tournament");

    const auto   n      = problem.size();
    const Vector losses = problem.tournament().col_sums();
    Matrix       system = problem.tournament();
    for (std::size_t i = 0; i < n; ++i)
        system(i, i) -= losses[i];

    Vector         v     = nullspace_1d(system);
    const Rational total = sum(v);
    for (auto& x : v)
        x /= total;
    return {Method::FairBets, std::move(v)};
}

/// Negated fair-bets vector of the transposed tournament; lower raw values are worse.
inline RatingVector dual_fair_bets(const RankingProblem& problem)
{
    return {Method::DualFairBets, -fair_bets(negate(problem)).ratings};
}

inline RatingVector copeland_fair_bets(const RankingProblem& problem)
{
    return {Method::CopelandFairBets, fair_bets(problem).ratings + dual_fair_bets(problem).ratings};
}

inline RatingVector rate(const RankingProblem& problem, const MethodSpec& spec)
{
    switch (spec.method)
    {
    case Method::Score: return score(problem);
    case Method::GeneralizedRowSum: return generalized_row_sum(problem, resolve(spec.epsilon, problem));
    case Method::LeastSquares: return least_squares(problem);
    case Method::FairBets: return fair_bets(problem);
    case Method::DualFairBets: return dual_fair_bets(problem);
    case Method::CopelandFairBets: return copeland_fair_bets(problem);
    }
    throw Error(ErrorCode::PreconditionUnmet, "unknown method");
}

/// Tie groups of object indices, best first; indices ascend within a tier.
struct WeakOrder
{
    std::vector< std::vector< std::size_t > > tiers;

    friend bool operator==(const WeakOrder&, const WeakOrder&) = default;

    /// e.g. `X1 > X2 = X3 > X4`.
    [[nodiscard]] std::string describe(const std::vector< std::string >& labels) const
    {
        std::string out;
        for (std::size_t t = 0; t < tiers.size(); ++t)
        {
            if (t > 0)
                out += " > ";
            for (std::size_t k = 0; k < tiers[t].size(); ++k)
            {
                if (k > 0)
                    out += " = ";
                out += labels.at(tiers[t][k]);
            }
        }
        return out;
    }
};

inline WeakOrder ranking(const RatingVector& rating)
{
    std::vector< std::size_t > order(rating.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return rating[a] > rating[b]; });

    WeakOrder out;
    for (std::size_t k = 0; k < order.size(); ++k)
    {
        if (k == 0 || rating[order[k]] != rating[order[k - 1]])
            out.tiers.emplace_back();
        out.tiers.back().push_back(order[k]);
    }
    return out;
}

} // namespace tourney

#endif // TOURNEY_METHODS_HPP
