#ifndef TOURNEY_PROBLEM_HPP
#define TOURNEY_PROBLEM_HPP

#include "tourney/error.hpp"
#include "tourney/matrix.hpp"
#include "tourney/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tourney
{

/// A set of named objects and their tournament matrix T, where t_ij is the aggregate score
/// of object i against object j.
///
/// Invariants, checked on construction: n >= 2, t_ii = 0, t_ij >= 0, and every pair sum
/// t_ij + t_ji is an integer (the number of comparisons between i and j).
class RankingProblem
{
public:
    RankingProblem(std::vector< std::string > labels, Matrix tournament)
        : labels_(std::move(labels)), tournament_(std::move(tournament))
    {
        validate();
    }

    [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
    [[nodiscard]] const std::vector< std::string >& labels() const noexcept { return labels_; }
    [[nodiscard]] const Matrix& tournament() const noexcept { return tournament_; }
    [[nodiscard]] const Rational& t(std::size_t i, std::size_t j) const { return tournament_(i, j); }

    friend bool operator==(const RankingProblem&, const RankingProblem&) = default;

private:
    void validate() const
    {
        const std::size_t n = labels_.size();
        if (n < 2)
            throw Error(ErrorCode::FewerThanTwoObjects, "a ranking problem needs at least two objects");
        if (tournament_.rows() != n || tournament_.cols() != n)
            throw Error(ErrorCode::DimensionMismatch,
                        "tournament matrix must be " + std::to_string(n) + "x" + std::to_string(n));
        for (std::size_t i = 0; i < n; ++i)
        {
            if (tournament_(i, i) != 0)
                throw Error(ErrorCode::DiagonalNonZero, "t_ii must be zero for object '" + labels_[i] + "'");
            for (std::size_t j = 0; j < n; ++j)
            {
                if (tournament_(i, j) < 0)
                    throw Error(ErrorCode::NegativeEntry,
                                "t(" + labels_[i] + "," + labels_[j] + ") = " + to_string(tournament_(i, j)));
                if (j > i && !is_integer(tournament_(i, j) + tournament_(j, i)))
                    throw Error(ErrorCode::NonIntegerPairSum,
                                "t(" + labels_[i] + "," + labels_[j] + ") + t(" + labels_[j] + "," + labels_[i] +
                                    ") = " + to_string(tournament_(i, j) + tournament_(j, i)));
            }
        }
    }

    std::vector< std::string > labels_;
    Matrix                     tournament_;
};

/// One scored encounter block: `score` is added to t(winner_label, loser_label).
struct Contribution
{
    std::string from;
    std::string to;
    Rational    score;
};

/// Accumulates contributions into a tournament matrix over `labels` (index order = given order).
inline RankingProblem build_problem(std::vector< std::string > labels, const std::vector< Contribution >& entries)
{
    std::unordered_map< std::string, std::size_t > index;
    for (std::size_t k = 0; k < labels.size(); ++k)
        if (!index.emplace(labels[k], k).second)
            throw Error(ErrorCode::UnknownLabel, "duplicate label '" + labels[k] + "'");

    const std::size_t n = labels.size();
    if (n < 2)
        throw Error(ErrorCode::FewerThanTwoObjects, "a ranking problem needs at least two objects");
    Matrix t(n, n);
    for (const auto& e : entries)
    {
        const auto i = index.find(e.from);
        const auto j = index.find(e.to);
        if (i == index.end())
            throw Error(ErrorCode::UnknownLabel, "unknown object '" + e.from + "'");
        if (j == index.end())
            throw Error(ErrorCode::UnknownLabel, "unknown object '" + e.to + "'");
        t(i->second, j->second) += e.score;
    }
    return RankingProblem(std::move(labels), std::move(t));
}

/// X1, X2, ..., Xn.
inline std::vector< std::string > default_labels(std::size_t n)
{
    std::vector< std::string > out;
    out.reserve(n);
    for (std::size_t k = 1; k <= n; ++k)
        out.push_back("X" + std::to_string(k));
    return out;
}

/// Builds (N, A, M) from results and matches; T = (A + M) / 2.
inline RankingProblem from_results_matches(std::vector< std::string > labels, const Matrix& results, const Matrix& matches)
{
    return RankingProblem(std::move(labels), Rational(1, 2) * (results + matches));
}

/// Quantities that follow from T: A = T - T', M = T + T', the Laplacian of the comparison
/// multigraph, degrees d_i and the maximal number of comparisons m.
struct DerivedStructure
{
    Matrix                 results;
    Matrix                 matches;
    Matrix                 laplacian;
    std::vector< Integer > degrees;
    Integer                max_matches = 0;
};

inline DerivedStructure derive(const RankingProblem& problem)
{
    const std::size_t n  = problem.size();
    const Matrix&     t  = problem.tournament();
    const Matrix      tt = t.transposed();

    DerivedStructure d;
    d.results   = t - tt;
    d.matches   = t + tt;
    d.laplacian = -d.matches;
    d.degrees.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
    {
        for (std::size_t j = 0; j < n; ++j)
        {
            const Integer mij = numerator(d.matches(i, j));
            d.degrees[i] += mij;
            d.max_matches = std::max(d.max_matches, mij);
        }
        d.laplacian(i, i) = Rational(d.degrees[i]);
    }
    return d;
}

/// A = O.
inline bool is_flat(const RankingProblem& problem)
{
    const Matrix& t = problem.tournament();
    for (std::size_t i = 0; i < problem.size(); ++i)
        for (std::size_t j = i + 1; j < problem.size(); ++j)
            if (t(i, j) != t(j, i))
                return false;
    return true;
}

namespace detail
{
template < typename Arc >
bool reaches_all(std::size_t n, std::size_t start, Arc arc)
{
    std::vector< bool >       seen(n, false);
    std::queue< std::size_t > frontier;
    seen[start] = true;
    frontier.push(start);
    std::size_t count = 1;
    while (!frontier.empty())
    {
        const auto u = frontier.front();
        frontier.pop();
        for (std::size_t v = 0; v < n; ++v)
            if (!seen[v] && arc(u, v))
            {
                seen[v] = true;
                ++count;
                frontier.push(v);
            }
    }
    return count == n;
}
} // namespace detail

/// Every pair of objects is joined by a path of edges with m_ij > 0.
inline bool is_connected(const RankingProblem& problem)
{
    const Matrix& t = problem.tournament();
    return detail::reaches_all(problem.size(), 0, [&](std::size_t u, std::size_t v) {
        return t(u, v) + t(v, u) > 0;
    });
}

/// The digraph with an arc i -> j whenever t_ij > 0 is strongly connected.
inline bool is_irreducible(const RankingProblem& problem)
{
    const Matrix& t = problem.tournament();
    const auto    n = problem.size();
    return detail::reaches_all(n, 0, [&](std::size_t u, std::size_t v) { return t(u, v) > 0; }) &&
           detail::reaches_all(n, 0, [&](std::size_t u, std::size_t v) { return t(v, u) > 0; });
}

/// All off-diagonal m_ij equal to a common m >= 1.
inline bool is_round_robin(const RankingProblem& problem)
{
    const Matrix&  t = problem.tournament();
    const Rational m = t(0, 1) + t(1, 0);
    if (m < 1)
        return false;
    for (std::size_t i = 0; i < problem.size(); ++i)
        for (std::size_t j = i + 1; j < problem.size(); ++j)
            if (t(i, j) + t(j, i) != m)
                return false;
    return true;
}

/// (N, A + A', M + M'); both problems must share the same label list.
inline RankingProblem sum_problems(const RankingProblem& p, const RankingProblem& q)
{
    if (p.labels() != q.labels())
        throw Error(ErrorCode::LabelMismatch, "summed problems must have identical object lists");
    return RankingProblem(p.labels(), p.tournament() + q.tournament());
}

/// (N, -A, M), i.e. the transposed tournament.
inline RankingProblem negate(const RankingProblem& problem)
{
    return RankingProblem(problem.labels(), problem.tournament().transposed());
}

/// A bijection on object indices; `image(i)` is sigma(i).
class Permutation
{
public:
    explicit Permutation(std::vector< std::size_t > mapping) : mapping_(std::move(mapping))
    {
        std::vector< bool > hit(mapping_.size(), false);
        for (auto k : mapping_)
        {
            if (k >= mapping_.size() || hit[k])
                throw Error(ErrorCode::DimensionMismatch, "permutation is not a bijection on 0..n-1");
            hit[k] = true;
        }
    }

    static Permutation identity(std::size_t n)
    {
        std::vector< std::size_t > m(n);
        for (std::size_t k = 0; k < n; ++k)
            m[k] = k;
        return Permutation(std::move(m));
    }

    [[nodiscard]] std::size_t size() const noexcept { return mapping_.size(); }
    [[nodiscard]] std::size_t image(std::size_t i) const { return mapping_.at(i); }
    [[nodiscard]] const std::vector< std::size_t >& mapping() const noexcept { return mapping_; }

    [[nodiscard]] Permutation inverse() const
    {
        std::vector< std::size_t > inv(mapping_.size());
        for (std::size_t k = 0; k < mapping_.size(); ++k)
            inv[mapping_[k]] = k;
        return Permutation(std::move(inv));
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector< std::size_t > mapping_;
};

/// t'_{sigma(i) sigma(j)} = t_ij; label sigma(i) of the result is label i of the input.
inline RankingProblem permute(const RankingProblem& problem, const Permutation& sigma)
{
    const std::size_t n = problem.size();
    if (sigma.size() != n)
        throw Error(ErrorCode::DimensionMismatch, "permutation size differs from object count");
    std::vector< std::string > labels(n);
    Matrix                     t(n, n);
    for (std::size_t i = 0; i < n; ++i)
    {
        labels[sigma.image(i)] = problem.labels()[i];
        for (std::size_t j = 0; j < n; ++j)
            t(sigma.image(i), sigma.image(j)) = problem.t(i, j);
    }
    return RankingProblem(std::move(labels), std::move(t));
}

/// Applies sigma to a per-object vector: out[sigma(i)] = v[i].
inline Vector permute(const Vector& v, const Permutation& sigma)
{
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[sigma.image(i)] = v[i];
    return out;
}

} // namespace tourney

#endif // TOURNEY_PROBLEM_HPP
