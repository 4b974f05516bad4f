#ifndef TOURNEY_TESTS_ORACLE_HPP
#define TOURNEY_TESTS_ORACLE_HPP

// Test-only reference computations. They share no code path with the library solvers:
// determinants are expanded over all permutations (Leibniz) and systems are solved by
// Cramer's rule or read off the adjugate. Only suitable for n <= 6.

#include "tourney/matrix.hpp"
#include "tourney/problem.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle
{

using tourney::Matrix;
using tourney::Rational;
using tourney::Vector;
using tourney::operator*;
using tourney::operator+;
using tourney::operator-;

inline Rational det(const Matrix& a)
{
    const std::size_t          n = a.rows();
    std::vector< std::size_t > p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    Rational total = 0;
    do
    {
        // Parity by counting inversions.
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (p[i] > p[j])
                    ++inversions;
        Rational term = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n && term != 0; ++i)
            term *= a(i, p[i]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

inline Vector cramer(const Matrix& a, const Vector& b)
{
    const Rational d = det(a);
    Vector         x(a.rows());
    for (std::size_t k = 0; k < a.cols(); ++k)
    {
        Matrix ak = a;
        for (std::size_t i = 0; i < a.rows(); ++i)
            ak(i, k) = b[i];
        x[k] = det(ak) / d;
    }
    return x;
}

inline Matrix minor_of(const Matrix& a, std::size_t row, std::size_t col)
{
    Matrix m(a.rows() - 1, a.cols() - 1);
    for (std::size_t i = 0, r = 0; i < a.rows(); ++i)
    {
        if (i == row)
            continue;
        for (std::size_t j = 0, c = 0; j < a.cols(); ++j)
            if (j != col)
                m(r, c++) = a(i, j);
        ++r;
    }
    return m;
}

/// A nonzero column of adj(a); spans the kernel when rank(a) = n - 1.
inline Vector adjugate_kernel(const Matrix& a)
{
    const std::size_t n = a.rows();
    for (std::size_t col = 0; col < n; ++col)
    {
        Vector v(n);
        bool   nonzero = false;
        for (std::size_t i = 0; i < n; ++i)
        {
            // adj(a)(i, col) = (-1)^(i+col) det(minor(col, i))
            v[i] = ((i + col) % 2 ? -1 : 1) * det(minor_of(a, col, i));
            nonzero = nonzero || v[i] != 0;
        }
        if (nonzero)
            return v;
    }
    return {};
}

inline Vector normalized(Vector v, const Rational& total)
{
    Rational s = 0;
    for (const auto& x : v)
        s += x;
    for (auto& x : v)
        x = x * total / s;
    return v;
}

inline Vector score(const tourney::RankingProblem& p)
{
    Vector s(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            s[i] += p.t(i, j) - p.t(j, i);
    return s;
}

inline Matrix laplacian(const tourney::RankingProblem& p)
{
    Matrix l(p.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            if (i != j)
            {
                const Rational m = p.t(i, j) + p.t(j, i);
                l(i, j) = -m;
                l(i, i) += m;
            }
    return l;
}

inline Rational max_matches(const tourney::RankingProblem& p)
{
    Rational m = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            m = std::max(m, Rational(p.t(i, j) + p.t(j, i)));
    return m;
}

inline Vector generalized_row_sum(const tourney::RankingProblem& p, const Rational& eps)
{
    const auto n = p.size();
    Matrix     a = Matrix::identity(n) + eps * laplacian(p);
    return cramer(a, Rational(1 + eps * max_matches(p) * Rational(n)) * score(p));
}

/// (L + e e') q = s has the sum-zero least squares solution when the multigraph is connected.
inline Vector least_squares(const tourney::RankingProblem& p)
{
    Matrix a = laplacian(p);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            a(i, j) += 1;
    return cramer(a, score(p));
}

inline Vector fair_bets(const tourney::RankingProblem& p)
{
    Matrix a = p.tournament();
    for (std::size_t j = 0; j < p.size(); ++j)
        for (std::size_t i = 0; i < p.size(); ++i)
            a(j, j) -= p.t(i, j);
    return normalized(adjugate_kernel(a), 1);
}

} // namespace oracle

#endif // TOURNEY_TESTS_ORACLE_HPP
