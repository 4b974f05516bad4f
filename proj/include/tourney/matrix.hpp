#ifndef TOURNEY_MATRIX_HPP
#define TOURNEY_MATRIX_HPP

#include "tourney/error.hpp"
#include "tourney/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace tourney
{

using Vector = std::vector< Rational >;

/// Dense row-major matrix of exact rationals.
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list< std::initializer_list< Rational > > rows)
        : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
    {
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows)
        {
            if (row.size() != cols_)
                throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix zero(std::size_t n) { return Matrix(n, n); }
    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool square() const noexcept { return rows_ == cols_; }

    Rational&       operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    [[nodiscard]] Matrix transposed() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    [[nodiscard]] Vector row_sums() const
    {
        Vector out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out[i] += (*this)(i, j);
        return out;
    }

    [[nodiscard]] Vector col_sums() const
    {
        Vector out(cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out[j] += (*this)(i, j);
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    friend Matrix operator+(Matrix lhs, const Matrix& rhs)
    {
        require_same_shape(lhs, rhs);
        for (std::size_t k = 0; k < lhs.data_.size(); ++k)
            lhs.data_[k] += rhs.data_[k];
        return lhs;
    }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs)
    {
        require_same_shape(lhs, rhs);
        for (std::size_t k = 0; k < lhs.data_.size(); ++k)
            lhs.data_[k] -= rhs.data_[k];
        return lhs;
    }
    friend Matrix operator-(Matrix m)
    {
        for (auto& x : m.data_)
            x = -x;
        return m;
    }
    friend Matrix operator*(const Rational& k, Matrix m)
    {
        for (auto& x : m.data_)
            x *= k;
        return m;
    }
    friend Vector operator*(const Matrix& m, const Vector& v)
    {
        if (v.size() != m.cols_)
            throw Error(ErrorCode::DimensionMismatch, "matrix-vector product");
        Vector out(m.rows_);
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j)
                if (m(i, j) != 0)
                    out[i] += m(i, j) * v[j];
        return out;
    }

private:
    static void require_same_shape(const Matrix& a, const Matrix& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw Error(ErrorCode::DimensionMismatch, "matrix shapes differ");
    }

    std::size_t            rows_ = 0;
    std::size_t            cols_ = 0;
    std::vector< Rational > data_;
};

inline Vector ones(std::size_t n) { return Vector(n, Rational(1)); }

inline Vector operator+(Vector lhs, const Vector& rhs)
{
    if (lhs.size() != rhs.size())
        throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
    for (std::size_t k = 0; k < lhs.size(); ++k)
        lhs[k] += rhs[k];
    return lhs;
}
inline Vector operator-(Vector lhs, const Vector& rhs)
{
    if (lhs.size() != rhs.size())
        throw Error(ErrorCode::DimensionMismatch, "vector lengths differ");
    for (std::size_t k = 0; k < lhs.size(); ++k)
        lhs[k] -= rhs[k];
    return lhs;
}
inline Vector operator-(Vector v)
{
    for (auto& x : v)
        x = -x;
    return v;
}
inline Vector operator*(const Rational& k, Vector v)
{
    for (auto& x : v)
        x *= k;
    return v;
}

inline Rational sum(const Vector& v)
{
    Rational total = 0;
    for (const auto& x : v)
        total += x;
    return total;
}

inline bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

namespace detail
{
// Index of the row in [from, rows) whose entry in column `col` has the largest magnitude,
// or nullopt when the column is zero there.
inline std::optional< std::size_t > pick_pivot(const Matrix& m, std::size_t col, std::size_t from)
{
    std::optional< std::size_t > best;
    Rational                     best_abs = 0;
    for (std::size_t r = from; r < m.rows(); ++r)
    {
        const Rational a = abs(m(r, col));
        if (a > best_abs)
        {
            best_abs = a;
            best     = r;
        }
    }
    return best;
}

inline void swap_rows(Matrix& m, std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(a, j), m(b, j));
}
} // namespace detail

/// Exact solution of a·x = b by Gaussian elimination with partial pivoting.
/// Throws SingularMatrix if some pivot column has no nonzero candidate.
inline Vector solve(Matrix a, Vector b)
{
    const std::size_t n = a.rows();
    if (!a.square() || b.size() != n)
        throw Error(ErrorCode::DimensionMismatch, "solve needs a square system");

    for (std::size_t col = 0; col < n; ++col)
    {
        const auto pivot = detail::pick_pivot(a, col, col);
        if (!pivot)
            throw Error(ErrorCode::SingularMatrix, "zero pivot column " + std::to_string(col));
        detail::swap_rows(a, col, *pivot);
        std::swap(b[col], b[*pivot]);

        const Rational p = a(col, col);
        for (std::size_t r = col + 1; r < n; ++r)
        {
            if (a(r, col) == 0)
                continue;
            const Rational factor = a(r, col) / p;
            for (std::size_t j = col; j < n; ++j)
                a(r, j) -= factor * a(col, j);
            b[r] -= factor * b[col];
        }
    }

    Vector x(n);
    for (std::size_t i = n; i-- > 0;)
    {
        Rational acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j)
            acc -= a(i, j) * x[j];
        x[i] = acc / a(i, i);
    }
    return x;
}

/// Nonzero v with a·v = 0 for a square matrix of rank exactly n − 1. The result is
/// unnormalized: the free coordinate is set to one.
inline Vector nullspace_1d(Matrix a)
{
    const std::size_t n = a.rows();
    if (!a.square())
        throw Error(ErrorCode::DimensionMismatch, "nullspace_1d needs a square matrix");

    // Reduced row echelon form.
    std::vector< std::size_t > pivot_cols;
    std::size_t                row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col)
    {
        const auto pivot = detail::pick_pivot(a, col, row);
        if (!pivot)
            continue;
        detail::swap_rows(a, row, *pivot);
        const Rational p = a(row, col);
        for (std::size_t j = col; j < n; ++j)
            a(row, j) /= p;
        for (std::size_t r = 0; r < n; ++r)
        {
            if (r == row || a(r, col) == 0)
                continue;
            const Rational factor = a(r, col);
            for (std::size_t j = col; j < n; ++j)
                a(r, j) -= factor * a(row, j);
        }
        pivot_cols.push_back(col);
        ++row;
    }

    const std::size_t rank = pivot_cols.size();
    if (rank == n)
        throw Error(ErrorCode::FullRank, "only the zero vector solves the system");
    if (rank + 1 < n)
        throw Error(ErrorCode::RankTooLow, "rank " + std::to_string(rank) + " < n - 1 = " + std::to_string(n - 1));

    std::size_t free_col = n - 1;
    for (std::size_t k = 0; k < rank; ++k)
        if (pivot_cols[k] != k)
        {
            free_col = k;
            break;
        }

    Vector v(n);
    v[free_col] = 1;
    for (std::size_t k = 0; k < rank; ++k)
        v[pivot_cols[k]] = -a(k, free_col);
    return v;
}

} // namespace tourney

#endif // TOURNEY_MATRIX_HPP
