#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "lgkkp/rational.hpp"

namespace lgkkp {

/// Dense row-major matrix over Q.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static QMatrix identity(std::size_t n);
    static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);
    static QMatrix diagonal(const QVector& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Rational> row(std::size_t r) const;
    QVector row_vector(std::size_t r) const;
    QVector column_vector(std::size_t c) const;

    QMatrix transpose() const;
    bool is_zero() const;
    Rational trace() const;

    /// M v for a column vector v.
    QVector apply(const QVector& v) const;

    QMatrix power(unsigned k) const;

    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator*(const Rational& s) const;

    friend bool operator==(const QMatrix& a, const QMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form; `pivots[i]` is the pivot column of row i.
/// Zero rows are kept at the bottom of `reduced`.
struct RowEchelon {
    QMatrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

RowEchelon rref(QMatrix m);

std::size_t rank(const QMatrix& m);

Rational determinant(const QMatrix& m);

/// Rows of `a` followed by rows of `b`; column counts must agree.
QMatrix vstack(const QMatrix& a, const QMatrix& b);

/// Coefficients c_0..c_n of det(t I - M), lowest degree first
/// (Faddeev-LeVerrier, exact).
QVector characteristic_polynomial(const QMatrix& m);

/// Random square matrix with entries in [-bound, bound] that is invertible.
QMatrix random_invertible(std::mt19937_64& rng, std::size_t n, long bound);

}  // namespace lgkkp
