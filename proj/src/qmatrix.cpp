#include "lgkkp/qmatrix.hpp"

#include <stdexcept>
#include <utility>

namespace lgkkp {

namespace {

std::string dims(std::size_t r, std::size_t c)
{
    return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0))
{
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("QMatrix: ragged initializer");
        for (const auto& x : r)
            data_.push_back(x);
    }
}

QMatrix QMatrix::identity(std::size_t n)
{
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols)
{
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("QMatrix::from_rows: row " + std::to_string(i) + " has length " +
                                        std::to_string(rows[i].size()) + ", expected " +
                                        std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

QMatrix QMatrix::diagonal(const QVector& d)
{
    QMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

std::span<const Rational> QMatrix::row(std::size_t r) const
{
    return {data_.data() + r * cols_, cols_};
}

QVector QMatrix::row_vector(std::size_t r) const
{
    auto s = row(r);
    return {s.begin(), s.end()};
}

QVector QMatrix::column_vector(std::size_t c) const
{
    QVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v[i] = (*this)(i, c);
    return v;
}

QMatrix QMatrix::transpose() const
{
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool QMatrix::is_zero() const
{
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

Rational QMatrix::trace() const
{
    if (!is_square())
        throw std::invalid_argument("trace of non-square " + dims(rows_, cols_) + " matrix");
    Rational t = 0;
    for (std::size_t i = 0; i < rows_; ++i)
        t += (*this)(i, i);
    return t;
}

QVector QMatrix::apply(const QVector& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("apply: " + dims(rows_, cols_) + " matrix on vector of length " +
                                    std::to_string(v.size()));
    QVector out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0)
                out[i] += (*this)(i, j) * v[j];
    return out;
}

QMatrix QMatrix::power(unsigned k) const
{
    if (!is_square())
        throw std::invalid_argument("power of non-square " + dims(rows_, cols_) + " matrix");
    QMatrix result = identity(rows_);
    for (unsigned i = 0; i < k; ++i)
        result = result * (*this);
    return result;
}

QMatrix QMatrix::operator+(const QMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("add: " + dims(rows_, cols_) + " vs " + dims(o.rows_, o.cols_));
    QMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] += o.data_[i];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("sub: " + dims(rows_, cols_) + " vs " + dims(o.rows_, o.cols_));
    QMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] -= o.data_[i];
    return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("mul: " + dims(rows_, cols_) + " times " + dims(o.rows_, o.cols_));
    QMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r(i, j) += a * o(k, j);
        }
    return r;
}

QMatrix QMatrix::operator*(const Rational& s) const
{
    QMatrix r = *this;
    for (auto& x : r.data_)
        x *= s;
    return r;
}

std::string QMatrix::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j)
                out += ", ";
            out += lgkkp::to_string((*this)(i, j));
        }
        out += "]";
    }
    return out + "]";
}

RowEchelon rref(QMatrix m)
{
    RowEchelon out;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < m.rows() && m(sel, col) == 0)
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(sel, j), m(pivot_row, j));

        const Rational inv = 1 / Rational(m(pivot_row, col));
        for (std::size_t j = col; j < m.cols(); ++j)
            m(pivot_row, j) *= inv;

        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row || m(i, col) == 0)
                continue;
            const Rational factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m(i, j) -= factor * m(pivot_row, j);
        }
        out.pivots.push_back(col);
        ++pivot_row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const QMatrix& m)
{
    return rref(m).rank();
}

Rational determinant(const QMatrix& m)
{
    if (!m.is_square())
        throw std::invalid_argument("determinant of non-square " + dims(m.rows(), m.cols()) + " matrix");
    QMatrix a = m;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && a(sel, col) == 0)
            ++sel;
        if (sel == n)
            return 0;
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(sel, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col) == 0)
                continue;
            const Rational factor = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j)
                a(i, j) -= factor * a(col, j);
        }
    }
    return det;
}

QMatrix vstack(const QMatrix& a, const QMatrix& b)
{
    if (a.rows() == 0)
        return b;
    if (b.rows() == 0)
        return a;
    if (a.cols() != b.cols())
        throw std::invalid_argument("vstack: " + dims(a.rows(), a.cols()) + " over " +
                                    dims(b.rows(), b.cols()));
    QMatrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            out(a.rows() + i, j) = b(i, j);
    return out;
}

QVector characteristic_polynomial(const QMatrix& m)
{
    if (!m.is_square())
        throw std::invalid_argument("characteristic polynomial of non-square matrix");
    const std::size_t n = m.rows();
    QVector c(n + 1, Rational(0));
    c[n] = 1;
    QMatrix acc(n, n);
    const QMatrix id = QMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        acc = m * acc + id * c[n - k + 1];
        c[n - k] = -(m * acc).trace() / Rational(static_cast<long>(k));
    }
    return c;
}

QMatrix random_invertible(std::mt19937_64& rng, std::size_t n, long bound)
{
    for (;;) {
        QMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = random_rational(rng, bound);
        if (rank(m) == n)
            return m;
    }
}

}  // namespace lgkkp
