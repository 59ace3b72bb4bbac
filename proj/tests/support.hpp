#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "lgkkp/qmatrix.hpp"
#include "lgkkp/subspace.hpp"

namespace lgkkp::testing {

/// Inverse by Gauss-Jordan on [M | Id].
inline QMatrix inverse(const QMatrix& M)
{
    const std::size_t n = M.rows();
    QMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = M(r, c);
        aug(r, n + r) = 1;
    }
    const RowEchelon e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
        throw std::invalid_argument("singular matrix");
    QMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = e.reduced(r, n + c);
    return inv;
}

/// Leibniz expansion; independent of row reduction.
inline Rational leibniz_det(const QMatrix& M)
{
    const std::size_t n = M.rows();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j])
                    ++inversions;
        Rational term = inversions % 2 == 0 ? 1 : -1;
        for (std::size_t i = 0; i < n; ++i)
            term *= M(i, perm[i]);
        total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// Rank as the size of the largest nonzero minor.
inline std::size_t minor_rank(const QMatrix& M)
{
    const std::size_t r = M.rows(), c = M.cols();
    for (std::size_t k = std::min(r, c); k >= 1; --k) {
        std::vector<bool> rs(r, false), cs(c, false);
        std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
        do {
            std::fill(cs.begin(), cs.end(), false);
            std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
            do {
                QMatrix sub(k, k);
                std::size_t a = 0;
                for (std::size_t i = 0; i < r; ++i) {
                    if (!rs[i])
                        continue;
                    std::size_t b = 0;
                    for (std::size_t j = 0; j < c; ++j)
                        if (cs[j])
                            sub(a, b++) = M(i, j);
                    ++a;
                }
                if (leibniz_det(sub) != 0)
                    return k;
            } while (std::prev_permutation(cs.begin(), cs.end()));
        } while (std::prev_permutation(rs.begin(), rs.end()));
    }
    return 0;
}

inline QMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound)
{
    QMatrix M(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            M(r, c) = random_rational(rng, bound);
    return M;
}

inline QMatrix jordan_nilpotent(const std::vector<std::size_t>& blocks)
{
    const std::size_t d = std::accumulate(blocks.begin(), blocks.end(), std::size_t{0});
    QMatrix J(d, d);
    std::size_t start = 0;
    for (std::size_t s : blocks) {
        for (std::size_t i = 0; i + 1 < s; ++i)
            J(start + i, start + i + 1) = 1;
        start += s;
    }
    return J;
}

struct NilpotentCase {
    std::vector<std::size_t> blocks;  // descending
    QMatrix P;
    QMatrix N;  // P J P^{-1}
};

/// Random Jordan type of total size in [1, max_dim] conjugated by a random
/// invertible matrix.
inline NilpotentCase random_nilpotent(std::mt19937_64& rng, std::size_t max_dim)
{
    std::uniform_int_distribution<std::size_t> dim_dist(1, max_dim);
    std::size_t left = dim_dist(rng);
    NilpotentCase c;
    while (left > 0) {
        std::uniform_int_distribution<std::size_t> part(1, left);
        const std::size_t s = part(rng);
        c.blocks.push_back(s);
        left -= s;
    }
    std::sort(c.blocks.rbegin(), c.blocks.rend());
    const std::size_t d = std::accumulate(c.blocks.begin(), c.blocks.end(), std::size_t{0});
    c.P = random_invertible(rng, d, 3);
    c.N = c.P * jordan_nilpotent(c.blocks) * inverse(c.P);
    return c;
}

struct LabelledPair {
    QMatrix V;  // k rows
    QMatrix W;  // n+1-k rows
    std::size_t label = 0;
};

/// V, W with dim(V cap W) = label by construction: in a random basis, V is
/// spanned by the first k vectors and W by the first `label` of them plus
/// n+1-k-label vectors outside V. Requires label <= min(k, n+1-k).
inline LabelledPair random_pair_with_label(std::mt19937_64& rng, int n, std::size_t k, std::size_t label)
{
    const auto d = static_cast<std::size_t>(n + 1);
    const std::size_t w = d - k;
    if (label > k || label > w)
        throw std::invalid_argument("label out of range");
    const QMatrix P = random_invertible(rng, d, 3);
    std::vector<QVector> vr, wr;
    for (std::size_t i = 0; i < k; ++i)
        vr.push_back(P.row_vector(i));
    for (std::size_t i = 0; i < label; ++i)
        wr.push_back(P.row_vector(i));
    for (std::size_t i = 0; i < w - label; ++i)
        wr.push_back(P.row_vector(k + i));
    // scramble each basis so the rows are not the construction vectors
    const QMatrix A = random_invertible(rng, k, 2);
    const QMatrix B = random_invertible(rng, w, 2);
    return {A * QMatrix::from_rows(vr, d), B * QMatrix::from_rows(wr, d), label};
}

}  // namespace lgkkp::testing
