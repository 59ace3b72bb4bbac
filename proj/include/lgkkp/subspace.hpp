#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lgkkp/qmatrix.hpp"

namespace lgkkp {

/// A linear subspace of Q^d. The basis is stored as the nonzero rows of the
/// reduced row echelon form of any spanning set, so two equal subspaces
/// always carry identical basis matrices.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);
    /// Span of the rows of `generators`.
    static Subspace span(const QMatrix& generators);
    static Subspace span(std::size_t ambient, const std::vector<QVector>& generators);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const QMatrix& basis() const { return basis_; }
    QVector basis_vector(std::size_t i) const { return basis_.row_vector(i); }

    bool contains(const QVector& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    QMatrix basis_;
};

struct RankKernel {
    std::size_t rank = 0;
    Subspace kernel;
};

/// Exact rank of M and its right kernel {v : M v = 0}.
RankKernel rank_and_kernel(const QMatrix& m);

enum class CombineMode { Sum, Intersect, Preimage };

/// Sum and Intersect combine A and B in a common ambient space.
/// Preimage returns {v in B : map v in A}; pass B = full space for the plain
/// preimage. Throws std::invalid_argument naming the dimensions on mismatch.
Subspace subspace_combine(CombineMode mode, const Subspace& a, const Subspace& b,
                          const std::optional<QMatrix>& map = std::nullopt);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace preimage(const QMatrix& map, const Subspace& target);
Subspace image(const QMatrix& map, const Subspace& source);
Subspace kernel(const QMatrix& map);

/// {f : f(v) = 0 for all v in S}, identified with Q^d through the dot product.
Subspace annihilator(const Subspace& s);

/// Vectors of `outer` that extend a basis of `inner` to a basis of `outer`.
/// Requires inner to be contained in outer.
std::vector<QVector> complement_basis(const Subspace& inner, const Subspace& outer);

}  // namespace lgkkp
