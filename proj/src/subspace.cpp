#include "lgkkp/subspace.hpp"

#include <stdexcept>
#include <string>

namespace lgkkp {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* what)
{
    if (a.ambient() != b.ambient())
        throw std::invalid_argument(std::string(what) + ": ambient dimensions differ (" +
                                    std::to_string(a.ambient()) + " vs " + std::to_string(b.ambient()) + ")");
}

}  // namespace

Subspace Subspace::zero(std::size_t ambient)
{
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = QMatrix(0, ambient);
    return s;
}

Subspace Subspace::full(std::size_t ambient)
{
    Subspace s;
    s.ambient_ = ambient;
    s.basis_ = QMatrix::identity(ambient);
    return s;
}

Subspace Subspace::span(const QMatrix& generators)
{
    RowEchelon e = rref(generators);
    Subspace s;
    s.ambient_ = generators.cols();
    s.basis_ = QMatrix(e.rank(), generators.cols());
    for (std::size_t i = 0; i < e.rank(); ++i)
        for (std::size_t j = 0; j < generators.cols(); ++j)
            s.basis_(i, j) = e.reduced(i, j);
    return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<QVector>& generators)
{
    return span(QMatrix::from_rows(generators, ambient));
}

bool Subspace::contains(const QVector& v) const
{
    if (v.size() != ambient_)
        throw std::invalid_argument("contains: vector of length " + std::to_string(v.size()) +
                                    " in ambient " + std::to_string(ambient_));
    return rank(vstack(basis_, QMatrix::from_rows({v}, ambient_))) == dim();
}

bool Subspace::contains(const Subspace& other) const
{
    require_same_ambient(*this, other, "contains");
    return rank(vstack(basis_, other.basis_)) == dim();
}

RankKernel rank_and_kernel(const QMatrix& m)
{
    const RowEchelon e = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;

    std::vector<QVector> gens;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        QVector v(n, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            v[e.pivots[i]] = -e.reduced(i, free);
        gens.push_back(std::move(v));
    }
    return {e.rank(), Subspace::span(n, gens)};
}

Subspace kernel(const QMatrix& map)
{
    return rank_and_kernel(map).kernel;
}

Subspace annihilator(const Subspace& s)
{
    if (s.dim() == 0)
        return Subspace::full(s.ambient());
    return kernel(s.basis());
}

Subspace sum(const Subspace& a, const Subspace& b)
{
    require_same_ambient(a, b, "sum");
    return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b)
{
    require_same_ambient(a, b, "intersect");
    // ann(A) + ann(B) = ann(A cap B), and ann(ann(S)) = S over any field.
    return annihilator(sum(annihilator(a), annihilator(b)));
}

Subspace preimage(const QMatrix& map, const Subspace& target)
{
    if (map.rows() != target.ambient())
        throw std::invalid_argument("preimage: map has " + std::to_string(map.rows()) +
                                    " rows, target ambient is " + std::to_string(target.ambient()));
    const Subspace ann = annihilator(target);
    if (ann.dim() == 0)
        return Subspace::full(map.cols());
    return kernel(ann.basis() * map);
}

Subspace image(const QMatrix& map, const Subspace& source)
{
    if (map.cols() != source.ambient())
        throw std::invalid_argument("image: map has " + std::to_string(map.cols()) +
                                    " columns, source ambient is " + std::to_string(source.ambient()));
    // rows of (map * B^T)^T = B * map^T are the images of the basis vectors
    return Subspace::span(source.basis() * map.transpose());
}

Subspace subspace_combine(CombineMode mode, const Subspace& a, const Subspace& b,
                          const std::optional<QMatrix>& map)
{
    switch (mode) {
    case CombineMode::Sum:
        return sum(a, b);
    case CombineMode::Intersect:
        return intersect(a, b);
    case CombineMode::Preimage: {
        if (!map)
            throw std::invalid_argument("preimage mode requires a map");
        if (map->cols() != b.ambient())
            throw std::invalid_argument("preimage: map has " + std::to_string(map->cols()) +
                                        " columns, B ambient is " + std::to_string(b.ambient()));
        return intersect(preimage(*map, a), b);
    }
    }
    throw std::logic_error("unknown combine mode");
}

std::vector<QVector> complement_basis(const Subspace& inner, const Subspace& outer)
{
    require_same_ambient(inner, outer, "complement_basis");
    std::vector<QVector> out;
    QMatrix acc = inner.basis();
    std::size_t r = inner.dim();
    for (std::size_t i = 0; i < outer.dim() && r < outer.dim(); ++i) {
        QMatrix trial = vstack(acc, QMatrix::from_rows({outer.basis_vector(i)}, outer.ambient()));
        const std::size_t tr = rank(trial);
        if (tr > r) {
            acc = std::move(trial);
            r = tr;
            out.push_back(outer.basis_vector(i));
        }
    }
    if (r != outer.dim())
        throw std::invalid_argument("complement_basis: inner is not contained in outer");
    return out;
}

}  // namespace lgkkp
