#include "lgkkp/weight_filtration.hpp"

#include <algorithm>

namespace lgkkp {

NilpotentOp::NilpotentOp(QMatrix N) : N_(std::move(N))
{
    if (!N_.is_square())
        throw std::invalid_argument("nilpotent operator must be square");
    QMatrix power = N_;
    std::size_t k = 0;
    while (!power.is_zero()) {
        ++k;
        if (k > N_.rows())
            throw std::invalid_argument("operator is not nilpotent");
        power = power * N_;
    }
    index_ = k;
}

NilpotentOp log_unipotent(const QMatrix& T)
{
    if (!T.is_square())
        throw std::invalid_argument("log_unipotent: matrix is not square");
    const std::size_t d = T.rows();
    const QMatrix M = T - QMatrix::identity(d);
    // Nilpotent on Q^d forces M^d = 0.
    const QMatrix top = M.power(static_cast<unsigned>(d));
    if (!top.is_zero())
        throw NotUnipotent("T - Id is not nilpotent: (T - Id)^" + std::to_string(d) + " != 0",
                           static_cast<unsigned>(d));

    QMatrix N(d, d);
    QMatrix power = M;
    for (std::size_t j = 1; j < std::max<std::size_t>(d, 1) && !power.is_zero(); ++j) {
        const Rational coeff = Rational(j % 2 == 1 ? 1 : -1) / Rational(static_cast<long>(j));
        N = N + power * coeff;
        power = power * M;
    }
    if (!(exp_nilpotent(N) == T))
        throw std::logic_error("log_unipotent: exp(log T) != T");
    return NilpotentOp(std::move(N));
}

QMatrix exp_nilpotent(const QMatrix& N)
{
    const std::size_t d = N.rows();
    QMatrix sum = QMatrix::identity(d);
    QMatrix term = QMatrix::identity(d);
    for (std::size_t j = 1; j <= d; ++j) {
        term = term * N * (Rational(1) / Rational(static_cast<long>(j)));
        if (term.is_zero())
            break;
        sum = sum + term;
    }
    return sum;
}

Subspace WeightFiltration::at(int i) const
{
    if (i < 0)
        return Subspace::zero(ambient());
    if (i >= static_cast<int>(steps.size()))
        return Subspace::full(ambient());
    return steps[static_cast<std::size_t>(i)];
}

std::vector<std::size_t> WeightFiltration::graded_dims() const
{
    std::vector<std::size_t> g(steps.size());
    for (std::size_t i = 0; i < steps.size(); ++i)
        g[i] = steps[i].dim() - (i == 0 ? 0 : steps[i - 1].dim());
    return g;
}

namespace {

// Fills W_i for i in [lo, hi] for the operator N induces on A / B, where
// B <= A <= V are N-stable.
void build_relative(const QMatrix& N, const Subspace& A, const Subspace& B, int center, int lo, int hi,
                    std::vector<Subspace>& out)
{
    auto set = [&](int i, const Subspace& s) {
        if (i >= lo && i <= hi)
            out[static_cast<std::size_t>(i - lo)] = s;
    };

    // index of the induced operator: least k with N^{k+1} A <= B
    std::size_t k = 0;
    QMatrix power = N;
    while (!B.contains(image(power, A))) {
        ++k;
        power = power * N;
    }

    if (k == 0) {
        for (int i = lo; i <= hi; ++i)
            set(i, i < center ? B : A);
        return;
    }

    const QMatrix Nk = N.power(static_cast<unsigned>(k));
    const Subspace K = subspace_combine(CombineMode::Preimage, B, A, Nk);  // {v in A : N^k v in B}
    const Subspace Im = sum(B, image(Nk, A));
    const int ik = static_cast<int>(k);

    build_relative(N, K, Im, center, lo, hi, out);
    for (int i = lo; i <= hi; ++i) {
        if (i <= center - ik - 1)
            set(i, B);
        else if (i == center - ik)
            set(i, Im);
        else if (i == center + ik - 1)
            set(i, K);
        else if (i >= center + ik)
            set(i, A);
    }
}

}  // namespace

WeightFiltration monodromy_weight_filtration(const NilpotentOp& N, int center)
{
    if (center < 0)
        throw std::invalid_argument("weight filtration center must be >= 0");
    if (N.index() > static_cast<std::size_t>(center))
        throw HypothesisViolated("N^" + std::to_string(center + 1) + " != 0 (nilpotency index " +
                                 std::to_string(N.index()) + " exceeds center " + std::to_string(center) + ")");
    const std::size_t d = N.dim();
    WeightFiltration W;
    W.center = center;
    W.steps.assign(static_cast<std::size_t>(2 * center + 1), Subspace::zero(d));
    build_relative(N.matrix(), Subspace::full(d), Subspace::zero(d), center, 0, 2 * center, W.steps);
    return W;
}

AxiomCertificate verify_weight_axioms(const NilpotentOp& N, int center, const WeightFiltration& W)
{
    AxiomCertificate cert;
    auto fail = [&](int axiom, int index, std::string detail) {
        cert.passed = false;
        cert.violations.push_back({axiom, index, std::move(detail)});
    };
    const std::size_t d = N.dim();
    const int top = 2 * center;

    if (W.steps.size() != static_cast<std::size_t>(top + 1) || W.ambient() != d) {
        fail(0, 0, "filtration must have indices 0.." + std::to_string(top) + " in the ambient space of N");
        return cert;
    }
    for (int i = 1; i <= top; ++i)
        if (!W.at(i).contains(W.at(i - 1)))
            fail(0, i, "W_" + std::to_string(i - 1) + " is not contained in W_" + std::to_string(i));
    if (W.at(top).dim() != d)
        fail(0, top, "W_" + std::to_string(top) + " is not the whole space");

    const QMatrix& M = N.matrix();
    for (int i = 0; i <= top; ++i)
        if (!W.at(i - 2).contains(image(M, W.at(i))))
            fail(1, i, "N(W_" + std::to_string(i) + ") is not contained in W_" + std::to_string(i - 2));

    for (int l = 0; l <= center; ++l) {
        const Subspace hi = W.at(center + l);
        const Subspace hi_prev = W.at(center + l - 1);
        const Subspace lo = W.at(center - l);
        const Subspace lo_prev = W.at(center - l - 1);
        if (!hi.contains(hi_prev) || !lo.contains(lo_prev))
            continue;  // already reported under axiom 0
        const std::size_t dim_hi = hi.dim() - hi_prev.dim();
        const std::size_t dim_lo = lo.dim() - lo_prev.dim();
        const std::string tag = "N^" + std::to_string(l) + ": gr_" + std::to_string(center + l) + " -> gr_" +
                                std::to_string(center - l);
        if (dim_hi != dim_lo) {
            fail(2, l, tag + " between spaces of dimension " + std::to_string(dim_hi) + " and " +
                           std::to_string(dim_lo));
            continue;
        }
        const QMatrix Nl = M.power(static_cast<unsigned>(l));
        if (!lo.contains(image(Nl, hi))) {
            fail(2, l, tag + " does not land in W_" + std::to_string(center - l));
            continue;
        }
        // injective on a graded basis modulo W_{m-l-1}
        const auto graded = complement_basis(hi_prev, hi);
        std::vector<QVector> imgs;
        for (const auto& v : graded)
            imgs.push_back(Nl.apply(v));
        const std::size_t r =
            imgs.empty() ? lo_prev.dim() : rank(vstack(lo_prev.basis(), QMatrix::from_rows(imgs, d)));
        if (r != lo_prev.dim() + graded.size())
            fail(2, l, tag + " is not injective");
    }
    return cert;
}

std::vector<std::size_t> jordan_block_sizes(const NilpotentOp& N)
{
    const std::size_t d = N.dim();
    std::vector<std::size_t> ranks(d + 2, 0);
    QMatrix power = QMatrix::identity(d);
    for (std::size_t j = 0; j <= d + 1; ++j) {
        ranks[j] = rank(power);
        power = power * N.matrix();
    }
    std::vector<std::size_t> sizes;
    for (std::size_t s = d; s >= 1; --s) {
        // blocks of size >= s: rank N^{s-1} - rank N^s
        const std::size_t at_least = ranks[s - 1] - ranks[s];
        const std::size_t at_least_next = ranks[s] - ranks[s + 1];
        for (std::size_t c = 0; c < at_least - at_least_next; ++c)
            sizes.push_back(s);
    }
    return sizes;
}

std::vector<std::size_t> jordan_oracle(const NilpotentOp& N, int center)
{
    std::vector<std::size_t> dims(static_cast<std::size_t>(2 * center + 1), 0);
    for (std::size_t s : jordan_block_sizes(N)) {
        const int top = center + static_cast<int>(s) - 1;
        const int bottom = center - static_cast<int>(s) + 1;
        if (bottom < 0)
            throw HypothesisViolated("Jordan block of size " + std::to_string(s) + " exceeds center " +
                                     std::to_string(center));
        for (int w = bottom; w <= top; w += 2)
            ++dims[static_cast<std::size_t>(w)];
    }
    return dims;
}

}  // namespace lgkkp
