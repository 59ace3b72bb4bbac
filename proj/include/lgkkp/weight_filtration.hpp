#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgkkp/subspace.hpp"

namespace lgkkp {

/// A nilpotent endomorphism with its index k: N^{k+1} = 0 and N^k != 0
/// (k = 0 for N = 0).
class NilpotentOp {
public:
    /// Throws std::invalid_argument if N is not square or not nilpotent.
    explicit NilpotentOp(QMatrix N);

    static NilpotentOp zero(std::size_t dim) { return NilpotentOp(QMatrix(dim, dim)); }

    const QMatrix& matrix() const { return N_; }
    std::size_t dim() const { return N_.rows(); }
    std::size_t index() const { return index_; }

private:
    QMatrix N_;
    std::size_t index_ = 0;
};

class NotUnipotent : public std::domain_error {
public:
    NotUnipotent(const std::string& what, unsigned power) : std::domain_error(what), power_(power) {}
    /// (T - Id)^power is nonzero although nilpotency forces it to vanish.
    unsigned power() const { return power_; }

private:
    unsigned power_;
};

/// N = sum_{j>=1} (-1)^{j+1} (T - Id)^j / j, a finite sum. Verifies
/// exp(N) = T before returning.
NilpotentOp log_unipotent(const QMatrix& T);

/// Finite exponential series of a nilpotent matrix.
QMatrix exp_nilpotent(const QMatrix& N);

class HypothesisViolated : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// W_0 <= W_1 <= ... <= W_{2m} = V.
struct WeightFiltration {
    int center = 0;
    std::vector<Subspace> steps;  // steps[i] = W_i

    /// W_i with W_i = 0 for i < 0 and W_i = V for i > 2m.
    Subspace at(int i) const;
    std::size_t ambient() const { return steps.empty() ? 0 : steps.back().ambient(); }
    /// dim W_i / W_{i-1} for i = 0..2m.
    std::vector<std::size_t> graded_dims() const;
};

/// The monodromy weight filtration W(N, m). Built by the recursion
/// W_{m+k} = V, W_{m+k-1} = ker N^k, W_{m-k} = im N^k, W_{m-k-1} = 0 and
/// the same construction for the map N induces on ker N^k / im N^k. Every
/// subspace stays in the original V; quotients are handled by preimages.
/// Throws HypothesisViolated when N^{m+1} != 0.
WeightFiltration monodromy_weight_filtration(const NilpotentOp& N, int center);

struct AxiomViolation {
    int axiom = 0;  // 0: not a filtration ending at V, 1: N W_i <= W_{i-2}, 2: N^l iso on graded pieces
    int index = 0;  // i for axioms 0/1, l for axiom 2
    std::string detail;
};

struct AxiomCertificate {
    bool passed = true;
    std::vector<AxiomViolation> violations;  // in check order; front() is the first
};

/// Checks both defining axioms of W(N, m) by exact linear algebra on graded
/// bases.
AxiomCertificate verify_weight_axioms(const NilpotentOp& N, int center, const WeightFiltration& W);

/// Jordan block sizes of N from the rank sequence rank N^j, largest first.
std::vector<std::size_t> jordan_block_sizes(const NilpotentOp& N);

/// Graded dimensions of W(N, m) predicted by the Jordan type: a block of size
/// s contributes 1 to weights m+s-1, m+s-3, ..., m-s+1.
std::vector<std::size_t> jordan_oracle(const NilpotentOp& N, int center);

}  // namespace lgkkp
