#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lgkkp/discrepancy.hpp"
#include "lgkkp/qmatrix.hpp"

namespace lgkkp {

// ---------------------------------------------------------------------------
// E-polynomials

/// Orders (p, q) by total degree, then by p.
struct HodgeIndexLess {
    bool operator()(const std::pair<int, int>& a, const std::pair<int, int>& b) const
    {
        const int da = a.first + a.second;
        const int db = b.first + b.second;
        return da != db ? da < db : a.first < b.first;
    }
};

/// sum e^{p,q} u^p v^q with integer coefficients.
class EPoly {
public:
    using Key = std::pair<int, int>;
    using TermMap = std::map<Key, std::int64_t, HodgeIndexLess>;

    EPoly() = default;
    static EPoly monomial(int p, int q, std::int64_t c = 1);
    static EPoly constant(std::int64_t c) { return monomial(0, 0, c); }
    /// 1 + uv + ... + (uv)^m, the E-polynomial of P^m.
    static EPoly projective(int m);

    const TermMap& terms() const { return terms_; }
    std::int64_t coefficient(int p, int q) const;
    bool is_zero() const { return terms_.empty(); }

    void add_term(int p, int q, std::int64_t c);

    std::int64_t evaluate(std::int64_t u, std::int64_t v) const;
    bool is_hodge_tate() const;
    bool is_symmetric() const;

    EPoly operator+(const EPoly& o) const;
    EPoly operator-(const EPoly& o) const;
    EPoly operator*(const EPoly& o) const;

    /// Exact quotient; throws std::logic_error on a nonzero remainder.
    EPoly divide_exact(const EPoly& divisor) const;

    friend bool operator==(const EPoly&, const EPoly&) = default;

    std::string to_string() const;

private:
    TermMap terms_;
};

/// The named spaces of the construction.
struct Space {
    enum class Kind { Pn, Product, Flag1n, CenterI, Exceptional, Orbit, Ztotal };

    Kind kind = Kind::Pn;
    int n = 0;
    std::shared_ptr<const Space> left;
    std::shared_ptr<const Space> right;

    static Space pn(int m) { return {Kind::Pn, m, nullptr, nullptr}; }
    static Space product(const Space& a, const Space& b);
    static Space flag1n(int n) { return {Kind::Flag1n, n, nullptr, nullptr}; }
    static Space center_i(int n) { return {Kind::CenterI, n, nullptr, nullptr}; }
    static Space exceptional(int n) { return {Kind::Exceptional, n, nullptr, nullptr}; }
    static Space orbit(int n) { return {Kind::Orbit, n, nullptr, nullptr}; }
    static Space ztotal(int n) { return {Kind::Ztotal, n, nullptr, nullptr}; }

    std::string name() const;
};

/// E-polynomials by the multiplicative / complement / blow-up rules:
///   Pn(m)        = sum_{k<=m} (uv)^k
///   Flag1n(n)    = Pn(n-1) Pn(n)
///   Exceptional  = Flag1n
///   CenterI(n)   = Flag1n / (1 + uv)
///   Orbit(n)     = Pn(n)^2 - Flag1n
///   Ztotal(n)    = Pn(n)^2 + CenterI (Pn(1) - 1)     [blow-up rule, imported]
/// The Exceptional and CenterI rules follow the quoted P^1-bundle argument;
/// see center_i_lefschetz() and epoly_discrepancies() for the cross-check.
EPoly epoly_of(const Space& space);

bool hodge_tate_check(const EPoly& e);

/// Number of torus-fixed points ([e_i], [e_j]) of P^n x P^n lying on
/// I = {f = g = 0}; equals the Euler characteristic of I.
std::int64_t torus_fixed_points_on_center(int n);

/// E-polynomial of I from the Lefschetz hyperplane theorem (I is an ample
/// divisor in F(1,n)), Poincare duality, and chi(I) from the fixed points.
EPoly center_i_lefschetz(int n);

/// Stated-versus-derived comparison of the center and exceptional divisor.
std::vector<Discrepancy> epoly_discrepancies(int n);

// ---------------------------------------------------------------------------
// Cohomology profiles and long exact sequences

struct CohomologyProfile {
    std::map<int, std::int64_t> dims;
    std::map<int, QMatrix> operators;

    std::int64_t dim(int degree) const;
    std::int64_t total() const;
    /// Drops zero entries so equal profiles compare equal.
    CohomologyProfile normalized() const;
    /// Throws std::invalid_argument if an operator does not match its degree.
    void validate() const;

    friend bool operator==(const CohomologyProfile& a, const CohomologyProfile& b)
    {
        return a.normalized().dims == b.normalized().dims;
    }
};

/// Betti numbers of a smooth projective variety from its E-polynomial.
CohomologyProfile betti_profile(const EPoly& e);

struct LESSlot {
    std::string label;
    std::int64_t known = 0;
    /// When set, the slot dimension is known + value of this unknown.
    std::optional<std::string> unknown;
};

/// 0 -> slot_0 -> slot_1 -> ... -> slot_{L-1} -> 0, exact everywhere.
/// known_ranks[k] pins the rank of the map slot_k -> slot_{k+1}.
struct LESProblem {
    std::vector<LESSlot> slots;
    std::map<std::size_t, std::int64_t> known_ranks;
};

struct LESSolution {
    std::map<std::string, std::int64_t> unknowns;
    std::vector<std::int64_t> ranks;  // ranks[k]: slot_k -> slot_{k+1}
};

struct LESResult {
    std::vector<LESSolution> solutions;
    std::vector<std::string> ambiguous;  // unknowns / ranks that vary
    bool unique() const { return solutions.size() == 1; }
    const LESSolution& solution() const;
};

class Unsatisfiable : public std::runtime_error {
public:
    Unsatisfiable(const std::string& what, std::size_t witness)
        : std::runtime_error(what), witness_(witness)
    {
    }
    /// Smallest k such that slots 0..k admit no consistent ranks.
    std::size_t witness_slot() const { return witness_; }

private:
    std::size_t witness_;
};

/// All nonnegative-integer assignments consistent with exactness:
/// dim slot_k = rank_{k-1} + rank_k. Ranks are propagated forward and only
/// enumerated after a slot of unknown dimension. Throws Unsatisfiable, or
/// std::invalid_argument if an enumerated rank has no finite bound.
LESResult solve_les(const LESProblem& problem);

struct GysinCheck {
    LESResult result;
    std::map<int, std::int64_t> kernel_dims;  // k+1 -> dim ker delta_{k+1}
    std::map<int, std::int64_t> delta_ranks;  // k -> rank delta_k
    bool pure = false;
};

/// Gysin sequence of (X, divisor, U = X \ divisor):
///   ... -> H^{k-2}(D) -> H^k(X) -> H^k(U) -> H^{k-1}(D) -> H^{k+1}(X) -> ...
LESProblem gysin_chain(const CohomologyProfile& X, const CohomologyProfile& divisor,
                       const CohomologyProfile& U, int top_degree);

/// Gysin chain for (P^n x P^n, F(1,n), O_n) with H(O_n) = H(P^n); pure means
/// every ker delta_{k+1} vanishes.
GysinCheck gysin_purity(int n);

struct FiberProfile {
    int n = 0;
    CohomologyProfile derived;
    CohomologyProfile stated;
    bool differs = false;
    std::map<int, std::int64_t> restriction_ranks;  // H^k(P^n) -> H^k(Y_b)
    LESResult solve;
    std::optional<Discrepancy> discrepancy;
};

/// P^n = U cup (n+1 balls), U cap balls = n+1 copies of S^{2n-1}, U the
/// complement of the points. H^{2n}(U) = 0 because U is non-compact.
FiberProfile mayer_vietoris_fiber(int n);

enum class FiberInput { Derived, Stated };

struct RelativeProfile {
    int n = 0;
    FiberInput input = FiberInput::Derived;
    CohomologyProfile profile;
    bool unique = false;
    bool matches_middle_dimension_count = false;  // n+1 in degree 2n only
    std::optional<Discrepancy> discrepancy;
};

/// Long exact sequence of the pair (Y, Y_b) with H(Y) = H(P^n) and the
/// chosen fiber profile; restriction ranks come from the Mayer-Vietoris run.
RelativeProfile relative_profile(int n, FiberInput input = FiberInput::Derived);

struct HodgeReport {
    int n = 0;
    std::vector<std::pair<Space, EPoly>> epolys;
    EPoly center_i_derived;
    EPoly exceptional_derived;
    EPoly ztotal_derived;
    FiberProfile fiber;
    RelativeProfile relative;
    RelativeProfile relative_from_stated;
    GysinCheck gysin;
    std::vector<Discrepancy> discrepancies;

    bool all_hodge_tate() const;
};

HodgeReport hodge_report(int n);

}  // namespace lgkkp
