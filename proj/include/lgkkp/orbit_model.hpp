#pragma once

// The minimal adjoint orbit O_n of SL(n+1), its compactification to
// P^n x P^n, and the pencil [f : g] that extends the height function.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "lgkkp/multipoly.hpp"
#include "lgkkp/qmatrix.hpp"

namespace lgkkp {

/// H = Diag(lambda_1, ..., lambda_{n+1}) regular in the Cartan of sl(n+1).
struct SpectrumH {
    int n = 0;
    QVector lambda;
};

class InvalidSpectrum : public std::invalid_argument {
public:
    InvalidSpectrum(const std::string& what, std::vector<std::size_t> offending)
        : std::invalid_argument(what), offending_(std::move(offending))
    {
    }
    /// Zero-based indices of the entries at fault.
    const std::vector<std::size_t>& offending() const { return offending_; }

private:
    std::vector<std::size_t> offending_;
};

/// Validates and wraps lambda; n = lambda.size() - 1. Throws InvalidSpectrum.
SpectrumH make_spectrum(QVector lambda);
void validate(const SpectrumH& spec);

/// (1, 2, ..., n, -n(n+1)/2): always admissible.
SpectrumH auto_spectrum(int n);

/// Distinct small rationals summing to zero.
SpectrumH random_spectrum(std::mt19937_64& rng, int n);

/// A point ([x], [y]) of P^n x P^n. Stored in canonical form: the first
/// nonzero coordinate of each factor is 1.
class BiPoint {
public:
    BiPoint(QVector x, QVector y);

    static BiPoint coordinate(int n, std::size_t i, std::size_t j);

    const QVector& x() const { return x_; }
    const QVector& y() const { return y_; }
    int n() const { return static_cast<int>(x_.size()) - 1; }

    /// Concatenated (x, y), the argument order of the bihomogeneous forms.
    QVector coords() const;

    friend bool operator==(const BiPoint&, const BiPoint&) = default;

private:
    QVector x_;
    QVector y_;
};

/// A point [t : s] of P^1. Equality is projective.
struct P1Point {
    Rational t;
    Rational s;

    friend bool operator==(const P1Point& a, const P1Point& b) { return a.t * b.s == a.s * b.t; }
};

/// f = sum lambda_i x_i y_i and g = sum x_i y_i as polynomials in the 2n+2
/// variables x_1..x_{n+1}, y_1..y_{n+1} (indices 0..n then n+1..2n+1).
struct BiFormPair {
    int n = 0;
    MultiPoly f;
    MultiPoly g;

    std::size_t x_var(std::size_t i) const { return i; }
    std::size_t y_var(std::size_t i) const { return static_cast<std::size_t>(n) + 1 + i; }
    std::vector<std::string> variable_names() const;
};

BiFormPair build_forms(const SpectrumH& spec);

/// [f(p) : g(p)], or nullopt exactly when both vanish (p in I).
std::optional<P1Point> evaluate_RH(const BiFormPair& forms, const BiPoint& p);

/// The 2 x (2n+2) matrix of partials of (f, g) at p.
QMatrix jacobian_at(const BiFormPair& forms, const BiPoint& p);

bool on_flag(const BiFormPair& forms, const BiPoint& p);
bool in_indeterminacy_locus(const BiFormPair& forms, const BiPoint& p);

/// One component of the locus where the Jacobian has rank <= 1. For a
/// proportionality constant c the component is P(Q^S) x P(Q^S) with
/// S = {i : lambda_i = c}.
struct DegenerateComponent {
    Rational constant;
    std::vector<std::size_t> support;
};

/// Exact case analysis of rank J <= 1. The second row (y, x) never vanishes,
/// so rank <= 1 means row 1 = c * row 2, i.e. (lambda_i - c) x_i = 0 and
/// (lambda_i - c) y_i = 0 for all i. Only c in {lambda_i} leave a nonzero
/// allowed support.
std::vector<DegenerateComponent> rank_degenerate_locus(const SpectrumH& spec);

struct CriticalPoint {
    std::size_t index = 0;
    BiPoint point;
    Rational value;    // f/g at the point
    Rational g_value;  // certifies the point is off F(1,n)
};

/// The n+1 critical points ([e_i], [e_i]) with values lambda_i, obtained from
/// rank_degenerate_locus. Throws std::logic_error if a component is not a
/// single point (cannot happen for a valid spectrum).
std::vector<CriticalPoint> critical_locus_RH(const SpectrumH& spec);

enum class Locus { I, FlagMinusI, Generic };

struct RankSample {
    BiPoint point;
    std::size_t rank = 0;
};

/// Seeded exact samples of a locus together with rank J at each sample.
/// For n = 1 the indeterminacy locus is the two points ([e1],[e2]),
/// ([e2],[e1]); both are returned regardless of `count`.
std::vector<RankSample> sample_and_rank(const SpectrumH& spec, Locus locus, std::uint64_t seed,
                                        std::size_t count);

/// Seeded points of I (n >= 2: random x with distinct nonzero entries, y from
/// the kernel of the two linear equations; n = 1: the exact two points).
std::vector<BiPoint> sample_indeterminacy(const SpectrumH& spec, std::uint64_t seed, std::size_t count);

class NotInOrbit : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct OrbitEmbedding {
    QMatrix X;
    Rational height;    // trace(H X)
    Rational rh_value;  // f/g at the point
};

/// X = (n+1) x y^T / <x, y> - Id on a transversal pair. Throws NotInOrbit
/// when <x, y> = 0.
OrbitEmbedding embed_and_height(const SpectrumH& spec, const BiPoint& p);

/// Trace zero, characteristic polynomial (t - n)(t + 1)^n and
/// (X - n)(X + 1) = 0.
bool in_minimal_orbit(const QMatrix& X);

/// dim(V cap W) for V in Gr(k, n+1) and W in Gr(n+1-k, n+1), given by row
/// bases. 0 is the open orbit, k the closed one. Throws std::invalid_argument
/// on dependent rows or mismatched shapes.
std::size_t classify_diagonal_orbit(const QMatrix& V, const QMatrix& W);

}  // namespace lgkkp
