#pragma once

// Z = Bl_I(P^n x P^n), held implicitly as the closure of the graph of the
// pencil [f : g] inside P^n x P^n x P^1. All checks are chart-local.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgkkp/orbit_model.hpp"

namespace lgkkp {

struct GraphPoint {
    BiPoint base;
    P1Point fiber;
};

/// t g(base) = s f(base). Off I this pins [t : s] = [f : g]; over I the
/// whole P^1 is accepted since E = I x P^1.
bool graph_membership(const BiFormPair& forms, const GraphPoint& p);

/// f/g restricted to the affine chart U_ij = {x_i != 0, y_j != 0}, with
/// x_i = y_j = 1. Chart variables: the remaining x's in index order, then
/// the remaining y's.
struct ChartPotential {
    int n = 0;
    std::size_t x_chart = 0;
    std::size_t y_chart = 0;
    MultiPoly numerator;
    MultiPoly denominator;
};

ChartPotential chart_potential(const BiFormPair& forms, std::size_t i, std::size_t j);

/// Affine coordinates of p in the chart. Throws std::domain_error if p is
/// not in U_ij.
QVector to_chart(const ChartPotential& chart, const BiPoint& p);
BiPoint from_chart(const ChartPotential& chart, const QVector& affine);

class ChartBoundary : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct HessianReport {
    QVector gradient;
    QMatrix hessian;
    Rational determinant;
    bool nondegenerate = false;

    bool critical() const { return is_zero_vector(gradient); }
};

/// Exact gradient and Hessian of numerator/denominator at `point` by the
/// quotient rule. Throws ChartBoundary where the denominator vanishes.
HessianReport hessian_nondegenerate_at(const ChartPotential& chart, const QVector& point);

/// Jacobian of (numerator, denominator) at an affine point: 2 x 2n.
QMatrix chart_jacobian(const ChartPotential& chart, const QVector& point);

struct ExceptionalSample {
    BiPoint base;
    std::size_t x_chart = 0;
    std::size_t y_chart = 0;
    std::size_t rank = 0;
};

struct TamenessCertificate {
    int n = 0;
    bool certified = false;
    std::vector<ExceptionalSample> samples;
};

/// At seeded points of I, in a chart containing the point, checks that the
/// local differentials of f and g are independent. Then f and g extend to
/// local coordinates, and on the blow-up chart w is the coordinate f/g (or
/// g/f), so w is submersive along the exceptional fiber.
TamenessCertificate verify_no_critical_on_E(const SpectrumH& spec, std::uint64_t seed, std::size_t count);

/// Class a h1 + b h2 + e E in Pic(Z).
struct DivisorClass {
    long a = 0;
    long b = 0;
    long e = 0;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
    DivisorClass operator+(const DivisorClass& o) const { return {a + o.a, b + o.b, e + o.e}; }
    std::string to_string() const;
};

struct DivisorReport {
    int n = 0;
    int center_codimension = 2;
    DivisorClass anticanonical;   // -K_Z
    DivisorClass strict_flag;     // strict transform of F(1,n)
    DivisorClass exceptional;     // E
    DivisorClass boundary;        // D_Z = strict_flag + E
    DivisorClass pole;            // pole divisor of w
    int pole_multiplicity = 0;    // order of g along F(1,n)
    int flag_multiplicity_along_center = 0;  // order of g along I
    bool boundary_is_anticanonical = false;
    std::string finding;
};

/// Divisor-class bookkeeping on Z. Multiplicities are measured at sample
/// points; -K_Z follows from K_Z = pi^* K + (c - 1) E for a smooth center of
/// codimension c. Reports, and never repairs, a mismatch between D_Z and -K_Z.
DivisorReport divisor_classes(int n);

}  // namespace lgkkp
