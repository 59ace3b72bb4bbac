#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgkkp/blowup_geometry.hpp"
#include "support.hpp"

using namespace lgkkp;

namespace {

SpectrumH spec_of(std::initializer_list<long> l)
{
    QVector v;
    for (long x : l)
        v.push_back(Rational(x));
    return make_spectrum(v);
}

// Hessian of N/D at a critical point with value c = N/D: (Hess N - c Hess D) / D.
QMatrix critical_hessian_oracle(const ChartPotential& ch, const QVector& pt)
{
    const std::size_t k = pt.size();
    const Rational D = ch.denominator.evaluate(pt);
    const Rational c = ch.numerator.evaluate(pt) / D;
    QMatrix H(k, k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
            const Rational hn = poly_partial(poly_partial(ch.numerator, a), b).evaluate(pt);
            const Rational hd = poly_partial(poly_partial(ch.denominator, a), b).evaluate(pt);
            H(a, b) = (hn - c * hd) / D;
        }
    return H;
}

}  // namespace

TEST_CASE("graph membership")
{
    const SpectrumH s = spec_of({1, 2, -3});
    const BiFormPair F = build_forms(s);
    const BiPoint generic({1, 1, 1}, {1, 2, 1});  // f = 2, g = 4
    CHECK(graph_membership(F, {generic, {2, 4}}));
    CHECK(graph_membership(F, {generic, {1, 2}}));
    CHECK_FALSE(graph_membership(F, {generic, {1, 1}}));
    CHECK_FALSE(graph_membership(F, {generic, {0, 0}}));
    const BiPoint in_I = BiPoint::coordinate(2, 0, 1);
    CHECK(graph_membership(F, {in_I, {7, 3}}));
    CHECK(graph_membership(F, {in_I, {0, 1}}));
}

TEST_CASE("graph is single-valued off I")
{
    const SpectrumH s = auto_spectrum(3);
    const BiFormPair F = build_forms(s);
    for (const auto& r : sample_and_rank(s, Locus::Generic, 1, 20)) {
        const auto v = evaluate_RH(F, r.point);
        REQUIRE(v);
        CHECK(graph_membership(F, {r.point, *v}));
        CHECK_FALSE(graph_membership(F, {r.point, {v->s, -v->t}}));
    }
}

TEST_CASE("chart coordinates round trip and represent f/g")
{
    const SpectrumH s = auto_spectrum(3);
    const BiFormPair F = build_forms(s);
    for (const auto& r : sample_and_rank(s, Locus::Generic, 4, 20)) {
        for (std::size_t i = 0; i <= 3; ++i) {
            if (r.point.x()[i] == 0 || r.point.y()[i] == 0)
                continue;
            const ChartPotential ch = chart_potential(F, i, i);
            const QVector a = to_chart(ch, r.point);
            CHECK(a.size() == 6);
            CHECK(from_chart(ch, a) == r.point);
            const auto v = evaluate_RH(F, r.point);
            REQUIRE(v);
            CHECK(ch.numerator.evaluate(a) * v->s == ch.denominator.evaluate(a) * v->t);
        }
    }
    const ChartPotential ch = chart_potential(F, 0, 0);
    CHECK_THROWS(to_chart(ch, BiPoint::coordinate(3, 1, 1)));
}

TEST_CASE("n = 1 Hessian at the origin")
{
    for (long a : {1L, 3L, 7L}) {
        const SpectrumH s = spec_of({a, -a});
        const ChartPotential ch = chart_potential(build_forms(s), 0, 0);
        const HessianReport h = hessian_nondegenerate_at(ch, {0, 0});
        CHECK(h.critical());
        const Rational d = s.lambda[1] - s.lambda[0];
        CHECK(h.hessian == QMatrix{{0, d}, {d, 0}});
        CHECK(h.determinant == -d * d);
        CHECK(h.nondegenerate);
    }
}

TEST_CASE("Hessians at the critical points match the quotient-rule oracle")
{
    std::mt19937_64 rng(10);
    for (int n = 1; n <= 4; ++n) {
        const SpectrumH s = random_spectrum(rng, n);
        const BiFormPair F = build_forms(s);
        for (const auto& c : critical_locus_RH(s)) {
            const ChartPotential ch = chart_potential(F, c.index, c.index);
            const QVector pt = to_chart(ch, c.point);
            const HessianReport h = hessian_nondegenerate_at(ch, pt);
            CHECK(h.critical());
            CHECK(h.hessian == critical_hessian_oracle(ch, pt));
            CHECK(h.determinant == lgkkp::testing::leibniz_det(h.hessian));
            CHECK(h.nondegenerate);
        }
    }
}

TEST_CASE("non-critical points have nonzero gradient")
{
    const SpectrumH s = auto_spectrum(2);
    const ChartPotential ch = chart_potential(build_forms(s), 0, 0);
    CHECK_FALSE(hessian_nondegenerate_at(ch, {1, 0, 2, 0}).critical());
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 20; ++rep) {
        QVector pt(4);
        for (auto& v : pt)
            v = random_rational(rng, 3, 2);
        if (is_zero_vector(pt) || ch.denominator.evaluate(pt) == 0)
            continue;
        CHECK_FALSE(hessian_nondegenerate_at(ch, pt).critical());
    }
}

TEST_CASE("chart boundary")
{
    const ChartPotential ch = chart_potential(build_forms(spec_of({1, -1})), 0, 0);
    CHECK_THROWS_AS(hessian_nondegenerate_at(ch, {1, -1}), ChartBoundary);
}

TEST_CASE("chart Jacobian at a point of I")
{
    const SpectrumH s = spec_of({1, 2, -3});
    const ChartPotential ch = chart_potential(build_forms(s), 0, 1);
    const QVector origin = to_chart(ch, BiPoint::coordinate(2, 0, 1));
    CHECK(is_zero_vector(origin));
    const QMatrix J = chart_jacobian(ch, origin);
    CHECK(rank(J) == 2);
    // only the x_2 and y_1 directions carry linear terms: (lambda_2, lambda_1) and (1, 1)
    std::vector<QVector> nonzero_cols;
    for (std::size_t c = 0; c < J.cols(); ++c)
        if (!is_zero_vector(J.column_vector(c)))
            nonzero_cols.push_back(J.column_vector(c));
    REQUIRE(nonzero_cols.size() == 2);
    std::set<QVector> cols(nonzero_cols.begin(), nonzero_cols.end());
    CHECK(cols == std::set<QVector>{QVector{1, 1}, QVector{2, 1}});
}

TEST_CASE("no critical points over E")
{
    for (int n = 2; n <= 4; ++n) {
        const TamenessCertificate t = verify_no_critical_on_E(auto_spectrum(n), 0, 50);
        CHECK(t.certified);
        CHECK(t.samples.size() == 50);
        for (const auto& s : t.samples)
            CHECK(s.rank == 2);
    }
    const TamenessCertificate a = verify_no_critical_on_E(auto_spectrum(3), 9, 5);
    const TamenessCertificate b = verify_no_critical_on_E(auto_spectrum(3), 9, 5);
    for (std::size_t i = 0; i < a.samples.size(); ++i)
        CHECK(a.samples[i].base == b.samples[i].base);

    // n = 1: I is two points and both are certified
    const TamenessCertificate one = verify_no_critical_on_E(spec_of({1, -1}), 0, 50);
    CHECK(one.certified);
    CHECK(one.samples.size() == 2);
}

TEST_CASE("divisor classes")
{
    const DivisorReport r = divisor_classes(2);
    CHECK(r.anticanonical == DivisorClass{3, 3, -1});
    CHECK(r.strict_flag == DivisorClass{1, 1, -1});
    CHECK(r.exceptional == DivisorClass{0, 0, 1});
    CHECK(r.boundary == DivisorClass{1, 1, 0});
    CHECK(r.pole == r.strict_flag);
    CHECK(r.pole_multiplicity == 1);
    CHECK(r.flag_multiplicity_along_center == 1);
    CHECK_FALSE(r.boundary_is_anticanonical);
    CHECK(r.finding.rfind("OPEN-QUESTION", 0) == 0);
    CHECK(r.boundary.to_string() == "(1,1;0)");

    for (int n = 1; n <= 5; ++n) {
        const DivisorReport d = divisor_classes(n);
        CHECK(d.anticanonical == DivisorClass{n + 1, n + 1, -1});
        CHECK(d.strict_flag + d.exceptional == d.boundary);
        CHECK_FALSE(d.boundary_is_anticanonical);
    }
}
