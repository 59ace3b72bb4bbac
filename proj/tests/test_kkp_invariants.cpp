#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgkkp/kkp_invariants.hpp"
#include "lgkkp/weight_filtration.hpp"
#include "support.hpp"

using namespace lgkkp;
using lgkkp::testing::jordan_nilpotent;

namespace {

RelativeData single_degree(int D, int degree, const QMatrix& N)
{
    RelativeData r;
    r.D = D;
    r.profile.dims[degree] = static_cast<std::int64_t>(N.rows());
    r.profile.operators[degree] = N;
    return r;
}

RelativeData lg_data(int n)
{
    const auto v = static_cast<std::size_t>(n + 1);
    return single_degree(2 * n, 2 * n, QMatrix(v, v));
}

}  // namespace

TEST_CASE("relative data validation")
{
    RelativeData r;
    r.D = 2;
    r.profile.dims[2] = 2;
    CHECK_THROWS_AS(r.validate(), std::invalid_argument);
    r.profile.operators[2] = QMatrix(3, 3);
    CHECK_THROWS(r.validate());
    // N_1^2 != 0
    CHECK_THROWS_AS(single_degree(2, 1, jordan_nilpotent({3})).validate(), std::invalid_argument);
    CHECK_NOTHROW(lg_data(2).validate());
}

TEST_CASE("Fano-type check")
{
    for (int n = 1; n <= 4; ++n) {
        const FanoReport f = fano_type_check(lg_data(n));
        CHECK(f.verdict == FanoVerdict::StrictFailure);
        CHECK(f.strict_failures == std::vector<int>{0});
        CHECK(f.finding.rfind("OPEN-QUESTION", 0) == 0);
        CHECK(to_string(f.verdict) == "strict-failure");
    }
    const FanoReport pass = fano_type_check(single_degree(2, 2, jordan_nilpotent({3})));
    CHECK(pass.verdict == FanoVerdict::Pass);
    CHECK(pass.finding.empty());

    RelativeData empty;
    empty.D = 2;
    const FanoReport vac = fano_type_check(empty);
    CHECK(vac.verdict == FanoVerdict::Vacuous);
    for (const auto& e : vac.entries)
        CHECK(e.vacuous);
}

TEST_CASE("h-diamond of the LG data")
{
    const KKPDiamond h2 = compute_hpq(lg_data(2));
    CHECK(h2.entries.size() == 1);
    CHECK(h2.at(2, 2) == 3);
    for (int n = 1; n <= 6; ++n) {
        const KKPDiamond h = compute_hpq(lg_data(n));
        CHECK(h.entries.size() == 1);
        CHECK(h.at(n, n) == n + 1);
    }
    RelativeData zero;
    zero.D = 4;
    CHECK(compute_hpq(zero).entries.empty());
}

TEST_CASE("N = 0 in one even degree puts all mass on that anti-diagonal")
{
    for (int D = 1; D <= 4; ++D)
        for (int d = 0; d <= 2 * D; d += 2)
            for (std::size_t v = 1; v <= 3; ++v) {
                const KKPDiamond h = compute_hpq(single_degree(D, d, QMatrix(v, v)));
                std::int64_t total = 0;
                for (const auto& [k, c] : h.entries) {
                    CHECK(k.first + k.second == d);
                    total += c;
                }
                CHECK(total == static_cast<std::int64_t>(v));
            }
}

TEST_CASE("h-diamond reads the weight filtration of N")
{
    // D = 2, degree 2, one block of size 3: weights 0, 2, 4 at center 2
    const KKPDiamond h = compute_hpq(single_degree(2, 2, jordan_nilpotent({3})));
    CHECK(h.at(0, 2) == 1);
    CHECK(h.at(1, 1) == 1);
    CHECK(h.at(2, 0) == 1);
    CHECK(h.entries.size() == 3);
    // missing operator
    RelativeData bad;
    bad.D = 2;
    bad.profile.dims[2] = 1;
    CHECK_THROWS(compute_hpq(bad));
}

TEST_CASE("i-diamond from Morse data")
{
    MorseData m;
    for (int k = 0; k < 3; ++k)
        m.points.push_back({Rational(k), 1, true});
    const KKPDiamond i = compute_ipq_morse(m, 4);
    CHECK(i.at(2, 2) == 3);
    CHECK(i.entries.size() == 1);
    CHECK(i.provenance.find("[[1,1],[0,1]]") != std::string::npos);

    MorseData two{{{Rational(1), 1, true}, {Rational(-1), 1, true}}};
    CHECK(compute_ipq_morse(two, 2).at(1, 1) == 2);
    CHECK(compute_ipq_morse(MorseData{}, 4).entries.empty());

    m.points.push_back({Rational(5), 1, false});
    CHECK_THROWS_AS(compute_ipq_morse(m, 4), Unsupported);
    CHECK_THROWS_AS(compute_ipq_morse(two, 3), std::invalid_argument);
}

TEST_CASE("f-diamond")
{
    const KKPDiamond h = compute_hpq(lg_data(5));
    const KKPDiamond f = compute_fpq(h);
    CHECK(f.kind == DiamondKind::F);
    CHECK(f.at(5, 5) == 6);
    CHECK(f.provenance == "by equality theorem, not direct sheaf computation");
    CHECK(compute_fpq(KKPDiamond{}).entries.empty());
}

TEST_CASE("diamond bounds")
{
    KKPDiamond d{DiamondKind::H, 2, {}, ""};
    CHECK_THROWS_AS(d.set(3, 0, 1), std::out_of_range);
    d.set(1, 1, 4);
    d.set(1, 1, 0);
    CHECK(d.entries.empty());
}

TEST_CASE("assemble and check")
{
    struct Case {
        QVector lambda;
        int center;
    };
    const std::vector<Case> cases = {
        {{1, 2, -3}, 3},
        {{5, -5}, 2},
        {{1, 2, 3, -6}, 4},
    };
    for (const auto& c : cases) {
        const KKPReport r = assemble_and_check(make_spectrum(c.lambda));
        CHECK(r.passed);
        CHECK(r.equality);
        CHECK(r.sum_identity);
        CHECK(r.center_ok);
        CHECK(r.center_value == c.center);
        CHECK(r.first_counterexample.empty());
        CHECK(r.fano.verdict == FanoVerdict::StrictFailure);
        CHECK(r.morse.total() == c.center);
    }
}

TEST_CASE("h-diamond is invariant under rescaling lambda")
{
    std::mt19937_64 rng(19);
    for (int n = 1; n <= 3; ++n) {
        const SpectrumH s = random_spectrum(rng, n);
        QVector scaled = s.lambda;
        const Rational a = random_nonzero_rational(rng, 5, 3);
        for (auto& l : scaled)
            l *= a;
        const KKPReport r0 = assemble_and_check(s);
        const KKPReport r1 = assemble_and_check(make_spectrum(scaled));
        CHECK(r0.h.same_entries(r1.h));
    }
}

TEST_CASE("supplied monodromy at infinity changes the verdict")
{
    AssembleOptions o;
    o.monodromy_override[2] = QMatrix{{0, 1}, {0, 0}};
    const KKPReport r = assemble_and_check(make_spectrum({5, -5}), o);
    CHECK_FALSE(r.passed);
    CHECK_FALSE(r.equality);
    CHECK(r.first_counterexample.find("diamonds differ") == 0);
    // h now reads odd weights only, so h^{1,1} drops out
    CHECK(r.h.at(1, 1) == 0);
}

TEST_CASE("rendered diamond")
{
    const KKPReport r = assemble_and_check(make_spectrum({1, 2, -3}));
    const std::string expected = "    0\n"
                                 "   0 0\n"
                                 "    :\n"
                                 "0 0 3 0 0\n"
                                 "    :\n"
                                 "   0 0\n"
                                 "    0\n";
    CHECK(render_diamond(r.h) == expected);

    const KKPReport one = assemble_and_check(make_spectrum({5, -5}));
    CHECK(render_diamond(one.h) == "  0\n 0 0\n0 2 0\n 0 0\n  0\n");
}
