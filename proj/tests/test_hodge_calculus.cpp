#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lgkkp/hodge_calculus.hpp"
#include "lgkkp/orbit_model.hpp"

using namespace lgkkp;

namespace {

EPoly uv_poly(std::initializer_list<std::int64_t> coeffs)
{
    EPoly e;
    int k = 0;
    for (auto c : coeffs)
        e.add_term(k, k, c), ++k;
    return e;
}

CohomologyProfile dims(std::initializer_list<std::pair<const int, std::int64_t>> d)
{
    CohomologyProfile p;
    p.dims = d;
    return p;
}

LESSlot known(std::int64_t d)
{
    return {"k" + std::to_string(d), d, std::nullopt};
}

LESSlot unknown(const std::string& name)
{
    return {name, 0, name};
}

}  // namespace

TEST_CASE("E-polynomial arithmetic")
{
    const EPoly a = EPoly::projective(2);
    CHECK(a == uv_poly({1, 1, 1}));
    CHECK(a.to_string() == "1 + uv + u^2v^2");
    CHECK((a * EPoly::projective(1)).divide_exact(EPoly::projective(1)) == a);
    CHECK_THROWS_AS(a.divide_exact(EPoly::projective(1)), std::logic_error);
    CHECK((a - a).is_zero());
    CHECK(a.evaluate(2, 3) == 1 + 6 + 36);
    EPoly b = EPoly::monomial(1, 0);
    CHECK_FALSE(b.is_hodge_tate());
    CHECK_FALSE(b.is_symmetric());
    b.add_term(0, 1, 1);
    CHECK(b.is_symmetric());
}

TEST_CASE("named spaces")
{
    CHECK(epoly_of(Space::exceptional(2)) == uv_poly({1, 2, 2, 1}));
    CHECK(epoly_of(Space::flag1n(2)) == uv_poly({1, 2, 2, 1}));
    CHECK(epoly_of(Space::orbit(1)) == uv_poly({0, 1, 1}));
    CHECK(epoly_of(Space::center_i(2)) == uv_poly({1, 1, 1}));
    CHECK(epoly_of(Space::product(Space::pn(1), Space::pn(1))) == uv_poly({1, 2, 1}));
    CHECK_THROWS(epoly_of(Space::center_i(1)));
}

TEST_CASE("E(1,1) is the Euler characteristic")
{
    for (int n = 1; n <= 8; ++n) {
        CHECK(epoly_of(Space::pn(n)).evaluate(1, 1) == n + 1);
        CHECK(epoly_of(Space::product(Space::pn(n), Space::pn(n))).evaluate(1, 1) == (n + 1) * (n + 1));
        CHECK(epoly_of(Space::flag1n(n)).evaluate(1, 1) == n * (n + 1));
        // O_n retracts onto P^n
        CHECK(epoly_of(Space::orbit(n)).evaluate(1, 1) == n + 1);
    }
}

TEST_CASE("exact division and blow-up consistency")
{
    const EPoly one_plus_uv = EPoly::projective(1);
    const EPoly uv = EPoly::monomial(1, 1);
    for (int n = 2; n <= 8; ++n) {
        const EPoly I = epoly_of(Space::center_i(n));
        CHECK(I * one_plus_uv == epoly_of(Space::flag1n(n)));
        const EPoly P = epoly_of(Space::product(Space::pn(n), Space::pn(n)));
        CHECK(epoly_of(Space::ztotal(n)) == P + I * uv);
        // Z = O_n + (F(1,n) minus I) + E, with E a P^1-bundle over I
        CHECK(epoly_of(Space::ztotal(n)) ==
              epoly_of(Space::orbit(n)) + (epoly_of(Space::flag1n(n)) - I) + I * one_plus_uv);
        CHECK(I * one_plus_uv == epoly_of(Space::exceptional(n)));
    }
}

TEST_CASE("every named space is Hodge-Tate and symmetric")
{
    for (int n = 1; n <= 8; ++n) {
        std::vector<Space> spaces = {Space::pn(n), Space::product(Space::pn(n), Space::pn(n)), Space::flag1n(n),
                                     Space::exceptional(n), Space::orbit(n)};
        if (n >= 2) {
            spaces.push_back(Space::center_i(n));
            spaces.push_back(Space::ztotal(n));
        }
        for (const auto& s : spaces) {
            const EPoly e = epoly_of(s);
            CHECK(hodge_tate_check(e));
            CHECK(e.is_symmetric());
        }
    }
}

TEST_CASE("torus-fixed points of the center")
{
    for (int n = 1; n <= 6; ++n) {
        // oracle: coordinate pairs ([e_i],[e_j]) on which both forms vanish
        const BiFormPair F = build_forms(auto_spectrum(n));
        std::int64_t count = 0;
        for (std::size_t i = 0; i <= static_cast<std::size_t>(n); ++i)
            for (std::size_t j = 0; j <= static_cast<std::size_t>(n); ++j)
                if (in_indeterminacy_locus(F, BiPoint::coordinate(n, i, j)))
                    ++count;
        CHECK(torus_fixed_points_on_center(n) == count);
        CHECK(count == n * (n + 1));
    }
    for (int n = 2; n <= 6; ++n) {
        const EPoly L = center_i_lefschetz(n);
        CHECK(L.evaluate(1, 1) == n * (n + 1));
        CHECK(L.is_hodge_tate());
        CHECK(L.is_symmetric());
    }
    CHECK(center_i_lefschetz(2) == uv_poly({1, 4, 1}));
}

TEST_CASE("E-polynomial discrepancies are reported")
{
    const auto d1 = epoly_discrepancies(1);
    CHECK(d1.size() == 1);
    for (int n = 2; n <= 5; ++n) {
        const auto d = epoly_discrepancies(n);
        CHECK(d.size() == 2);
        for (const auto& x : d)
            CHECK(x.stated != x.derived);
    }
}

TEST_CASE("betti profile")
{
    const CohomologyProfile p = betti_profile(epoly_of(Space::flag1n(2)));
    CHECK(p == dims({{0, 1}, {2, 2}, {4, 2}, {6, 1}}));
    CHECK(p.total() == 6);
}

TEST_CASE("solve_les: forced dimensions")
{
    LESProblem p;
    p.slots = {known(2), unknown("x"), known(3)};
    const LESResult r = solve_les(p);
    REQUIRE(r.unique());
    CHECK(r.solution().unknowns.at("x") == 5);

    LESProblem q;
    q.slots = {unknown("A"), known(5), known(5)};
    const LESResult s = solve_les(q);
    REQUIRE(s.unique());
    CHECK(s.solution().unknowns.at("A") == 0);
}

TEST_CASE("solve_les: ambiguity is named")
{
    LESProblem p;
    p.slots = {unknown("a"), known(3), unknown("b")};
    const LESResult r = solve_les(p);
    CHECK(r.solutions.size() == 4);
    CHECK_FALSE(r.unique());
    CHECK(std::find(r.ambiguous.begin(), r.ambiguous.end(), "a") != r.ambiguous.end());
    for (const auto& s : r.solutions)
        CHECK(s.unknowns.at("a") + s.unknowns.at("b") == 3);
}

TEST_CASE("solve_les: inconsistent chain")
{
    LESProblem p;
    p.slots = {known(1), known(0), known(1)};
    try {
        solve_les(p);
        FAIL("accepted an inconsistent chain");
    } catch (const Unsatisfiable& e) {
        CHECK(e.witness_slot() == 1);
    }
    LESProblem q;
    q.slots = {known(1), known(3), known(1)};
    q.known_ranks[1] = 1;
    CHECK_THROWS_AS(solve_les(q), Unsatisfiable);
}

TEST_CASE("solve_les: fully known chains are consistency checks")
{
    LESProblem p;
    p.slots = {known(1), known(3), known(2)};
    const LESResult r = solve_les(p);
    REQUIRE(r.unique());
    CHECK(r.solution().ranks == std::vector<std::int64_t>{1, 2, 0});
}

TEST_CASE("Gysin purity")
{
    for (int n = 1; n <= 8; ++n) {
        const GysinCheck g = gysin_purity(n);
        CHECK(g.pure);
        CHECK(g.result.unique());
        for (const auto& [k, d] : g.kernel_dims)
            CHECK(d == 0);
    }
}

TEST_CASE("Mayer-Vietoris fiber")
{
    const FiberProfile f1 = mayer_vietoris_fiber(1);
    CHECK(f1.derived == dims({{0, 1}, {1, 1}}));
    const FiberProfile f2 = mayer_vietoris_fiber(2);
    CHECK(f2.derived == dims({{0, 1}, {2, 1}, {3, 2}}));
    CHECK(f2.stated.dim(3) == 3);
    CHECK(f2.differs);
    CHECK(f2.discrepancy.has_value());
    for (int n = 1; n <= 6; ++n) {
        const FiberProfile f = mayer_vietoris_fiber(n);
        CHECK(f.derived.dim(2 * n - 1) == n);
        CHECK(f.derived.dim(2 * n) == 0);
        for (int i = 0; i <= 2 * n - 2; i += 2)
            CHECK(f.derived.dim(i) == 1);
    }
}

TEST_CASE("relative profile")
{
    CHECK(relative_profile(1).profile == dims({{2, 2}}));
    CHECK(relative_profile(3).profile == dims({{6, 4}}));
    for (int n = 1; n <= 6; ++n) {
        const RelativeProfile r = relative_profile(n);
        CHECK(r.unique);
        CHECK(r.matches_middle_dimension_count);
        CHECK_FALSE(r.discrepancy.has_value());
    }
    const RelativeProfile s = relative_profile(2, FiberInput::Stated);
    CHECK(s.profile == dims({{4, 4}}));
    CHECK_FALSE(s.matches_middle_dimension_count);
    CHECK(s.discrepancy.has_value());
}

TEST_CASE("hodge report")
{
    for (int n = 1; n <= 4; ++n) {
        const HodgeReport r = hodge_report(n);
        CHECK(r.all_hodge_tate());
        CHECK(r.gysin.pure);
        CHECK(r.relative.profile.dim(2 * n) == n + 1);
        CHECK_FALSE(r.discrepancies.empty());
    }
}
