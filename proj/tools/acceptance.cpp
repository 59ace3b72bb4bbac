// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "lgkkp/blowup_geometry.hpp"
#include "lgkkp/hodge_calculus.hpp"
#include "lgkkp/kkp_invariants.hpp"
#include "lgkkp/orbit_model.hpp"
#include "lgkkp/weight_filtration.hpp"
#include "../tests/support.hpp"

using namespace lgkkp;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Records the first failure only.
void expect(Outcome& o, bool cond, const std::string& what)
{
    if (!cond && o.ok) {
        o.ok = false;
        o.detail = what;
    }
}

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Outcome critical_structure()
{
    Outcome o;
    std::mt19937_64 rng(1);
    std::size_t spectra = 0;
    const auto t0 = Clock::now();
    for (int n = 1; n <= 6; ++n) {
        for (int rep = 0; rep < 20; ++rep, ++spectra) {
            const SpectrumH spec = random_spectrum(rng, n);
            const auto crit = critical_locus_RH(spec);
            expect(o, crit.size() == static_cast<std::size_t>(n + 1), "n=" + std::to_string(n) + ": wrong count");
            std::set<Rational> values;
            for (std::size_t i = 0; i < crit.size(); ++i) {
                const auto c = crit[i];
                expect(o, c.point == BiPoint::coordinate(n, c.index, c.index),
                       "n=" + std::to_string(n) + ": critical point is not a coordinate pair");
                expect(o, c.value == spec.lambda[c.index], "critical value differs from lambda_i");
                values.insert(c.value);
            }
            expect(o, values.size() == crit.size(), "critical values not pairwise distinct");
        }
    }
    const double secs = seconds_since(t0);
    expect(o, secs < 1.0, "runtime " + std::to_string(secs) + " s");
    if (o.ok)
        o.detail = std::to_string(spectra) + " spectra, n=1..6, " + std::to_string(secs) + " s";
    return o;
}

Outcome jacobian_ranks()
{
    Outcome o;
    std::size_t total = 0;
    for (int n = 2; n <= 5; ++n) {
        const SpectrumH spec = auto_spectrum(n);
        for (Locus locus : {Locus::FlagMinusI, Locus::I}) {
            const auto samples = sample_and_rank(spec, locus, static_cast<std::uint64_t>(n), 100);
            expect(o, samples.size() >= 100, "fewer than 100 samples");
            const BiFormPair forms = build_forms(spec);
            for (const auto& s : samples) {
                expect(o, s.rank == 2, "rank " + std::to_string(s.rank) + " at a sample for n=" + std::to_string(n));
                expect(o, on_flag(forms, s.point), "sample off F(1,n)");
                expect(o, in_indeterminacy_locus(forms, s.point) == (locus == Locus::I), "sample on wrong locus");
            }
            total += samples.size();
        }
        const auto degenerate = rank_degenerate_locus(spec);
        expect(o, degenerate.size() == static_cast<std::size_t>(n + 1), "rank<=1 locus has wrong component count");
        const BiFormPair forms = build_forms(spec);
        for (const auto& d : degenerate) {
            expect(o, d.support.size() == 1, "rank<=1 component is not a single coordinate pair");
            if (d.support.size() != 1)
                continue;
            const BiPoint p = BiPoint::coordinate(n, d.support[0], d.support[0]);
            expect(o, rank(jacobian_at(forms, p)) <= 1, "coordinate pair has rank 2");
            expect(o, !in_indeterminacy_locus(forms, p), "rank<=1 locus meets I");
        }
    }
    if (o.ok)
        o.detail = std::to_string(total) + " samples on F(1,n)\\I and I, n=2..5, all rank 2; rank<=1 locus = n+1 "
                                           "coordinate pairs off I";
    return o;
}

Outcome tameness()
{
    Outcome o;
    std::size_t samples = 0;
    for (int n = 2; n <= 5; ++n) {
        const auto cert = verify_no_critical_on_E(auto_spectrum(n), static_cast<std::uint64_t>(n), 50);
        expect(o, cert.certified, "exceptional-locus certificate failed for n=" + std::to_string(n));
        expect(o, cert.samples.size() >= 50, "fewer than 50 samples");
        for (const auto& s : cert.samples)
            expect(o, s.rank == 2, "local rank " + std::to_string(s.rank));
        samples += cert.samples.size();
    }
    std::size_t hessians = 0;
    for (int n = 1; n <= 5; ++n) {
        const SpectrumH spec = auto_spectrum(n);
        const BiFormPair forms = build_forms(spec);
        for (const auto& c : critical_locus_RH(spec)) {
            const ChartPotential chart = chart_potential(forms, c.index, c.index);
            const HessianReport h = hessian_nondegenerate_at(chart, to_chart(chart, c.point));
            expect(o, h.critical(), "gradient nonzero at a critical point");
            expect(o, h.nondegenerate && h.determinant != 0, "degenerate Hessian for n=" + std::to_string(n));
            ++hessians;
        }
    }
    if (o.ok)
        o.detail = std::to_string(samples) + " exceptional samples certified, " + std::to_string(hessians) +
                   " Hessians nondegenerate";
    return o;
}

Outcome exceptional_epoly()
{
    Outcome o;
    for (int n = 1; n <= 8; ++n) {
        // (1 + ... + (uv)^{n-1})(1 + ... + (uv)^n), coefficient of (uv)^k by counting
        EPoly expected;
        for (int k = 0; k <= 2 * n - 1; ++k) {
            std::int64_t c = 0;
            for (int a = 0; a <= n - 1; ++a)
                if (k - a >= 0 && k - a <= n)
                    ++c;
            expected.add_term(k, k, c);
        }
        expect(o, epoly_of(Space::exceptional(n)) == expected, "E(Exceptional) mismatch at n=" + std::to_string(n));

        std::vector<Space> spaces = {Space::pn(n), Space::product(Space::pn(n), Space::pn(n)), Space::flag1n(n),
                                     Space::exceptional(n), Space::orbit(n)};
        if (n >= 2) {
            spaces.push_back(Space::center_i(n));
            spaces.push_back(Space::ztotal(n));
        }
        for (const auto& s : spaces)
            expect(o, hodge_tate_check(epoly_of(s)), s.name() + " is not Hodge-Tate");
    }
    if (o.ok)
        o.detail = "n=1..8 exact; every named space Hodge-Tate";
    return o;
}

Outcome relative_cohomology()
{
    Outcome o;
    for (int n = 1; n <= 6; ++n) {
        const RelativeProfile r = relative_profile(n);
        CohomologyProfile expected;
        expected.dims[2 * n] = n + 1;
        expect(o, r.profile == expected, "relative profile wrong for n=" + std::to_string(n));
        expect(o, r.unique, "relative profile not unique for n=" + std::to_string(n));
        const FiberProfile f = mayer_vietoris_fiber(n);
        expect(o, f.discrepancy.has_value(), "fiber discrepancy not emitted for n=" + std::to_string(n));
        expect(o, f.stated.dim(2 * n - 1) == n + 1 && f.derived.dim(2 * n - 1) == n,
               "fiber H^{2n-1}: stated " + std::to_string(f.stated.dim(2 * n - 1)) + ", derived " +
                   std::to_string(f.derived.dim(2 * n - 1)));
    }
    if (o.ok)
        o.detail = "{2n: n+1} unique for n=1..6; fiber discrepancy (n+1 vs n) emitted for every n";
    return o;
}

Outcome purity()
{
    Outcome o;
    for (int n = 1; n <= 8; ++n) {
        const GysinCheck g = gysin_purity(n);
        expect(o, g.pure, "Gysin sequence not pure for n=" + std::to_string(n));
        for (const auto& [k, d] : g.kernel_dims)
            expect(o, d == 0, "ker delta_" + std::to_string(k) + " = " + std::to_string(d));
    }
    if (o.ok)
        o.detail = "ker delta_{k+1} = 0 for all k, n=1..8";
    return o;
}

Outcome weight_engine()
{
    Outcome o;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> extra(0, 2);
    const auto t0 = Clock::now();
    for (int rep = 0; rep < 300; ++rep) {
        const auto c = testing::random_nilpotent(rng, 10);
        const NilpotentOp N(c.N);
        const int m = static_cast<int>(c.blocks.front()) - 1 + extra(rng);
        const WeightFiltration W = monodromy_weight_filtration(N, m);
        const AxiomCertificate cert = verify_weight_axioms(N, m, W);
        expect(o, cert.passed,
               "axioms fail on case " + std::to_string(rep) +
                   (cert.violations.empty() ? "" : ": " + cert.violations.front().detail));
        expect(o, W.graded_dims() == jordan_oracle(N, m), "graded dims differ from Jordan oracle");
        if (rep < 100) {
            const QMatrix Q = random_invertible(rng, N.dim(), 3);
            const NilpotentOp M(Q * c.N * testing::inverse(Q));
            const WeightFiltration WM = monodromy_weight_filtration(M, m);
            for (int i = 0; i <= 2 * m; ++i)
                expect(o, WM.at(i) == image(Q, W.at(i)), "conjugation invariance fails at W_" + std::to_string(i));
        }
    }
    const double secs = seconds_since(t0);
    expect(o, secs < 10.0, "runtime " + std::to_string(secs) + " s");
    if (o.ok)
        o.detail = "300 cases pass axioms and Jordan oracle, 100 conjugations, " + std::to_string(secs) + " s";
    return o;
}

Outcome kkp_diamonds()
{
    Outcome o;
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 6; ++n) {
        const SpectrumH spec = random_spectrum(rng, n);
        const KKPReport r = assemble_and_check(spec);
        const std::string tag = "n=" + std::to_string(n) + ": ";
        expect(o, r.passed, tag + r.first_counterexample);
        expect(o, r.equality, tag + "diamonds differ");
        expect(o, r.sum_identity, tag + "sum identity fails");
        expect(o, r.center_ok && r.center_value == n + 1, tag + "center " + std::to_string(r.center_value));
        for (const KKPDiamond* d : {&r.h, &r.f, &r.i}) {
            expect(o, d->entries.size() == 1 && d->at(n, n) == n + 1, tag + to_string(d->kind) + " not concentrated");
            for (int m = 0; m <= 4 * n; ++m)
                expect(o, d->anti_diagonal_sum(m) == r.data.profile.dim(m), tag + "anti-diagonal sum");
        }
    }
    if (o.ok)
        o.detail = "h = f = i with single entry (n,n) = n+1, sums match h^m(Y,Y_b), n=1..6";
    return o;
}

Outcome orbit_classifier()
{
    Outcome o;
    std::mt19937_64 rng(13);
    std::size_t sweeps = 0;
    for (int n = 1; n <= 6; ++n) {
        for (std::size_t k = 1; k <= 3; ++k) {
            if (2 * k > static_cast<std::size_t>(n + 1))
                continue;
            std::set<std::size_t> seen;
            for (int rep = 0; rep < 40; ++rep) {
                std::uniform_int_distribution<std::size_t> pick(0, k);
                const auto pair = testing::random_pair_with_label(rng, n, k, pick(rng));
                const std::size_t label = classify_diagonal_orbit(pair.V, pair.W);
                expect(o, label == pair.label, "label " + std::to_string(label) + " expected " +
                                                   std::to_string(pair.label));
                seen.insert(label);
                const QMatrix V = testing::random_matrix(rng, k, static_cast<std::size_t>(n + 1), 5);
                const QMatrix W = testing::random_matrix(rng, static_cast<std::size_t>(n + 1) - k,
                                                         static_cast<std::size_t>(n + 1), 5);
                if (rank(V) == k && rank(W) == W.rows()) {
                    const std::size_t l = classify_diagonal_orbit(V, W);
                    expect(o, l <= k, "label out of range");
                    seen.insert(l);
                }
            }
            std::set<std::size_t> all;
            for (std::size_t l = 0; l <= k; ++l)
                all.insert(l);
            expect(o, seen == all, "labels realized for k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                                       " differ from {0..k}");
            ++sweeps;
        }
    }
    const QMatrix e1{{1, 0, 0}};
    expect(o, classify_diagonal_orbit(e1, QMatrix{{1, 0, 0}, {0, 1, 0}}) == 1, "hyperplane through e1 not closed");
    expect(o, classify_diagonal_orbit(e1, QMatrix{{0, 1, 0}, {0, 0, 1}}) == 0, "transversal hyperplane not open");
    if (o.ok)
        o.detail = std::to_string(sweeps) + " (k,n) sweeps realize exactly {0..k}; k=1 gives two orbits";
    return o;
}

Outcome honesty_reports()
{
    Outcome o;
    for (int n = 1; n <= 5; ++n) {
        const DivisorReport d = divisor_classes(n);
        expect(o, !(d.boundary == d.anticanonical) && !d.boundary_is_anticanonical,
               "[D_Z] = -K_Z reported for n=" + std::to_string(n));
        expect(o, d.finding.rfind("OPEN-QUESTION", 0) == 0, "divisor finding not flagged OPEN-QUESTION");

        const KKPReport r = assemble_and_check(auto_spectrum(n));
        expect(o, r.fano.verdict == FanoVerdict::StrictFailure, "Fano-type verdict not strict failure");
        expect(o, r.fano.strict_failures == std::vector<int>{0}, "strict failure not at a = 0");
        expect(o, r.fano.finding.rfind("OPEN-QUESTION", 0) == 0, "Fano finding not flagged OPEN-QUESTION");
        bool div = false, fano = false;
        for (const auto& x : r.discrepancies) {
            div = div || x.derived == d.finding;
            fano = fano || x.derived == r.fano.finding;
        }
        expect(o, div && fano, "findings missing from the report for n=" + std::to_string(n));
    }
    if (o.ok)
        o.detail = "[D_Z] != -K_Z and Fano strict failure at a=0 reported as OPEN-QUESTION, n=1..5";
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"critical structure", critical_structure},
        {"Jacobian ranks", jacobian_ranks},
        {"tameness certificate", tameness},
        {"exceptional divisor E-polynomial", exceptional_epoly},
        {"relative cohomology", relative_cohomology},
        {"purity", purity},
        {"weight filtration engine", weight_engine},
        {"KKP diamonds", kkp_diamonds},
        {"orbit classifier", orbit_classifier},
        {"honesty reports", honesty_reports},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << ": " << o.detail
                  << std::endl;
        if (!o.ok)
            ++failures;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failures == 0 ? 0 : 1;
}
