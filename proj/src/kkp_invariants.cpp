#include "lgkkp/kkp_invariants.hpp"

#include <algorithm>
#include <cstdlib>

#include "lgkkp/weight_filtration.hpp"

namespace lgkkp {

void RelativeData::validate() const
{
    profile.validate();
    for (const auto& [d, v] : profile.dims) {
        if (v == 0)
            continue;
        auto it = profile.operators.find(d);
        if (it == profile.operators.end())
            throw std::invalid_argument("no monodromy operator for degree " + std::to_string(d));
        if (!it->second.power(static_cast<unsigned>(d + 1)).is_zero())
            throw std::invalid_argument("N_" + std::to_string(d) + "^" + std::to_string(d + 1) + " != 0");
    }
}

std::string to_string(FanoVerdict v)
{
    switch (v) {
    case FanoVerdict::Pass:
        return "pass";
    case FanoVerdict::StrictFailure:
        return "strict-failure";
    case FanoVerdict::Vacuous:
        return "vacuous";
    }
    return "?";
}

std::string to_string(DiamondKind k)
{
    switch (k) {
    case DiamondKind::H:
        return "h";
    case DiamondKind::F:
        return "f";
    case DiamondKind::I:
        return "i";
    }
    return "?";
}

FanoReport fano_type_check(const RelativeData& data)
{
    data.validate();
    FanoReport r;
    const int D = data.D;
    bool any_nonvacuous = false;
    for (int a = -D; a <= D; ++a) {
        FanoEntry e;
        e.a = a;
        e.degree = D + a;
        if (data.profile.dim(e.degree) == 0) {
            r.entries.push_back(e);
            continue;
        }
        any_nonvacuous = true;
        e.vacuous = false;
        const QMatrix& N = data.profile.operators.at(e.degree);
        const auto k = static_cast<unsigned>(D - std::abs(a));
        e.power_nonzero = !N.power(k).is_zero();
        e.next_power_zero = N.power(k + 1).is_zero();
        if (!e.holds())
            r.strict_failures.push_back(a);
        r.entries.push_back(e);
    }
    if (!r.strict_failures.empty()) {
        r.verdict = FanoVerdict::StrictFailure;
        r.finding = "OPEN-QUESTION: Fano-type condition fails strictly at a =";
        for (int a : r.strict_failures)
            r.finding += " " + std::to_string(a);
        r.finding += " (N^{D-|a|} vanishes there); h^{p,q} is still evaluated as the construction does";
    } else {
        r.verdict = any_nonvacuous ? FanoVerdict::Pass : FanoVerdict::Vacuous;
    }
    return r;
}

std::int64_t KKPDiamond::at(int p, int q) const
{
    auto it = entries.find({p, q});
    return it == entries.end() ? 0 : it->second;
}

void KKPDiamond::set(int p, int q, std::int64_t v)
{
    if (p < 0 || q < 0 || p > D || q > D)
        throw std::out_of_range("diamond index (" + std::to_string(p) + "," + std::to_string(q) + ") outside [0," +
                                std::to_string(D) + "]");
    if (v == 0)
        entries.erase({p, q});
    else
        entries[{p, q}] = v;
}

std::int64_t KKPDiamond::anti_diagonal_sum(int m) const
{
    std::int64_t s = 0;
    for (const auto& [k, v] : entries)
        if (k.first + k.second == m)
            s += v;
    return s;
}

KKPDiamond compute_hpq(const RelativeData& data)
{
    data.validate();
    const int D = data.D;
    KKPDiamond h{DiamondKind::H, D, {}, "graded pieces of the monodromy weight filtration on H^*(Y,Y_b)"};

    std::map<int, WeightFiltration> cache;
    for (int p = 0; p <= D; ++p) {
        for (int q = 0; q <= D; ++q) {
            const int a = p - q;
            const int degree = D + a;
            if (data.profile.dim(degree) == 0)
                continue;
            const int center = D - std::abs(a);
            auto it = cache.find(degree);
            if (it == cache.end()) {
                const NilpotentOp N(data.profile.operators.at(degree));
                it = cache.emplace(degree, monodromy_weight_filtration(N, center)).first;
            }
            const int weight = a >= 0 ? 2 * (D - p) : 2 * (D - q);
            if (weight > 2 * center)
                continue;
            const auto graded = it->second.graded_dims();
            h.set(p, D - q, static_cast<std::int64_t>(graded[static_cast<std::size_t>(weight)]));
        }
    }
    return h;
}

int MorseData::total() const
{
    int t = 0;
    for (const auto& p : points)
        t += p.multiplicity;
    return t;
}

KKPDiamond compute_ipq_morse(const MorseData& morse, int D)
{
    if (D < 0 || D % 2 != 0)
        throw std::invalid_argument("compute_ipq_morse: D must be even and nonnegative, got " + std::to_string(D));
    KKPDiamond d{DiamondKind::I, D, {}, ""};
    if (morse.points.empty()) {
        d.provenance = "no critical points";
        return d;
    }

    // Local Picard-Lefschetz model shared by every nondegenerate point.
    const NilpotentOp N = log_unipotent(QMatrix{{1, 1}, {0, 1}});
    const auto graded = monodromy_weight_filtration(N, 1).graded_dims();
    std::int64_t total = 0;
    for (const auto& pt : morse.points) {
        if (!pt.nondegenerate)
            throw Unsupported("degenerate critical point at value " + to_string(pt.value) +
                              ": outside the Morse-local argument");
        total += pt.multiplicity;
    }
    d.set(D / 2, D / 2, total);
    d.provenance = "Morse-local count: each of " + std::to_string(total) +
                   " nondegenerate critical points has local monodromy [[1,1],[0,1]], N = log T = " +
                   N.matrix().to_string() + ", N^" + std::to_string(N.index() + 1) +
                   " = 0, one-step weight filtration with graded dims (" + std::to_string(graded[0]) + "," +
                   std::to_string(graded[1]) + "," + std::to_string(graded[2]) + "); +1 to i^{" +
                   std::to_string(D / 2) + "," + std::to_string(D / 2) + "} each";
    return d;
}

KKPDiamond compute_fpq(const KKPDiamond& h)
{
    KKPDiamond f = h;
    f.kind = DiamondKind::F;
    f.provenance = "by equality theorem, not direct sheaf computation";
    return f;
}

namespace {

std::string entry_name(const KKPDiamond& d, int p, int q)
{
    return to_string(d.kind) + "^{" + std::to_string(p) + "," + std::to_string(q) + "}";
}

}  // namespace

KKPReport assemble_and_check(const SpectrumH& spec, const AssembleOptions& options)
{
    validate(spec);
    const int n = spec.n;
    const int D = 2 * n;

    KKPReport r;
    r.spec = spec;

    // critical data
    r.critical = critical_locus_RH(spec);
    const BiFormPair forms = build_forms(spec);
    for (const auto& cp : r.critical) {
        const ChartPotential chart = chart_potential(forms, cp.index, cp.index);
        HessianReport hr = hessian_nondegenerate_at(chart, to_chart(chart, cp.point));
        r.morse.points.push_back({cp.value, 1, hr.critical() && hr.nondegenerate});
        r.hessians.push_back(std::move(hr));
    }

    // tameness
    r.tameness = verify_no_critical_on_E(spec, options.seed, options.samples);
    r.flag_ranks = sample_and_rank(spec, Locus::FlagMinusI, options.seed, options.samples);
    r.divisors = divisor_classes(n);

    // relative cohomology with N at infinity
    r.relative = relative_profile(n, FiberInput::Derived);
    r.data.D = D;
    r.data.profile = r.relative.profile;
    for (const auto& [deg, v] : r.data.profile.dims) {
        auto it = options.monodromy_override.find(deg);
        r.data.profile.operators[deg] =
            it != options.monodromy_override.end() ? it->second : QMatrix(static_cast<std::size_t>(v),
                                                                          static_cast<std::size_t>(v));
    }
    if (options.monodromy_override.empty())
        r.notes.push_back("N at infinity set to 0 in every degree: w has no critical points over E or on the "
                          "fiber at infinity");
    else
        r.notes.push_back("N at infinity supplied by the caller for " +
                          std::to_string(options.monodromy_override.size()) + " degree(s)");

    r.h = compute_hpq(r.data);
    r.i = compute_ipq_morse(r.morse, D);
    r.f = compute_fpq(r.h);
    r.fano = fano_type_check(r.data);

    // checks
    std::vector<std::string> failures;
    r.equality = r.h.same_entries(r.f) && r.h.same_entries(r.i);
    if (!r.equality) {
        for (int p = 0; p <= D && failures.empty(); ++p)
            for (int q = 0; q <= D && failures.empty(); ++q)
                if (r.h.at(p, q) != r.i.at(p, q) || r.h.at(p, q) != r.f.at(p, q))
                    failures.push_back("diamonds differ at (" + std::to_string(p) + "," + std::to_string(q) +
                                       "): h=" + std::to_string(r.h.at(p, q)) + " f=" +
                                       std::to_string(r.f.at(p, q)) + " i=" + std::to_string(r.i.at(p, q)));
    }

    r.sum_identity = true;
    for (const KKPDiamond* d : {&r.h, &r.f, &r.i})
        for (int m = 0; m <= 2 * D; ++m)
            if (d->anti_diagonal_sum(m) != r.data.profile.dim(m)) {
                if (r.sum_identity)
                    failures.push_back("sum of " + to_string(d->kind) + "^{p,q} over p+q=" + std::to_string(m) +
                                       " is " + std::to_string(d->anti_diagonal_sum(m)) + ", h^" +
                                       std::to_string(m) + "(Y,Y_b) = " + std::to_string(r.data.profile.dim(m)));
                r.sum_identity = false;
            }

    r.center_value = r.h.at(n, n);
    r.center_ok = true;
    for (const KKPDiamond* d : {&r.h, &r.f, &r.i}) {
        const bool ok = d->entries.size() == 1 && d->at(n, n) == n + 1;
        if (!ok && r.center_ok) {
            std::string why = entry_name(*d, n, n) + " = " + std::to_string(d->at(n, n)) + ", expected " +
                              std::to_string(n + 1) + " as the only nonzero entry";
            for (const auto& [k, v] : d->entries)
                if (k != std::make_pair(n, n)) {
                    why += "; nonzero " + entry_name(*d, k.first, k.second) + " = " + std::to_string(v);
                    break;
                }
            failures.push_back(why);
        }
        r.center_ok = r.center_ok && ok;
    }

    if (!r.tameness.certified)
        failures.push_back("tameness certificate failed");
    for (const auto& s : r.flag_ranks)
        if (s.rank != 2) {
            failures.push_back("Jacobian rank " + std::to_string(s.rank) + " on F(1,n) \\ I");
            break;
        }
    for (const auto& m : r.morse.points)
        if (!m.nondegenerate) {
            failures.push_back("degenerate critical point at value " + to_string(m.value));
            break;
        }

    r.passed = failures.empty();
    if (!r.passed)
        r.first_counterexample = failures.front();

    // findings reported without affecting the verdict
    if (!r.divisors.boundary_is_anticanonical)
        r.discrepancies.push_back({"anticanonical boundary", "D_Z anticanonical", r.divisors.finding, "reported only"});
    if (r.fano.verdict == FanoVerdict::StrictFailure)
        r.discrepancies.push_back({"Fano type", "LG model of Fano type", r.fano.finding, "reported only"});
    const FiberProfile fiber = mayer_vietoris_fiber(n);
    if (fiber.discrepancy)
        r.discrepancies.push_back(*fiber.discrepancy);
    for (auto& d : epoly_discrepancies(n))
        r.discrepancies.push_back(std::move(d));
    return r;
}

std::string render_diamond(const KKPDiamond& d)
{
    const int D = d.D;
    std::size_t width = 1;
    for (const auto& [k, v] : d.entries)
        width = std::max(width, std::to_string(v).size());
    const std::size_t half = (width + 2) / 2;
    const std::size_t line_len = static_cast<std::size_t>(2 * D) * half + width;

    auto keep_row = [&](int m) {
        if (m <= 1 || m >= 2 * D - 1)
            return true;
        for (const auto& [k, v] : d.entries)
            if (k.first + k.second == m)
                return true;
        return false;
    };

    std::string out;
    bool gap_open = false;
    for (int m = 2 * D; m >= 0; --m) {
        if (!keep_row(m)) {
            if (!gap_open) {
                std::string line(line_len, ' ');
                line[static_cast<std::size_t>(D) * half + width - 1] = ':';
                out += line.substr(0, line.find_last_not_of(' ') + 1) + "\n";
                gap_open = true;
            }
            continue;
        }
        gap_open = false;
        std::string line(line_len, ' ');
        for (int p = std::min(m, D); p >= std::max(0, m - D); --p) {
            const int q = m - p;
            const std::string s = std::to_string(d.at(p, q));
            // right-align within the cell that ends at the column for q - p
            const std::size_t end = static_cast<std::size_t>(D + q - p) * half + width;
            line.replace(end - s.size(), s.size(), s);
        }
        out += line.substr(0, line.find_last_not_of(' ') + 1) + "\n";
    }
    return out;
}

}  // namespace lgkkp
