#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lgkkp/blowup_geometry.hpp"
#include "lgkkp/discrepancy.hpp"
#include "lgkkp/hodge_calculus.hpp"
#include "lgkkp/orbit_model.hpp"

namespace lgkkp {

/// H^*(Y, Y_b) of a complex D-dimensional Y with the log of the monodromy at
/// infinity in every nonzero degree.
struct RelativeData {
    int D = 0;
    CohomologyProfile profile;

    /// Throws std::invalid_argument when a nonzero degree lacks an operator
    /// or an operator violates N_d^{d+1} = 0.
    void validate() const;
};

enum class FanoVerdict { Pass, StrictFailure, Vacuous };
std::string to_string(FanoVerdict v);

struct FanoEntry {
    int a = 0;
    int degree = 0;
    bool vacuous = true;
    bool power_nonzero = false;    // N^{D-|a|} != 0
    bool next_power_zero = false;  // N^{D-|a|+1} = 0
    bool holds() const { return vacuous || (power_nonzero && next_power_zero); }
};

struct FanoReport {
    std::vector<FanoEntry> entries;
    FanoVerdict verdict = FanoVerdict::Vacuous;
    std::vector<int> strict_failures;  // values of a
    std::string finding;
};

FanoReport fano_type_check(const RelativeData& data);

enum class DiamondKind { H, F, I };
std::string to_string(DiamondKind k);

/// (p, q) -> value for 0 <= p, q <= D; zero entries are not stored.
struct KKPDiamond {
    DiamondKind kind = DiamondKind::H;
    int D = 0;
    std::map<std::pair<int, int>, std::int64_t> entries;
    std::string provenance;

    std::int64_t at(int p, int q) const;
    void set(int p, int q, std::int64_t v);
    std::int64_t anti_diagonal_sum(int m) const;
    bool same_entries(const KKPDiamond& o) const { return D == o.D && entries == o.entries; }
};

/// h^{p, D-q} = dim gr^{W(N, D-a)}_{2(D-p)} H^{D+a}(Y, Y_b) for a = p - q >= 0,
/// and dim gr^{W(N, D+a)}_{2(D-q)} H^{D+a}(Y, Y_b) for a < 0.
KKPDiamond compute_hpq(const RelativeData& data);

struct MorsePoint {
    Rational value;
    int multiplicity = 1;
    bool nondegenerate = true;
};

struct MorseData {
    std::vector<MorsePoint> points;
    int total() const;
};

class Unsupported : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Each nondegenerate critical point is locally z_1^2 + ... + z_D^2; its
/// Picard-Lefschetz monodromy T = [[1,1],[0,1]] has N = log T with N^2 = 0,
/// a one-step weight filtration, and adds 1 to i^{D/2, D/2}.
KKPDiamond compute_ipq_morse(const MorseData& morse, int D);

/// f^{p,q} = h^{p,q} for these models (equality theorem, not a direct sheaf
/// computation).
KKPDiamond compute_fpq(const KKPDiamond& h);

struct AssembleOptions {
    std::uint64_t seed = 0;
    std::size_t samples = 50;
    /// Replaces N_infinity = 0 on the given degrees before computing h.
    std::map<int, QMatrix> monodromy_override;
};

struct KKPReport {
    SpectrumH spec;
    std::vector<CriticalPoint> critical;
    std::vector<HessianReport> hessians;
    MorseData morse;
    TamenessCertificate tameness;
    std::vector<RankSample> flag_ranks;
    DivisorReport divisors;
    RelativeProfile relative;
    RelativeData data;
    KKPDiamond h;
    KKPDiamond f;
    KKPDiamond i;
    bool sum_identity = false;
    bool equality = false;
    bool center_ok = false;
    std::int64_t center_value = 0;
    FanoReport fano;
    std::vector<Discrepancy> discrepancies;
    std::vector<std::string> notes;
    bool passed = false;
    std::string first_counterexample;
};

/// Orbit model -> tameness certificates -> relative cohomology ->
/// N_infinity = 0 -> the three diamonds -> equality, sum identity and center
/// checks. Findings that do not affect the checks go to `discrepancies`.
KKPReport assemble_and_check(const SpectrumH& spec, const AssembleOptions& options = {});

/// Text figure of the diamond: row p+q = 2D at the top, runs of zero rows in
/// the interior collapsed to a single ':' line.
std::string render_diamond(const KKPDiamond& d);

}  // namespace lgkkp
