#pragma once

#include <json.hpp>

#include "lgkkp/blowup_geometry.hpp"
#include "lgkkp/hodge_calculus.hpp"
#include "lgkkp/kkp_invariants.hpp"
#include "lgkkp/orbit_model.hpp"
#include "lgkkp/weight_filtration.hpp"

namespace lgkkp {

using Json = nlohmann::ordered_json;

// Rationals are "p/q", or "p" when q = 1. Integers given as JSON numbers are
// accepted on input.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const QVector& v);
QVector qvector_from_json(const Json& j);

/// List of rows.
Json to_json(const QMatrix& m);
/// Accepts a list of rows or {"matrix": [...]}.
QMatrix qmatrix_from_json(const Json& j);

/// {"vars": k, "terms": [[coeff, [e_0, ..., e_{k-1}]], ...]}, grlex order.
Json to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const Json& j);

/// {"n": int, "lambda": ["p/q", ...]}; validated on input.
Json to_json(const SpectrumH& s);
SpectrumH spectrum_from_json(const Json& j);

Json to_json(const BiPoint& p);
Json to_json(const CriticalPoint& c);
Json to_json(const BiFormPair& forms);

Json to_json(const Discrepancy& d);
Json to_json(const std::vector<Discrepancy>& ds);

Json to_json(const TamenessCertificate& t);
Json to_json(const std::vector<RankSample>& samples);
Json to_json(const DivisorClass& c);
Json to_json(const DivisorReport& r);

/// {"terms": [[p, q, coeff], ...]} sorted by (p+q, p).
Json to_json(const EPoly& e);
EPoly epoly_from_json(const Json& j);

/// {"dims": {"degree": dim, ...}}; zero dimensions omitted.
Json to_json(const CohomologyProfile& p);
CohomologyProfile profile_from_json(const Json& j);

Json to_json(const HodgeReport& r);

/// {"center": m, "steps": [basis matrix of W_0, ...], "graded_dims": {"w": dim}}.
Json to_json(const WeightFiltration& w);
WeightFiltration filtration_from_json(const Json& j);
Json to_json(const AxiomCertificate& c);

/// {"kind": "h", "D": D, "entries": {"(p,q)": value}, "provenance": ...}.
Json to_json(const KKPDiamond& d);
KKPDiamond diamond_from_json(const Json& j);

Json to_json(const FanoReport& f);
Json to_json(const KKPReport& r);

}  // namespace lgkkp
