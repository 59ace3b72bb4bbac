#include "lgkkp/json_io.hpp"

#include <regex>
#include <stdexcept>

namespace lgkkp {

Json to_json(const Rational& r)
{
    return to_string(r);
}

Rational rational_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(Integer(j.get<long>()));
    throw std::invalid_argument("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

Json to_json(const QVector& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_json(x));
    return a;
}

QVector qvector_from_json(const Json& j)
{
    if (!j.is_array())
        throw std::invalid_argument("vector must be a JSON array");
    QVector v;
    for (const auto& x : j)
        v.push_back(rational_from_json(x));
    return v;
}

Json to_json(const QMatrix& m)
{
    Json a = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        a.push_back(to_json(m.row_vector(r)));
    return a;
}

QMatrix qmatrix_from_json(const Json& j)
{
    const Json& rows = j.is_object() ? j.at("matrix") : j;
    if (!rows.is_array())
        throw std::invalid_argument("matrix must be a list of rows");
    std::vector<QVector> vs;
    for (const auto& r : rows)
        vs.push_back(qvector_from_json(r));
    const std::size_t cols = vs.empty() ? 0 : vs.front().size();
    for (const auto& v : vs)
        if (v.size() != cols)
            throw std::invalid_argument("matrix rows have different lengths");
    return QMatrix::from_rows(vs, cols);
}

Json to_json(const MultiPoly& p)
{
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(Json::array({to_json(c), e}));
    return {{"vars", p.num_vars()}, {"terms", terms}};
}

MultiPoly multipoly_from_json(const Json& j)
{
    MultiPoly p(j.at("vars").get<std::size_t>());
    for (const auto& t : j.at("terms")) {
        const Exponent e = t.at(1).get<Exponent>();
        if (e.size() != p.num_vars())
            throw std::invalid_argument("exponent length does not match variable count");
        p.add_term(e, rational_from_json(t.at(0)));
    }
    return p;
}

Json to_json(const SpectrumH& s)
{
    return {{"n", s.n}, {"lambda", to_json(s.lambda)}};
}

SpectrumH spectrum_from_json(const Json& j)
{
    SpectrumH s = make_spectrum(qvector_from_json(j.at("lambda")));
    if (j.contains("n") && j.at("n").get<int>() != s.n)
        throw std::invalid_argument("n does not match the length of lambda");
    return s;
}

Json to_json(const BiPoint& p)
{
    return {{"x", to_json(p.x())}, {"y", to_json(p.y())}};
}

Json to_json(const CriticalPoint& c)
{
    return {{"index", c.index}, {"point", to_json(c.point)}, {"value", to_json(c.value)},
            {"g_value", to_json(c.g_value)}};
}

Json to_json(const BiFormPair& forms)
{
    const auto names = forms.variable_names();
    return {{"variables", names},
            {"f", to_json(forms.f)},
            {"g", to_json(forms.g)},
            {"f_text", forms.f.to_string(names)},
            {"g_text", forms.g.to_string(names)}};
}

Json to_json(const Discrepancy& d)
{
    return {{"topic", d.topic}, {"stated", d.stated}, {"derived", d.derived}, {"note", d.note}};
}

Json to_json(const std::vector<Discrepancy>& ds)
{
    Json a = Json::array();
    for (const auto& d : ds)
        a.push_back(to_json(d));
    return a;
}

Json to_json(const TamenessCertificate& t)
{
    Json samples = Json::array();
    Json ranks = Json::array();
    for (const auto& s : t.samples) {
        samples.push_back({{"base", to_json(s.base)}, {"chart", {s.x_chart, s.y_chart}}});
        ranks.push_back(s.rank);
    }
    return {{"n", t.n},
            {"certified", t.certified},
            {"samples", samples},
            {"ranks", ranks},
            {"discrepancies", Json::array()}};
}

Json to_json(const std::vector<RankSample>& samples)
{
    Json pts = Json::array();
    Json ranks = Json::array();
    for (const auto& s : samples) {
        pts.push_back(to_json(s.point));
        ranks.push_back(s.rank);
    }
    return {{"samples", pts}, {"ranks", ranks}, {"discrepancies", Json::array()}};
}

Json to_json(const DivisorClass& c)
{
    return Json::array({c.a, c.b, c.e});
}

Json to_json(const DivisorReport& r)
{
    Json j = {{"n", r.n},
              {"center_codimension", r.center_codimension},
              {"anticanonical", to_json(r.anticanonical)},
              {"strict_flag", to_json(r.strict_flag)},
              {"exceptional", to_json(r.exceptional)},
              {"boundary", to_json(r.boundary)},
              {"pole", to_json(r.pole)},
              {"pole_multiplicity", r.pole_multiplicity},
              {"flag_multiplicity_along_center", r.flag_multiplicity_along_center},
              {"boundary_is_anticanonical", r.boundary_is_anticanonical}};
    j["discrepancies"] = Json::array();
    if (!r.finding.empty())
        j["discrepancies"].push_back(r.finding);
    return j;
}

Json to_json(const EPoly& e)
{
    Json terms = Json::array();
    for (const auto& [k, c] : e.terms())
        terms.push_back(Json::array({k.first, k.second, c}));
    return {{"terms", terms}};
}

EPoly epoly_from_json(const Json& j)
{
    EPoly e;
    for (const auto& t : j.at("terms"))
        e.add_term(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<std::int64_t>());
    return e;
}

Json to_json(const CohomologyProfile& p)
{
    Json dims = Json::object();
    for (const auto& [d, v] : p.dims)
        if (v != 0)
            dims[std::to_string(d)] = v;
    return {{"dims", dims}};
}

CohomologyProfile profile_from_json(const Json& j)
{
    CohomologyProfile p;
    for (const auto& [k, v] : j.at("dims").items())
        p.dims[std::stoi(k)] = v.get<std::int64_t>();
    return p;
}

namespace {

Json to_json(const LESResult& r)
{
    Json sols = Json::array();
    for (const auto& s : r.solutions)
        sols.push_back({{"unknowns", s.unknowns}, {"ranks", s.ranks}});
    return {{"unique", r.unique()}, {"solutions", sols}, {"ambiguous", r.ambiguous}};
}

Json int_map(const std::map<int, std::int64_t>& m)
{
    Json o = Json::object();
    for (const auto& [k, v] : m)
        o[std::to_string(k)] = v;
    return o;
}

std::string fiber_input_name(FiberInput f)
{
    return f == FiberInput::Derived ? "derived" : "stated";
}

Json to_json(const RelativeProfile& r)
{
    Json j = {{"input", fiber_input_name(r.input)},
              {"profile", to_json(r.profile)},
              {"unique", r.unique},
              {"matches_middle_dimension_count", r.matches_middle_dimension_count}};
    j["discrepancies"] = Json::array();
    if (r.discrepancy)
        j["discrepancies"].push_back(to_json(*r.discrepancy));
    return j;
}

}  // namespace

Json to_json(const HodgeReport& r)
{
    Json spaces = Json::array();
    for (const auto& [space, e] : r.epolys)
        spaces.push_back({{"space", space.name()},
                          {"epoly", to_json(e)},
                          {"text", e.to_string()},
                          {"hodge_tate", hodge_tate_check(e)}});
    Json fiber = {{"derived", to_json(r.fiber.derived)},
                  {"stated", to_json(r.fiber.stated)},
                  {"differs", r.fiber.differs}};
    Json gysin = {{"pure", r.gysin.pure},
                  {"kernel_dims", int_map(r.gysin.kernel_dims)},
                  {"delta_ranks", int_map(r.gysin.delta_ranks)},
                  {"solve", to_json(r.gysin.result)}};
    return {{"n", r.n},
            {"spaces", spaces},
            {"center_i_derived", to_json(r.center_i_derived)},
            {"exceptional_derived", to_json(r.exceptional_derived)},
            {"ztotal_derived", to_json(r.ztotal_derived)},
            {"fiber", fiber},
            {"relative", to_json(r.relative)},
            {"relative_from_stated", to_json(r.relative_from_stated)},
            {"gysin", gysin},
            {"all_hodge_tate", r.all_hodge_tate()},
            {"discrepancies", to_json(r.discrepancies)}};
}

Json to_json(const WeightFiltration& w)
{
    Json steps = Json::array();
    for (const auto& s : w.steps)
        steps.push_back(to_json(s.basis()));
    Json graded = Json::object();
    const auto g = w.graded_dims();
    for (std::size_t i = 0; i < g.size(); ++i)
        graded[std::to_string(i)] = g[i];
    return {{"center", w.center}, {"ambient", w.ambient()}, {"steps", steps}, {"graded_dims", graded}};
}

WeightFiltration filtration_from_json(const Json& j)
{
    WeightFiltration w;
    w.center = j.at("center").get<int>();
    const auto ambient = j.at("ambient").get<std::size_t>();
    for (const auto& s : j.at("steps")) {
        const QMatrix b = qmatrix_from_json(s);
        w.steps.push_back(b.rows() == 0 ? Subspace::zero(ambient) : Subspace::span(b));
    }
    return w;
}

Json to_json(const AxiomCertificate& c)
{
    Json v = Json::array();
    for (const auto& x : c.violations)
        v.push_back({{"axiom", x.axiom}, {"index", x.index}, {"detail", x.detail}});
    return {{"passed", c.passed}, {"violations", v}};
}

Json to_json(const KKPDiamond& d)
{
    Json entries = Json::object();
    for (const auto& [k, v] : d.entries)
        entries["(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")"] = v;
    return {{"kind", to_string(d.kind)}, {"D", d.D}, {"entries", entries}, {"provenance", d.provenance}};
}

KKPDiamond diamond_from_json(const Json& j)
{
    KKPDiamond d;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "h")
        d.kind = DiamondKind::H;
    else if (kind == "f")
        d.kind = DiamondKind::F;
    else if (kind == "i")
        d.kind = DiamondKind::I;
    else
        throw std::invalid_argument("unknown diamond kind " + kind);
    d.D = j.at("D").get<int>();
    d.provenance = j.value("provenance", "");
    static const std::regex key(R"(\((\d+),(\d+)\))");
    for (const auto& [k, v] : j.at("entries").items()) {
        std::smatch m;
        if (!std::regex_match(k, m, key))
            throw std::invalid_argument("bad diamond key " + k);
        d.set(std::stoi(m[1]), std::stoi(m[2]), v.get<std::int64_t>());
    }
    return d;
}

Json to_json(const FanoReport& f)
{
    Json entries = Json::array();
    for (const auto& e : f.entries)
        entries.push_back({{"a", e.a},
                           {"degree", e.degree},
                           {"vacuous", e.vacuous},
                           {"power_nonzero", e.power_nonzero},
                           {"next_power_zero", e.next_power_zero},
                           {"holds", e.holds()}});
    return {{"verdict", to_string(f.verdict)},
            {"strict_failures", f.strict_failures},
            {"entries", entries},
            {"finding", f.finding}};
}

Json to_json(const KKPReport& r)
{
    Json values = Json::array();
    Json hessians = Json::array();
    for (std::size_t k = 0; k < r.critical.size(); ++k) {
        values.push_back(to_json(r.critical[k].value));
        hessians.push_back({{"point", to_json(r.critical[k].point)},
                            {"determinant", to_json(r.hessians[k].determinant)},
                            {"nondegenerate", r.hessians[k].nondegenerate}});
    }
    Json tameness = to_json(r.tameness);
    tameness["flag_ranks"] = to_json(r.flag_ranks);
    tameness["hessians"] = hessians;
    tameness["divisors"] = to_json(r.divisors);

    return {{"n", r.spec.n},
            {"lambda", to_json(r.spec.lambda)},
            {"critical_values", values},
            {"tameness", tameness},
            {"profile", to_json(r.data.profile)},
            {"diamonds", {{"h", to_json(r.h)}, {"f", to_json(r.f)}, {"i", to_json(r.i)}}},
            {"checks",
             {{"sum_identity", r.sum_identity}, {"equality", r.equality}, {"center_value", r.center_value}}},
            {"fano_type", to_string(r.fano.verdict)},
            {"fano_report", to_json(r.fano)},
            {"passed", r.passed},
            {"first_counterexample", r.first_counterexample},
            {"notes", r.notes},
            {"discrepancies", to_json(r.discrepancies)}};
}

}  // namespace lgkkp
