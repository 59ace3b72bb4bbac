#include "lgkkp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include "lgkkp/json_io.hpp"

namespace lgkkp {

namespace {

struct Options {
    std::optional<int> n;
    std::string lambda;
    std::optional<int> auto_lambda;
    std::uint64_t seed = 0;
    std::size_t samples = 50;
    std::string format = "text";
    std::string matrix_file;
    int center = 0;
    std::string monodromy_file;
    std::string V;
    std::string W;
};

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

SpectrumH resolve_spectrum(const Options& o)
{
    SpectrumH s;
    if (!o.lambda.empty()) {
        if (o.auto_lambda)
            throw UsageError("--lambda and --auto-lambda are mutually exclusive");
        s = make_spectrum(parse_rational_list(o.lambda));
    } else if (o.auto_lambda) {
        s = auto_spectrum(*o.auto_lambda);
    } else if (o.n) {
        s = auto_spectrum(*o.n);
    } else {
        throw UsageError("one of --n, --lambda or --auto-lambda is required");
    }
    if (o.n && *o.n != s.n)
        throw UsageError("--n " + std::to_string(*o.n) + " does not match lambda of length " +
                         std::to_string(s.n + 1));
    return s;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

// "e2" is the second standard basis vector, "1:0:-1/2" an explicit one.
QMatrix parse_rows(const std::string& text, int n)
{
    std::vector<QVector> rows;
    std::stringstream ss(text);
    std::string tok;
    const auto dim = static_cast<std::size_t>(n + 1);
    while (std::getline(ss, tok, ',')) {
        if (tok.empty())
            throw UsageError("empty vector token in '" + text + "'");
        QVector v(dim, Rational(0));
        if (tok[0] == 'e') {
            std::size_t idx = 0;
            try {
                idx = std::stoul(tok.substr(1));
            } catch (const std::exception&) {
                throw UsageError("bad basis token '" + tok + "'");
            }
            if (idx < 1 || idx > dim)
                throw UsageError("basis index out of range in '" + tok + "'");
            v[idx - 1] = 1;
        } else {
            std::string spaced = tok;
            std::replace(spaced.begin(), spaced.end(), ':', ',');
            v = parse_rational_list(spaced);
            if (v.size() != dim)
                throw UsageError("vector '" + tok + "' must have " + std::to_string(dim) + " entries");
        }
        rows.push_back(std::move(v));
    }
    return QMatrix::from_rows(rows, dim);
}

std::string point_text(const BiPoint& p)
{
    return "([" + to_string(p.x()) + "], [" + to_string(p.y()) + "])";
}

int cmd_model(const Options& o, std::ostream& out)
{
    const SpectrumH spec = resolve_spectrum(o);
    const BiFormPair forms = build_forms(spec);
    const auto crit = critical_locus_RH(spec);
    const auto degenerate = rank_degenerate_locus(spec);

    std::set<Rational> values;
    for (const auto& c : crit)
        values.insert(c.value);
    const bool ok = crit.size() == static_cast<std::size_t>(spec.n + 1) && values.size() == crit.size();

    if (o.format == "json") {
        Json cl = Json::array();
        for (const auto& c : crit)
            cl.push_back(to_json(c));
        Json deg = Json::array();
        for (const auto& d : degenerate)
            deg.push_back({{"constant", to_json(d.constant)}, {"support", d.support}});
        out << Json{{"spec", to_json(spec)},
                    {"forms", to_json(forms)},
                    {"critical_locus", cl},
                    {"rank_degenerate_locus", deg},
                    {"passed", ok}}
                   .dump(2)
            << "\n";
    } else {
        const auto names = forms.variable_names();
        out << "n = " << spec.n << ", lambda = " << to_string(spec.lambda) << "\n";
        out << "f = " << forms.f.to_string(names) << "\n";
        out << "g = " << forms.g.to_string(names) << "\n";
        out << "critical points of R_H: " << crit.size() << "\n";
        for (const auto& c : crit)
            out << "  " << point_text(c.point) << "  value " << to_string(c.value) << "\n";
        out << "rank J <= 1 components: " << degenerate.size() << "\n";
        out << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? ExitPass : ExitMathFailure;
}

int cmd_verify(const Options& o, std::ostream& out)
{
    const SpectrumH spec = resolve_spectrum(o);
    const auto flag = sample_and_rank(spec, Locus::FlagMinusI, o.seed, o.samples);
    const auto centre = sample_and_rank(spec, Locus::I, o.seed, o.samples);
    const auto tame = verify_no_critical_on_E(spec, o.seed, o.samples);
    const auto divisors = divisor_classes(spec.n);

    const BiFormPair forms = build_forms(spec);
    std::vector<std::pair<CriticalPoint, HessianReport>> hessians;
    for (const auto& c : critical_locus_RH(spec)) {
        const ChartPotential chart = chart_potential(forms, c.index, c.index);
        hessians.emplace_back(c, hessian_nondegenerate_at(chart, to_chart(chart, c.point)));
    }

    auto all_rank2 = [](const std::vector<RankSample>& s) {
        return std::all_of(s.begin(), s.end(), [](const RankSample& r) { return r.rank == 2; });
    };
    const bool hess_ok = std::all_of(hessians.begin(), hessians.end(), [](const auto& h) {
        return h.second.critical() && h.second.nondegenerate;
    });
    const bool ok = all_rank2(flag) && all_rank2(centre) && tame.certified && hess_ok;

    if (o.format == "json") {
        Json hs = Json::array();
        for (const auto& [c, h] : hessians)
            hs.push_back({{"point", to_json(c.point)},
                          {"gradient", to_json(h.gradient)},
                          {"determinant", to_json(h.determinant)},
                          {"nondegenerate", h.nondegenerate}});
        out << Json{{"spec", to_json(spec)},
                    {"flag_minus_I", to_json(flag)},
                    {"indeterminacy", to_json(centre)},
                    {"tameness", to_json(tame)},
                    {"hessians", hs},
                    {"divisors", to_json(divisors)},
                    {"passed", ok}}
                   .dump(2)
            << "\n";
    } else {
        auto rank_line = [&](const char* label, const std::vector<RankSample>& s) {
            out << label << ": " << s.size() << " samples, " << (all_rank2(s) ? "all rank 2" : "RANK DEFECT")
                << "\n";
        };
        out << "n = " << spec.n << ", seed = " << o.seed << "\n";
        rank_line("F(1,n) \\ I", flag);
        rank_line("I", centre);
        out << "exceptional divisor: " << tame.samples.size() << " samples, "
            << (tame.certified ? "certified" : "NOT certified") << "\n";
        for (const auto& [c, h] : hessians)
            out << "  Hessian at " << point_text(c.point) << ": det " << to_string(h.determinant)
                << (h.nondegenerate ? "" : "  DEGENERATE") << "\n";
        out << "divisors: -K_Z = " << divisors.anticanonical.to_string()
            << ", D_Z = " << divisors.boundary.to_string() << ", E = " << divisors.exceptional.to_string() << "\n";
        if (!divisors.finding.empty())
            out << divisors.finding << "\n";
        out << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? ExitPass : ExitMathFailure;
}

int cmd_hodge(const Options& o, std::ostream& out)
{
    int n = 0;
    if (o.n)
        n = *o.n;
    else
        n = resolve_spectrum(o).n;
    if (n < 1)
        throw UsageError("--n must be >= 1");
    const HodgeReport r = hodge_report(n);
    const bool ok = r.all_hodge_tate() && r.relative.unique && r.gysin.pure;

    if (o.format == "json") {
        Json j = to_json(r);
        j["passed"] = ok;
        out << j.dump(2) << "\n";
    } else {
        out << "n = " << n << "\n";
        for (const auto& [space, e] : r.epolys)
            out << "  E(" << space.name() << ") = " << e.to_string() << (hodge_tate_check(e) ? "" : "  NOT Hodge-Tate")
                << "\n";
        out << "H^*(Y, Y_b):";
        for (const auto& [d, v] : r.relative.profile.normalized().dims)
            out << " h^" << d << " = " << v;
        out << (r.relative.unique ? " (unique)" : " (ambiguous)") << "\n";
        out << "Gysin sequence: " << (r.gysin.pure ? "pure" : "NOT pure") << "\n";
        for (const auto& d : r.discrepancies)
            out << "DISCREPANCY " << d.topic << ": stated " << d.stated << "; derived " << d.derived << "\n";
        out << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? ExitPass : ExitMathFailure;
}

int cmd_weights(const Options& o, std::ostream& out, std::ostream& err)
{
    if (o.matrix_file.empty())
        throw UsageError("--matrix is required");
    const QMatrix M = qmatrix_from_json(read_json_file(o.matrix_file));
    std::optional<NilpotentOp> N;
    try {
        N.emplace(M);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    WeightFiltration W;
    try {
        W = monodromy_weight_filtration(*N, o.center);
    } catch (const HypothesisViolated& e) {
        err << "hypothesis violated: " << e.what() << "\n";
        return ExitMathFailure;
    }
    const AxiomCertificate cert = verify_weight_axioms(*N, o.center, W);
    const auto graded = W.graded_dims();
    const auto oracle = jordan_oracle(*N, o.center);
    const bool ok = cert.passed && graded == oracle;

    if (o.format == "json") {
        out << Json{{"filtration", to_json(W)},
                    {"axioms", to_json(cert)},
                    {"jordan_blocks", jordan_block_sizes(*N)},
                    {"passed", ok}}
                   .dump(2)
            << "\n";
    } else {
        out << "center " << o.center << ", dim " << N->dim() << ", nilpotency index " << N->index() << "\n";
        out << "graded dims:";
        for (std::size_t i = 0; i < graded.size(); ++i)
            out << " " << i << ":" << graded[i];
        out << "\n";
        for (std::size_t i = 0; i < W.steps.size(); ++i)
            out << "  W_" << i << " dim " << W.steps[i].dim() << "\n";
        out << "axioms: " << (cert.passed ? "pass" : "FAIL") << "\n";
        for (const auto& v : cert.violations)
            out << "  axiom " << v.axiom << " at " << v.index << ": " << v.detail << "\n";
        out << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? ExitPass : ExitMathFailure;
}

int cmd_diamond(const Options& o, std::ostream& out)
{
    const SpectrumH spec = resolve_spectrum(o);
    AssembleOptions opts;
    opts.seed = o.seed;
    opts.samples = o.samples;
    if (!o.monodromy_file.empty()) {
        const Json j = read_json_file(o.monodromy_file);
        if (!j.is_object())
            throw UsageError("--monodromy expects {\"degree\": matrix, ...}");
        for (const auto& [k, v] : j.items())
            opts.monodromy_override[std::stoi(k)] = qmatrix_from_json(v);
    }
    KKPReport r;
    try {
        r = assemble_and_check(spec, opts);
    } catch (const std::invalid_argument& e) {
        if (!o.monodromy_file.empty())
            throw UsageError(e.what());
        throw;
    }

    if (o.format == "json") {
        out << to_json(r).dump(2) << "\n";
    } else {
        out << "n = " << spec.n << ", lambda = " << to_string(spec.lambda) << "\n";
        out << "critical values:";
        for (const auto& c : r.critical)
            out << " " << to_string(c.value);
        out << "\n";
        out << "H^*(Y, Y_b):";
        for (const auto& [d, v] : r.data.profile.normalized().dims)
            out << " h^" << d << " = " << v;
        out << "\n\n" << render_diamond(r.h) << "\n";
        out << "equality h = f = i: " << (r.equality ? "yes" : "no") << "\n";
        out << "sum identity: " << (r.sum_identity ? "yes" : "no") << "\n";
        out << "center value: " << r.center_value << "\n";
        out << "Fano type: " << to_string(r.fano.verdict) << "\n";
        for (const auto& d : r.discrepancies)
            out << "DISCREPANCY " << d.topic << ": stated " << d.stated << "; derived " << d.derived << "\n";
        if (r.passed)
            out << "PASS\n";
        else
            out << "FAILED: " << r.first_counterexample << "\n";
    }
    return r.passed ? ExitPass : ExitMathFailure;
}

int cmd_classify(const Options& o, std::ostream& out)
{
    if (!o.n)
        throw UsageError("--n is required");
    if (o.V.empty() || o.W.empty())
        throw UsageError("--V and --W are required");
    const QMatrix V = parse_rows(o.V, *o.n);
    const QMatrix W = parse_rows(o.W, *o.n);
    std::size_t label = 0;
    try {
        label = classify_diagonal_orbit(V, W);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const std::size_t k = V.rows();
    const std::string kind = label == 0 ? "open" : label == k ? "closed" : "intermediate";
    if (o.format == "json")
        out << Json{{"n", *o.n}, {"k", k}, {"label", label}, {"orbit", kind}}.dump(2) << "\n";
    else
        out << "label " << label << " (" << kind << " orbit)\n";
    return ExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact Hodge-theoretic checks for an LG model on an adjoint orbit", "lgkkp"};
    app.require_subcommand(1);

    auto add_spec = [&](CLI::App* sub) {
        sub->add_option("--n", o.n, "orbit parameter n >= 1");
        sub->add_option("--lambda", o.lambda, "comma-separated rationals lambda_1..lambda_{n+1}");
        sub->add_option("--auto-lambda", o.auto_lambda, "use (1, 2, ..., k, -k(k+1)/2)");
    };
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_sampling = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed, "sampling seed");
        sub->add_option("--samples", o.samples, "samples per locus");
    };

    auto* model = app.add_subcommand("model", "forms, critical points and values");
    add_spec(model);
    add_common(model);
    auto* verify = app.add_subcommand("verify", "rank, tameness and divisor certificates");
    add_spec(verify);
    add_sampling(verify);
    add_common(verify);
    auto* hodge = app.add_subcommand("hodge", "E-polynomials and cohomology profiles");
    add_spec(hodge);
    add_common(hodge);
    auto* weights = app.add_subcommand("weights", "monodromy weight filtration of a nilpotent matrix");
    weights->add_option("--matrix", o.matrix_file, "JSON file: list of rows or {\"matrix\": rows}")->required();
    weights->add_option("--center", o.center, "center m of W(N, m)")->required();
    add_common(weights);
    auto* diamond = app.add_subcommand("diamond", "full KKP report");
    add_spec(diamond);
    add_sampling(diamond);
    diamond->add_option("--monodromy", o.monodromy_file, "JSON file {\"degree\": matrix} replacing N = 0");
    add_common(diamond);
    auto* classify = app.add_subcommand("classify", "diagonal-orbit label of (V, W)");
    classify->add_option("--n", o.n, "ambient dimension n+1")->required();
    classify->add_option("--V", o.V, "rows of V: e<i> or a:b:c, comma separated")->required();
    classify->add_option("--W", o.W, "rows of W")->required();
    add_common(classify);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ExitPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ExitPass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return ExitUsage;
    }

    try {
        if (model->parsed())
            return cmd_model(o, out);
        if (verify->parsed())
            return cmd_verify(o, out);
        if (hodge->parsed())
            return cmd_hodge(o, out);
        if (weights->parsed())
            return cmd_weights(o, out, err);
        if (diamond->parsed())
            return cmd_diamond(o, out);
        if (classify->parsed())
            return cmd_classify(o, out);
    } catch (const InvalidSpectrum& e) {
        err << "invalid lambda: " << e.what() << "\n";
        return ExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return ExitUsage;
    } catch (const HypothesisViolated& e) {
        err << "hypothesis violated: " << e.what() << "\n";
        return ExitMathFailure;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return ExitUsage;
    }
    return ExitUsage;
}

}  // namespace lgkkp
