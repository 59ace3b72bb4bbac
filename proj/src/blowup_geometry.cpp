#include "lgkkp/blowup_geometry.hpp"

#include <algorithm>

namespace lgkkp {

namespace {

std::size_t first_nonzero(const QVector& v)
{
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& c) { return c != 0; });
    return static_cast<std::size_t>(it - v.begin());
}

// Order of vanishing of g at p along a generic direction: 0, 1, or 2 since g
// is quadratic.
int vanishing_order(const MultiPoly& g, const QVector& p)
{
    if (g.evaluate(p) != 0)
        return 0;
    for (std::size_t v = 0; v < g.num_vars(); ++v)
        if (g.partial(v).evaluate(p) != 0)
            return 1;
    return 2;
}

}  // namespace

bool graph_membership(const BiFormPair& forms, const GraphPoint& p)
{
    if (p.fiber.t == 0 && p.fiber.s == 0)
        return false;
    const QVector c = p.base.coords();
    const Rational fv = forms.f.evaluate(c);
    const Rational gv = forms.g.evaluate(c);
    return p.fiber.t * gv == p.fiber.s * fv;
}

ChartPotential chart_potential(const BiFormPair& forms, std::size_t i, std::size_t j)
{
    const std::size_t m = static_cast<std::size_t>(forms.n) + 1;
    if (i >= m || j >= m)
        throw std::out_of_range("chart index out of range for n = " + std::to_string(forms.n));
    // Drop y_j first so the index of x_i is unaffected.
    ChartPotential chart{forms.n, i, j, forms.f, forms.g};
    chart.numerator = chart.numerator.specialize(forms.y_var(j), 1).specialize(forms.x_var(i), 1);
    chart.denominator = chart.denominator.specialize(forms.y_var(j), 1).specialize(forms.x_var(i), 1);
    return chart;
}

QVector to_chart(const ChartPotential& chart, const BiPoint& p)
{
    const Rational& xi = p.x().at(chart.x_chart);
    const Rational& yj = p.y().at(chart.y_chart);
    if (xi == 0 || yj == 0)
        throw std::domain_error("point is not in chart (" + std::to_string(chart.x_chart + 1) + "," +
                                std::to_string(chart.y_chart + 1) + ")");
    QVector a;
    for (std::size_t k = 0; k < p.x().size(); ++k)
        if (k != chart.x_chart)
            a.push_back(p.x()[k] / xi);
    for (std::size_t k = 0; k < p.y().size(); ++k)
        if (k != chart.y_chart)
            a.push_back(p.y()[k] / yj);
    return a;
}

BiPoint from_chart(const ChartPotential& chart, const QVector& affine)
{
    const std::size_t n = static_cast<std::size_t>(chart.n);
    if (affine.size() != 2 * n)
        throw std::invalid_argument("chart point needs " + std::to_string(2 * n) + " coordinates");
    QVector x, y;
    std::size_t idx = 0;
    for (std::size_t k = 0; k <= n; ++k)
        x.push_back(k == chart.x_chart ? Rational(1) : affine[idx++]);
    for (std::size_t k = 0; k <= n; ++k)
        y.push_back(k == chart.y_chart ? Rational(1) : affine[idx++]);
    return {std::move(x), std::move(y)};
}

QMatrix chart_jacobian(const ChartPotential& chart, const QVector& point)
{
    const std::size_t vars = chart.numerator.num_vars();
    QMatrix j(2, vars);
    for (std::size_t v = 0; v < vars; ++v) {
        j(0, v) = chart.numerator.partial(v).evaluate(point);
        j(1, v) = chart.denominator.partial(v).evaluate(point);
    }
    return j;
}

HessianReport hessian_nondegenerate_at(const ChartPotential& chart, const QVector& point)
{
    const MultiPoly& P = chart.numerator;
    const MultiPoly& Q = chart.denominator;
    const std::size_t d = P.num_vars();
    const Rational q = Q.evaluate(point);
    if (q == 0)
        throw ChartBoundary("denominator vanishes: point is on F(1,n) in this chart");
    const Rational p = P.evaluate(point);

    QVector Pa(d), Qa(d);
    for (std::size_t a = 0; a < d; ++a) {
        Pa[a] = P.partial(a).evaluate(point);
        Qa[a] = Q.partial(a).evaluate(point);
    }

    HessianReport out;
    out.gradient.resize(d);
    const Rational q2 = q * q;
    const Rational q3 = q2 * q;
    for (std::size_t a = 0; a < d; ++a)
        out.gradient[a] = (q * Pa[a] - p * Qa[a]) / q2;

    out.hessian = QMatrix(d, d);
    for (std::size_t a = 0; a < d; ++a) {
        const MultiPoly dPa = P.partial(a);
        const MultiPoly dQa = Q.partial(a);
        for (std::size_t b = 0; b < d; ++b) {
            const Rational Pab = dPa.partial(b).evaluate(point);
            const Rational Qab = dQa.partial(b).evaluate(point);
            out.hessian(a, b) = (Qa[b] * Pa[a] + q * Pab - Pa[b] * Qa[a] - p * Qab) / q2 -
                                2 * (q * Pa[a] - p * Qa[a]) * Qa[b] / q3;
        }
    }
    out.determinant = determinant(out.hessian);
    out.nondegenerate = out.determinant != 0;
    return out;
}

TamenessCertificate verify_no_critical_on_E(const SpectrumH& spec, std::uint64_t seed, std::size_t count)
{
    const BiFormPair forms = build_forms(spec);
    TamenessCertificate cert{spec.n, true, {}};
    for (auto& p : sample_indeterminacy(spec, seed, count)) {
        const std::size_t i = first_nonzero(p.x());
        const std::size_t j = first_nonzero(p.y());
        const ChartPotential chart = chart_potential(forms, i, j);
        const std::size_t r = rank(chart_jacobian(chart, to_chart(chart, p)));
        cert.certified = cert.certified && r == 2;
        cert.samples.push_back({std::move(p), i, j, r});
    }
    cert.certified = cert.certified && !cert.samples.empty();
    return cert;
}

std::string DivisorClass::to_string() const
{
    return "(" + std::to_string(a) + "," + std::to_string(b) + ";" + std::to_string(e) + ")";
}

DivisorReport divisor_classes(int n)
{
    const SpectrumH spec = auto_spectrum(n);
    const BiFormPair forms = build_forms(spec);

    DivisorReport r;
    r.n = n;
    r.center_codimension = 2;  // I = {f = g = 0}, a complete intersection

    const auto flag_sample = sample_and_rank(spec, Locus::FlagMinusI, 0, 1).front().point;
    r.pole_multiplicity = vanishing_order(forms.g, flag_sample.coords());
    const auto center_sample = sample_indeterminacy(spec, 0, 1).front();
    r.flag_multiplicity_along_center = vanishing_order(forms.g, center_sample.coords());

    const long m = n + 1;
    // K_{P^n x P^n} = (-(n+1), -(n+1)); K_Z = pi^* K + (c - 1) E.
    r.anticanonical = {m, m, -(r.center_codimension - 1)};
    r.strict_flag = {1, 1, -r.flag_multiplicity_along_center};
    r.exceptional = {0, 0, 1};
    r.boundary = r.strict_flag + r.exceptional;
    // w = f/g has its poles where g vanishes away from E: the strict transform
    // of F(1,n).
    r.pole = r.strict_flag;
    r.boundary_is_anticanonical = r.boundary == r.anticanonical;
    if (!r.boundary_is_anticanonical)
        r.finding = "OPEN-QUESTION: [D_Z] = " + r.boundary.to_string() + " differs from -K_Z = " +
                    r.anticanonical.to_string() + "; the anticanonical boundary condition is not met by these classes";
    return r;
}

}  // namespace lgkkp
