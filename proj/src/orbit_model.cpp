#include "lgkkp/orbit_model.hpp"

#include <algorithm>
#include <set>

#include "lgkkp/subspace.hpp"

namespace lgkkp {

namespace {

constexpr long kCoordBound = 5;
constexpr long kCoordDen = 3;

void normalize_projective(QVector& v, const char* which)
{
    auto it = std::find_if(v.begin(), v.end(), [](const Rational& c) { return c != 0; });
    if (it == v.end())
        throw std::invalid_argument(std::string("BiPoint: ") + which + " is the zero vector");
    const Rational lead = *it;
    for (auto& c : v)
        c /= lead;
}

QVector random_vector(std::mt19937_64& rng, std::size_t len, bool nonzero_entries)
{
    QVector v(len);
    for (auto& c : v)
        c = nonzero_entries ? random_nonzero_rational(rng, kCoordBound, kCoordDen)
                            : random_rational(rng, kCoordBound, kCoordDen);
    return v;
}

bool all_distinct(const QVector& v)
{
    std::set<Rational> seen(v.begin(), v.end());
    return seen.size() == v.size();
}

void require_same_n(const SpectrumH& spec, const BiPoint& p)
{
    if (p.n() != spec.n)
        throw std::invalid_argument("point lives in P^" + std::to_string(p.n()) + " x P^" +
                                    std::to_string(p.n()) + ", spectrum has n = " + std::to_string(spec.n));
}

}  // namespace

void validate(const SpectrumH& spec)
{
    if (spec.n < 1)
        throw InvalidSpectrum("n must be >= 1, got " + std::to_string(spec.n), {});
    if (spec.lambda.size() != static_cast<std::size_t>(spec.n) + 1)
        throw InvalidSpectrum("expected " + std::to_string(spec.n + 1) + " eigenvalues, got " +
                                  std::to_string(spec.lambda.size()),
                              {});
    for (std::size_t i = 0; i < spec.lambda.size(); ++i)
        for (std::size_t j = i + 1; j < spec.lambda.size(); ++j)
            if (spec.lambda[i] == spec.lambda[j])
                throw InvalidSpectrum("H is not regular: lambda_" + std::to_string(i + 1) + " = lambda_" +
                                          std::to_string(j + 1) + " = " + to_string(spec.lambda[i]),
                                      {i, j});
    Rational total = 0;
    for (const auto& l : spec.lambda)
        total += l;
    if (total != 0) {
        std::vector<std::size_t> all(spec.lambda.size());
        for (std::size_t i = 0; i < all.size(); ++i)
            all[i] = i;
        throw InvalidSpectrum("H is not traceless: sum of lambda is " + to_string(total), all);
    }
}

SpectrumH make_spectrum(QVector lambda)
{
    SpectrumH spec{static_cast<int>(lambda.size()) - 1, std::move(lambda)};
    validate(spec);
    return spec;
}

SpectrumH auto_spectrum(int n)
{
    QVector lambda;
    for (int i = 1; i <= n; ++i)
        lambda.emplace_back(i);
    lambda.emplace_back(-n * (n + 1) / 2);
    return make_spectrum(std::move(lambda));
}

SpectrumH random_spectrum(std::mt19937_64& rng, int n)
{
    for (;;) {
        QVector lambda(static_cast<std::size_t>(n) + 1);
        Rational total = 0;
        for (int i = 0; i < n; ++i) {
            lambda[i] = random_rational(rng, 9, 4);
            total += lambda[i];
        }
        lambda[n] = -total;
        if (all_distinct(lambda))
            return make_spectrum(std::move(lambda));
    }
}

BiPoint::BiPoint(QVector x, QVector y) : x_(std::move(x)), y_(std::move(y))
{
    if (x_.size() != y_.size() || x_.size() < 2)
        throw std::invalid_argument("BiPoint: x and y must have the same length >= 2");
    normalize_projective(x_, "x");
    normalize_projective(y_, "y");
}

BiPoint BiPoint::coordinate(int n, std::size_t i, std::size_t j)
{
    QVector x(static_cast<std::size_t>(n) + 1, Rational(0));
    QVector y(static_cast<std::size_t>(n) + 1, Rational(0));
    x.at(i) = 1;
    y.at(j) = 1;
    return {std::move(x), std::move(y)};
}

QVector BiPoint::coords() const
{
    QVector c = x_;
    c.insert(c.end(), y_.begin(), y_.end());
    return c;
}

std::vector<std::string> BiFormPair::variable_names() const
{
    std::vector<std::string> names;
    for (int i = 1; i <= n + 1; ++i)
        names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= n + 1; ++i)
        names.push_back("y" + std::to_string(i));
    return names;
}

BiFormPair build_forms(const SpectrumH& spec)
{
    validate(spec);
    const std::size_t m = static_cast<std::size_t>(spec.n) + 1;
    const std::size_t vars = 2 * m;
    BiFormPair forms{spec.n, MultiPoly(vars), MultiPoly(vars)};
    for (std::size_t i = 0; i < m; ++i) {
        Exponent e(vars, 0);
        e[forms.x_var(i)] = 1;
        e[forms.y_var(i)] = 1;
        forms.f.add_term(e, spec.lambda[i]);
        forms.g.add_term(e, 1);
    }
    return forms;
}

std::optional<P1Point> evaluate_RH(const BiFormPair& forms, const BiPoint& p)
{
    const QVector c = p.coords();
    P1Point v{forms.f.evaluate(c), forms.g.evaluate(c)};
    if (v.t == 0 && v.s == 0)
        return std::nullopt;
    return v;
}

QMatrix jacobian_at(const BiFormPair& forms, const BiPoint& p)
{
    const QVector c = p.coords();
    const std::size_t vars = forms.f.num_vars();
    QMatrix j(2, vars);
    for (std::size_t v = 0; v < vars; ++v) {
        j(0, v) = poly_partial(forms.f, v).evaluate(c);
        j(1, v) = poly_partial(forms.g, v).evaluate(c);
    }
    return j;
}

bool on_flag(const BiFormPair& forms, const BiPoint& p)
{
    return forms.g.evaluate(p.coords()) == 0;
}

bool in_indeterminacy_locus(const BiFormPair& forms, const BiPoint& p)
{
    return !evaluate_RH(forms, p).has_value();
}

std::vector<DegenerateComponent> rank_degenerate_locus(const SpectrumH& spec)
{
    validate(spec);
    std::vector<DegenerateComponent> out;
    std::set<Rational> candidates(spec.lambda.begin(), spec.lambda.end());
    for (const auto& c : candidates) {
        DegenerateComponent comp{c, {}};
        for (std::size_t i = 0; i < spec.lambda.size(); ++i)
            if (spec.lambda[i] == c)
                comp.support.push_back(i);
        out.push_back(std::move(comp));
    }
    // Keep the index order of lambda rather than the numeric order.
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.support.front() < b.support.front(); });
    return out;
}

std::vector<CriticalPoint> critical_locus_RH(const SpectrumH& spec)
{
    const BiFormPair forms = build_forms(spec);
    std::vector<CriticalPoint> out;
    for (const auto& comp : rank_degenerate_locus(spec)) {
        if (comp.support.size() != 1)
            throw std::logic_error("rank-degenerate component of dimension > 0 for a regular H");
        const std::size_t i = comp.support.front();
        BiPoint p = BiPoint::coordinate(spec.n, i, i);
        const QVector c = p.coords();
        const Rational gv = forms.g.evaluate(c);
        const Rational fv = forms.f.evaluate(c);
        if (gv == 0)
            throw std::logic_error("critical point on F(1,n)");
        out.push_back({i, std::move(p), fv / gv, gv});
    }
    return out;
}

std::vector<BiPoint> sample_indeterminacy(const SpectrumH& spec, std::uint64_t seed, std::size_t count)
{
    validate(spec);
    const std::size_t m = static_cast<std::size_t>(spec.n) + 1;
    if (spec.n == 1) {
        // lambda_1 != lambda_2 turns f = g = 0 into x1 y1 = x2 y2 = 0.
        return {BiPoint::coordinate(1, 0, 1), BiPoint::coordinate(1, 1, 0)};
    }
    std::mt19937_64 rng(seed);
    std::vector<BiPoint> out;
    out.reserve(count);
    while (out.size() < count) {
        QVector x = random_vector(rng, m, true);
        if (!all_distinct(x))
            continue;
        QMatrix eqs(2, m);
        for (std::size_t i = 0; i < m; ++i) {
            eqs(0, i) = spec.lambda[i] * x[i];
            eqs(1, i) = x[i];
        }
        const Subspace sol = kernel(eqs);
        QVector y(m, Rational(0));
        for (std::size_t b = 0; b < sol.dim(); ++b) {
            const Rational w = random_rational(rng, kCoordBound, kCoordDen);
            const QVector v = sol.basis_vector(b);
            for (std::size_t i = 0; i < m; ++i)
                y[i] += w * v[i];
        }
        if (is_zero_vector(y))
            continue;
        out.emplace_back(std::move(x), std::move(y));
    }
    return out;
}

std::vector<RankSample> sample_and_rank(const SpectrumH& spec, Locus locus, std::uint64_t seed,
                                        std::size_t count)
{
    const BiFormPair forms = build_forms(spec);
    const std::size_t m = static_cast<std::size_t>(spec.n) + 1;
    std::vector<RankSample> out;

    auto record = [&](BiPoint p) {
        const std::size_t r = rank(jacobian_at(forms, p));
        out.push_back({std::move(p), r});
    };

    switch (locus) {
    case Locus::I:
        for (auto& p : sample_indeterminacy(spec, seed, count))
            record(std::move(p));
        return out;
    case Locus::FlagMinusI: {
        std::mt19937_64 rng(seed);
        while (out.size() < count) {
            QVector x = random_vector(rng, m, true);
            QVector y = random_vector(rng, m, false);
            Rational partial = 0;
            for (std::size_t i = 0; i + 1 < m; ++i)
                partial += x[i] * y[i];
            y[m - 1] = -partial / x[m - 1];
            if (is_zero_vector(y))
                continue;
            BiPoint p(std::move(x), std::move(y));
            if (forms.f.evaluate(p.coords()) == 0)
                continue;
            record(std::move(p));
        }
        return out;
    }
    case Locus::Generic: {
        std::mt19937_64 rng(seed);
        while (out.size() < count) {
            QVector x = random_vector(rng, m, false);
            QVector y = random_vector(rng, m, false);
            if (is_zero_vector(x) || is_zero_vector(y))
                continue;
            record(BiPoint(std::move(x), std::move(y)));
        }
        return out;
    }
    }
    return out;
}

OrbitEmbedding embed_and_height(const SpectrumH& spec, const BiPoint& p)
{
    validate(spec);
    require_same_n(spec, p);
    const Rational pairing = dot(p.x(), p.y());
    if (pairing == 0)
        throw NotInOrbit("<x, y> = 0: the point lies on F(1,n), outside the orbit");

    const std::size_t m = static_cast<std::size_t>(spec.n) + 1;
    const Rational scale = Rational(static_cast<long>(m)) / pairing;
    QMatrix X(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            X(i, j) = scale * p.x()[i] * p.y()[j] - (i == j ? 1 : 0);

    const BiFormPair forms = build_forms(spec);
    const auto rh = evaluate_RH(forms, p);
    return {X, (QMatrix::diagonal(spec.lambda) * X).trace(), rh->t / rh->s};
}

bool in_minimal_orbit(const QMatrix& X)
{
    if (!X.is_square() || X.rows() < 2 || X.trace() != 0)
        return false;
    const std::size_t m = X.rows();
    const long n = static_cast<long>(m) - 1;

    // (t - n)(t + 1)^n expanded by the binomial theorem.
    QVector plus_one(m, Rational(0));
    Integer binom = 1;
    for (long k = 0; k <= n; ++k) {
        plus_one[k] = Rational(binom);
        binom = binom * (n - k) / (k + 1);
    }
    QVector expected(m + 1, Rational(0));
    for (std::size_t k = 0; k < m; ++k) {
        expected[k + 1] += plus_one[k];
        expected[k] -= Rational(n) * plus_one[k];
    }
    if (characteristic_polynomial(X) != expected)
        return false;

    const QMatrix id = QMatrix::identity(m);
    return ((X - id * Rational(n)) * (X + id)).is_zero();
}

std::size_t classify_diagonal_orbit(const QMatrix& V, const QMatrix& W)
{
    if (V.cols() != W.cols())
        throw std::invalid_argument("classify: V and W live in Q^" + std::to_string(V.cols()) + " and Q^" +
                                    std::to_string(W.cols()));
    if (V.rows() + W.rows() != V.cols())
        throw std::invalid_argument("classify: need k + (n+1-k) = n+1 rows, got " + std::to_string(V.rows()) +
                                    " + " + std::to_string(W.rows()) + " in Q^" + std::to_string(V.cols()));
    if (rank(V) != V.rows())
        throw std::invalid_argument("classify: rows of V are dependent");
    if (rank(W) != W.rows())
        throw std::invalid_argument("classify: rows of W are dependent");
    return intersect(Subspace::span(V), Subspace::span(W)).dim();
}

}  // namespace lgkkp
