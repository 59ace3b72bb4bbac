#include "lgkkp/multipoly.hpp"

#include <numeric>
#include <stdexcept>

namespace lgkkp {

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const
{
    const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db)
        return da < db;
    return a < b;
}

MultiPoly MultiPoly::constant(std::size_t num_vars, const Rational& c)
{
    MultiPoly p(num_vars);
    p.add_term(Exponent(num_vars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index)
{
    if (index >= num_vars)
        throw std::out_of_range("variable index " + std::to_string(index) + " >= " + std::to_string(num_vars));
    Exponent e(num_vars, 0);
    e[index] = 1;
    return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const Exponent& exponent, const Rational& c)
{
    MultiPoly p(exponent.size());
    p.add_term(exponent, c);
    return p;
}

int MultiPoly::total_degree() const
{
    if (terms_.empty())
        return -1;
    const auto& e = terms_.rbegin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

Rational MultiPoly::coefficient(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c)
{
    if (e.size() != num_vars_)
        throw std::invalid_argument("exponent of length " + std::to_string(e.size()) + " in a polynomial of " +
                                    std::to_string(num_vars_) + " variables");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational MultiPoly::evaluate(const QVector& point) const
{
    if (point.size() != num_vars_)
        throw std::invalid_argument("evaluate: point of length " + std::to_string(point.size()) +
                                    " for " + std::to_string(num_vars_) + " variables");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < num_vars_ && term != 0; ++i)
            for (unsigned k = 0; k < e[i]; ++k)
                term *= point[i];
        total += term;
    }
    return total;
}

MultiPoly MultiPoly::partial(std::size_t var) const
{
    if (var >= num_vars_)
        throw std::out_of_range("partial: variable " + std::to_string(var) + " >= " + std::to_string(num_vars_));
    MultiPoly d(num_vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0)
            continue;
        Exponent de = e;
        --de[var];
        d.add_term(de, c * Rational(static_cast<long>(e[var])));
    }
    return d;
}

MultiPoly MultiPoly::specialize(std::size_t var, const Rational& value) const
{
    if (var >= num_vars_)
        throw std::out_of_range("specialize: variable " + std::to_string(var) + " >= " +
                                std::to_string(num_vars_));
    MultiPoly out(num_vars_ - 1);
    for (const auto& [e, c] : terms_) {
        Rational coeff = c;
        for (unsigned k = 0; k < e[var]; ++k)
            coeff *= value;
        Exponent reduced;
        reduced.reserve(num_vars_ - 1);
        for (std::size_t i = 0; i < num_vars_; ++i)
            if (i != var)
                reduced.push_back(e[i]);
        out.add_term(reduced, coeff);
    }
    return out;
}

void MultiPoly::check_arity(const MultiPoly& o) const
{
    if (num_vars_ != o.num_vars_)
        throw std::invalid_argument("polynomials in " + std::to_string(num_vars_) + " and " +
                                    std::to_string(o.num_vars_) + " variables");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const
{
    check_arity(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const
{
    check_arity(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_)
        r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const
{
    check_arity(o);
    MultiPoly r(num_vars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exponent e(num_vars_);
            for (std::size_t i = 0; i < num_vars_; ++i)
                e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& s) const
{
    MultiPoly r(num_vars_);
    if (s == 0)
        return r;
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, c * s);
    return r;
}

MultiPoly MultiPoly::operator-() const
{
    return *this * Rational(-1);
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool unit_monomial = std::accumulate(e.begin(), e.end(), 0u) == 0;
        Rational mag = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        if (mag != 1 || unit_monomial)
            out += lgkkp::to_string(mag);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            out += i < names.size() ? names[i] : "x" + std::to_string(i);
            if (e[i] > 1)
                out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

MultiPoly poly_partial(const MultiPoly& p, std::size_t var)
{
    return p.partial(var);
}

}  // namespace lgkkp
