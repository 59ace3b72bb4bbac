#include "lgkkp/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace lgkkp {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

Integer to_integer(std::string_view s)
{
    if (s.front() == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    const std::string_view s = trim(text);
    const auto slash = s.find('/');
    const std::string_view num = s.substr(0, slash);
    if (!is_integer_literal(num))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    if (slash == std::string_view::npos)
        return Rational(to_integer(num));

    const std::string_view den = s.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-')
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    Integer d = to_integer(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(to_integer(num), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r)
{
    return r.get_str();
}

std::string to_string(const QVector& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

QVector parse_rational_list(std::string_view text)
{
    QVector out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                               : comma - start);
        out.push_back(parse_rational(piece));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

bool is_zero_vector(const QVector& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

Rational dot(const QVector& a, const QVector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot: length mismatch " + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()));
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Rational random_rational(std::mt19937_64& rng, long bound, long max_den)
{
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, max_den < 1 ? 1 : max_den);
    const long p = num(rng);
    const long q = den(rng);
    Rational r{Integer(p), Integer(q)};
    r.canonicalize();
    return r;
}

Rational random_nonzero_rational(std::mt19937_64& rng, long bound, long max_den)
{
    for (;;) {
        Rational r = random_rational(rng, bound, max_den);
        if (r != 0)
            return r;
    }
}

}  // namespace lgkkp
