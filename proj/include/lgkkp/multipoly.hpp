#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "lgkkp/rational.hpp"

namespace lgkkp {

using Exponent = std::vector<unsigned>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// variable 0 most significant.
struct GrlexLess {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Polynomial in a fixed number of variables with rational coefficients.
/// Zero coefficients are never stored.
class MultiPoly {
public:
    using TermMap = std::map<Exponent, Rational, GrlexLess>;

    explicit MultiPoly(std::size_t num_vars = 0) : num_vars_(num_vars) {}

    static MultiPoly constant(std::size_t num_vars, const Rational& c);
    static MultiPoly variable(std::size_t num_vars, std::size_t index);
    static MultiPoly monomial(const Exponent& exponent, const Rational& c);

    std::size_t num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const;
    const TermMap& terms() const { return terms_; }
    Rational coefficient(const Exponent& e) const;

    /// Adds c * x^e, dropping the term if the result cancels.
    void add_term(const Exponent& e, const Rational& c);

    Rational evaluate(const QVector& point) const;
    MultiPoly partial(std::size_t var) const;

    /// Substitutes `value` for `var` and removes the variable, so the result
    /// lives in num_vars() - 1 variables.
    MultiPoly specialize(std::size_t var, const Rational& value) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& s) const;
    MultiPoly operator-() const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b)
    {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }

    /// Human-readable form with variables named by `names` (x0, x1, ... when
    /// empty). Terms printed leading term first.
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    void check_arity(const MultiPoly& o) const;

    std::size_t num_vars_ = 0;
    TermMap terms_;
};

MultiPoly poly_partial(const MultiPoly& p, std::size_t var);

}  // namespace lgkkp
