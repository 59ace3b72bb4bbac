#pragma once

#include <gmpxx.h>

#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace lgkkp {

// Always canonical after arithmetic; values built from strings go through
// parse_rational which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;
using QVector = std::vector<Rational>;

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);

std::string to_string(const QVector& v);

/// Splits "1,2,-3/4" into rationals.
QVector parse_rational_list(std::string_view text);

bool is_zero_vector(const QVector& v);

Rational dot(const QVector& a, const QVector& b);

// Deterministic draws used by the seeded samplers. Numerators in
// [-bound, bound], denominators in [1, max_den].
Rational random_rational(std::mt19937_64& rng, long bound, long max_den = 1);
Rational random_nonzero_rational(std::mt19937_64& rng, long bound, long max_den = 1);

}  // namespace lgkkp
