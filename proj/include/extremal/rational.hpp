#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace extremal {

/// Exact rational number, always kept in lowest terms with positive denominator.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

/// Accepts "p", "-p" or "p/q"; throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Smallest integer >= q.
mpz_class ceil_of(const Rational& q);

Rational sum(const std::vector<Rational>& values);

}  // namespace extremal
