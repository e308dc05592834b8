#pragma once

#include <gmpxx.h>

#include <string>

namespace isospec {

/// Exact rational arithmetic is delegated to GMP throughout; no floating
/// point participates in any verdict.
using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "a/b", "a", or "-a/b" into an exact rational. Throws
/// InvalidArgumentError on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

/// Formats a rational as "num/den" in lowest terms ("3" stays "3/1"
/// only when always_fraction is set).
std::string format_rational(const Rational& q, bool always_fraction = false);

/// p-adic valuation of a nonzero integer.
long valuation(const Integer& n, const Integer& p);

/// p-adic valuation of a nonzero rational: v(num) - v(den).
long valuation(const Rational& q, const Integer& p);

} // namespace isospec
