#pragma once

#include "isospec/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace isospec {

/// A monic polynomial with arbitrary-precision integer coefficients, the
/// exact spectral fingerprint of a symmetric integer matrix.
class IntPolynomial {
public:
    /// The constant polynomial 1 (characteristic polynomial of the empty
    /// matrix).
    IntPolynomial() : coefficients_{Integer(1)} {}

    /// Coefficients in ascending order of degree; the last (leading) one
    /// must be 1. Throws InvalidArgumentError otherwise.
    explicit IntPolynomial(std::vector<Integer> coefficients);

    std::size_t degree() const { return coefficients_.size() - 1; }

    /// Coefficient of x^k (zero beyond the degree).
    const Integer& coefficient(std::size_t k) const;

    const std::vector<Integer>& coefficients() const { return coefficients_; }

    /// Exact evaluation by Horner's rule.
    Integer evaluate(const Integer& x) const;

    /// Human-readable form, e.g. "x^3 - 3*x - 2".
    std::string str() const;

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coefficients_ == b.coefficients_;
    }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) {
        return !(a == b);
    }

private:
    std::vector<Integer> coefficients_;
};

} // namespace isospec
