#pragma once

#include "isospec/brauer.hpp"
#include "isospec/place.hpp"
#include "isospec/rational.hpp"

#include <utility>
#include <vector>

namespace isospec {

/// Degree-2 cyclic algebra datum: the quaternion algebra (a, b) over Q.
struct QuaternionSymbol {
    Rational a;
    Rational b;
};

/// Hilbert symbol (a,b)_v in {+1, -1}: +1 iff z^2 = a x^2 + b y^2 has a
/// nontrivial solution over the completion at v. Finite places use the
/// classical case formulas (Legendre symbols on the unit parts for odd p,
/// the mod-8 epsilon/omega classes for p = 2); the real place is a sign
/// test (-1 iff a < 0 and b < 0).
///
/// Throws InvalidArgumentError if a or b is zero, and ComplexPlaceError for
/// a complex place (the symbol there is identically +1; flagged so callers
/// do not iterate complex places).
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// Per-place sign table for a quaternion symbol, covering every place where
/// the symbol can be -1: the primes dividing 2 or a numerator/denominator
/// of a or b (in increasing order), then the real place.
struct HilbertTable {
    QuaternionSymbol symbol;
    std::vector<std::pair<Place, int>> signs;

    /// Product of all listed signs; +1 by the product formula.
    int product() const;
};

/// Computes the sign table; self-checks the product formula and throws
/// InternalProductFormulaViolationError if the signs do not multiply to +1.
HilbertTable hilbert_table(const Rational& a, const Rational& b);

/// Brauer class of the quaternion algebra (a, b): invariant 1/2 exactly at
/// the places with symbol -1. Satisfies the sum-zero constraint by the
/// product formula (re-validated through make_class).
BrauerClass quaternion_class(const Rational& a, const Rational& b);

/// Local datum of a cyclic algebra k1[z | z c z^-1 = phi(c), z^d = b] at a
/// place where k1/k is unramified: the degree d, the valuation v_b of the
/// norm element b, and which power of the Frobenius the chosen generator
/// phi is.
struct UnramifiedCyclicDatum {
    Integer d;                // degree >= 2
    Integer v_b;              // valuation of b at the place
    Integer frobenius_power;  // phi = Frob^frobenius_power, coprime to d
};

/// Local invariant at an unramified place: the canonical representative of
/// (frobenius_power^-1 * v_b)/d in Q/Z, the inverse taken mod d. With
/// phi = Frob this is v(z^d)/d = v(b)/d; other generators are normalized
/// through the mod-d inverse.
///
/// Throws NotCoprimeError if gcd(frobenius_power, d) != 1 and
/// InvalidArgumentError if d < 2.
LocalInvariant unramified_invariant(const UnramifiedCyclicDatum& datum);

} // namespace isospec
