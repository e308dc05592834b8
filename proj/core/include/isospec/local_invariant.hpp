#pragma once

#include "isospec/rational.hpp"

#include <compare>
#include <string>

namespace isospec {

/// An element of Q/Z stored as the canonical representative in [0,1):
/// a reduced fraction num/den with 0 <= num < den, gcd(num,den) = 1.
/// Addition and negation are taken modulo 1.
class LocalInvariant {
public:
    /// The zero invariant (split place).
    LocalInvariant() : value_(0, 1) {}

    /// Reduces num/den modulo 1 into canonical form. den must be nonzero.
    LocalInvariant(const Integer& num, const Integer& den);

    /// Canonicalizes an arbitrary exact rational modulo 1.
    explicit LocalInvariant(const Rational& q) : value_(reduce_mod_1(q)) {}

    const Integer& numerator() const { return value_.get_num(); }
    const Integer& denominator() const { return value_.get_den(); }
    const Rational& value() const { return value_; }

    bool is_zero() const { return value_ == 0; }

    /// Additive inverse in Q/Z: a/d -> (d-a)/d.
    LocalInvariant negated() const { return LocalInvariant(Rational(-value_)); }

    LocalInvariant operator+(const LocalInvariant& other) const {
        return LocalInvariant(Rational(value_ + other.value_));
    }

    /// Reduced string form "num/den" ("0/1" for zero).
    std::string str() const;
    static LocalInvariant from_string(const std::string& text);

    friend bool operator==(const LocalInvariant& a, const LocalInvariant& b) {
        return a.value_ == b.value_;
    }
    friend bool operator<(const LocalInvariant& a, const LocalInvariant& b) {
        return a.value_ < b.value_;
    }

private:
    static Rational reduce_mod_1(const Rational& q);

    Rational value_;
};

} // namespace isospec
