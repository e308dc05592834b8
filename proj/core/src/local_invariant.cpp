#include "isospec/local_invariant.hpp"

#include "isospec/errors.hpp"

namespace isospec {

LocalInvariant::LocalInvariant(const Integer& num, const Integer& den) {
    if (den == 0)
        throw InvalidArgumentError("local invariant with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    value_ = reduce_mod_1(q);
}

Rational LocalInvariant::reduce_mod_1(const Rational& q) {
    // floor division of num by den gives the integer part with sign handled,
    // so the remainder lands in [0, den).
    Integer f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    Rational r = q - Rational(f);
    r.canonicalize();
    return r;
}

std::string LocalInvariant::str() const {
    return format_rational(value_, /*always_fraction=*/true);
}

LocalInvariant LocalInvariant::from_string(const std::string& text) {
    return LocalInvariant(parse_rational(text));
}

} // namespace isospec
