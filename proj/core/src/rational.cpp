#include "isospec/rational.hpp"

#include "isospec/errors.hpp"

namespace isospec {

Rational parse_rational(const std::string& text) {
    if (text.empty())
        throw InvalidArgumentError("empty rational literal");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw InvalidArgumentError("malformed rational literal '" + text + "'");
    if (q.get_den() == 0)
        throw InvalidArgumentError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q, bool always_fraction) {
    if (!always_fraction && q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

long valuation(const Integer& n, const Integer& p) {
    if (n == 0)
        throw InvalidArgumentError("valuation of zero is undefined");
    Integer m = n;
    long v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

long valuation(const Rational& q, const Integer& p) {
    return valuation(Integer(q.get_num()), p) - valuation(Integer(q.get_den()), p);
}

} // namespace isospec
