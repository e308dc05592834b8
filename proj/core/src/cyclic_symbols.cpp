#include "isospec/cyclic_symbols.hpp"

#include "isospec/errors.hpp"

#include <algorithm>
#include <set>

namespace isospec {

namespace {

// Residue of the p-unit part of q modulo `mod` (p for odd-p Legendre work,
// 8 for the 2-adic classes): strips all powers of p from numerator and
// denominator, then multiplies by the inverse of the denominator mod `mod`.
Integer unit_residue(const Rational& q, const Integer& p, const Integer& mod) {
    Integer num = q.get_num();
    Integer den = q.get_den();
    while (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t()))
        mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t()))
        mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    Integer den_inv;
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
    Integer r = num * den_inv;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
    return r;
}

// (u - 1)/2 mod 2 for odd u: 1 iff u = 3 mod 4.
int epsilon_mod2(const Integer& u_mod8) {
    return mpz_tstbit(u_mod8.get_mpz_t(), 1) ? 1 : 0;
}

// (u^2 - 1)/8 mod 2 for odd u: 1 iff u = 3 or 5 mod 8.
int omega_mod2(const Integer& u_mod8) {
    return (u_mod8 == 3 || u_mod8 == 5) ? 1 : 0;
}

int finite_hilbert_symbol(const Rational& a, const Rational& b, const Integer& p) {
    const long alpha = valuation(a, p);
    const long beta = valuation(b, p);

    if (p == 2) {
        const Integer u = unit_residue(a, p, 8);
        const Integer w = unit_residue(b, p, 8);
        const long e = epsilon_mod2(u) * epsilon_mod2(w) + alpha * omega_mod2(w) +
                       beta * omega_mod2(u);
        return (e % 2 != 0) ? -1 : +1;
    }

    const Integer u = unit_residue(a, p, p);
    const Integer w = unit_residue(b, p, p);
    int sign = +1;
    // (-1)^(alpha * beta * (p-1)/2)
    if ((alpha % 2 != 0) && (beta % 2 != 0) &&
        mpz_tstbit(Integer((p - 1) / 2).get_mpz_t(), 0))
        sign = -sign;
    if (beta % 2 != 0 && mpz_legendre(u.get_mpz_t(), p.get_mpz_t()) == -1)
        sign = -sign;
    if (alpha % 2 != 0 && mpz_legendre(w.get_mpz_t(), p.get_mpz_t()) == -1)
        sign = -sign;
    return sign;
}

} // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    if (a == 0 || b == 0)
        throw InvalidArgumentError("hilbert symbol requires nonzero arguments");
    switch (v.kind) {
    case PlaceKind::complex:
        throw ComplexPlaceError("the symbol at a complex place is identically +1");
    case PlaceKind::real:
        return (a < 0 && b < 0) ? -1 : +1;
    case PlaceKind::finite:
        return finite_hilbert_symbol(a, b, v.rational_prime());
    }
    throw InvalidArgumentError("unknown place kind");
}

int HilbertTable::product() const {
    int sign = +1;
    for (const auto& [place, s] : signs)
        sign *= s;
    return sign;
}

HilbertTable hilbert_table(const Rational& a, const Rational& b) {
    if (a == 0 || b == 0)
        throw InvalidArgumentError("hilbert symbol requires nonzero arguments");

    // Primes where the symbol can be -1: those dividing 2ab (numerators and
    // denominators alike). Collected by trial division.
    std::set<Integer> primes{2};
    for (Integer n : {a.get_num(), a.get_den(), b.get_num(), b.get_den()}) {
        n = abs(n);
        for (Integer p = 2; p * p <= n; ++p) {
            if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
                primes.insert(p);
                while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()))
                    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
            }
        }
        if (n > 1)
            primes.insert(n);
    }

    HilbertTable table{QuaternionSymbol{a, b}, {}};
    for (const Integer& p : primes) {
        Place place = Place::finite_prime(p);
        table.signs.emplace_back(place, hilbert_symbol(a, b, place));
    }
    Place real = Place::real_place();
    table.signs.emplace_back(real, hilbert_symbol(a, b, real));

    if (table.product() != +1)
        throw InternalProductFormulaViolationError(
            "hilbert symbols of (" + format_rational(a) + ", " + format_rational(b) +
            ") multiply to -1 over all relevant places");
    return table;
}

BrauerClass quaternion_class(const Rational& a, const Rational& b) {
    HilbertTable table = hilbert_table(a, b);
    std::vector<BrauerClass::Entry> entries;
    for (const auto& [place, sign] : table.signs)
        if (sign == -1)
            entries.emplace_back(place, LocalInvariant(1, 2));
    return make_class(std::move(entries));
}

LocalInvariant unramified_invariant(const UnramifiedCyclicDatum& datum) {
    if (datum.d < 2)
        throw InvalidArgumentError("cyclic algebra degree must be at least 2");
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), datum.frobenius_power.get_mpz_t(),
                   datum.d.get_mpz_t()) == 0)
        throw NotCoprimeError("frobenius power " + datum.frobenius_power.get_str() +
                              " is not invertible mod " + datum.d.get_str());
    return LocalInvariant(inv * datum.v_b, datum.d);
}

} // namespace isospec
