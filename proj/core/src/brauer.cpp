#include "isospec/brauer.hpp"

#include "isospec/errors.hpp"

#include <algorithm>

namespace isospec {

namespace {

const LocalInvariant kHalf(1, 2);

} // namespace

LocalInvariant BrauerClass::invariant_at(const Place& place) const {
    for (const Entry& e : entries_)
        if (e.first.label == place.label)
            return e.second;
    return LocalInvariant();
}

Integer BrauerClass::exponent() const {
    Integer result = 1;
    for (const Entry& e : entries_)
        mpz_lcm(result.get_mpz_t(), result.get_mpz_t(),
                e.second.denominator().get_mpz_t());
    return result;
}

std::vector<Place> BrauerClass::ramification_set() const {
    std::vector<Place> places;
    places.reserve(entries_.size());
    for (const Entry& e : entries_)
        places.push_back(e.first);
    return places;
}

BrauerClass BrauerClass::opposite() const {
    // Negating a nonzero element of [0,1) stays nonzero, so the support and
    // the label order are unchanged and no re-validation is needed.
    std::vector<Entry> negated = entries_;
    for (Entry& e : negated)
        e.second = e.second.negated();
    return BrauerClass(std::move(negated));
}

BrauerClass make_class(std::vector<BrauerClass::Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const BrauerClass::Entry& a, const BrauerClass::Entry& b) {
                  return a.first.label < b.first.label;
              });
    for (std::size_t i = 1; i < entries.size(); ++i)
        if (entries[i].first.label == entries[i - 1].first.label)
            throw InvalidArgumentError("duplicate place in class entries: " +
                                       entries[i].first.label);

    for (const BrauerClass::Entry& e : entries) {
        if (e.first.kind == PlaceKind::real && !e.second.is_zero() &&
            !(e.second == kHalf))
            throw ArchimedeanViolationError(
                "real place " + e.first.label + " carries invariant " +
                e.second.str() + "; only 0 and 1/2 are allowed");
        if (e.first.kind == PlaceKind::complex && !e.second.is_zero())
            throw ArchimedeanViolationError(
                "complex place " + e.first.label + " carries nonzero invariant " +
                e.second.str());
    }

    LocalInvariant total = sum_invariants(entries);
    if (!total.is_zero())
        throw SumNonZeroError("invariants sum to " + total.str() +
                              ", expected 0 mod 1");

    entries.erase(std::remove_if(entries.begin(), entries.end(),
                                 [](const BrauerClass::Entry& e) {
                                     return e.second.is_zero();
                                 }),
                  entries.end());
    return BrauerClass(std::move(entries));
}

LocalInvariant sum_invariants(const std::vector<BrauerClass::Entry>& entries) {
    LocalInvariant total;
    for (const BrauerClass::Entry& e : entries)
        total = total + e.second;
    return total;
}

LocalInvariant sum_invariants(const BrauerClass& c) {
    return sum_invariants(c.entries());
}

bool is_locally_division(const BrauerClass& c, const Place& v, const Integer& d) {
    if (d < 1)
        throw InvalidArgumentError("degree must be a positive integer");
    if (!mpz_divisible_p(d.get_mpz_t(), c.exponent().get_mpz_t()))
        throw DegreeMismatchError("degree " + d.get_str() +
                                  " is not a multiple of the class exponent " +
                                  c.exponent().get_str());
    return c.invariant_at(v).denominator() == d;
}

} // namespace isospec
