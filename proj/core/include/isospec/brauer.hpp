#pragma once

#include "isospec/local_invariant.hpp"
#include "isospec/place.hpp"

#include <utility>
#include <vector>

namespace isospec {

/// A Brauer class of the base field, presented by its finitely many nonzero
/// local invariants. Entries are kept sorted by place label and never store
/// a zero invariant, so class equality is plain equality of the entry lists
/// and serialized classes are byte-stable.
class BrauerClass {
public:
    using Entry = std::pair<Place, LocalInvariant>;

    /// The trivial (split) class.
    BrauerClass() = default;

    /// Label-sorted entries, all with nonzero invariant.
    const std::vector<Entry>& entries() const { return entries_; }

    bool is_trivial() const { return entries_.empty(); }

    /// Invariant at a place, zero when the place is outside the support.
    /// Lookup is by label (labels are unique within a universe).
    LocalInvariant invariant_at(const Place& place) const;

    /// Order of the class in the Brauer group: lcm of the invariant
    /// denominators. Equals the degree of the division algebra representing
    /// the class. 1 for the trivial class.
    Integer exponent() const;

    /// Support of the invariant mapping, sorted by label.
    std::vector<Place> ramification_set() const;

    /// Class of the opposite algebra: every invariant negated mod 1. Same
    /// ramification set, same exponent; an involution.
    BrauerClass opposite() const;

    friend bool operator==(const BrauerClass& a, const BrauerClass& b) {
        return a.entries_ == b.entries_;
    }
    friend bool operator!=(const BrauerClass& a, const BrauerClass& b) {
        return !(a == b);
    }
    /// Lexicographic on entries; only used for ordered containers.
    friend bool operator<(const BrauerClass& a, const BrauerClass& b) {
        return a.entries_ < b.entries_;
    }

private:
    explicit BrauerClass(std::vector<Entry> entries) : entries_(std::move(entries)) {}
    friend BrauerClass make_class(std::vector<Entry> entries);

    std::vector<Entry> entries_;
};

/// Validates raw invariant data and builds a class. Zero entries are
/// dropped; the rest are stored sorted by place label.
///
/// Throws InvalidArgumentError if two entries share a place label,
/// ArchimedeanViolationError if a real place carries an invariant outside
/// {0, 1/2} or a complex place a nonzero one, and SumNonZeroError if the
/// invariants do not sum to zero in Q/Z. The archimedean checks run before
/// the sum check, so a lone bad real entry reports the local violation.
BrauerClass make_class(std::vector<BrauerClass::Entry> entries);

/// Sum of the given invariants in Q/Z. Exposed as a pre-validation helper;
/// equals zero on the entries of any constructed class.
LocalInvariant sum_invariants(const std::vector<BrauerClass::Entry>& entries);
LocalInvariant sum_invariants(const BrauerClass& c);

/// True iff the degree-d algebra in class c stays division at v, i.e. the
/// invariant at v has denominator exactly d. Requires exponent(c) | d
/// (throws DegreeMismatchError otherwise; InvalidArgumentError for d < 1).
bool is_locally_division(const BrauerClass& c, const Place& v, const Integer& d);

} // namespace isospec
