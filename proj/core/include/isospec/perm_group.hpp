#pragma once

#include "isospec/permutation.hpp"

#include <cstddef>
#include <vector>

namespace isospec {

/// A fully enumerated finite permutation group on {0..degree-1}. Elements
/// are stored sorted lexicographically by image vector, so element indices
/// and all derived orderings are deterministic.
struct PermGroup {
    std::size_t degree = 0;
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;

    std::size_t order() const { return elements.size(); }
    bool contains(const Permutation& p) const;
};

/// Default cap on closure size.
inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// Breadth-first closure of the generators. Throws TooLargeError if the
/// closure exceeds the cap, InvalidArgumentError on degree mismatches or an
/// empty generator list.
PermGroup close_group(std::size_t degree, const std::vector<Permutation>& generators,
                      std::size_t cap = kDefaultClosureCap);

/// A subgroup, stored as its full sorted element list. The parent group is
/// passed explicitly to the operations that need it, keeping this a plain
/// value type; the factories validate containment in the parent up front.
struct Subgroup {
    std::size_t degree = 0;
    std::vector<Permutation> elements;

    std::size_t order() const { return elements.size(); }
    bool contains(const Permutation& p) const;

    /// Closure of the generators inside the parent; validates membership.
    static Subgroup from_generators(const PermGroup& parent,
                                    const std::vector<Permutation>& generators);

    /// Validates that the given elements contain the identity and are
    /// closed under product and inverse, and lie in the parent.
    static Subgroup from_elements(const PermGroup& parent,
                                  std::vector<Permutation> elements);

    /// The whole parent as a subgroup of itself.
    static Subgroup whole_group(const PermGroup& parent);

    /// The trivial subgroup.
    static Subgroup trivial(const PermGroup& parent);
};

/// A conjugacy class: deterministic representative (the lexicographically
/// minimal member) plus the full sorted member list.
struct ConjugacyClass {
    Permutation representative;
    std::vector<Permutation> elements;

    std::size_t size() const { return elements.size(); }
};

/// Partition of the group into conjugacy classes by brute-force
/// conjugation, ordered by representative.
std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g);

/// Per-class row of the Gassmann comparison.
struct GassmannRow {
    Permutation representative;
    std::size_t class_size = 0;
    std::size_t count_h1 = 0;  // |C intersect H1|
    std::size_t count_h2 = 0;  // |C intersect H2|
};

struct GassmannReport {
    bool gassmann = false;
    std::vector<GassmannRow> rows;
};

/// Sunada's counting criterion: true iff |C intersect H1| = |C intersect H2|
/// for every conjugacy class C of g. The report carries all per-class
/// counts either way.
GassmannReport is_gassmann(const PermGroup& g, const Subgroup& h1, const Subgroup& h2);

/// True iff some x in g conjugates h1 onto h2 (exhaustive search).
bool are_conjugate(const PermGroup& g, const Subgroup& h1, const Subgroup& h2);

} // namespace isospec
