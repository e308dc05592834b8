#pragma once

#include "isospec/brauer.hpp"
#include "isospec/place_universe.hpp"

#include <optional>
#include <string>
#include <vector>

namespace isospec {

enum class RingRelation { isomorphic, anti_isomorphic, neither };

std::string to_string(RingRelation r);
RingRelation ring_relation_from_string(const std::string& text);

/// Outcome of the ring-relation decision. When relation is not `neither`,
/// witness holds an automorphism (as a permutation of the universe's place
/// list) that fixes nu0 and carries the first class onto the second
/// (isomorphic) or onto its opposite (anti_isomorphic).
struct CommensurabilityVerdict {
    RingRelation relation = RingRelation::neither;
    std::optional<Permutation> witness;
    bool fixes_nu0 = false;
};

/// Decides whether two classes are related by a ring isomorphism or
/// anti-isomorphism over the universe: searches every automorphism fixing
/// nu0 for one carrying c1's invariant mapping exactly onto c2's
/// (isomorphic), then onto opposite(c2)'s (anti_isomorphic). Isomorphic
/// takes precedence when both hold. `neither` certifies
/// non-commensurability of the associated quotients.
///
/// Throws Nu0RamifiedError if either class is ramified at nu0 and
/// InvalidArgumentError if a support place is outside the universe.
CommensurabilityVerdict decide_ring_relation(const PlaceUniverse& u,
                                             const BrauerClass& c1,
                                             const BrauerClass& c2);

/// Smallest even t >= 2 with 2^t >= 2m * t, the size of the ramification
/// set needed for m pairwise unrelated classes of degree d. Throws
/// DegreeTooSmallError if d < 3 (degree 2 cannot separate a vector from its
/// negation: 1 = -1 mod 2) and InvalidArgumentError if m < 1.
int choose_t(const Integer& m, const Integer& d);

/// A certified family of m pairwise non-commensurable classes: degree d,
/// a common ramification set T of t finite places in pairwise distinct
/// automorphism orbits, the +-1 vectors (first entry +1, balanced), the
/// expanded classes (invariant e_j/d at T_j), and the full m x m table of
/// verdicts, `neither` off the diagonal.
struct FamilyCertificate {
    Integer d;
    std::vector<Place> T;
    std::vector<std::vector<int>> vectors;  // entries +1 / -1
    std::vector<BrauerClass> classes;
    std::vector<std::vector<CommensurabilityVerdict>> pairwise;
};

/// Expands a +-1 vector over T into a class: invariant e_j/d at T_j
/// (so -1 becomes (d-1)/d). Validates through make_class.
BrauerClass class_from_vector(const std::vector<Place>& T,
                              const std::vector<int>& vector, const Integer& d);

/// Emits the lexicographically first m vectors (+1 sorting before -1) from
/// {e in {+1,-1}^t : e_1 = +1, exactly t/2 entries +1} over the given T
/// with |T| = choose_t(m, d), builds the classes, and fills the pairwise
/// table, asserting every off-diagonal verdict is `neither`.
///
/// Throws DegreeTooSmallError (d < 3), OrbitCollisionError (two places of T
/// in one orbit), InsufficientVectorsError (fewer than m candidates), and
/// InvalidArgumentError on other precondition violations (wrong |T|,
/// non-finite or duplicate places, T touching nu0).
FamilyCertificate enumerate_family(const PlaceUniverse& u, const Integer& d,
                                   const Integer& m, const std::vector<Place>& T);

/// Outcome of re-checking a certificate from scratch.
struct CertificateCheck {
    bool ok = true;
    std::vector<std::string> failures;

    explicit operator bool() const { return ok; }
};

/// Recomputes every structural invariant of the certificate and every
/// pairwise verdict; collects a line per violated condition instead of
/// throwing.
CertificateCheck verify_certificate(const PlaceUniverse& u,
                                    const FamilyCertificate& cert);

} // namespace isospec
