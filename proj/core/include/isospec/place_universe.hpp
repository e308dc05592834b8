#pragma once

#include "isospec/permutation.hpp"
#include "isospec/place.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace isospec {

/// A finite set of places with a distinguished place nu0 and an explicit
/// automorphism group acting on it by permutations of the place list. Every
/// automorphism must preserve place kinds, and the orbit_id fields must
/// partition the places exactly into the orbits of the group.
struct PlaceUniverse {
    std::vector<Place> places;
    std::size_t nu0_index = 0;
    std::vector<Permutation> automorphism_generators;
    std::vector<Permutation> automorphisms;  // full closure, sorted

    const Place& nu0() const { return places[nu0_index]; }

    /// Index of the place with the given label, if present.
    std::optional<std::size_t> index_of(const std::string& label) const;

    /// Validates and closes the automorphism group (identity-only when
    /// generators is empty). Throws InvalidArgumentError on duplicate
    /// labels, unknown nu0, kind-breaking generators, or orbit_id fields
    /// that do not match the actual group orbits.
    static PlaceUniverse make(std::vector<Place> places, const std::string& nu0_label,
                              std::vector<Permutation> generators);

    /// The rationals: the given finite primes plus the real place (which is
    /// nu0), trivial automorphism group, every orbit a singleton.
    static PlaceUniverse rationals(const std::vector<Integer>& primes);

    /// The Gaussian rationals: nu0 is the complex place; each rational
    /// prime contributes its places above, with complex conjugation as the
    /// order-2 automorphism group. A split prime p = 1 mod 4 gives a
    /// swapped pair "p:N+"/"p:N-" sharing an orbit; p = 2 (ramified) and
    /// inert p = 3 mod 4 give a single fixed place.
    static PlaceUniverse gaussian_rationals(const std::vector<Integer>& primes);
};

} // namespace isospec
