#pragma once

#include "isospec/rational.hpp"

#include <compare>
#include <string>

namespace isospec {

enum class PlaceKind { finite, real, complex };

std::string to_string(PlaceKind kind);
PlaceKind place_kind_from_string(const std::string& text);

/// A place (valuation class) of the base field. Finite places over the
/// rationals carry labels "p:<prime>"; the Gaussian preset adds branch tags
/// "p:<prime>+" / "p:<prime>-" for the two places above a split prime.
/// orbit_id names the orbit of the place under the automorphism group of
/// the ambient universe; places with equal orbit_id can be exchanged by
/// some automorphism, places with different orbit_id never are.
struct Place {
    PlaceKind kind = PlaceKind::finite;
    std::string label;
    std::string orbit_id;

    static Place finite_prime(const Integer& p);
    static Place real_place();
    static Place complex_place();

    bool is_archimedean() const noexcept { return kind != PlaceKind::finite; }

    /// If this is a finite place over Q with label "p:<prime>" (no branch
    /// tag), returns the prime; throws InvalidArgumentError otherwise.
    Integer rational_prime() const;

    friend bool operator==(const Place& a, const Place& b) noexcept {
        return a.kind == b.kind && a.label == b.label && a.orbit_id == b.orbit_id;
    }
    /// Places are ordered by label; labels are unique within a universe.
    friend std::strong_ordering operator<=>(const Place& a, const Place& b) noexcept {
        return a.label <=> b.label;
    }
};

} // namespace isospec
