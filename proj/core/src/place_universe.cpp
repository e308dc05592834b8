#include "isospec/place_universe.hpp"

#include "isospec/errors.hpp"
#include "isospec/perm_group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace isospec {

std::optional<std::size_t> PlaceUniverse::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < places.size(); ++i)
        if (places[i].label == label)
            return i;
    return std::nullopt;
}

PlaceUniverse PlaceUniverse::make(std::vector<Place> places, const std::string& nu0_label,
                                  std::vector<Permutation> generators) {
    PlaceUniverse u;
    u.places = std::move(places);

    std::set<std::string> labels;
    for (const Place& p : u.places)
        if (!labels.insert(p.label).second)
            throw InvalidArgumentError("duplicate place label: " + p.label);

    std::optional<std::size_t> nu0 = u.index_of(nu0_label);
    if (!nu0)
        throw InvalidArgumentError("nu0 label '" + nu0_label +
                                   "' is not among the places");
    u.nu0_index = *nu0;

    const std::size_t n = u.places.size();
    for (const Permutation& g : generators) {
        if (g.degree() != n)
            throw InvalidArgumentError("automorphism degree does not match the "
                                       "number of places");
        for (std::size_t i = 0; i < n; ++i) {
            if (u.places[g(i)].kind != u.places[i].kind)
                throw InvalidArgumentError(
                    "automorphism maps place " + u.places[i].label + " to " +
                    u.places[g(i)].label + " of a different kind");
        }
    }
    u.automorphism_generators = std::move(generators);

    if (u.automorphism_generators.empty()) {
        u.automorphisms = {Permutation::identity(n)};
    } else {
        u.automorphisms = close_group(n, u.automorphism_generators).elements;
    }

    // the orbit_id partition must coincide with the actual group orbits
    std::map<std::string, std::set<std::size_t>> by_orbit_id;
    for (std::size_t i = 0; i < n; ++i)
        by_orbit_id[u.places[i].orbit_id].insert(i);
    for (std::size_t i = 0; i < n; ++i) {
        std::set<std::size_t> orbit;
        for (const Permutation& g : u.automorphisms)
            orbit.insert(g(i));
        if (orbit != by_orbit_id.at(u.places[i].orbit_id))
            throw InvalidArgumentError(
                "orbit_id '" + u.places[i].orbit_id +
                "' does not match the automorphism orbit of place " +
                u.places[i].label);
    }
    return u;
}

PlaceUniverse PlaceUniverse::rationals(const std::vector<Integer>& primes) {
    std::vector<Place> places;
    places.reserve(primes.size() + 1);
    for (const Integer& p : primes)
        places.push_back(Place::finite_prime(p));
    places.push_back(Place::real_place());
    return make(std::move(places), "real", {});
}

PlaceUniverse PlaceUniverse::gaussian_rationals(const std::vector<Integer>& primes) {
    std::vector<Place> places;
    std::vector<std::pair<std::size_t, std::size_t>> swaps;
    for (const Integer& p : primes) {
        Place base = Place::finite_prime(p);  // validates primality
        if (p % 4 == 1) {
            Place plus = base;
            Place minus = base;
            plus.label = base.label + "+";
            minus.label = base.label + "-";
            plus.orbit_id = minus.orbit_id = base.label;
            swaps.emplace_back(places.size(), places.size() + 1);
            places.push_back(std::move(plus));
            places.push_back(std::move(minus));
        } else {
            // p = 2 is ramified, p = 3 mod 4 inert: one place, fixed
            places.push_back(std::move(base));
        }
    }
    places.push_back(Place::complex_place());

    std::vector<std::size_t> images(places.size());
    for (std::size_t i = 0; i < places.size(); ++i)
        images[i] = i;
    for (const auto& [a, b] : swaps) {
        images[a] = b;
        images[b] = a;
    }
    std::vector<Permutation> generators;
    Permutation conj{std::move(images)};
    if (!conj.is_identity())
        generators.push_back(std::move(conj));
    return make(std::move(places), "complex", std::move(generators));
}

} // namespace isospec
