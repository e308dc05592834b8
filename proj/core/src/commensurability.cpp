#include "isospec/commensurability.hpp"

#include "isospec/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace isospec {

namespace {

// Invariants of c laid out over the universe's place indices (zero where
// the class is split).
std::vector<LocalInvariant> invariant_vector(const PlaceUniverse& u,
                                             const BrauerClass& c) {
    std::vector<LocalInvariant> v(u.places.size());
    for (const BrauerClass::Entry& e : c.entries()) {
        std::optional<std::size_t> index = u.index_of(e.first.label);
        if (!index)
            throw InvalidArgumentError("class is supported at place '" +
                                       e.first.label +
                                       "', which is outside the universe");
        v[*index] = e.second;
    }
    return v;
}

// sigma carries `from` onto `to` iff inv_to(sigma(v)) = inv_from(v) for
// every place index v.
bool carries(const Permutation& sigma, const std::vector<LocalInvariant>& from,
             const std::vector<LocalInvariant>& to) {
    for (std::size_t i = 0; i < from.size(); ++i)
        if (!(to[sigma(i)] == from[i]))
            return false;
    return true;
}

std::vector<int> negated_vector(const std::vector<int>& e) {
    std::vector<int> out = e;
    for (int& x : out)
        x = -x;
    return out;
}

} // namespace

std::string to_string(RingRelation r) {
    switch (r) {
    case RingRelation::isomorphic: return "isomorphic";
    case RingRelation::anti_isomorphic: return "anti_isomorphic";
    case RingRelation::neither: return "neither";
    }
    throw InvalidArgumentError("unknown ring relation");
}

RingRelation ring_relation_from_string(const std::string& text) {
    if (text == "isomorphic") return RingRelation::isomorphic;
    if (text == "anti_isomorphic") return RingRelation::anti_isomorphic;
    if (text == "neither") return RingRelation::neither;
    throw InvalidArgumentError("unknown ring relation '" + text + "'");
}

CommensurabilityVerdict decide_ring_relation(const PlaceUniverse& u,
                                             const BrauerClass& c1,
                                             const BrauerClass& c2) {
    const std::vector<LocalInvariant> v1 = invariant_vector(u, c1);
    const std::vector<LocalInvariant> v2 = invariant_vector(u, c2);
    if (!v1[u.nu0_index].is_zero() || !v2[u.nu0_index].is_zero())
        throw Nu0RamifiedError("classes must split at nu0 = " + u.nu0().label);
    const std::vector<LocalInvariant> v2_op = invariant_vector(u, c2.opposite());

    // Isomorphic takes precedence over anti-isomorphic globally, so the
    // anti pass only starts once the iso pass has failed for every
    // automorphism. The element list is sorted with the identity first,
    // which makes witnesses deterministic (c = c gets the identity).
    for (const std::vector<LocalInvariant>* target : {&v2, &v2_op}) {
        for (const Permutation& sigma : u.automorphisms) {
            if (sigma(u.nu0_index) != u.nu0_index)
                continue;
            if (carries(sigma, v1, *target)) {
                CommensurabilityVerdict verdict;
                verdict.relation = target == &v2 ? RingRelation::isomorphic
                                                 : RingRelation::anti_isomorphic;
                verdict.witness = sigma;
                verdict.fixes_nu0 = true;
                return verdict;
            }
        }
    }
    return CommensurabilityVerdict{};
}

int choose_t(const Integer& m, const Integer& d) {
    if (d < 3)
        throw DegreeTooSmallError("degree " + d.get_str() +
                                  " < 3: a vector and its negation coincide mod 2");
    if (m < 1)
        throw InvalidArgumentError("family size must be at least 1");
    for (int t = 2;; t += 2) {
        Integer pow2 = 1;
        mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), static_cast<unsigned long>(t));
        if (pow2 >= 2 * m * t)
            return t;
    }
}

BrauerClass class_from_vector(const std::vector<Place>& T,
                              const std::vector<int>& vector, const Integer& d) {
    if (vector.size() != T.size())
        throw InvalidArgumentError("vector length does not match |T|");
    std::vector<BrauerClass::Entry> entries;
    entries.reserve(T.size());
    for (std::size_t j = 0; j < T.size(); ++j) {
        if (vector[j] != 1 && vector[j] != -1)
            throw InvalidArgumentError("vector entries must be +1 or -1");
        entries.emplace_back(T[j], LocalInvariant(Integer(vector[j]), d));
    }
    return make_class(std::move(entries));
}

FamilyCertificate enumerate_family(const PlaceUniverse& u, const Integer& d,
                                   const Integer& m, const std::vector<Place>& T) {
    const int t = choose_t(m, d);  // also rejects d < 3, m < 1
    if (T.size() != static_cast<std::size_t>(t))
        throw InvalidArgumentError("|T| = " + std::to_string(T.size()) +
                                   " but choose_t(m, d) = " + std::to_string(t));

    // canonicalize T against the universe and check the orbit hypothesis
    std::vector<Place> places;
    places.reserve(T.size());
    for (const Place& given : T) {
        std::optional<std::size_t> index = u.index_of(given.label);
        if (!index)
            throw InvalidArgumentError("place '" + given.label +
                                       "' is outside the universe");
        const Place& place = u.places[*index];
        if (place.kind != PlaceKind::finite)
            throw InvalidArgumentError("T must consist of finite places; '" +
                                       place.label + "' is not");
        if (place.label == u.nu0().label)
            throw InvalidArgumentError("T must not contain nu0");
        places.push_back(place);
    }
    for (std::size_t i = 0; i < places.size(); ++i)
        for (std::size_t j = i + 1; j < places.size(); ++j) {
            if (places[i].label == places[j].label)
                throw InvalidArgumentError("duplicate place '" + places[i].label +
                                           "' in T");
            if (places[i].orbit_id == places[j].orbit_id)
                throw OrbitCollisionError("places '" + places[i].label + "' and '" +
                                          places[j].label +
                                          "' share the automorphism orbit '" +
                                          places[i].orbit_id + "'");
        }

    // lexicographically first m balanced vectors with e_1 = +1 (+1 sorts
    // before -1, encoded 0/1 so next_permutation walks them in order)
    FamilyCertificate cert;
    cert.d = d;
    cert.T = std::move(places);
    std::vector<int> bits(static_cast<std::size_t>(t) - 1, 0);
    std::fill(bits.begin() + (t / 2 - 1), bits.end(), 1);
    do {
        std::vector<int> e(static_cast<std::size_t>(t));
        e[0] = 1;
        for (std::size_t j = 1; j < e.size(); ++j)
            e[j] = bits[j - 1] == 0 ? 1 : -1;
        cert.vectors.push_back(std::move(e));
        if (Integer(static_cast<unsigned long>(cert.vectors.size())) == m)
            break;
    } while (std::next_permutation(bits.begin(), bits.end()));
    if (Integer(static_cast<unsigned long>(cert.vectors.size())) < m)
        throw InsufficientVectorsError(
            "only " + std::to_string(cert.vectors.size()) +
            " admissible vectors exist for t = " + std::to_string(t));

    for (const std::vector<int>& e : cert.vectors)
        cert.classes.push_back(class_from_vector(cert.T, e, d));

    const std::size_t count = cert.classes.size();
    cert.pairwise.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        cert.pairwise[i].resize(count);
        for (std::size_t j = 0; j < count; ++j) {
            cert.pairwise[i][j] = decide_ring_relation(u, cert.classes[i], cert.classes[j]);
            if (i != j && cert.pairwise[i][j].relation != RingRelation::neither)
                throw std::logic_error(
                    "enumerate_family produced related classes at (" +
                    std::to_string(i) + ", " + std::to_string(j) +
                    "); the orbit hypothesis should make this impossible");
        }
    }
    return cert;
}

CertificateCheck verify_certificate(const PlaceUniverse& u,
                                    const FamilyCertificate& cert) {
    CertificateCheck check;
    auto fail = [&check](std::string line) {
        check.ok = false;
        check.failures.push_back(std::move(line));
    };

    if (cert.d < 3)
        fail("degree d = " + cert.d.get_str() + " is below 3");

    const std::size_t t = cert.T.size();
    if (t < 2 || t % 2 != 0)
        fail("|T| = " + std::to_string(t) + " is not an even size >= 2");
    for (const Place& given : cert.T) {
        std::optional<std::size_t> index = u.index_of(given.label);
        if (!index) {
            fail("place '" + given.label + "' is outside the universe");
            continue;
        }
        const Place& place = u.places[*index];
        if (place.kind != PlaceKind::finite)
            fail("place '" + place.label + "' is not finite");
        if (place.orbit_id != given.orbit_id)
            fail("place '" + given.label + "' carries orbit_id '" + given.orbit_id +
                 "' but the universe says '" + place.orbit_id + "'");
        if (place.label == u.nu0().label)
            fail("T contains nu0");
    }
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i + 1; j < t; ++j)
            if (cert.T[i].orbit_id == cert.T[j].orbit_id)
                fail("places '" + cert.T[i].label + "' and '" + cert.T[j].label +
                     "' share an automorphism orbit");

    const std::size_t m = cert.vectors.size();
    if (m < 1)
        fail("certificate holds no vectors");
    if (cert.classes.size() != m)
        fail("vector and class counts differ");

    for (std::size_t i = 0; i < m; ++i) {
        const std::vector<int>& e = cert.vectors[i];
        if (e.size() != t) {
            fail("vector " + std::to_string(i) + " has wrong length");
            continue;
        }
        int sum = 0;
        bool entries_ok = true;
        for (int x : e) {
            if (x != 1 && x != -1)
                entries_ok = false;
            else
                sum += x;
        }
        if (!entries_ok)
            fail("vector " + std::to_string(i) + " has entries outside {+1,-1}");
        else if (sum != 0)
            fail("vector " + std::to_string(i) + " is not balanced");
        if (!e.empty() && e[0] != 1)
            fail("vector " + std::to_string(i) + " does not start with +1");
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            if (cert.vectors[i] == cert.vectors[j])
                fail("vectors " + std::to_string(i) + " and " + std::to_string(j) +
                     " coincide");
            if (cert.vectors[i] == negated_vector(cert.vectors[j]))
                fail("vector " + std::to_string(i) + " is the negation of vector " +
                     std::to_string(j));
        }

    for (std::size_t i = 0; i < m && i < cert.classes.size(); ++i) {
        if (cert.vectors[i].size() != t)
            continue;
        try {
            if (!(cert.classes[i] == class_from_vector(cert.T, cert.vectors[i], cert.d)))
                fail("class " + std::to_string(i) +
                     " does not match its vector expansion");
        } catch (const DomainError& err) {
            fail("class " + std::to_string(i) + " cannot be rebuilt: " +
                 std::string(err.what()));
        }
    }

    if (cert.pairwise.size() != m) {
        fail("pairwise table has wrong row count");
        return check;
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (cert.pairwise[i].size() != m) {
            fail("pairwise row " + std::to_string(i) + " has wrong length");
            continue;
        }
        for (std::size_t j = 0; j < m && i < cert.classes.size(); ++j) {
            if (j >= cert.classes.size())
                break;
            try {
                CommensurabilityVerdict fresh =
                    decide_ring_relation(u, cert.classes[i], cert.classes[j]);
                if (fresh.relation != cert.pairwise[i][j].relation)
                    fail("stored verdict at (" + std::to_string(i) + ", " +
                         std::to_string(j) + ") is " +
                         to_string(cert.pairwise[i][j].relation) +
                         " but recomputation gives " + to_string(fresh.relation));
                if (i != j && fresh.relation != RingRelation::neither)
                    fail("classes " + std::to_string(i) + " and " + std::to_string(j) +
                         " are " + to_string(fresh.relation));
                if (i == j && fresh.relation != RingRelation::isomorphic)
                    fail("class " + std::to_string(i) + " is not isomorphic to itself");
            } catch (const DomainError& err) {
                fail("verdict (" + std::to_string(i) + ", " + std::to_string(j) +
                     ") cannot be recomputed: " + std::string(err.what()));
            }
        }
    }
    return check;
}

} // namespace isospec
