#include "isospec/perm_group.hpp"

#include "isospec/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace isospec {

namespace {

bool sorted_contains(const std::vector<Permutation>& sorted, const Permutation& p) {
    return std::binary_search(sorted.begin(), sorted.end(), p);
}

void check_degrees(std::size_t degree, const std::vector<Permutation>& perms) {
    for (const Permutation& p : perms)
        if (p.degree() != degree)
            throw InvalidArgumentError("permutation degree " +
                                       std::to_string(p.degree()) +
                                       " does not match expected degree " +
                                       std::to_string(degree));
}

// Breadth-first closure of {generators} under composition, starting from
// the identity. Throws TooLargeError past the cap.
std::vector<Permutation> close_elements(std::size_t degree,
                                        const std::vector<Permutation>& generators,
                                        std::size_t cap) {
    std::set<Permutation> seen;
    std::deque<Permutation> frontier;
    seen.insert(Permutation::identity(degree));
    frontier.push_back(Permutation::identity(degree));
    while (!frontier.empty()) {
        Permutation current = std::move(frontier.front());
        frontier.pop_front();
        for (const Permutation& g : generators) {
            Permutation next = compose(current, g);
            if (seen.insert(next).second) {
                if (seen.size() > cap)
                    throw TooLargeError("group closure exceeds the cap of " +
                                        std::to_string(cap) + " elements");
                frontier.push_back(std::move(next));
            }
        }
    }
    // std::set iteration is already lexicographic on image vectors
    return std::vector<Permutation>(seen.begin(), seen.end());
}

} // namespace

bool PermGroup::contains(const Permutation& p) const {
    return sorted_contains(elements, p);
}

PermGroup close_group(std::size_t degree, const std::vector<Permutation>& generators,
                      std::size_t cap) {
    if (generators.empty())
        throw InvalidArgumentError("at least one generator is required");
    check_degrees(degree, generators);
    PermGroup g;
    g.degree = degree;
    g.generators = generators;
    g.elements = close_elements(degree, generators, cap);
    return g;
}

bool Subgroup::contains(const Permutation& p) const {
    return sorted_contains(elements, p);
}

Subgroup Subgroup::from_generators(const PermGroup& parent,
                                   const std::vector<Permutation>& generators) {
    if (generators.empty())
        throw InvalidArgumentError("at least one generator is required");
    check_degrees(parent.degree, generators);
    for (const Permutation& p : generators)
        if (!parent.contains(p))
            throw InvalidArgumentError("subgroup generator " + p.cycle_string() +
                                       " is not an element of the parent group");
    Subgroup h;
    h.degree = parent.degree;
    h.elements = close_elements(parent.degree, generators, parent.order());
    return h;
}

Subgroup Subgroup::from_elements(const PermGroup& parent,
                                 std::vector<Permutation> elements) {
    check_degrees(parent.degree, elements);
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty() || !sorted_contains(elements, Permutation::identity(parent.degree)))
        throw InvalidArgumentError("subgroup must contain the identity");
    for (const Permutation& p : elements) {
        if (!parent.contains(p))
            throw InvalidArgumentError("element " + p.cycle_string() +
                                       " is not in the parent group");
        if (!sorted_contains(elements, p.inverse()))
            throw InvalidArgumentError("element set is not closed under inverse");
        for (const Permutation& q : elements)
            if (!sorted_contains(elements, compose(p, q)))
                throw InvalidArgumentError("element set is not closed under product");
    }
    Subgroup h;
    h.degree = parent.degree;
    h.elements = std::move(elements);
    return h;
}

Subgroup Subgroup::whole_group(const PermGroup& parent) {
    Subgroup h;
    h.degree = parent.degree;
    h.elements = parent.elements;
    return h;
}

Subgroup Subgroup::trivial(const PermGroup& parent) {
    Subgroup h;
    h.degree = parent.degree;
    h.elements = {Permutation::identity(parent.degree)};
    return h;
}

std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g) {
    std::vector<ConjugacyClass> classes;
    std::set<Permutation> assigned;
    // elements are sorted, so the first unassigned member of each class is
    // its lexicographically minimal one: a deterministic representative.
    for (const Permutation& rep : g.elements) {
        if (assigned.count(rep))
            continue;
        std::set<Permutation> members;
        for (const Permutation& x : g.elements)
            members.insert(conjugate(rep, x));
        ConjugacyClass c;
        c.representative = rep;
        c.elements.assign(members.begin(), members.end());
        assigned.insert(members.begin(), members.end());
        classes.push_back(std::move(c));
    }
    return classes;
}

GassmannReport is_gassmann(const PermGroup& g, const Subgroup& h1, const Subgroup& h2) {
    GassmannReport report;
    report.gassmann = true;
    for (const ConjugacyClass& c : conjugacy_classes(g)) {
        GassmannRow row;
        row.representative = c.representative;
        row.class_size = c.size();
        for (const Permutation& x : c.elements) {
            if (h1.contains(x))
                ++row.count_h1;
            if (h2.contains(x))
                ++row.count_h2;
        }
        if (row.count_h1 != row.count_h2)
            report.gassmann = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

bool are_conjugate(const PermGroup& g, const Subgroup& h1, const Subgroup& h2) {
    if (h1.order() != h2.order())
        return false;
    for (const Permutation& x : g.elements) {
        bool all_inside = true;
        for (const Permutation& h : h1.elements) {
            if (!h2.contains(conjugate(h, x))) {
                all_inside = false;
                break;
            }
        }
        // equal orders make the containment an equality
        if (all_inside)
            return true;
    }
    return false;
}

} // namespace isospec
