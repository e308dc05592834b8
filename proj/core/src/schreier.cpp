#include "isospec/schreier.hpp"

#include "isospec/errors.hpp"

#include <algorithm>
#include <map>

namespace isospec {

namespace {

// Canonical key of the right coset Hx: the lexicographically minimal
// element {compose(h, x) : h in H}.
Permutation coset_key(const Subgroup& h, const Permutation& x) {
    Permutation best = compose(h.elements.front(), x);
    for (std::size_t i = 1; i < h.elements.size(); ++i) {
        Permutation candidate = compose(h.elements[i], x);
        if (candidate < best)
            best = std::move(candidate);
    }
    return best;
}

std::vector<Permutation> symmetrize(const std::vector<Permutation>& s) {
    std::map<Permutation, std::size_t> counts;
    for (const Permutation& p : s)
        ++counts[p];
    // top up each element's inverse to the same multiplicity
    std::map<Permutation, std::size_t> full = counts;
    for (const auto& [p, count] : counts) {
        std::size_t& inv_count = full[p.inverse()];
        inv_count = std::max(inv_count, count);
    }
    std::vector<Permutation> result;
    for (const auto& [p, count] : full)
        result.insert(result.end(), count, p);
    return result;
}

} // namespace

SchreierGraph schreier_graph(const PermGroup& g, const Subgroup& h,
                             const std::vector<Permutation>& s) {
    if (s.empty())
        throw InvalidArgumentError("generator multiset must be nonempty");
    for (const Permutation& p : s)
        if (!g.contains(p))
            throw InvalidArgumentError("generator " + p.cycle_string() +
                                       " is not an element of the group");

    SchreierGraph graph;
    graph.gens = symmetrize(s);

    // enumerate cosets in first-seen order over the sorted element list
    std::map<Permutation, std::size_t> vertex_of_key;
    for (const Permutation& x : g.elements) {
        Permutation key = coset_key(h, x);
        if (!vertex_of_key.count(key)) {
            std::size_t index = graph.coset_keys.size();
            graph.coset_keys.push_back(key);
            vertex_of_key.emplace(std::move(key), index);
        }
    }

    const std::size_t n = graph.coset_keys.size();
    graph.adjacency = zero_matrix(n);
    for (std::size_t v = 0; v < n; ++v) {
        for (const Permutation& sigma : graph.gens) {
            Permutation target = coset_key(h, compose(graph.coset_keys[v], sigma));
            graph.adjacency[v][vertex_of_key.at(target)] += 1;
        }
    }
    return graph;
}

} // namespace isospec
