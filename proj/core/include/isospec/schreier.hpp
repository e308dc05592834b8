#pragma once

#include "isospec/int_matrix.hpp"
#include "isospec/perm_group.hpp"

#include <vector>

namespace isospec {

/// Schreier coset graph on the right cosets H\G. Vertices are canonically
/// labeled: the key of the coset Hx is min over h in H of compose(h, x)
/// (lexicographic), and vertices appear in first-seen order while scanning
/// the sorted parent element list. Edges come from right multiplication by
/// a symmetric generator multiset: adjacency[v][w] counts the generators
/// carrying coset v to coset w, so the matrix is symmetric, every row sums
/// to |gens|, and a generator/inverse pair fixing a coset contributes 2 to
/// the diagonal.
struct SchreierGraph {
    std::vector<Permutation> coset_keys;  // canonical representative per vertex
    IntMatrix adjacency;
    std::vector<Permutation> gens;  // the symmetrized multiset actually used

    std::size_t vertex_count() const { return coset_keys.size(); }
};

/// Builds the coset graph of h in g under the multiset s of elements of g.
/// s is symmetrized first: for each element, occurrences of its inverse are
/// topped up to match (an involution is its own inverse and is left alone);
/// the final multiset is what SchreierGraph::gens reports.
///
/// Throws InvalidArgumentError if s is empty or an element of s lies
/// outside g.
SchreierGraph schreier_graph(const PermGroup& g, const Subgroup& h,
                             const std::vector<Permutation>& s);

} // namespace isospec
