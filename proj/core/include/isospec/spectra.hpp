#pragma once

#include "isospec/int_matrix.hpp"
#include "isospec/int_polynomial.hpp"
#include "isospec/schreier.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace isospec {

/// Exact characteristic polynomial det(xI - A) of a symmetric integer
/// matrix, by the Faddeev-LeVerrier recurrence in arbitrary-precision
/// arithmetic (the trace divisions are exact over the integers). Throws
/// NotSymmetricError if the matrix is not square and symmetric.
IntPolynomial char_poly(const IntMatrix& a);

/// Equal eigenvalue multisets, certified by coefficient-wise equality of
/// the exact characteristic polynomials. Never uses floating point.
bool isospectral(const IntMatrix& a, const IntMatrix& b);
bool isospectral(const SchreierGraph& g1, const SchreierGraph& g2);

enum class IsoOutcome { yes, no, undetermined };

std::string to_string(IsoOutcome o);

/// Default cap on backtracking nodes for the isomorphism search;
/// overridable per call (the CLI reads ISOSPEC_NODE_CAP).
inline constexpr std::size_t kDefaultNodeCap = 10'000'000;

struct IsomorphismResult {
    IsoOutcome outcome = IsoOutcome::undetermined;
    /// Vertex bijection with adjacency2[f(v)][f(w)] = adjacency1[v][w],
    /// present exactly when outcome is yes (verified before returning).
    std::optional<std::vector<std::size_t>> witness;
    std::size_t nodes_expanded = 0;
};

/// Exact multigraph isomorphism by backtracking over color-refinement
/// classes (iterated neighborhood-multiset colors prune the search).
/// Returns `undetermined` only when the search exceeds node_cap expanded
/// nodes. Inputs must be symmetric (NotSymmetricError otherwise).
IsomorphismResult graph_isomorphic(const IntMatrix& a, const IntMatrix& b,
                                   std::size_t node_cap = kDefaultNodeCap);

/// Combined spectral + isomorphism verdict for a graph pair.
struct IsoVerdict {
    bool isospectral = false;
    IsoOutcome isomorphic = IsoOutcome::undetermined;
    std::optional<std::vector<std::size_t>> witness;
    std::size_t nodes_expanded = 0;
};

IsoVerdict compare_graphs(const SchreierGraph& g1, const SchreierGraph& g2,
                          std::size_t node_cap = kDefaultNodeCap);
IsoVerdict compare_graphs(const IntMatrix& a, const IntMatrix& b,
                          std::size_t node_cap = kDefaultNodeCap);

/// Floating eigenvalue listing for display only (values rounded to 1e-9);
/// carries no verdict weight anywhere.
std::vector<double> eigenvalues_display(const IntMatrix& a);

} // namespace isospec
