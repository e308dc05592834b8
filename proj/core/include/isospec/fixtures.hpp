#pragma once

#include "isospec/perm_group.hpp"

#include <vector>

namespace isospec {
namespace fixtures {

/// Bundled demonstration data: the simple group of order 168 = GL(3, F_2)
/// acting on the 7 nonzero vectors of F_2^3 (the points of the Fano
/// plane), with the stabilizer of a point and the stabilizer of a plane
/// (an index-7 pair of non-conjugate subgroups meeting every conjugacy
/// class equally), plus a fixed symmetric generator multiset for the two
/// Schreier coset graphs.
///
/// Point order: vectors numbered by binary value, point i <-> vector i+1
/// (so point 0 is 001, point 6 is 111).

/// Generators of the full group.
std::vector<Permutation> fano_group_generators();

/// Generators of the stabilizer of point 0.
std::vector<Permutation> fano_point_stabilizer_generators();

/// Generators of the stabilizer of the plane {0, 1, 2} (the span of 001
/// and 010).
std::vector<Permutation> fano_plane_stabilizer_generators();

/// A symmetric multiset of four group elements (two inverse pairs) used
/// for the bundled Schreier graphs.
std::vector<Permutation> fano_schreier_multiset();

/// Fully closed group (order 168).
PermGroup fano_group();

} // namespace fixtures
} // namespace isospec
