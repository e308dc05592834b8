#include "isospec/fixtures.hpp"

namespace isospec {
namespace fixtures {

std::vector<Permutation> fano_group_generators() {
    return {Permutation({5, 0, 6, 1, 3, 2, 4}),   // an order-7 element
            Permutation({0, 5, 6, 3, 4, 1, 2})};  // an involution fixing point 0
}

std::vector<Permutation> fano_point_stabilizer_generators() {
    return {Permutation({0, 1, 2, 5, 6, 3, 4}), Permutation({0, 3, 4, 2, 1, 6, 5})};
}

std::vector<Permutation> fano_plane_stabilizer_generators() {
    return {Permutation({0, 2, 1, 3, 4, 6, 5}), Permutation({1, 0, 2, 4, 6, 3, 5})};
}

std::vector<Permutation> fano_schreier_multiset() {
    Permutation a({1, 2, 0, 3, 5, 6, 4});
    Permutation b({0, 4, 3, 1, 2, 6, 5});
    return {a, a.inverse(), b, b.inverse()};
}

PermGroup fano_group() {
    return close_group(7, fano_group_generators());
}

} // namespace fixtures
} // namespace isospec
