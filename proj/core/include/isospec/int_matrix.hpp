#pragma once

#include "isospec/rational.hpp"

#include <cstddef>
#include <vector>

namespace isospec {

/// Dense square integer matrix, row-major. Arbitrary precision so spectral
/// computations stay exact.
using IntMatrix = std::vector<std::vector<Integer>>;

/// True iff the matrix is square (n rows of n entries each).
bool is_square(const IntMatrix& m);

/// True iff square and m[i][j] == m[j][i] for all i, j.
bool is_symmetric(const IntMatrix& m);

IntMatrix zero_matrix(std::size_t n);

} // namespace isospec
