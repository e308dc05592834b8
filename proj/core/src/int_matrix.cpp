#include "isospec/int_matrix.hpp"

namespace isospec {

bool is_square(const IntMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size())
            return false;
    return true;
}

bool is_symmetric(const IntMatrix& m) {
    if (!is_square(m))
        return false;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (m[i][j] != m[j][i])
                return false;
    return true;
}

IntMatrix zero_matrix(std::size_t n) {
    return IntMatrix(n, std::vector<Integer>(n, Integer(0)));
}

} // namespace isospec
