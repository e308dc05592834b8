#pragma once

// Test-side ground truth for Hilbert symbols at finite places, fully
// independent of the formula-based implementation under test: decides
// whether z^2 = a x^2 + b y^2 has a nontrivial p-adic solution by
// breadth-first search over primitive solution triples modulo p^j, with a
// multivariate Hensel early exit. Any true solution scales to a primitive
// one, so searching triples that are nonzero mod p is exhaustive.

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace test_oracle {

inline int vp_or_large(long long n, long long p) {
    if (n == 0)
        return 1 << 20;  // effectively +infinity
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

/// True iff z^2 = a x^2 + b y^2 is solvable over Q_p (a, b nonzero
/// integers, p prime). Search depth 3 + 2*max(vp(a), vp(b)) suffices for
/// the Hensel exit to fire on every solvable case in the tested range.
inline bool padic_solvable(long long a, long long b, long long p) {
    const int k = 3 + 2 * std::max(vp_or_large(a, p), vp_or_large(b, p));
    auto quad = [a, b](long long x, long long y, long long z) {
        return a * x * x + b * y * y - z * z;
    };
    auto grad_val = [a, b, p](long long x, long long y, long long z) {
        return std::min({vp_or_large(2 * a * x, p), vp_or_large(2 * b * y, p),
                         vp_or_large(2 * z, p)});
    };

    using Triple = std::tuple<long long, long long, long long>;
    std::vector<Triple> frontier;
    for (long long x = 0; x < p; ++x)
        for (long long y = 0; y < p; ++y)
            for (long long z = 0; z < p; ++z)
                if ((x || y || z) && quad(x, y, z) % p == 0)
                    frontier.emplace_back(x, y, z);

    long long modulus = p;
    std::size_t nodes = 0;
    for (int depth = 1; depth <= k; ++depth) {
        std::set<Triple> next;
        for (const auto& [x, y, z] : frontier) {
            if (++nodes > 10'000'000)
                throw std::runtime_error("p-adic oracle exceeded its node cap");
            const long long q = quad(x, y, z);
            if (q == 0)
                return true;  // exact integer point
            if (vp_or_large(q, p) > 2 * grad_val(x, y, z))
                return true;  // Hensel lifts this approximation
            if (depth == k)
                continue;
            const long long next_modulus = modulus * p;
            for (long long dx = 0; dx < p; ++dx) {
                const long long xx = x + dx * modulus;
                for (long long dy = 0; dy < p; ++dy) {
                    const long long yy = y + dy * modulus;
                    for (long long dz = 0; dz < p; ++dz) {
                        const long long zz = z + dz * modulus;
                        if (quad(xx, yy, zz) % next_modulus == 0)
                            next.emplace(xx, yy, zz);
                    }
                }
            }
        }
        frontier.assign(next.begin(), next.end());
        if (frontier.empty())
            return false;
        modulus *= p;
    }
    return false;
}

} // namespace test_oracle
