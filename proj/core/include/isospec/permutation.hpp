#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace isospec {

/// A permutation of {0, ..., n-1} in one-line notation (the image vector).
///
/// Composition convention, used consistently everywhere: compose(p, q) is
/// "apply p, then q", i.e. compose(p, q)(x) = q(p(x)). Deterministic
/// orderings (group element lists, coset keys, class representatives) use
/// the lexicographic order on image vectors.
class Permutation {
public:
    Permutation() = default;

    /// Validates that images is a bijection of {0..n-1}; throws
    /// InvalidArgumentError otherwise.
    explicit Permutation(std::vector<std::size_t> images);

    static Permutation identity(std::size_t n);

    std::size_t degree() const { return images_.size(); }
    std::size_t operator()(std::size_t x) const { return images_[x]; }
    const std::vector<std::size_t>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;

    /// Cycle notation for display, e.g. "(0 1 2)(3 4)"; "()" for the
    /// identity. Fixed points are omitted.
    std::string cycle_string() const;

    friend bool operator==(const Permutation& a, const Permutation& b) {
        return a.images_ == b.images_;
    }
    friend bool operator!=(const Permutation& a, const Permutation& b) {
        return !(a == b);
    }
    friend bool operator<(const Permutation& a, const Permutation& b) {
        return a.images_ < b.images_;
    }

private:
    std::vector<std::size_t> images_;
};

/// compose(p, q)(x) = q(p(x)): apply p first, then q. Degrees must match.
Permutation compose(const Permutation& p, const Permutation& q);

/// Conjugate of h by x: apply x^-1, then h, then x.
Permutation conjugate(const Permutation& h, const Permutation& x);

} // namespace isospec
