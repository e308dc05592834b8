#include "isospec/permutation.hpp"

#include "isospec/errors.hpp"

#include <numeric>

namespace isospec {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t x : images_) {
        if (x >= images_.size() || seen[x])
            throw InvalidArgumentError("image vector is not a permutation of 0.." +
                                       std::to_string(images_.size() - 1));
        seen[x] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> images(n);
    std::iota(images.begin(), images.end(), std::size_t{0});
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t x = 0; x < images_.size(); ++x)
        if (images_[x] != x)
            return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x)
        inv[images_[x]] = x;
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

std::string Permutation::cycle_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (seen[start] || images_[start] == start)
            continue;
        out += '(';
        std::size_t x = start;
        bool first = true;
        do {
            if (!first)
                out += ' ';
            out += std::to_string(x);
            seen[x] = true;
            x = images_[x];
            first = false;
        } while (x != start);
        out += ')';
    }
    return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree())
        throw InvalidArgumentError("cannot compose permutations of different degrees");
    std::vector<std::size_t> images(p.degree());
    for (std::size_t x = 0; x < p.degree(); ++x)
        images[x] = q(p(x));
    return Permutation(std::move(images));
}

Permutation conjugate(const Permutation& h, const Permutation& x) {
    return compose(compose(x.inverse(), h), x);
}

} // namespace isospec
