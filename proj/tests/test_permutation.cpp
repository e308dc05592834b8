#include <doctest.h>

#include "isospec/errors.hpp"
#include "isospec/permutation.hpp"

#include <algorithm>
#include <random>
#include <vector>

using namespace isospec;

namespace {

Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::size_t> images(n);
    for (std::size_t i = 0; i < n; ++i) images[i] = i;
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation(std::move(images));
}

} // namespace

TEST_CASE("constructor validates bijectivity") {
    CHECK_NOTHROW(Permutation({0, 1, 2}));
    CHECK_NOTHROW(Permutation(std::vector<std::size_t>{}));
    CHECK_THROWS_AS(Permutation({0, 0, 2}), InvalidArgumentError);
    CHECK_THROWS_AS(Permutation({0, 3, 1}), InvalidArgumentError);
    CHECK_THROWS_AS(Permutation({1}), InvalidArgumentError);
}

TEST_CASE("identity and is_identity") {
    Permutation e = Permutation::identity(4);
    CHECK(e.degree() == 4);
    CHECK(e.is_identity());
    for (std::size_t i = 0; i < 4; ++i) CHECK(e(i) == i);
    CHECK_FALSE(Permutation({1, 0}).is_identity());
    CHECK(Permutation::identity(0).is_identity());
}

TEST_CASE("compose applies the left argument first") {
    // p = (0 1), q = (1 2): compose(p, q)(0) = q(p(0)) = q(1) = 2.
    Permutation p({1, 0, 2});
    Permutation q({0, 2, 1});
    Permutation pq = compose(p, q);
    CHECK(pq(0) == 2);
    CHECK(pq(1) == 0);
    CHECK(pq(2) == 1);
    // the other order differs
    Permutation qp = compose(q, p);
    CHECK(qp(0) == 1);
    CHECK(qp(1) == 2);
    CHECK(qp(2) == 0);
    CHECK(pq != qp);
    CHECK_THROWS_AS(compose(p, Permutation({1, 0})), InvalidArgumentError);
}

TEST_CASE("inverse undoes composition") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        Permutation p = random_permutation(rng, 1 + rng() % 9);
        CHECK(compose(p, p.inverse()).is_identity());
        CHECK(compose(p.inverse(), p).is_identity());
        CHECK(p.inverse().inverse() == p);
    }
}

TEST_CASE("composition is associative and respects inverses") {
    std::mt19937_64 rng(78);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        Permutation a = random_permutation(rng, n);
        Permutation b = random_permutation(rng, n);
        Permutation c = random_permutation(rng, n);
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
        CHECK(compose(a, b).inverse() == compose(b.inverse(), a.inverse()));
    }
}

TEST_CASE("conjugate is x^-1 then h then x") {
    // conjugating a transposition relabels its support through x
    Permutation h({1, 0, 2});  // (0 1)
    Permutation x({0, 2, 1});  // (1 2)
    Permutation hx = conjugate(h, x);
    // x^-1 = (1 2); point 0: x^-1(0)=0, h(0)=1, x(1)=2
    CHECK(hx == Permutation({2, 1, 0}));  // (0 2)
    CHECK(conjugate(h, Permutation::identity(3)) == h);

    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + rng() % 6;
        Permutation g = random_permutation(rng, n);
        Permutation x2 = random_permutation(rng, n);
        Permutation y = random_permutation(rng, n);
        // conjugation is a homomorphism in the first argument ...
        CHECK(conjugate(compose(g, y), x2) ==
              compose(conjugate(g, x2), conjugate(y, x2)));
        // ... and an action in the second
        CHECK(conjugate(conjugate(g, x2), y) == conjugate(g, compose(x2, y)));
    }
}

TEST_CASE("cycle_string") {
    CHECK(Permutation::identity(5).cycle_string() == "()");
    CHECK(Permutation({1, 0}).cycle_string() == "(0 1)");
    CHECK(Permutation({1, 2, 0, 4, 3}).cycle_string() == "(0 1 2)(3 4)");
    CHECK(Permutation({0, 1, 3, 2}).cycle_string() == "(2 3)");
    CHECK(Permutation({1, 2, 3, 0}).cycle_string() == "(0 1 2 3)");
}

TEST_CASE("lexicographic comparison on image vectors") {
    CHECK(Permutation({0, 1, 2}) < Permutation({0, 2, 1}));
    CHECK(Permutation({0, 2, 1}) < Permutation({1, 0, 2}));
    CHECK_FALSE(Permutation({1, 0, 2}) < Permutation({1, 0, 2}));
    CHECK(Permutation({0, 1}) == Permutation({0, 1}));
    CHECK(Permutation({0, 1}) != Permutation({1, 0}));
}
