// Microbenchmarks for the hot paths: exact characteristic polynomials,
// group closure, Schreier graph construction, Hilbert tables, and family
// enumeration. Run via the `benchmarks` target; all inputs deterministic.

#include "isospec/commensurability.hpp"
#include "isospec/cyclic_symbols.hpp"
#include "isospec/fixtures.hpp"
#include "isospec/schreier.hpp"
#include "isospec/spectra.hpp"

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

using namespace isospec;

namespace {

/// Deterministic symmetric matrix with entries in {0, 1, 2}.
IntMatrix dense_symmetric(std::size_t n) {
    std::uint64_t x = 0x9e3779b97f4a7c15ULL + n;
    auto next = [&x]() {
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        return x;
    };
    IntMatrix a(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const long v = static_cast<long>(next() % 3);
            a[i][j] = v;
            a[j][i] = v;
        }
    return a;
}

void BM_CharPoly(benchmark::State& state) {
    const IntMatrix a = dense_symmetric(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        IntPolynomial p = char_poly(a);
        benchmark::DoNotOptimize(p);
    }
}

void BM_CharPolyFanoSchreier(benchmark::State& state) {
    PermGroup g = fixtures::fano_group();
    Subgroup h = Subgroup::from_generators(g, fixtures::fano_point_stabilizer_generators());
    SchreierGraph x = schreier_graph(g, h, fixtures::fano_schreier_multiset());
    for (auto _ : state) {
        IntPolynomial p = char_poly(x.adjacency);
        benchmark::DoNotOptimize(p);
    }
}

void BM_FanoClosure(benchmark::State& state) {
    const std::vector<Permutation> gens = fixtures::fano_group_generators();
    for (auto _ : state) {
        PermGroup g = close_group(7, gens);
        benchmark::DoNotOptimize(g);
    }
}

void BM_SchreierGraph(benchmark::State& state) {
    PermGroup g = fixtures::fano_group();
    Subgroup h = Subgroup::from_generators(g, fixtures::fano_point_stabilizer_generators());
    const std::vector<Permutation> s = fixtures::fano_schreier_multiset();
    for (auto _ : state) {
        SchreierGraph x = schreier_graph(g, h, s);
        benchmark::DoNotOptimize(x);
    }
}

void BM_HilbertTable(benchmark::State& state) {
    const Rational a(-210);
    const Rational b(1001);
    for (auto _ : state) {
        HilbertTable t = hilbert_table(a, b);
        benchmark::DoNotOptimize(t);
    }
}

void BM_EnumerateFamily(benchmark::State& state) {
    PlaceUniverse u = PlaceUniverse::rationals({2, 3, 5, 7, 11, 13, 17, 19});
    std::vector<Place> T;
    for (const Place& v : u.places)
        if (v.kind == PlaceKind::finite) T.push_back(v);
    const Integer m = state.range(0);
    T.resize(static_cast<std::size_t>(choose_t(m, 3)));
    for (auto _ : state) {
        FamilyCertificate cert = enumerate_family(u, 3, m, T);
        benchmark::DoNotOptimize(cert);
    }
}

void BM_GraphIsomorphism(benchmark::State& state) {
    PermGroup g = fixtures::fano_group();
    Subgroup h1 = Subgroup::from_generators(g, fixtures::fano_point_stabilizer_generators());
    Subgroup h2 = Subgroup::from_generators(g, fixtures::fano_plane_stabilizer_generators());
    const IntMatrix a = schreier_graph(g, h1, fixtures::fano_schreier_multiset()).adjacency;
    const IntMatrix b = schreier_graph(g, h2, fixtures::fano_schreier_multiset()).adjacency;
    for (auto _ : state) {
        IsomorphismResult v = graph_isomorphic(a, b);
        benchmark::DoNotOptimize(v);
    }
}

} // namespace

BENCHMARK(BM_CharPoly)->Arg(7)->Arg(12)->Arg(20);
BENCHMARK(BM_CharPolyFanoSchreier);
BENCHMARK(BM_FanoClosure);
BENCHMARK(BM_SchreierGraph);
BENCHMARK(BM_HilbertTable);
BENCHMARK(BM_EnumerateFamily)->Arg(1)->Arg(4);
BENCHMARK(BM_GraphIsomorphism);

BENCHMARK_MAIN();
