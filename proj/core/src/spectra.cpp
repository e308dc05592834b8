#include "isospec/spectra.hpp"

#include "isospec/errors.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace isospec {

IntPolynomial char_poly(const IntMatrix& a) {
    if (!is_symmetric(a))
        throw NotSymmetricError("characteristic polynomials are computed for "
                                "symmetric square matrices only");
    const std::size_t n = a.size();
    std::vector<Integer> coeffs(n + 1);
    coeffs[n] = 1;

    // Faddeev-LeVerrier: m_1 = A, c_{n-k} = -tr(m_k)/k,
    // m_{k+1} = A * (m_k + c_{n-k} I). All divisions are exact.
    IntMatrix m = zero_matrix(n);
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    IntMatrix am = zero_matrix(n);
    Integer t;
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Integer& acc = am[i][j];
                acc = 0;
                for (std::size_t l = 0; l < n; ++l)
                    mpz_addmul(acc.get_mpz_t(), a[i][l].get_mpz_t(),
                               m[l][j].get_mpz_t());
            }
        }
        t = 0;
        for (std::size_t i = 0; i < n; ++i)
            t += am[i][i];
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
        coeffs[n - k] = -t;
        std::swap(m, am);
        for (std::size_t i = 0; i < n; ++i)
            m[i][i] -= t;
    }
    return IntPolynomial(std::move(coeffs));
}

bool isospectral(const IntMatrix& a, const IntMatrix& b) {
    return char_poly(a) == char_poly(b);
}

bool isospectral(const SchreierGraph& g1, const SchreierGraph& g2) {
    return isospectral(g1.adjacency, g2.adjacency);
}

std::string to_string(IsoOutcome o) {
    switch (o) {
    case IsoOutcome::yes: return "yes";
    case IsoOutcome::no: return "no";
    case IsoOutcome::undetermined: return "undetermined";
    }
    throw InvalidArgumentError("unknown isomorphism outcome");
}

namespace {

// Iterated color refinement: vertices start from (diagonal, sorted row
// multiset) and are re-colored by the multiset of (edge multiplicity,
// neighbor color) over all other vertices until stable. The color
// dictionary is shared between the two graphs so classes are comparable.
std::pair<std::vector<int>, std::vector<int>> refine_colors(const IntMatrix& a,
                                                            const IntMatrix& b) {
    const std::size_t na = a.size();
    const std::size_t nb = b.size();
    std::vector<int> ca(na, 0), cb(nb, 0);

    using InitKey = std::pair<Integer, std::vector<Integer>>;
    std::map<InitKey, int> init_dict;
    auto init_color = [&init_dict](const IntMatrix& mat, std::vector<int>& colors) {
        for (std::size_t v = 0; v < mat.size(); ++v) {
            std::vector<Integer> row = mat[v];
            std::sort(row.begin(), row.end());
            colors[v] =
                init_dict.emplace(InitKey{mat[v][v], std::move(row)},
                                  static_cast<int>(init_dict.size())).first->second;
        }
    };
    init_color(a, ca);
    init_color(b, cb);

    // Each new color is a function of the old one, so every round refines
    // the partition; it is stable exactly when the joint class count stops
    // growing.
    std::size_t class_count = init_dict.size();
    for (;;) {
        using Signature = std::pair<int, std::vector<std::pair<Integer, int>>>;
        std::map<Signature, int> dict;
        auto signature_of = [](const IntMatrix& mat, const std::vector<int>& colors,
                               std::size_t v) {
            Signature sig;
            sig.first = colors[v];
            for (std::size_t u = 0; u < mat.size(); ++u)
                if (u != v)
                    sig.second.emplace_back(mat[v][u], colors[u]);
            std::sort(sig.second.begin(), sig.second.end());
            return sig;
        };
        std::vector<int> next_a(na), next_b(nb);
        for (std::size_t v = 0; v < na; ++v)
            next_a[v] = dict.emplace(signature_of(a, ca, v),
                                     static_cast<int>(dict.size())).first->second;
        for (std::size_t v = 0; v < nb; ++v)
            next_b[v] = dict.emplace(signature_of(b, cb, v),
                                     static_cast<int>(dict.size())).first->second;
        ca = std::move(next_a);
        cb = std::move(next_b);
        if (dict.size() == class_count)
            break;
        class_count = dict.size();
    }
    return {std::move(ca), std::move(cb)};
}

std::map<int, std::size_t> color_histogram(const std::vector<int>& colors) {
    std::map<int, std::size_t> hist;
    for (int c : colors)
        ++hist[c];
    return hist;
}

struct SearchState {
    const IntMatrix& a;
    const IntMatrix& b;
    const std::vector<int>& ca;
    const std::vector<int>& cb;
    const std::vector<std::size_t>& order;  // a-vertices, smallest classes first
    std::vector<std::size_t> image;         // a-vertex -> b-vertex
    std::vector<bool> used;                 // b-vertex already taken
    std::size_t node_cap;
    std::size_t nodes = 0;
    bool capped = false;

    bool extend(std::size_t depth) {
        if (depth == order.size())
            return true;
        const std::size_t v = order[depth];
        for (std::size_t w = 0; w < b.size(); ++w) {
            if (used[w] || cb[w] != ca[v])
                continue;
            if (++nodes > node_cap) {
                capped = true;
                return false;
            }
            bool consistent = true;
            for (std::size_t d = 0; d < depth; ++d) {
                const std::size_t u = order[d];
                if (a[v][u] != b[w][image[u]]) {
                    consistent = false;
                    break;
                }
            }
            if (!consistent)
                continue;
            image[v] = w;
            used[w] = true;
            if (extend(depth + 1))
                return true;
            used[w] = false;
            if (capped)
                return false;
        }
        return false;
    }
};

} // namespace

IsomorphismResult graph_isomorphic(const IntMatrix& a, const IntMatrix& b,
                                   std::size_t node_cap) {
    if (!is_symmetric(a) || !is_symmetric(b))
        throw NotSymmetricError("isomorphism search expects symmetric matrices");

    IsomorphismResult result;
    if (a.size() != b.size()) {
        result.outcome = IsoOutcome::no;
        return result;
    }
    const std::size_t n = a.size();
    if (n == 0) {
        result.outcome = IsoOutcome::yes;
        result.witness = std::vector<std::size_t>{};
        return result;
    }

    auto [ca, cb] = refine_colors(a, b);
    std::map<int, std::size_t> hist_a = color_histogram(ca);
    if (hist_a != color_histogram(cb)) {
        result.outcome = IsoOutcome::no;
        return result;
    }

    std::vector<std::size_t> order(n);
    for (std::size_t v = 0; v < n; ++v)
        order[v] = v;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        const std::size_t sx = hist_a[ca[x]], sy = hist_a[ca[y]];
        if (sx != sy)
            return sx < sy;
        if (ca[x] != ca[y])
            return ca[x] < ca[y];
        return x < y;
    });

    SearchState state{a, b, ca, cb, order, std::vector<std::size_t>(n, 0),
                      std::vector<bool>(n, false), node_cap};
    const bool found = state.extend(0);
    result.nodes_expanded = state.nodes;
    if (found) {
        for (std::size_t v = 0; v < n; ++v)
            for (std::size_t w = 0; w < n; ++w)
                if (a[v][w] != b[state.image[v]][state.image[w]])
                    throw std::logic_error("isomorphism witness failed verification");
        result.outcome = IsoOutcome::yes;
        result.witness = std::move(state.image);
        return result;
    }
    result.outcome = state.capped ? IsoOutcome::undetermined : IsoOutcome::no;
    return result;
}

IsoVerdict compare_graphs(const IntMatrix& a, const IntMatrix& b,
                          std::size_t node_cap) {
    IsoVerdict verdict;
    verdict.isospectral = isospectral(a, b);
    IsomorphismResult iso = graph_isomorphic(a, b, node_cap);
    verdict.isomorphic = iso.outcome;
    verdict.witness = std::move(iso.witness);
    verdict.nodes_expanded = iso.nodes_expanded;
    // different spectra already certify non-isomorphism, so a capped search
    // can still conclude
    if (!verdict.isospectral && verdict.isomorphic == IsoOutcome::undetermined)
        verdict.isomorphic = IsoOutcome::no;
    return verdict;
}

IsoVerdict compare_graphs(const SchreierGraph& g1, const SchreierGraph& g2,
                          std::size_t node_cap) {
    return compare_graphs(g1.adjacency, g2.adjacency, node_cap);
}

std::vector<double> eigenvalues_display(const IntMatrix& a) {
    if (!is_symmetric(a))
        throw NotSymmetricError("eigenvalue display expects a symmetric matrix");
    const std::size_t n = a.size();
    Eigen::MatrixXd mat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mat(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                a[i][j].get_d();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat);
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        double x = solver.eigenvalues()(static_cast<Eigen::Index>(i));
        values[i] = std::round(x * 1e9) / 1e9;
    }
    std::sort(values.begin(), values.end());
    return values;
}

} // namespace isospec
