#pragma once

#include <cmath>
#include <vector>

#include "ndp/graph.hpp"
#include "ndp/matrix.hpp"
#include "ndp/rng.hpp"

namespace ndp::test {

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

inline Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed,
                            double lo = -1.0, double hi = 1.0) {
    Rng rng(seed);
    Matrix m(rows, cols);
    for (double& v : m.data()) v = rng.uniform(lo, hi);
    return m;
}

inline Matrix random_symmetric(std::size_t n, std::uint64_t seed) {
    Matrix m = random_matrix(n, n, seed);
    m.symmetrize();
    return m;
}

/// B·Bᵀ/n — symmetric positive semi-definite.
inline Matrix random_psd(std::size_t n, std::uint64_t seed) {
    const Matrix b = random_matrix(n, n, seed);
    Matrix m = b * b.transposed();
    m *= 1.0 / static_cast<double>(n);
    return m;
}

struct Edge {
    std::size_t i, j;
    double w = 1.0;
};

inline Graph make_graph(std::size_t n, const std::vector<Edge>& edges) {
    Matrix a(n, n);
    for (const Edge& e : edges) {
        a(e.i, e.j) = e.w;
        a(e.j, e.i) = e.w;
    }
    return Graph(std::move(a));
}

inline Graph path_graph(std::size_t n) {
    Matrix a(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        a(i, i + 1) = 1.0;
        a(i + 1, i) = 1.0;
    }
    return Graph(std::move(a));
}

inline Graph cycle_graph(std::size_t n) {
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, (i + 1) % n) = 1.0;
        a((i + 1) % n, i) = 1.0;
    }
    return Graph(std::move(a));
}

inline Graph complete_graph(std::size_t n) {
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) a(i, j) = 1.0;
    return Graph(std::move(a));
}

}  // namespace ndp::test
