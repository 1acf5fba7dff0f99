#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ndp/graph.hpp"
#include "ndp/linalg.hpp"
#include "test_helpers.hpp"

using namespace ndp;
using namespace ndp::test;

TEST_CASE("graph validation") {
    CHECK_THROWS_AS(Graph(Matrix(2, 3)), std::invalid_argument);
    Matrix asym(2, 2);
    asym(0, 1) = 1.0;
    CHECK_THROWS_AS((Graph(asym)), std::invalid_argument);
    Matrix neg(2, 2);
    neg(0, 1) = neg(1, 0) = -1.0;
    CHECK_THROWS_AS((Graph(neg)), std::invalid_argument);
    Matrix nan(1, 1);
    nan(0, 0) = std::nan("");
    CHECK_THROWS_AS((Graph(nan)), std::invalid_argument);
}

TEST_CASE("laplacian of small graphs") {
    CHECK(max_abs_diff(laplacian(make_graph(2, {{0, 1, 1.0}})),
                       Matrix::from_rows({{1, -1}, {-1, 1}})) == 0.0);
    CHECK(max_abs_diff(laplacian(path_graph(3)),
                       Matrix::from_rows({{1, -1, 0}, {-1, 2, -1}, {0, -1, 1}})) == 0.0);
    CHECK(laplacian(Graph(Matrix(3, 3))).max_abs() == 0.0);
}

TEST_CASE("laplacian row sums vanish and diagonal carries degrees") {
    Rng rng(77);
    Matrix a(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 1; j < 6; ++j)
            if (rng.u01() < 0.6) a(i, j) = a(j, i) = rng.uniform(0.1, 3.0);
    const Graph g(a);
    const Matrix l = laplacian(g);
    const std::vector<double> d = g.degrees();
    for (std::size_t i = 0; i < 6; ++i) {
        double row = 0.0;
        for (double v : l.row(i)) row += v;
        CHECK(std::abs(row) < 1e-10);
        CHECK(l(i, i) == doctest::Approx(d[i]));
    }
}

TEST_CASE("sym_laplacian basics") {
    CHECK(max_abs_diff(sym_laplacian(make_graph(2, {{0, 1, 1.0}})),
                       Matrix::from_rows({{1, -1}, {-1, 1}})) == 0.0);

    const auto spec = linalg::jacobi_eigh(sym_laplacian(cycle_graph(4)), false);
    CHECK(spec.eigenvalues.front() == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("sym_laplacian with isolated node stays finite") {
    // node 2 is isolated: row is zero except the unit diagonal
    const Graph g = make_graph(3, {{0, 1, 2.0}});
    const Matrix ls = sym_laplacian(g);
    CHECK(ls.is_finite());
    CHECK(ls(2, 2) == 1.0);
    CHECK(ls(2, 0) == 0.0);
    CHECK(ls(2, 1) == 0.0);
}

TEST_CASE("sym_laplacian spectrum lies in [0, 2]") {
    for (int t = 0; t < 30; ++t) {
        Rng rng(mix_seed(500, t));
        const std::size_t n = 2 + t % 12;
        Matrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng.u01() < 0.5) a(i, j) = a(j, i) = rng.uniform(0.05, 2.0);
        const auto spec = linalg::jacobi_eigh(sym_laplacian(Graph(a)), false);
        CHECK(spec.eigenvalues.front() <= 2.0 + 1e-9);
        CHECK(spec.eigenvalues.back() >= -1e-9);
    }
}

TEST_CASE("top eigenvector of L_s keeps its sign pattern under positive rescaling") {
    for (int t = 0; t < 10; ++t) {
        Rng rng(mix_seed(600, t));
        const std::size_t n = 6 + t;
        Matrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng.u01() < 0.4) a(i, j) = a(j, i) = rng.uniform(0.2, 1.5);
        const Graph g(a);
        const auto spec = linalg::jacobi_eigh(sym_laplacian(g));
        const Matrix& u = *spec.eigenvectors;
        const std::vector<double> deg = g.degrees();
        for (std::size_t i = 0; i < n; ++i) {
            const double v = u(i, 0);
            const double scaled = std::sqrt(std::max(deg[i], 0.0)) * v;
            if (std::abs(v) > 1e-8 && std::abs(scaled) > 1e-8)
                CHECK(std::signbit(v) == std::signbit(scaled));
        }
    }
}

TEST_CASE("loopy laplacian equals plain laplacian without self-loops") {
    const Graph g = path_graph(4);
    CHECK(max_abs_diff(loopy_laplacian(g), laplacian(g)) == 0.0);
}

TEST_CASE("loopy laplacian of a single self-loop node") {
    Matrix a(1, 1);
    a(0, 0) = 2.0;
    // degree counts the loop once: Q = d - a + 2a = 2 - 2 + 4
    CHECK(loopy_laplacian(Graph(a))(0, 0) == 4.0);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(path_graph(3)));
    CHECK_FALSE(is_connected(make_graph(4, {{0, 1, 1.0}, {2, 3, 1.0}})));
    CHECK(is_connected(Graph(Matrix(1, 1))));
    CHECK(component_count(make_graph(5, {{0, 1, 1.0}, {2, 3, 1.0}})) == 3);
}

TEST_CASE("zero eigenvalue multiplicity equals component count") {
    for (int t = 0; t < 100; ++t) {
        Rng rng(mix_seed(700, t));
        const std::size_t n = 2 + t % 14;
        Matrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng.u01() < 0.25) a(i, j) = a(j, i) = rng.uniform(0.2, 2.0);
        const Graph g(a);
        const auto spec = linalg::jacobi_eigh(laplacian(g), false);
        std::size_t zeros = 0;
        for (double ev : spec.eigenvalues)
            if (std::abs(ev) < 1e-8) ++zeros;
        CHECK(zeros == component_count(g));
    }
}

TEST_CASE("two coloring certifies bipartite graphs") {
    CHECK(two_coloring(cycle_graph(4)).has_value());
    CHECK_FALSE(two_coloring(cycle_graph(5)).has_value());
    const auto colors = two_coloring(path_graph(4));
    REQUIRE(colors.has_value());
    CHECK((*colors)[0] == 0);
    CHECK((*colors)[1] == 1);
}

TEST_CASE("clustering coefficients") {
    const Graph tri = complete_graph(3);
    for (double c : clustering_coefficients(tri)) CHECK(c == 1.0);
    for (double c : clustering_coefficients(cycle_graph(6))) CHECK(c == 0.0);
    // path center has two non-adjacent neighbors
    CHECK(clustering_coefficients(path_graph(3))[1] == 0.0);
}

TEST_CASE("disjoint union of one graph is itself") {
    const Graph g = path_graph(3);
    const Matrix x = random_matrix(3, 2, 80);
    const auto u = disjoint_union({g}, {x});
    CHECK(max_abs_diff(u.graph.adjacency(), g.adjacency()) == 0.0);
    CHECK(max_abs_diff(u.features, x) == 0.0);
    CHECK(u.offsets == std::vector<std::size_t>{0, 3});
}

TEST_CASE("disjoint union of two 2-node graphs") {
    const Graph g = make_graph(2, {{0, 1, 1.0}});
    const auto u = disjoint_union({g, g}, {Matrix(2, 1, 1.0), Matrix(2, 1, 2.0)});
    CHECK(u.graph.n() == 4);
    CHECK(u.graph.weight(0, 1) == 1.0);
    CHECK(u.graph.weight(2, 3) == 1.0);
    CHECK(u.graph.weight(1, 2) == 0.0);
    CHECK(u.features(0, 0) == 1.0);
    CHECK(u.features(2, 0) == 2.0);
}

TEST_CASE("disjoint union adds component counts") {
    for (int t = 0; t < 10; ++t) {
        Rng rng(mix_seed(800, t));
        std::vector<Graph> gs;
        std::vector<Matrix> xs;
        std::size_t total = 0;
        for (int k = 0; k < 3; ++k) {
            const std::size_t n = 2 + rng.index(5);
            Matrix a(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (rng.u01() < 0.4) a(i, j) = a(j, i) = 1.0;
            gs.emplace_back(std::move(a));
            xs.emplace_back(n, 2, 0.0);
            total += component_count(gs.back());
        }
        CHECK(component_count(disjoint_union(gs, xs).graph) == total);
    }
}

TEST_CASE("disjoint union rejects mismatched features") {
    const Graph g = path_graph(3);
    CHECK_THROWS_AS(disjoint_union({g, g}, {Matrix(3, 2), Matrix(3, 3)}), std::invalid_argument);
    CHECK_THROWS_AS(disjoint_union({g}, {Matrix(2, 2)}), std::invalid_argument);
}
