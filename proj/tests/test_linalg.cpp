#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ndp/linalg.hpp"
#include "ndp/graph.hpp"
#include "test_helpers.hpp"

using namespace ndp;
using namespace ndp::test;

TEST_CASE("matmul identity and hand product") {
    const Matrix m = random_matrix(3, 3, 1);
    CHECK(max_abs_diff(Matrix::identity(3) * m, m) == 0.0);

    const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
    const Matrix b = Matrix::from_rows({{1}, {1}});
    const Matrix c = a * b;
    CHECK(c(0, 0) == 3.0);
    CHECK(c(1, 0) == 7.0);
}

TEST_CASE("matmul associativity on random 5x5") {
    const Matrix a = random_matrix(5, 5, 2);
    const Matrix b = random_matrix(5, 5, 3);
    const Matrix c = random_matrix(5, 5, 4);
    CHECK(max_abs_diff((a * b) * c, a * (b * c)) < 1e-12);
}

TEST_CASE("matmul dimension mismatch throws") {
    CHECK_THROWS_AS(matmul(Matrix(2, 3), Matrix(2, 2)), std::invalid_argument);
}

TEST_CASE("power iteration on diagonal matrix") {
    const Matrix m = Matrix::diagonal({1.0, 3.0});
    const auto r = linalg::power_iteration(m);
    REQUIRE(r.has_value());
    CHECK(r->eigenvalue == doctest::Approx(3.0).epsilon(1e-9));
    // sign convention: the dominant entry comes out positive
    CHECK(r->eigenvector[1] == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::abs(r->eigenvector[0]) < 1e-4);
}

TEST_CASE("power iteration finds lambda 2 on bipartite L_s") {
    const auto r = linalg::power_iteration(sym_laplacian(cycle_graph(4)));
    REQUIRE(r.has_value());
    CHECK(r->eigenvalue == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("power iteration matches jacobi top eigenvalue on random PSD") {
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + t % 31;
        const Matrix m = random_psd(n, mix_seed(10, t));
        const auto r = linalg::power_iteration(m);
        REQUIRE(r.has_value());
        const auto spec = linalg::jacobi_eigh(m, false);
        CHECK(std::abs(r->eigenvalue - spec.eigenvalues.front()) < 1e-8);
    }
}

TEST_CASE("power iteration signals non-convergence") {
    // Tight spectral gap: Rayleigh quotients cannot settle in so few steps.
    const Matrix m = Matrix::diagonal({1.0, 0.9, 0.5});
    CHECK_FALSE(linalg::power_iteration(m, 1e-10, 3, 0).has_value());
}

TEST_CASE("jacobi on diagonal and 4-cycle Laplacian") {
    const auto spec = linalg::jacobi_eigh(Matrix::diagonal({4.0, 1.0, 0.0}));
    CHECK(spec.eigenvalues == std::vector<double>{4.0, 1.0, 0.0});

    // Characteristic polynomial of the 4-cycle Laplacian gives {4, 2, 2, 0}.
    const auto cyc = linalg::jacobi_eigh(laplacian(cycle_graph(4)));
    const std::vector<double> expected{4.0, 2.0, 2.0, 0.0};
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(cyc.eigenvalues[i] == doctest::Approx(expected[i]).epsilon(1e-10));
}

TEST_CASE("jacobi reconstruction and orthonormality") {
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 2 + t;
        const Matrix m = random_symmetric(n, mix_seed(20, t));
        const auto spec = linalg::jacobi_eigh(m);
        const Matrix& u = *spec.eigenvectors;
        const Matrix rebuilt = u * Matrix::diagonal(spec.eigenvalues) * u.transposed();
        CHECK(max_abs_diff(rebuilt, m) < 1e-9 * std::max(1.0, m.max_abs()));
        CHECK(max_abs_diff(u.transposed() * u, Matrix::identity(n)) < 1e-12);
        for (std::size_t i = 0; i + 1 < n; ++i)
            CHECK(spec.eigenvalues[i] >= spec.eigenvalues[i + 1]);
    }
}

TEST_CASE("laplacian eigenvalues are nonnegative with zero in the kernel") {
    for (int t = 0; t < 10; ++t) {
        Rng rng(mix_seed(30, t));
        const std::size_t n = 3 + t;
        Matrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng.u01() < 0.5) {
                    a(i, j) = rng.uniform(0.1, 2.0);
                    a(j, i) = a(i, j);
                }
        const auto spec = linalg::jacobi_eigh(laplacian(Graph(a)), false);
        CHECK(spec.eigenvalues.back() >= -1e-9);
        CHECK(std::abs(spec.eigenvalues.back()) < 1e-9);
    }
}

TEST_CASE("jacobi rejects asymmetric input") {
    Matrix m(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 0.5;
    CHECK_THROWS_AS(linalg::jacobi_eigh(m), std::invalid_argument);
}

TEST_CASE("solve_sym identity and scalar cases") {
    const Matrix b = random_matrix(4, 2, 40);
    const auto x = linalg::solve_sym(Matrix::identity(4), b);
    REQUIRE(x.has_value());
    CHECK(max_abs_diff(*x, b) == 0.0);

    const auto s = linalg::solve_sym(Matrix::from_rows({{2.0}}), Matrix::from_rows({{-1.0, -1.0}}));
    REQUIRE(s.has_value());
    CHECK((*s)(0, 0) == -0.5);
    CHECK((*s)(0, 1) == -0.5);
}

TEST_CASE("solve_sym flags singular inputs") {
    CHECK_FALSE(linalg::solve_sym(laplacian(path_graph(4)), Matrix(4, 1, 1.0)).has_value());
    CHECK_FALSE(linalg::solve_sym(Matrix(3, 3), Matrix(3, 1, 1.0)).has_value());
}

TEST_CASE("solve_sym residual on random SPD systems") {
    for (int t = 0; t < 25; ++t) {
        const std::size_t n = 2 + t;
        Matrix m = random_psd(n, mix_seed(50, t));
        for (std::size_t i = 0; i < n; ++i) m(i, i) += 0.5;  // safely nonsingular
        const Matrix rhs = random_matrix(n, 3, mix_seed(51, t));
        const auto x = linalg::solve_sym(m, rhs);
        REQUIRE(x.has_value());
        CHECK(max_abs_diff(m * *x, rhs) < 1e-8 * std::max(1.0, rhs.max_abs()));
    }
}

TEST_CASE("pseudo_inverse equals inverse for nonsingular input") {
    Matrix m = random_psd(6, 60);
    for (std::size_t i = 0; i < 6; ++i) m(i, i) += 1.0;
    const Matrix pinv = linalg::pseudo_inverse(m);
    CHECK(max_abs_diff(pinv * m, Matrix::identity(6)) < 1e-8);
}

TEST_CASE("pseudo_inverse of the zero matrix is zero") {
    CHECK(linalg::pseudo_inverse(Matrix(3, 3)).max_abs() == 0.0);
}

TEST_CASE("pseudo_inverse satisfies the Moore-Penrose identities") {
    const Matrix cases[] = {laplacian(path_graph(2)), laplacian(path_graph(5)),
                            laplacian(cycle_graph(6)), random_psd(7, 70)};
    for (const Matrix& m : cases) {
        const Matrix p = linalg::pseudo_inverse(m);
        CHECK(max_abs_diff(m * p * m, m) < 1e-8);
        CHECK(max_abs_diff(p * m * p, p) < 1e-8);
        CHECK(max_abs_diff((m * p).transposed(), m * p) < 1e-8);
        CHECK(max_abs_diff((p * m).transposed(), p * m) < 1e-8);
    }
    const Matrix two_path = laplacian(path_graph(2));
    const Matrix p = linalg::pseudo_inverse(two_path);
    CHECK(max_abs_diff(two_path * p * two_path, two_path) < 1e-10);
}
