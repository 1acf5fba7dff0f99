#include "ndp/coarsen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ndp {

namespace {

constexpr double kDriftClamp = 1e-8;    // beyond this, a hard error
constexpr double kRowSumTol = 1e-8;
constexpr double kDiagonalZeroTol = 1e-12;

std::vector<std::size_t> complement_of(const std::vector<std::size_t>& keep, std::size_t n) {
    std::vector<bool> kept(n, false);
    for (std::size_t i : keep) {
        if (i >= n) throw std::invalid_argument("kron_reduce: keep index out of range");
        if (kept[i]) throw std::invalid_argument("kron_reduce: duplicate keep index");
        kept[i] = true;
    }
    std::vector<std::size_t> drop;
    for (std::size_t i = 0; i < n; ++i)
        if (!kept[i]) drop.push_back(i);
    return drop;
}

}  // namespace

Matrix kron_reduce(const Matrix& lap, const std::vector<std::size_t>& keep, double pivot_tol) {
    const std::size_t n = lap.rows();
    if (lap.cols() != n) throw std::invalid_argument("kron_reduce: Laplacian not square");
    if (keep.empty()) throw std::invalid_argument("kron_reduce: keep set empty");
    const std::vector<std::size_t> drop = complement_of(keep, n);
    if (drop.empty()) throw std::invalid_argument("kron_reduce: nothing to reduce");

    const Matrix l_pp = select(lap, keep, keep);
    const Matrix l_pm = select(lap, keep, drop);
    const Matrix l_mm = select(lap, drop, drop);
    const Matrix l_mp = select(lap, drop, keep);

    Matrix x;  // L_{−−}^{-1} L_{−+}
    if (auto solved = linalg::solve_sym(l_mm, l_mp, pivot_tol)) {
        x = std::move(*solved);
    } else {
        // Disconnected graph: generalized Schur complement via pseudo-inverse.
        x = linalg::pseudo_inverse(l_mm) * l_mp;
    }

    Matrix reduced = l_pp - l_pm * x;
    reduced.symmetrize();

    // Floating-point drift can leave tiny positive off-diagonals; anything
    // large is a real failure, not drift.
    for (std::size_t i = 0; i < reduced.rows(); ++i) {
        for (std::size_t j = 0; j < reduced.cols(); ++j) {
            if (i == j) continue;
            if (reduced(i, j) > kDriftClamp)
                throw std::runtime_error("kron_reduce: positive off-diagonal in result");
            if (reduced(i, j) > 0.0) {
                reduced(i, j) = 0.0;
            }
        }
    }
    if (!reduced.is_finite()) throw std::runtime_error("kron_reduce: non-finite result");
    return reduced;
}

Matrix adjacency_from_laplacian(const Matrix& lap) {
    const std::size_t n = lap.rows();
    if (lap.cols() != n) throw std::invalid_argument("adjacency_from_laplacian: not square");
    const double sym_tol = 1e-10 * std::max(1.0, lap.max_abs());
    if (!lap.is_symmetric(sym_tol))
        throw std::invalid_argument("adjacency_from_laplacian: not symmetric");

    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        double row_sum = 0.0;
        for (double v : lap.row(i)) row_sum += v;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double w = -0.5 * (lap(i, j) + lap(j, i));
            if (w < -kDriftClamp)
                throw std::runtime_error(
                    "adjacency_from_laplacian: negative weight, input is not a Laplacian");
            a(i, j) = w < 0.0 ? 0.0 : w;
        }
        // Zero for exact Laplacians; the self-loop weight for loopy ones.
        const double diag = 0.5 * row_sum;
        if (diag < -kDriftClamp)
            throw std::runtime_error(
                "adjacency_from_laplacian: negative diagonal, input is not a Laplacian");
        a(i, i) = std::abs(diag) < kDiagonalZeroTol ? 0.0 : diag;
    }
    return a;
}

Matrix sparsify(const Matrix& a, double epsilon) {
    if (epsilon < 0.0) throw std::invalid_argument("sparsify: negative threshold");
    Matrix out = a;
    for (double& v : out.data())
        if (std::abs(v) <= epsilon) v = 0.0;
    return out;
}

namespace {

/// Ascending eigenvalues above the nonzero threshold.
std::vector<double> nonzero_eigenvalues_ascending(const Matrix& lap) {
    std::vector<double> ev = linalg::jacobi_eigh(lap, /*with_vectors=*/false).eigenvalues;
    std::reverse(ev.begin(), ev.end());
    std::vector<double> out;
    for (double v : ev)
        if (v > kNonzeroEigTol) out.push_back(v);
    return out;
}

}  // namespace

double spectral_distance(const Matrix& lap, const Matrix& lap_bar, std::size_t k) {
    if (k < 1) throw std::invalid_argument("spectral_distance: k must be >= 1");
    const std::vector<double> ev = nonzero_eigenvalues_ascending(lap);
    const std::vector<double> ev_bar = nonzero_eigenvalues_ascending(lap_bar);
    if (ev.size() < k || ev_bar.size() < k)
        throw std::invalid_argument("spectral_distance: fewer than k nonzero eigenvalues");
    double sd = 0.0;
    for (std::size_t i = 0; i < k; ++i) sd += std::abs(ev_bar[i] - ev[i]) / ev[i];
    return sd / static_cast<double>(k);
}

bool perturbation_bound_check(const Matrix& a, double epsilon, double tol) {
    const std::size_t n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("perturbation_bound_check: not square");

    Matrix q(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (std::abs(a(i, j)) <= epsilon) q(i, j) = -a(i, j);
    const Matrix a_bar = a + q;

    const linalg::Spectrum orig = linalg::jacobi_eigh(a);
    const linalg::Spectrum pert = linalg::jacobi_eigh(a_bar, /*with_vectors=*/false);
    const Matrix& u = *orig.eigenvectors;

    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> ui(n), qui(n, 0.0);
        for (std::size_t r = 0; r < n; ++r) ui[r] = u(r, i);
        for (std::size_t r = 0; r < n; ++r) qui[r] = dot(q.row(r), ui);
        const double shift = dot(std::span<const double>(ui), std::span<const double>(qui));
        if (pert.eigenvalues[i] > orig.eigenvalues[i] + shift + tol) return false;
    }
    return true;
}

}  // namespace ndp
