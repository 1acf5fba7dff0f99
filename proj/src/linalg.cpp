#include "ndp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ndp/rng.hpp"

namespace ndp::linalg {

namespace {

void require_square_symmetric(const Matrix& m, const char* who) {
    if (m.rows() != m.cols()) throw std::invalid_argument(std::string(who) + ": matrix not square");
    const double tol = 1e-10 * std::max(1.0, m.max_abs());
    if (!m.is_symmetric(tol))
        throw std::invalid_argument(std::string(who) + ": matrix not symmetric");
}

}  // namespace

void apply_sign_convention(std::vector<double>& v) {
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double a = std::abs(v[i]);
        if (a > best) {
            best = a;
            arg = i;
        }
    }
    if (!v.empty() && v[arg] < 0.0)
        for (double& x : v) x = -x;
}

std::optional<PowerResult> power_iteration(const Matrix& m, double tol, int max_iter,
                                           std::uint64_t seed) {
    require_square_symmetric(m, "power_iteration");
    const std::size_t n = m.rows();
    if (n == 0) throw std::invalid_argument("power_iteration: empty matrix");

    Rng rng(mix_seed(seed, 0x70775F69ull));
    std::vector<double> x(n);
    for (double& v : x) v = rng.uniform(-1.0, 1.0);
    double nx = norm2(x);
    if (nx == 0.0) x[0] = nx = 1.0;
    for (double& v : x) v /= nx;

    std::vector<double> y(n);
    double rayleigh_prev = std::numeric_limits<double>::quiet_NaN();
    for (int it = 1; it <= max_iter; ++it) {
        for (std::size_t i = 0; i < n; ++i) y[i] = dot(m.row(i), x);
        const double rayleigh = dot(std::span<const double>(x), std::span<const double>(y));
        const double ny = norm2(y);
        if (ny == 0.0) {
            // x is in the kernel and 0 is the dominant eigenvalue.
            apply_sign_convention(x);
            return PowerResult{0.0, x, it};
        }
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / ny;
        if (it > 1 && std::abs(rayleigh - rayleigh_prev) < tol) {
            apply_sign_convention(x);
            return PowerResult{rayleigh, x, it};
        }
        rayleigh_prev = rayleigh;
    }
    return std::nullopt;
}

Spectrum jacobi_eigh(const Matrix& m, bool with_vectors) {
    require_square_symmetric(m, "jacobi_eigh");
    const std::size_t n = m.rows();
    Matrix a = m;
    a.symmetrize();
    Matrix v = with_vectors ? Matrix::identity(n) : Matrix();

    const double scale = a.max_abs();
    const double off_tol = 1e-12 * scale;
    constexpr int kMaxSweeps = 100;

    if (scale > 0.0) {
        for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
            double off_max = 0.0;
            for (std::size_t p = 0; p + 1 < n; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    const double apq = a(p, q);
                    off_max = std::max(off_max, std::abs(apq));
                    if (std::abs(apq) <= off_tol) continue;

                    // Stable rotation angle: tan(2θ) = 2a_pq / (a_qq − a_pp).
                    const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                    const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                     (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    const double c = 1.0 / std::sqrt(t * t + 1.0);
                    const double s = t * c;

                    for (std::size_t k = 0; k < n; ++k) {
                        const double akp = a(k, p);
                        const double akq = a(k, q);
                        a(k, p) = c * akp - s * akq;
                        a(k, q) = s * akp + c * akq;
                    }
                    for (std::size_t k = 0; k < n; ++k) {
                        const double apk = a(p, k);
                        const double aqk = a(q, k);
                        a(p, k) = c * apk - s * aqk;
                        a(q, k) = s * apk + c * aqk;
                    }
                    if (with_vectors) {
                        for (std::size_t k = 0; k < n; ++k) {
                            const double vkp = v(k, p);
                            const double vkq = v(k, q);
                            v(k, p) = c * vkp - s * vkq;
                            v(k, q) = s * vkp + c * vkq;
                        }
                    }
                }
            }
            if (off_max <= off_tol) break;
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    Spectrum spec;
    spec.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) spec.eigenvalues[i] = a(order[i], order[i]);
    if (with_vectors) {
        Matrix sorted(n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) sorted(i, j) = v(i, order[j]);
        spec.eigenvectors = std::move(sorted);
    }
    return spec;
}

std::optional<Matrix> solve_sym(const Matrix& m, const Matrix& rhs, double pivot_tol) {
    require_square_symmetric(m, "solve_sym");
    if (m.rows() != rhs.rows()) throw std::invalid_argument("solve_sym: rhs dimension mismatch");
    const std::size_t n = m.rows();

    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, std::abs(m(i, i)));
    double scale = max_diag > 0.0 ? max_diag : m.max_abs();
    if (scale == 0.0) return n == 0 ? std::optional<Matrix>(rhs) : std::nullopt;
    const double threshold = pivot_tol * scale;

    Matrix a = m;
    Matrix x = rhs;
    // LU with partial pivoting, eliminating into the rhs as we go.
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
        if (std::abs(a(piv, col)) < threshold || a(piv, col) == 0.0) return std::nullopt;
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a(col, j), a(piv, j));
            for (std::size_t j = 0; j < x.cols(); ++j) std::swap(x(col, j), x(piv, j));
        }
        const double inv = 1.0 / a(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a(r, col) * inv;
            if (f == 0.0) continue;
            for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
            for (std::size_t j = 0; j < x.cols(); ++j) x(r, j) -= f * x(col, j);
        }
    }
    for (std::size_t ri = n; ri-- > 0;) {
        for (std::size_t j = 0; j < x.cols(); ++j) {
            double s = x(ri, j);
            for (std::size_t k = ri + 1; k < n; ++k) s -= a(ri, k) * x(k, j);
            x(ri, j) = s / a(ri, ri);
        }
    }
    if (!x.is_finite()) return std::nullopt;
    return x;
}

Matrix pseudo_inverse(const Matrix& m, double rank_tol) {
    const Spectrum spec = jacobi_eigh(m);
    const std::size_t n = m.rows();
    double lambda_max = 0.0;
    for (double ev : spec.eigenvalues) lambda_max = std::max(lambda_max, std::abs(ev));
    if (lambda_max == 0.0) return Matrix(n, n);

    const Matrix& u = *spec.eigenvectors;
    Matrix inv_diag(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const double ev = spec.eigenvalues[i];
        inv_diag(i, i) = std::abs(ev) < rank_tol * lambda_max ? 0.0 : 1.0 / ev;
    }
    return u * inv_diag * u.transposed();
}

}  // namespace ndp::linalg
