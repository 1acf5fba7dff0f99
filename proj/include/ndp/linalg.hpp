#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ndp/matrix.hpp"

namespace ndp::linalg {

/// Full eigendecomposition of a symmetric matrix. Eigenvalues sorted
/// descending; eigenvectors (when computed) are unit-norm columns, column i
/// pairing with eigenvalues[i].
struct Spectrum {
    std::vector<double> eigenvalues;
    std::optional<Matrix> eigenvectors;
};

struct PowerResult {
    double eigenvalue = 0.0;
    std::vector<double> eigenvector;
    int iterations = 0;
};

inline constexpr double kDefaultPowerTol = 1e-10;
inline constexpr int kDefaultPowerMaxIter = 500;
inline constexpr double kDefaultPivotTol = 1e-10;
inline constexpr double kDefaultRankTol = 1e-10;

/// Flips the sign of v so its largest-magnitude entry (first such index on
/// ties) is positive. Shared by all eigenvector-producing routines so that
/// downstream partitions are reproducible.
void apply_sign_convention(std::vector<double>& v);

/// Dominant eigenpair of a symmetric PSD matrix by power iteration with a
/// seeded random start vector. Converged when successive Rayleigh quotients
/// differ by less than tol. Returns nullopt after max_iter non-converged
/// iterations (near-degenerate top eigenvalues); callers may fall back to
/// jacobi_eigh.
std::optional<PowerResult> power_iteration(const Matrix& m,
                                           double tol = kDefaultPowerTol,
                                           int max_iter = kDefaultPowerMaxIter,
                                           std::uint64_t seed = 0);

/// Cyclic Jacobi eigensolver for symmetric matrices. Throws
/// std::invalid_argument if the input is asymmetric beyond 1e-10 (relative
/// to the largest entry).
Spectrum jacobi_eigh(const Matrix& m, bool with_vectors = true);

/// Solves m·X = rhs for symmetric m via partially pivoted LU. Returns
/// nullopt ("Singular") when any pivot magnitude falls below
/// pivot_tol · max|diag(m)|.
std::optional<Matrix> solve_sym(const Matrix& m, const Matrix& rhs,
                                double pivot_tol = kDefaultPivotTol);

/// Moore–Penrose inverse of a symmetric matrix via eigendecomposition,
/// zeroing eigenvalues with |λ| < rank_tol · max|λ|.
Matrix pseudo_inverse(const Matrix& m, double rank_tol = kDefaultRankTol);

}  // namespace ndp::linalg
