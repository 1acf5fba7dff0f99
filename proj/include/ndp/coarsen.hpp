#pragma once

#include <cstddef>
#include <vector>

#include "ndp/graph.hpp"
#include "ndp/linalg.hpp"

namespace ndp {

/// Sparsification threshold used throughout unless overridden.
inline constexpr double kDefaultEpsilon = 1e-2;

/// Kron reduction: Schur complement of the Laplacian onto the kept nodes,
///   L' = L_{++} − L_{+−} · L_{−−}^{-1} · L_{−+},
/// solved without forming the inverse; falls back to the pseudo-inverse
/// (generalized Schur complement) when L_{−−} is singular, which happens on
/// disconnected graphs. The result is symmetrized and validated as a
/// Laplacian: row sums within 1e-8 of zero, off-diagonals non-positive
/// (drift up to 1e-8 clamped, beyond that a hard error).
Matrix kron_reduce(const Matrix& lap, const std::vector<std::size_t>& keep,
                   double pivot_tol = linalg::kDefaultPivotTol);

/// Recovers the adjacency from a (possibly loopy) Laplacian: off-diagonals
/// a_ij = −l_ij, diagonal a_ii = rowsum_i / 2 — zero for exact Laplacians,
/// the self-loop weight for loopy ones. Negative recovered weights within
/// 1e-8 are clamped to 0; beyond that the input was not a valid Laplacian
/// and a std::runtime_error is thrown.
Matrix adjacency_from_laplacian(const Matrix& lap);

/// Zeroes entries with |a_ij| ≤ epsilon, keeps the rest verbatim.
/// Throws on epsilon < 0.
Matrix sparsify(const Matrix& a, double epsilon);

/// SD(L, L̄) = (1/K)·Σ |λ̄_k − λ_k| / λ_k over the K smallest nonzero
/// (> 1e-8) eigenvalues of each Laplacian. Throws when either has fewer
/// than k nonzero eigenvalues.
double spectral_distance(const Matrix& lap, const Matrix& lap_bar, std::size_t k);

inline constexpr double kNonzeroEigTol = 1e-8;
inline constexpr std::size_t kDefaultSpectralDistanceK = 10;

/// Eigenvalue perturbation check for sparsification: builds Q (negated
/// sub-ε entries of a), computes the spectra of A and Ā = A + Q, and
/// verifies ᾱ_i ≤ α_i + u_iᵀQu_i + tol for every i, eigenvalues paired in
/// descending order. Returns false on any violation. The bound is
/// first-order: expect violations when the removed weight is not small.
bool perturbation_bound_check(const Matrix& a, double epsilon, double tol = 1e-6);

}  // namespace ndp
