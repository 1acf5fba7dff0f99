#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ndp/graph.hpp"

namespace ndp {

enum class CutMethod { spectral, random };

std::string to_string(CutMethod m);

/// Two-way node partition. keep (V⁺) holds the nodes assigned +1, drop (V⁻)
/// the nodes assigned −1; gamma is the fraction of total edge weight crossing
/// the partition.
struct Partition {
    std::vector<int> assignment;       // per-node, +1 or −1
    std::vector<std::size_t> keep;     // V⁺, ascending
    std::vector<std::size_t> drop;     // V⁻, ascending
    double gamma = 0.0;
    CutMethod method = CutMethod::spectral;
    /// Largest eigenvalue of L_s, when an eigensolve happened on this graph.
    std::optional<double> lambda_s_max;
};

/// Cut-quality bounds: 0.5 ≤ maxcut/|E| ≤ λ_s_max/2 ≤ 1.
struct CutReport {
    double gamma = 0.0;          // cut fraction of the spectral partition
    double upper_bound = 0.0;    // λ_s_max / 2
    double lower_bound = 0.5;    // expected random cut
    bool trevisan_ok = false;    // λ_s_max ≥ 2(1−τ)
    double lambda_s_max = 0.0;
};

inline constexpr double kTrevisanTau = 0.0549;
inline constexpr double kTrevisanThreshold = 2.0 * (1.0 - kTrevisanTau);  // ≈ 1.8902
inline constexpr double kTrevisanRatio = 0.5311;

/// Total weight of edges with endpoints on opposite sides. Assignment
/// entries must be ±1 and sized g.n(). Shared by cut_fraction and the brute
/// force oracle so their arithmetic is identical.
double crossing_weight(const Graph& g, const std::vector<int>& assignment);

/// γ(z) = crossing weight / total edge weight; 0 when the graph has no
/// edges. Equals zᵀLz / (2·Σ_ij a_ij) for loop-free graphs.
double cut_fraction(const Graph& g, const std::vector<int>& assignment);

/// Signs of the top eigenvector of L_s (power iteration, Jacobi fallback on
/// non-convergence), V⁺ = {i : v[i] ≥ 0} under the largest-entry-positive
/// sign convention. Edgeless graphs return everything in V⁺ with gamma 0.
Partition spectral_partition(const Graph& g);

/// Each node independently ±1 with probability 1/2 from the seeded
/// generator.
Partition random_partition(const Graph& g, std::uint64_t seed);

/// Spectral partition when its γ ≥ 0.5, otherwise a single seeded random
/// draw; method records which branch fired. The random branch keeps the
/// spectral attempt's λ_s_max.
Partition partition_with_fallback(const Graph& g, std::uint64_t seed);

/// Bound report for a graph with at least one edge: λ_s_max via full
/// eigensolve, gamma from the (deterministic) spectral partition.
CutReport maxcut_upper_bound(const Graph& g);

struct TrevisanGuarantee {
    bool guaranteed = false;
    double ratio = 0.5;
};

/// Spectral-cut guarantee: guaranteed iff λ_s_max ≥ 2(1−0.0549), in which
/// case the recursive spectral algorithm attains ≥ 0.5311·MAXCUT. Throws on
/// λ outside [0, 2] (beyond 1e-9 slack).
TrevisanGuarantee trevisan_guarantee(double lambda_s_max);

struct BruteForceCut {
    std::vector<int> assignment;
    double gamma = 0.0;
};

/// Exact MAXCUT by enumerating 2^{n−1} partitions (node 0 fixed to +1).
/// Throws for n > 22.
BruteForceCut brute_force_maxcut(const Graph& g);

inline constexpr std::size_t kBruteForceMaxNodes = 22;

}  // namespace ndp
