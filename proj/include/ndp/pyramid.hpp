#pragma once

#include <cstdint>
#include <vector>

#include "ndp/coarsen.hpp"
#include "ndp/graph.hpp"
#include "ndp/partition.hpp"
#include "ndp/rng.hpp"

namespace ndp {

/// Row selection from the identity matrix: keeps `kept` (strictly
/// increasing) out of parent_n rows. Represents S = [I_{N}]_{V⁺,:}.
struct DecimationSelector {
    std::vector<std::size_t> kept;
    std::size_t parent_n = 0;

    static DecimationSelector identity(std::size_t n);
    std::size_t size() const { return kept.size(); }
    /// Throws std::invalid_argument unless kept is strictly increasing with
    /// every index < parent_n.
    void validate() const;

    bool operator==(const DecimationSelector&) const = default;
};

/// Rows of x at the kept indices, in order (X' = S·X).
Matrix apply_decimation(const Matrix& x, const DecimationSelector& s);

/// Selector equal to applying `inner` first, then `outer` (S_out · S_in as
/// matrices). Requires outer.parent_n == inner.kept.size().
DecimationSelector compose_selectors(const DecimationSelector& outer,
                                     const DecimationSelector& inner);

/// Outcome of one pooling step, for observability and the pyramid cut log.
struct PartitionMeta {
    std::size_t step = 0;  // global pool-step index within a pyramid build
    double gamma = 0.0;
    CutMethod method = CutMethod::spectral;
    double lambda_s_max = 0.0;
};

struct PoolResult {
    Graph coarsened;
    DecimationSelector selector;
    PartitionMeta meta;
};

/// One pooling step: MAXCUT partition of L_s with random fallback, Kron
/// reduction of the (loopy) Laplacian onto V⁺, adjacency recovery. Requires
/// n ≥ 2 and at least one edge.
PoolResult pool_once(const Graph& g, std::uint64_t seed);

/// Deterministic per-step seed; step 0 is also used by the CLI `cut`
/// command so a pyramid's first cut entry is reproducible from the same
/// root seed.
inline std::uint64_t pool_step_seed(std::uint64_t root, std::size_t step) {
    return mix_seed(root, static_cast<std::uint64_t>(step));
}

/// One emitted pyramid level.
struct CoarsenedLevel {
    Matrix adjacency;            // pre-sparsification
    Matrix sparsified;
    DecimationSelector keep;     // composed from the previous emitted level
    double epsilon = 0.0;
    std::size_t edges_before = 0;
    std::size_t edges_after = 0;
    /// Pool steps folded into this level (one entry unless levels were
    /// skipped).
    std::vector<PartitionMeta> cut_log;
};

struct BuildOptions {
    double epsilon = kDefaultEpsilon;
    std::uint64_t seed = 0;
    /// When true, the sparsified adjacency also feeds the next pooling step
    /// (the pseudocode chains unsparsified matrices; this is the alternative
    /// reading, exposed for sweep experiments).
    bool sparsify_between_levels = false;
};

/// Coarsening pyramid. Level indices are pool-step indices: requesting
/// level l emits the graph after l+1 pooling steps (≈ N/2^{l+1} nodes).
struct Pyramid {
    std::vector<CoarsenedLevel> levels;
    std::vector<int> requested_levels;
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    /// True when coarsening ran out of nodes/edges before max(levels).
    bool truncated = false;
};

/// Builds the pyramid: pools while step ≤ max(levels), emitting the
/// (sparsified adjacency, composed selector) at each requested level and
/// accumulating skipped selectors in between. Levels must be non-empty,
/// non-negative, strictly increasing.
Pyramid build_pyramid(const Graph& g, const std::vector<int>& levels,
                      const BuildOptions& options);
Pyramid build_pyramid(const Graph& g, const std::vector<int>& levels,
                      double epsilon = kDefaultEpsilon, std::uint64_t seed = 0);

}  // namespace ndp
