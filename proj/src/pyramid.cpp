#include "ndp/pyramid.hpp"

#include <algorithm>
#include <stdexcept>

#include "ndp/rng.hpp"

namespace ndp {

DecimationSelector DecimationSelector::identity(std::size_t n) {
    DecimationSelector s;
    s.kept.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.kept[i] = i;
    s.parent_n = n;
    return s;
}

void DecimationSelector::validate() const {
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (kept[i] >= parent_n)
            throw std::invalid_argument("DecimationSelector: index out of range");
        if (i > 0 && kept[i] <= kept[i - 1])
            throw std::invalid_argument("DecimationSelector: indices not strictly increasing");
    }
}

Matrix apply_decimation(const Matrix& x, const DecimationSelector& s) {
    if (x.rows() != s.parent_n)
        throw std::invalid_argument("apply_decimation: row count != selector parent_n");
    s.validate();
    Matrix out(s.kept.size(), x.cols());
    for (std::size_t i = 0; i < s.kept.size(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = x(s.kept[i], j);
    return out;
}

DecimationSelector compose_selectors(const DecimationSelector& outer,
                                     const DecimationSelector& inner) {
    if (outer.parent_n != inner.kept.size())
        throw std::invalid_argument("compose_selectors: chain mismatch");
    outer.validate();
    inner.validate();
    DecimationSelector out;
    out.parent_n = inner.parent_n;
    out.kept.resize(outer.kept.size());
    for (std::size_t i = 0; i < outer.kept.size(); ++i) out.kept[i] = inner.kept[outer.kept[i]];
    return out;
}

PoolResult pool_once(const Graph& g, std::uint64_t seed) {
    if (g.n() < 2) throw std::invalid_argument("pool_once: need at least 2 nodes");
    if (!g.has_edges()) throw std::invalid_argument("pool_once: graph has no edges");

    Partition p = partition_with_fallback(g, seed);
    // A random fallback draw can land everything on one side; redraw until
    // both sides are populated so the reduction is well-defined.
    for (std::uint64_t retry = 1; (p.keep.empty() || p.drop.empty()) && retry <= 64; ++retry)
        p = random_partition(g, mix_seed(seed, retry));
    if (p.keep.empty() || p.drop.empty())
        throw std::runtime_error("pool_once: degenerate partition");

    // The partition comes from L_s, but the reduction acts on the plain
    // Laplacian (loopy form, which coincides with it on loop-free graphs).
    const Matrix reduced = kron_reduce(loopy_laplacian(g), p.keep);
    Graph coarsened(adjacency_from_laplacian(reduced));

    DecimationSelector selector{p.keep, g.n()};
    PartitionMeta meta{0, p.gamma, p.method, p.lambda_s_max.value_or(0.0)};
    return PoolResult{std::move(coarsened), std::move(selector), meta};
}

Pyramid build_pyramid(const Graph& g, const std::vector<int>& levels,
                      const BuildOptions& options) {
    if (levels.empty()) throw std::invalid_argument("build_pyramid: no levels requested");
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (levels[i] < 0) throw std::invalid_argument("build_pyramid: negative level");
        if (i > 0 && levels[i] <= levels[i - 1])
            throw std::invalid_argument("build_pyramid: levels not strictly increasing");
    }
    if (options.epsilon < 0.0) throw std::invalid_argument("build_pyramid: negative epsilon");

    Pyramid pyramid;
    pyramid.requested_levels = levels;
    pyramid.epsilon = options.epsilon;
    pyramid.seed = options.seed;

    const int max_level = levels.back();
    Graph current = g;
    DecimationSelector r = DecimationSelector::identity(g.n());
    std::vector<PartitionMeta> pending;

    for (int step = 0; step <= max_level; ++step) {
        if (current.n() < 2 || !current.has_edges()) {
            pyramid.truncated = true;
            break;
        }
        PoolResult pooled = pool_once(current, pool_step_seed(options.seed, step));
        pooled.meta.step = static_cast<std::size_t>(step);
        pending.push_back(pooled.meta);
        r = compose_selectors(pooled.selector, r);

        if (std::find(levels.begin(), levels.end(), step) != levels.end()) {
            CoarsenedLevel level;
            level.adjacency = pooled.coarsened.adjacency();
            level.sparsified = sparsify(level.adjacency, options.epsilon);
            level.keep = r;
            level.epsilon = options.epsilon;
            level.edges_before = pooled.coarsened.edge_count();
            level.edges_after = Graph(level.sparsified).edge_count();
            level.cut_log = std::move(pending);
            pending.clear();
            pyramid.levels.push_back(std::move(level));
            r = DecimationSelector::identity(pooled.coarsened.n());
        }

        current = options.sparsify_between_levels
                      ? Graph(sparsify(pooled.coarsened.adjacency(), options.epsilon))
                      : std::move(pooled.coarsened);
    }
    return pyramid;
}

Pyramid build_pyramid(const Graph& g, const std::vector<int>& levels, double epsilon,
                      std::uint64_t seed) {
    BuildOptions options;
    options.epsilon = epsilon;
    options.seed = seed;
    return build_pyramid(g, levels, options);
}

}  // namespace ndp
