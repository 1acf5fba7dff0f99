#include "ndp/graph.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace ndp {

Graph::Graph(Matrix adjacency) : a_(std::move(adjacency)) {
    if (a_.rows() != a_.cols()) throw std::invalid_argument("Graph: adjacency not square");
    if (!a_.is_finite()) throw std::invalid_argument("Graph: adjacency has NaN/Inf");
    if (!a_.is_symmetric(1e-12)) throw std::invalid_argument("Graph: adjacency not symmetric");
    for (double v : a_.data())
        if (v < 0.0) throw std::invalid_argument("Graph: negative edge weight");
}

std::vector<double> Graph::degrees() const {
    std::vector<double> d(n(), 0.0);
    for (std::size_t i = 0; i < n(); ++i) {
        double s = 0.0;
        for (double v : a_.row(i)) s += v;
        d[i] = s;
    }
    return d;
}

double Graph::total_edge_weight() const {
    double s = 0.0;
    for (std::size_t i = 0; i < n(); ++i)
        for (std::size_t j = i + 1; j < n(); ++j) s += a_(i, j);
    return s;
}

std::size_t Graph::edge_count() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n(); ++i)
        for (std::size_t j = i + 1; j < n(); ++j)
            if (a_(i, j) > 0.0) ++c;
    return c;
}

bool Graph::has_self_loops() const {
    for (std::size_t i = 0; i < n(); ++i)
        if (a_(i, i) != 0.0) return true;
    return false;
}

Matrix laplacian(const Graph& g) {
    const std::size_t n = g.n();
    const std::vector<double> d = g.degrees();
    Matrix l(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) l(i, j) = -g.weight(i, j);
        l(i, i) += d[i];
    }
    return l;
}

namespace {

std::vector<double> inv_sqrt_degrees(const Graph& g) {
    std::vector<double> s = g.degrees();
    for (double& v : s) v = v > 0.0 ? 1.0 / std::sqrt(v) : 0.0;
    return s;
}

}  // namespace

Matrix sym_laplacian(const Graph& g) {
    const std::size_t n = g.n();
    const std::vector<double> s = inv_sqrt_degrees(g);
    Matrix ls(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) ls(i, j) = -s[i] * g.weight(i, j) * s[j];
        ls(i, i) += 1.0;  // degree-0 rows end up as e_i, keeping entries finite
    }
    return ls;
}

Matrix loopy_laplacian(const Graph& g) {
    Matrix q = laplacian(g);
    for (std::size_t i = 0; i < g.n(); ++i) q(i, i) += 2.0 * g.weight(i, i);
    return q;
}

Matrix normalized_adjacency(const Graph& g) {
    const std::size_t n = g.n();
    const std::vector<double> s = inv_sqrt_degrees(g);
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p(i, j) = s[i] * g.weight(i, j) * s[j];
    return p;
}

namespace {

/// BFS component labels under the edge-presence rule.
std::vector<int> component_labels(const Graph& g) {
    const std::size_t n = g.n();
    std::vector<int> label(n, -1);
    int next = 0;
    for (std::size_t start = 0; start < n; ++start) {
        if (label[start] >= 0) continue;
        label[start] = next;
        std::deque<std::size_t> queue{start};
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v = 0; v < n; ++v) {
                if (v != u && label[v] < 0 && g.weight(u, v) > kEdgePresenceEps) {
                    label[v] = next;
                    queue.push_back(v);
                }
            }
        }
        ++next;
    }
    return label;
}

}  // namespace

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

std::size_t component_count(const Graph& g) {
    if (g.n() == 0) return 0;
    const std::vector<int> label = component_labels(g);
    int max_label = 0;
    for (int l : label) max_label = std::max(max_label, l);
    return static_cast<std::size_t>(max_label) + 1;
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
    const std::size_t n = g.n();
    std::vector<int> color(n, -1);
    for (std::size_t i = 0; i < n; ++i)
        if (g.weight(i, i) > kEdgePresenceEps) return std::nullopt;  // self-loop: odd cycle
    for (std::size_t start = 0; start < n; ++start) {
        if (color[start] >= 0) continue;
        color[start] = 0;
        std::deque<std::size_t> queue{start};
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v = 0; v < n; ++v) {
                if (v == u || g.weight(u, v) <= kEdgePresenceEps) continue;
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

std::vector<double> clustering_coefficients(const Graph& g) {
    const std::size_t n = g.n();
    std::vector<std::vector<std::size_t>> nbrs(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && g.weight(i, j) > 0.0) nbrs[i].push_back(j);

    std::vector<double> cc(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k = nbrs[i].size();
        if (k < 2) continue;
        std::size_t links = 0;
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                if (g.weight(nbrs[i][a], nbrs[i][b]) > 0.0) ++links;
        cc[i] = 2.0 * static_cast<double>(links) / (static_cast<double>(k) * (k - 1));
    }
    return cc;
}

DisjointUnion disjoint_union(const std::vector<Graph>& gs, const std::vector<Matrix>& xs) {
    if (gs.empty()) throw std::invalid_argument("disjoint_union: empty graph list");
    if (gs.size() != xs.size())
        throw std::invalid_argument("disjoint_union: graph/feature count mismatch");
    const std::size_t f = xs.front().cols();
    std::size_t total = 0;
    for (std::size_t k = 0; k < gs.size(); ++k) {
        if (xs[k].rows() != gs[k].n())
            throw std::invalid_argument("disjoint_union: feature rows != node count");
        if (xs[k].cols() != f)
            throw std::invalid_argument("disjoint_union: feature dimension mismatch");
        total += gs[k].n();
    }

    Matrix adj(total, total);
    Matrix feat(total, f);
    std::vector<std::size_t> offsets{0};
    std::size_t base = 0;
    for (std::size_t k = 0; k < gs.size(); ++k) {
        const std::size_t nk = gs[k].n();
        for (std::size_t i = 0; i < nk; ++i) {
            for (std::size_t j = 0; j < nk; ++j) adj(base + i, base + j) = gs[k].weight(i, j);
            for (std::size_t j = 0; j < f; ++j) feat(base + i, j) = xs[k](i, j);
        }
        base += nk;
        offsets.push_back(base);
    }
    return DisjointUnion{Graph(std::move(adj)), std::move(feat), std::move(offsets)};
}

}  // namespace ndp
