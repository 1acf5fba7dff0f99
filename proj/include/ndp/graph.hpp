#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ndp/matrix.hpp"

namespace ndp {

/// Edges lighter than this are treated as absent by connectivity traversals.
inline constexpr double kEdgePresenceEps = 1e-15;

/// Undirected weighted graph stored as a symmetric dense adjacency matrix.
/// Nonzero diagonal entries are self-loops. Immutable after construction.
class Graph {
public:
    /// Validates: square, symmetric within 1e-12, entries finite and >= 0.
    explicit Graph(Matrix adjacency);

    std::size_t n() const { return a_.rows(); }
    const Matrix& adjacency() const { return a_; }
    double weight(std::size_t i, std::size_t j) const { return a_(i, j); }

    /// Degree d_i = sum_j a_ij, self-loop counted once.
    std::vector<double> degrees() const;

    /// Sum of a_ij over i < j (self-loops excluded).
    double total_edge_weight() const;
    /// Number of pairs i < j with a_ij > 0.
    std::size_t edge_count() const;
    bool has_edges() const { return edge_count() > 0; }
    bool has_self_loops() const;

private:
    Matrix a_;
};

/// L = D − A with degrees as defined above (row sums are exactly zero,
/// including for graphs with self-loops, since the loop weight cancels).
Matrix laplacian(const Graph& g);

/// L_s = I − D^{−1/2} A D^{−1/2}. Degree-0 nodes keep a zero row with
/// diagonal 1. Spectrum lies in [0, 2].
Matrix sym_laplacian(const Graph& g);

/// Q = D − A + 2·diag(A). Equals the plain Laplacian for loop-free graphs
/// and stays invertible on connected graphs with self-loops; the adjacency
/// (including loop weights) is recoverable from Q.
Matrix loopy_laplacian(const Graph& g);

/// D^{−1/2} A D^{−1/2} (degree-0 rows stay zero). The message-passing
/// propagation operator.
Matrix normalized_adjacency(const Graph& g);

bool is_connected(const Graph& g);
std::size_t component_count(const Graph& g);

/// 2-coloring via BFS; nullopt when the graph is not bipartite. Colors are
/// 0/1, color 0 on the lowest-indexed node of each component.
std::optional<std::vector<int>> two_coloring(const Graph& g);

/// Local clustering coefficient per node, on the binarized (weight > 0)
/// adjacency with self-loops ignored. Nodes of degree < 2 get 0.
std::vector<double> clustering_coefficients(const Graph& g);

struct DisjointUnion {
    Graph graph;
    Matrix features;
    /// offsets[k] .. offsets[k+1] is the node range of input graph k;
    /// size = number of graphs + 1.
    std::vector<std::size_t> offsets;
};

/// Block-diagonal union of the given graphs with vertically stacked feature
/// matrices. All feature matrices must have rows = their graph's n and a
/// common column count.
DisjointUnion disjoint_union(const std::vector<Graph>& gs, const std::vector<Matrix>& xs);

}  // namespace ndp
