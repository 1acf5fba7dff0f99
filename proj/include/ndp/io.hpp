#pragma once

#include <string>
#include <vector>

#include "ndp/generators.hpp"
#include "ndp/graph.hpp"
#include "ndp/pyramid.hpp"

namespace ndp::io {

/// Doubles are printed with 17 significant digits so that parse → serialize
/// round-trips bit-exactly.
std::string format_double(double v);

/// GraphFile: { "n": N, "edges": [[i, j, w], ...] }, 0-based, i < j, each
/// undirected edge once, w > 0, edges sorted by (i, j). Self-loops are not
/// representable in this format.
std::string graph_to_json(const Graph& g);
Graph graph_from_json_text(const std::string& text);
Graph read_graph_file(const std::string& path);
void write_graph_file(const Graph& g, const std::string& path);

/// PyramidFile: { "epsilon", "seed", "requested_levels", "truncated",
/// "levels": [ { "n", "kept", "edges", "cut_log": [{ "gamma", "method",
/// "lambda_s_max" }] } ] }. Edges are the sparsified adjacency.
std::string pyramid_to_json(const Pyramid& p);
void write_pyramid_file(const Pyramid& p, const std::string& path);

/// In-memory image of a pyramid file (the pre-sparsification adjacencies
/// are not stored in the file).
struct PyramidFileLevel {
    std::size_t n = 0;
    DecimationSelector kept;
    Matrix adjacency;  // sparsified
    std::vector<PartitionMeta> cut_log;
};

struct PyramidFileData {
    double epsilon = 0.0;
    std::uint64_t seed = 0;
    std::vector<int> requested_levels;
    bool truncated = false;
    std::vector<PyramidFileLevel> levels;
};

/// original_n, when nonzero, is the node count of the graph the pyramid was
/// built from (not stored in the file) and completes validation of the first
/// selector.
PyramidFileData read_pyramid_file(const std::string& path, std::size_t original_n = 0);

std::string densify_csv(const std::vector<gen::DensifyRecord>& records);
std::string epsilon_csv(const std::vector<gen::EpsilonRecord>& records);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace ndp::io
