#pragma once

#include <cstdint>
#include <vector>

#include "ndp/graph.hpp"
#include "ndp/matrix.hpp"
#include "ndp/pyramid.hpp"

namespace ndp::gnn {

/// Trainable weights of one message-passing layer: mixing (W) and skip (V).
struct MPLayerParams {
    Matrix W;
    Matrix V;
};

/// One MP layer: ReLU(D^{−1/2} A D^{−1/2} · X · W + X · V). Isolated nodes
/// receive only the skip term.
Matrix mp_forward(const Matrix& x, const Graph& g, const MPLayerParams& p);

/// Feature pooling by decimation (X' = S·X). Gradient is a row-scatter.
Matrix ndp_pool(const Matrix& x, const DecimationSelector& s);

/// Per-segment mean of rows; offsets has one more entry than segments and
/// must partition [0, x.rows()). Throws on an empty segment.
Matrix global_avg_pool(const Matrix& x, const std::vector<std::size_t>& offsets);

struct XentResult {
    double loss = 0.0;  // mean cross-entropy over rows
    Matrix grad;        // (softmax − onehot) / batch
};

XentResult softmax_xent(const Matrix& logits, const std::vector<int>& labels);

struct ModelConfig {
    std::size_t in_features = 1;
    std::size_t hidden_width = 32;
    std::size_t class_count = 2;
    double l2 = 5e-4;
    double learning_rate = 5e-4;
};

/// MP(h)–P–MP(h)–P–MP(h)–AvgPool–Softmax. Fixed three-stage architecture;
/// pooling strides come from the pyramid selectors (already composed when a
/// stride > 2 is wanted).
struct Model {
    ModelConfig config;
    MPLayerParams mp1, mp2, mp3;
    Matrix w_out;  // hidden × classes
    Matrix b_out;  // 1 × classes

    static Model init(const ModelConfig& config, std::uint64_t seed);

    /// Parameter tensors in a fixed order (shared by gradients and Adam
    /// moments).
    std::vector<Matrix*> tensors();
    std::vector<const Matrix*> tensors() const;
    static const std::vector<const char*>& tensor_names();
};

/// Propagation operators and selectors for one sample, derived from its
/// pyramid (which must have at least two emitted, non-truncated levels).
struct SampleSupport {
    Matrix prop0, prop1, prop2;        // normalized adjacencies per MP stage
    DecimationSelector sel0, sel1;     // composed decimation between stages

    static SampleSupport from_pyramid(const Graph& g, const Pyramid& p);
};

/// A batch: vertically stacked features with block-diagonal support. For a
/// single sample, readout_offsets is {0, n_final}.
struct Batch {
    Matrix features;
    SampleSupport support;
    std::vector<std::size_t> readout_offsets;
    std::vector<int> labels;
};

struct GraphSample {
    Graph graph;
    Matrix features;
    int label = 0;
    Pyramid pyramid;
};

Batch make_batch(const std::vector<const GraphSample*>& samples);
Batch make_batch(const GraphSample& sample);

struct ForwardCache {
    Matrix x0, a1, z1, h1;  // a = prop·x (mixing input), z = pre-activation
    Matrix x1, a2, z2, h2;
    Matrix x2, a3, z3, h3;
    Matrix pooled, logits;
};

/// Loss (mean cross-entropy + l2·Σ‖θ‖²) for the batch; fills cache when
/// given.
double forward(const Model& m, const Batch& b, ForwardCache* cache);

/// Exact reverse-mode gradients for every tensor in Model::tensors() order,
/// including the L2 term.
std::vector<Matrix> backward(const Model& m, const Batch& b, const ForwardCache& cache);

std::vector<int> predict(const Model& m, const Batch& b);

struct AdamState {
    std::vector<Matrix> first_moment;
    std::vector<Matrix> second_moment;
    long step = 0;
    double learning_rate = 5e-4;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;

    static AdamState init(const Model& m);
};

/// Standard bias-corrected Adam update; increments state.step.
void adam_step(Model& m, AdamState& state, const std::vector<Matrix>& grads);

struct EpochStats {
    int epoch = 0;
    double loss = 0.0;
    double accuracy = 0.0;
};

/// Two-class graph classification set: rings vs. grids of varying size,
/// node features = [degree, clustering coefficient], pyramids at levels
/// {0, 1} (stride-2 pooling).
std::vector<GraphSample> make_ring_grid_dataset(std::size_t per_class, std::uint64_t seed);

/// Graph-signal classification on a shared support: two classes of diffused
/// bumps (distinct anchor nodes) plus noise. The pyramid realizes stride-4
/// pooling via composed selectors (levels {1, 3}).
struct SignalTask {
    Graph graph;
    Pyramid pyramid;
    std::vector<Matrix> signals;
    std::vector<int> labels;
};

SignalTask make_signal_task(Graph graph, Pyramid pyramid, std::size_t per_class,
                            std::uint64_t seed);

std::vector<EpochStats> train_graph_classifier(const std::vector<GraphSample>& data,
                                               const ModelConfig& config, std::uint64_t seed,
                                               int epochs, std::size_t batch_size = 1);

std::vector<EpochStats> train_signal_classifier(const SignalTask& task,
                                                const ModelConfig& config, std::uint64_t seed,
                                                int epochs);

}  // namespace ndp::gnn
