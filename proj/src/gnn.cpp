#include "ndp/gnn.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "ndp/rng.hpp"

namespace ndp::gnn {

namespace {

Matrix relu(const Matrix& z) {
    Matrix h = z;
    for (double& v : h.data()) v = v > 0.0 ? v : 0.0;
    return h;
}

/// Upstream gradient masked by the ReLU activation pattern (subgradient at
/// exactly 0 is taken as 0).
Matrix relu_backward(const Matrix& dh, const Matrix& z) {
    Matrix dz = dh;
    for (std::size_t k = 0; k < dz.data().size(); ++k)
        if (z.data()[k] <= 0.0) dz.data()[k] = 0.0;
    return dz;
}

/// Scatters rows of dy back to the selector's parent shape (zero elsewhere).
Matrix decimation_backward(const Matrix& dy, const DecimationSelector& s) {
    Matrix dx(s.parent_n, dy.cols());
    for (std::size_t i = 0; i < s.kept.size(); ++i)
        for (std::size_t j = 0; j < dy.cols(); ++j) dx(s.kept[i], j) = dy(i, j);
    return dx;
}

Matrix block_diag(const std::vector<const Matrix*>& blocks) {
    std::size_t n = 0;
    for (const Matrix* b : blocks) n += b->rows();
    Matrix out(n, n);
    std::size_t base = 0;
    for (const Matrix* b : blocks) {
        for (std::size_t i = 0; i < b->rows(); ++i)
            for (std::size_t j = 0; j < b->cols(); ++j) out(base + i, base + j) = (*b)(i, j);
        base += b->rows();
    }
    return out;
}

Matrix stack_rows(const std::vector<const Matrix*>& parts) {
    if (parts.empty()) return Matrix();
    const std::size_t cols = parts.front()->cols();
    std::size_t n = 0;
    for (const Matrix* p : parts) {
        if (p->cols() != cols) throw std::invalid_argument("stack_rows: column mismatch");
        n += p->rows();
    }
    Matrix out(n, cols);
    std::size_t base = 0;
    for (const Matrix* p : parts) {
        for (std::size_t i = 0; i < p->rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j) out(base + i, j) = (*p)(i, j);
        base += p->rows();
    }
    return out;
}

DecimationSelector concat_selectors(const std::vector<const DecimationSelector*>& parts) {
    DecimationSelector out;
    std::size_t base = 0;
    for (const DecimationSelector* s : parts) {
        for (std::size_t i : s->kept) out.kept.push_back(base + i);
        base += s->parent_n;
    }
    out.parent_n = base;
    return out;
}

Matrix glorot_uniform(std::size_t fan_in, std::size_t fan_out, Rng& rng) {
    const double bound = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
    Matrix w(fan_in, fan_out);
    for (double& v : w.data()) v = rng.uniform(-bound, bound);
    return w;
}

}  // namespace

Matrix mp_forward(const Matrix& x, const Graph& g, const MPLayerParams& p) {
    if (x.rows() != g.n()) throw std::invalid_argument("mp_forward: feature rows != node count");
    const Matrix prop = normalized_adjacency(g);
    return relu(prop * x * p.W + x * p.V);
}

Matrix ndp_pool(const Matrix& x, const DecimationSelector& s) { return apply_decimation(x, s); }

Matrix global_avg_pool(const Matrix& x, const std::vector<std::size_t>& offsets) {
    if (offsets.size() < 2 || offsets.front() != 0 || offsets.back() != x.rows())
        throw std::invalid_argument("global_avg_pool: offsets must partition the rows");
    const std::size_t segments = offsets.size() - 1;
    Matrix out(segments, x.cols());
    for (std::size_t k = 0; k < segments; ++k) {
        const std::size_t lo = offsets[k];
        const std::size_t hi = offsets[k + 1];
        if (hi <= lo) throw std::invalid_argument("global_avg_pool: empty segment");
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = 0; j < x.cols(); ++j) out(k, j) += x(i, j);
        const double inv = 1.0 / static_cast<double>(hi - lo);
        for (std::size_t j = 0; j < x.cols(); ++j) out(k, j) *= inv;
    }
    return out;
}

XentResult softmax_xent(const Matrix& logits, const std::vector<int>& labels) {
    const std::size_t batch = logits.rows();
    const std::size_t classes = logits.cols();
    if (labels.size() != batch) throw std::invalid_argument("softmax_xent: label count mismatch");

    XentResult result;
    result.grad = Matrix(batch, classes);
    double loss = 0.0;
    for (std::size_t i = 0; i < batch; ++i) {
        const int y = labels[i];
        if (y < 0 || static_cast<std::size_t>(y) >= classes)
            throw std::invalid_argument("softmax_xent: label out of range");
        double mx = logits(i, 0);
        for (std::size_t j = 1; j < classes; ++j) mx = std::max(mx, logits(i, j));
        double z = 0.0;
        for (std::size_t j = 0; j < classes; ++j) z += std::exp(logits(i, j) - mx);
        loss += std::log(z) + mx - logits(i, static_cast<std::size_t>(y));
        for (std::size_t j = 0; j < classes; ++j)
            result.grad(i, j) = std::exp(logits(i, j) - mx) / z / static_cast<double>(batch);
        result.grad(i, static_cast<std::size_t>(y)) -= 1.0 / static_cast<double>(batch);
    }
    result.loss = loss / static_cast<double>(batch);
    return result;
}

Model Model::init(const ModelConfig& config, std::uint64_t seed) {
    Model m;
    m.config = config;
    const std::size_t f = config.in_features;
    const std::size_t h = config.hidden_width;
    const std::size_t c = config.class_count;
    Rng r0(mix_seed(seed, 0)), r1(mix_seed(seed, 1)), r2(mix_seed(seed, 2)),
        r3(mix_seed(seed, 3)), r4(mix_seed(seed, 4)), r5(mix_seed(seed, 5)),
        r6(mix_seed(seed, 6));
    m.mp1 = {glorot_uniform(f, h, r0), glorot_uniform(f, h, r1)};
    m.mp2 = {glorot_uniform(h, h, r2), glorot_uniform(h, h, r3)};
    m.mp3 = {glorot_uniform(h, h, r4), glorot_uniform(h, h, r5)};
    m.w_out = glorot_uniform(h, c, r6);
    m.b_out = Matrix(1, c);
    return m;
}

std::vector<Matrix*> Model::tensors() {
    return {&mp1.W, &mp1.V, &mp2.W, &mp2.V, &mp3.W, &mp3.V, &w_out, &b_out};
}

std::vector<const Matrix*> Model::tensors() const {
    return {&mp1.W, &mp1.V, &mp2.W, &mp2.V, &mp3.W, &mp3.V, &w_out, &b_out};
}

const std::vector<const char*>& Model::tensor_names() {
    static const std::vector<const char*> names = {"mp1.W", "mp1.V", "mp2.W", "mp2.V",
                                                   "mp3.W", "mp3.V", "w_out", "b_out"};
    return names;
}

SampleSupport SampleSupport::from_pyramid(const Graph& g, const Pyramid& p) {
    if (p.levels.size() < 2)
        throw std::invalid_argument("SampleSupport: pyramid has fewer than 2 emitted levels");
    SampleSupport s;
    s.prop0 = normalized_adjacency(g);
    s.prop1 = normalized_adjacency(Graph(p.levels[0].sparsified));
    s.prop2 = normalized_adjacency(Graph(p.levels[1].sparsified));
    s.sel0 = p.levels[0].keep;
    s.sel1 = p.levels[1].keep;
    if (s.sel0.parent_n != g.n())
        throw std::invalid_argument("SampleSupport: pyramid does not match the graph");
    return s;
}

Batch make_batch(const std::vector<const GraphSample*>& samples) {
    if (samples.empty()) throw std::invalid_argument("make_batch: no samples");
    std::vector<SampleSupport> supports;
    supports.reserve(samples.size());
    for (const GraphSample* s : samples)
        supports.push_back(SampleSupport::from_pyramid(s->graph, s->pyramid));

    Batch b;
    std::vector<const Matrix*> feats, p0, p1, p2;
    std::vector<const DecimationSelector*> s0, s1;
    b.readout_offsets = {0};
    for (std::size_t k = 0; k < samples.size(); ++k) {
        feats.push_back(&samples[k]->features);
        p0.push_back(&supports[k].prop0);
        p1.push_back(&supports[k].prop1);
        p2.push_back(&supports[k].prop2);
        s0.push_back(&supports[k].sel0);
        s1.push_back(&supports[k].sel1);
        b.readout_offsets.push_back(b.readout_offsets.back() + supports[k].sel1.kept.size());
        b.labels.push_back(samples[k]->label);
    }
    b.features = stack_rows(feats);
    b.support.prop0 = block_diag(p0);
    b.support.prop1 = block_diag(p1);
    b.support.prop2 = block_diag(p2);
    b.support.sel0 = concat_selectors(s0);
    b.support.sel1 = concat_selectors(s1);
    return b;
}

Batch make_batch(const GraphSample& sample) { return make_batch({&sample}); }

double forward(const Model& m, const Batch& b, ForwardCache* cache) {
    ForwardCache local;
    ForwardCache& c = cache ? *cache : local;

    c.x0 = b.features;
    c.a1 = b.support.prop0 * c.x0;
    c.z1 = c.a1 * m.mp1.W + c.x0 * m.mp1.V;
    c.h1 = relu(c.z1);
    c.x1 = apply_decimation(c.h1, b.support.sel0);
    c.a2 = b.support.prop1 * c.x1;
    c.z2 = c.a2 * m.mp2.W + c.x1 * m.mp2.V;
    c.h2 = relu(c.z2);
    c.x2 = apply_decimation(c.h2, b.support.sel1);
    c.a3 = b.support.prop2 * c.x2;
    c.z3 = c.a3 * m.mp3.W + c.x2 * m.mp3.V;
    c.h3 = relu(c.z3);
    c.pooled = global_avg_pool(c.h3, b.readout_offsets);
    c.logits = c.pooled * m.w_out;
    for (std::size_t i = 0; i < c.logits.rows(); ++i)
        for (std::size_t j = 0; j < c.logits.cols(); ++j) c.logits(i, j) += m.b_out(0, j);

    double loss = softmax_xent(c.logits, b.labels).loss;
    double reg = 0.0;
    for (const Matrix* t : m.tensors())
        for (double v : t->data()) reg += v * v;
    return loss + m.config.l2 * reg;
}

std::vector<Matrix> backward(const Model& m, const Batch& b, const ForwardCache& c) {
    const double l2 = m.config.l2;
    const XentResult xr = softmax_xent(c.logits, b.labels);

    Matrix d_w_out = matmul_at_b(c.pooled, xr.grad);
    Matrix d_b_out(1, xr.grad.cols());
    for (std::size_t i = 0; i < xr.grad.rows(); ++i)
        for (std::size_t j = 0; j < xr.grad.cols(); ++j) d_b_out(0, j) += xr.grad(i, j);
    Matrix d_pooled = xr.grad * m.w_out.transposed();

    Matrix dh3(c.h3.rows(), c.h3.cols());
    for (std::size_t k = 0; k + 1 < b.readout_offsets.size(); ++k) {
        const std::size_t lo = b.readout_offsets[k];
        const std::size_t hi = b.readout_offsets[k + 1];
        const double inv = 1.0 / static_cast<double>(hi - lo);
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = 0; j < dh3.cols(); ++j) dh3(i, j) = d_pooled(k, j) * inv;
    }

    const Matrix dz3 = relu_backward(dh3, c.z3);
    Matrix d_w3 = matmul_at_b(c.a3, dz3);
    Matrix d_v3 = matmul_at_b(c.x2, dz3);
    // prop matrices are symmetric, so propᵀ· = prop·.
    const Matrix dx2 = b.support.prop2 * (dz3 * m.mp3.W.transposed()) + dz3 * m.mp3.V.transposed();

    const Matrix dh2 = decimation_backward(dx2, b.support.sel1);
    const Matrix dz2 = relu_backward(dh2, c.z2);
    Matrix d_w2 = matmul_at_b(c.a2, dz2);
    Matrix d_v2 = matmul_at_b(c.x1, dz2);
    const Matrix dx1 = b.support.prop1 * (dz2 * m.mp2.W.transposed()) + dz2 * m.mp2.V.transposed();

    const Matrix dh1 = decimation_backward(dx1, b.support.sel0);
    const Matrix dz1 = relu_backward(dh1, c.z1);
    Matrix d_w1 = matmul_at_b(c.a1, dz1);
    Matrix d_v1 = matmul_at_b(c.x0, dz1);

    std::vector<Matrix> grads{std::move(d_w1), std::move(d_v1), std::move(d_w2),
                              std::move(d_v2), std::move(d_w3), std::move(d_v3),
                              std::move(d_w_out), std::move(d_b_out)};
    const auto params = m.tensors();
    for (std::size_t t = 0; t < grads.size(); ++t) {
        const std::vector<double>& p = params[t]->data();
        for (std::size_t k = 0; k < p.size(); ++k) grads[t].data()[k] += 2.0 * l2 * p[k];
    }
    return grads;
}

std::vector<int> predict(const Model& m, const Batch& b) {
    ForwardCache cache;
    forward(m, b, &cache);
    std::vector<int> out(cache.logits.rows());
    for (std::size_t i = 0; i < cache.logits.rows(); ++i) {
        std::size_t arg = 0;
        for (std::size_t j = 1; j < cache.logits.cols(); ++j)
            if (cache.logits(i, j) > cache.logits(i, arg)) arg = j;
        out[i] = static_cast<int>(arg);
    }
    return out;
}

AdamState AdamState::init(const Model& m) {
    AdamState s;
    s.learning_rate = m.config.learning_rate;
    for (const Matrix* t : m.tensors()) {
        s.first_moment.emplace_back(t->rows(), t->cols());
        s.second_moment.emplace_back(t->rows(), t->cols());
    }
    return s;
}

void adam_step(Model& m, AdamState& state, const std::vector<Matrix>& grads) {
    const auto params = m.tensors();
    if (grads.size() != params.size()) throw std::invalid_argument("adam_step: gradient count");
    state.step += 1;
    const double bc1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.step));
    const double bc2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.step));
    for (std::size_t t = 0; t < params.size(); ++t) {
        if (grads[t].rows() != params[t]->rows() || grads[t].cols() != params[t]->cols())
            throw std::invalid_argument("adam_step: gradient shape mismatch");
        std::vector<double>& p = params[t]->data();
        std::vector<double>& mom1 = state.first_moment[t].data();
        std::vector<double>& mom2 = state.second_moment[t].data();
        const std::vector<double>& g = grads[t].data();
        for (std::size_t k = 0; k < p.size(); ++k) {
            mom1[k] = state.beta1 * mom1[k] + (1.0 - state.beta1) * g[k];
            mom2[k] = state.beta2 * mom2[k] + (1.0 - state.beta2) * g[k] * g[k];
            const double mhat = mom1[k] / bc1;
            const double vhat = mom2[k] / bc2;
            p[k] -= state.learning_rate * mhat / (std::sqrt(vhat) + state.eps);
        }
    }
}

namespace {

Matrix degree_clustering_features(const Graph& g) {
    const std::vector<double> deg = g.degrees();
    const std::vector<double> cc = clustering_coefficients(g);
    Matrix x(g.n(), 2);
    for (std::size_t i = 0; i < g.n(); ++i) {
        x(i, 0) = deg[i];
        x(i, 1) = cc[i];
    }
    return x;
}

Graph make_ring_graph(std::size_t n) {
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, (i + 1) % n) = 1.0;
        a((i + 1) % n, i) = 1.0;
    }
    return Graph(std::move(a));
}

Graph make_grid_graph(std::size_t rows, std::size_t cols) {
    const std::size_t n = rows * cols;
    Matrix a(n, n);
    auto id = [cols](std::size_t r, std::size_t c) { return r * cols + c; };
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) {
                a(id(r, c), id(r, c + 1)) = 1.0;
                a(id(r, c + 1), id(r, c)) = 1.0;
            }
            if (r + 1 < rows) {
                a(id(r, c), id(r + 1, c)) = 1.0;
                a(id(r + 1, c), id(r, c)) = 1.0;
            }
        }
    return Graph(std::move(a));
}

std::vector<std::size_t> bfs_distances(const Graph& g, std::size_t start) {
    std::vector<std::size_t> dist(g.n(), g.n() + 1);
    dist[start] = 0;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        for (std::size_t v = 0; v < g.n(); ++v)
            if (v != u && g.weight(u, v) > 0.0 && dist[v] > dist[u] + 1) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

}  // namespace

std::vector<GraphSample> make_ring_grid_dataset(std::size_t per_class, std::uint64_t seed) {
    const std::size_t ring_sizes[] = {20, 24, 28, 32, 36};
    const std::pair<std::size_t, std::size_t> grid_shapes[] = {
        {4, 5}, {4, 6}, {5, 5}, {5, 6}, {6, 6}};
    std::vector<GraphSample> data;
    data.reserve(2 * per_class);
    for (std::size_t k = 0; k < per_class; ++k) {
        Graph ring = make_ring_graph(ring_sizes[k % 5]);
        Matrix ring_x = degree_clustering_features(ring);
        Pyramid ring_p = build_pyramid(ring, {0, 1}, kDefaultEpsilon, mix_seed(seed, 2 * k));
        data.push_back({std::move(ring), std::move(ring_x), 0, std::move(ring_p)});

        const auto [gr, gc] = grid_shapes[k % 5];
        Graph grid = make_grid_graph(gr, gc);
        Matrix grid_x = degree_clustering_features(grid);
        Pyramid grid_p = build_pyramid(grid, {0, 1}, kDefaultEpsilon, mix_seed(seed, 2 * k + 1));
        data.push_back({std::move(grid), std::move(grid_x), 1, std::move(grid_p)});
    }
    return data;
}

SignalTask make_signal_task(Graph graph, Pyramid pyramid, std::size_t per_class,
                            std::uint64_t seed) {
    const std::size_t n = graph.n();
    // Approximate diameter endpoints as the two class anchors.
    const std::vector<std::size_t> d0 = bfs_distances(graph, 0);
    std::size_t u = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (d0[i] <= n && d0[i] > d0[u]) u = i;
    const std::vector<std::size_t> du = bfs_distances(graph, u);
    std::size_t v = u;
    for (std::size_t i = 0; i < n; ++i)
        if (du[i] <= n && du[i] > du[v]) v = i;

    const Matrix prop = normalized_adjacency(graph);
    auto diffused_bump = [&](std::size_t anchor) {
        Matrix x(n, 1);
        x(anchor, 0) = 1.0;
        for (int t = 0; t < 8; ++t) x = 0.5 * (prop * x) + 0.5 * x;
        const double peak = x.max_abs();
        if (peak > 0.0) x *= 1.0 / peak;
        return x;
    };
    const Matrix bump_u = diffused_bump(u);
    const Matrix bump_v = diffused_bump(v);

    SignalTask task{std::move(graph), std::move(pyramid), {}, {}};
    Rng rng(mix_seed(seed, 0xF0F0ull));
    for (std::size_t k = 0; k < per_class; ++k) {
        for (int label = 0; label < 2; ++label) {
            Matrix x = label == 0 ? bump_u : bump_v;
            for (double& val : x.data()) val += 0.05 * rng.uniform(-1.0, 1.0);
            task.signals.push_back(std::move(x));
            task.labels.push_back(label);
        }
    }
    return task;
}

namespace {

EpochStats evaluate_epoch(const Model& model, const std::vector<Batch>& eval_batches,
                          int epoch) {
    double loss_sum = 0.0;
    std::size_t correct = 0, total = 0;
    for (const Batch& b : eval_batches) {
        ForwardCache cache;
        loss_sum += forward(model, b, &cache);
        for (std::size_t i = 0; i < b.labels.size(); ++i) {
            std::size_t arg = 0;
            for (std::size_t j = 1; j < cache.logits.cols(); ++j)
                if (cache.logits(i, j) > cache.logits(i, arg)) arg = j;
            correct += static_cast<int>(arg) == b.labels[i] ? 1 : 0;
            ++total;
        }
    }
    return {epoch, loss_sum / static_cast<double>(eval_batches.size()),
            static_cast<double>(correct) / static_cast<double>(total)};
}

}  // namespace

std::vector<EpochStats> train_graph_classifier(const std::vector<GraphSample>& data,
                                               const ModelConfig& config, std::uint64_t seed,
                                               int epochs, std::size_t batch_size) {
    if (data.empty()) throw std::invalid_argument("train_graph_classifier: empty dataset");
    if (batch_size == 0) throw std::invalid_argument("train_graph_classifier: batch_size 0");

    std::vector<Batch> sample_batches;
    sample_batches.reserve(data.size());
    for (const GraphSample& s : data) sample_batches.push_back(make_batch(s));

    Model model = Model::init(config, seed);
    AdamState adam = AdamState::init(model);

    std::vector<std::size_t> order(data.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

    std::vector<EpochStats> report;
    report.reserve(static_cast<std::size_t>(epochs));
    for (int epoch = 1; epoch <= epochs; ++epoch) {
        Rng shuffle_rng(mix_seed(seed, 0xE000ull + static_cast<std::uint64_t>(epoch)));
        shuffle_rng.shuffle(order);
        for (std::size_t at = 0; at < order.size(); at += batch_size) {
            const std::size_t end = std::min(order.size(), at + batch_size);
            ForwardCache cache;
            if (end - at == 1 || batch_size == 1) {
                for (std::size_t i = at; i < end; ++i) {
                    const Batch& b = sample_batches[order[i]];
                    forward(model, b, &cache);
                    adam_step(model, adam, backward(model, b, cache));
                }
            } else {
                std::vector<const GraphSample*> group;
                for (std::size_t i = at; i < end; ++i) group.push_back(&data[order[i]]);
                const Batch b = make_batch(group);
                forward(model, b, &cache);
                adam_step(model, adam, backward(model, b, cache));
            }
        }
        report.push_back(evaluate_epoch(model, sample_batches, epoch));
    }
    return report;
}

std::vector<EpochStats> train_signal_classifier(const SignalTask& task,
                                                const ModelConfig& config, std::uint64_t seed,
                                                int epochs) {
    if (task.signals.empty()) throw std::invalid_argument("train_signal_classifier: no signals");
    const SampleSupport support = SampleSupport::from_pyramid(task.graph, task.pyramid);

    Batch b;
    b.support = support;
    b.readout_offsets = {0, support.sel1.kept.size()};

    Model model = Model::init(config, seed);
    AdamState adam = AdamState::init(model);

    std::vector<std::size_t> order(task.signals.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

    std::vector<EpochStats> report;
    for (int epoch = 1; epoch <= epochs; ++epoch) {
        Rng shuffle_rng(mix_seed(seed, 0xE000ull + static_cast<std::uint64_t>(epoch)));
        shuffle_rng.shuffle(order);
        for (std::size_t i : order) {
            b.features = task.signals[i];
            b.labels = {task.labels[i]};
            ForwardCache cache;
            forward(model, b, &cache);
            adam_step(model, adam, backward(model, b, cache));
        }
        // Evaluation pass over all signals.
        double loss_sum = 0.0;
        std::size_t correct = 0;
        for (std::size_t i = 0; i < task.signals.size(); ++i) {
            b.features = task.signals[i];
            b.labels = {task.labels[i]};
            ForwardCache cache;
            loss_sum += forward(model, b, &cache);
            std::size_t arg = 0;
            for (std::size_t j = 1; j < cache.logits.cols(); ++j)
                if (cache.logits(0, j) > cache.logits(0, arg)) arg = j;
            correct += static_cast<int>(arg) == task.labels[i] ? 1 : 0;
        }
        report.push_back({epoch, loss_sum / static_cast<double>(task.signals.size()),
                          static_cast<double>(correct) / static_cast<double>(task.signals.size())});
    }
    return report;
}

}  // namespace ndp::gnn
