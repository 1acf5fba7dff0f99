#include "ndp/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "json.hpp"

namespace ndp::io {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

struct EdgeList {
    std::size_t n = 0;
    std::vector<std::tuple<std::size_t, std::size_t, double>> edges;  // i < j, sorted
};

EdgeList to_edge_list(const Matrix& a) {
    EdgeList el;
    el.n = a.rows();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i + 1; j < a.cols(); ++j)
            if (a(i, j) != 0.0) el.edges.emplace_back(i, j, a(i, j));
    return el;
}

void append_edges(std::string& out, const EdgeList& el) {
    out += "[";
    bool first = true;
    for (const auto& [i, j, w] : el.edges) {
        if (!first) out += ",";
        first = false;
        out += "[" + std::to_string(i) + "," + std::to_string(j) + "," + format_double(w) + "]";
    }
    out += "]";
}

Graph graph_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
        throw std::invalid_argument("GraphFile: expected object with \"n\" and \"edges\"");
    const std::size_t n = doc.at("n").get<std::size_t>();
    Matrix a(n, n);
    for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 3)
            throw std::invalid_argument("GraphFile: edge must be [i, j, w]");
        const std::size_t i = e.at(0).get<std::size_t>();
        const std::size_t j = e.at(1).get<std::size_t>();
        const double w = e.at(2).get<double>();
        if (i >= j) throw std::invalid_argument("GraphFile: edges must satisfy i < j");
        if (j >= n) throw std::invalid_argument("GraphFile: edge index out of range");
        if (!(w > 0.0) || !std::isfinite(w))
            throw std::invalid_argument("GraphFile: edge weight must be finite and > 0");
        if (a(i, j) != 0.0) throw std::invalid_argument("GraphFile: duplicate edge");
        a(i, j) = w;
        a(j, i) = w;
    }
    return Graph(std::move(a));
}

}  // namespace

std::string graph_to_json(const Graph& g) {
    if (g.has_self_loops())
        throw std::invalid_argument("graph_to_json: self-loops are not representable");
    std::string out = "{\"n\":" + std::to_string(g.n()) + ",\"edges\":";
    append_edges(out, to_edge_list(g.adjacency()));
    out += "}\n";
    return out;
}

Graph graph_from_json_text(const std::string& text) {
    return graph_from_json(json::parse(text));
}

Graph read_graph_file(const std::string& path) {
    return graph_from_json_text(read_text_file(path));
}

void write_graph_file(const Graph& g, const std::string& path) {
    write_text_file(path, graph_to_json(g));
}

std::string pyramid_to_json(const Pyramid& p) {
    std::string out = "{\"epsilon\":" + format_double(p.epsilon);
    out += ",\"seed\":" + std::to_string(p.seed);
    out += ",\"requested_levels\":[";
    for (std::size_t i = 0; i < p.requested_levels.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.requested_levels[i]);
    }
    out += "],\"truncated\":";
    out += p.truncated ? "true" : "false";
    out += ",\"levels\":[";
    for (std::size_t li = 0; li < p.levels.size(); ++li) {
        const CoarsenedLevel& level = p.levels[li];
        if (li) out += ",";
        out += "{\"n\":" + std::to_string(level.keep.size());
        out += ",\"kept\":[";
        for (std::size_t i = 0; i < level.keep.kept.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(level.keep.kept[i]);
        }
        out += "],\"edges\":";
        append_edges(out, to_edge_list(level.sparsified));
        out += ",\"cut_log\":[";
        for (std::size_t ci = 0; ci < level.cut_log.size(); ++ci) {
            const PartitionMeta& meta = level.cut_log[ci];
            if (ci) out += ",";
            out += "{\"step\":" + std::to_string(meta.step);
            out += ",\"gamma\":" + format_double(meta.gamma);
            out += ",\"method\":\"" + to_string(meta.method) + "\"";
            out += ",\"lambda_s_max\":" + format_double(meta.lambda_s_max) + "}";
        }
        out += "]}";
    }
    out += "]}\n";
    return out;
}

void write_pyramid_file(const Pyramid& p, const std::string& path) {
    write_text_file(path, pyramid_to_json(p));
}

PyramidFileData read_pyramid_file(const std::string& path, std::size_t original_n) {
    const json doc = json::parse(read_text_file(path));
    PyramidFileData data;
    data.epsilon = doc.at("epsilon").get<double>();
    data.seed = doc.value("seed", std::uint64_t{0});
    data.requested_levels = doc.at("requested_levels").get<std::vector<int>>();
    data.truncated = doc.at("truncated").get<bool>();

    for (const auto& jl : doc.at("levels")) {
        PyramidFileLevel level;
        level.n = jl.at("n").get<std::size_t>();
        level.kept.kept = jl.at("kept").get<std::vector<std::size_t>>();
        if (level.kept.kept.size() != level.n)
            throw std::invalid_argument("PyramidFile: kept length != n");

        json graph_doc;
        graph_doc["n"] = level.n;
        graph_doc["edges"] = jl.at("edges");
        level.adjacency = graph_from_json(graph_doc).adjacency();

        for (const auto& jc : jl.at("cut_log")) {
            PartitionMeta meta;
            meta.step = jc.value("step", std::size_t{0});
            meta.gamma = jc.at("gamma").get<double>();
            const std::string method = jc.at("method").get<std::string>();
            if (method != "spectral" && method != "random")
                throw std::invalid_argument("PyramidFile: unknown cut method");
            meta.method = method == "spectral" ? CutMethod::spectral : CutMethod::random;
            meta.lambda_s_max = jc.at("lambda_s_max").get<double>();
            level.cut_log.push_back(meta);
        }
        data.levels.push_back(std::move(level));
    }

    // The kept chains must compose: each level selects from the previous one.
    // The original node count is not stored in the file; callers that know it
    // pass original_n so the first selector is fully validated.
    std::size_t prev_n = 0;
    for (std::size_t li = 0; li < data.levels.size(); ++li) {
        PyramidFileLevel& level = data.levels[li];
        if (li == 0) {
            std::size_t max_idx = 0;
            for (std::size_t idx : level.kept.kept) max_idx = std::max(max_idx, idx + 1);
            if (original_n > 0 && max_idx > original_n)
                throw std::invalid_argument("PyramidFile: kept index exceeds original size");
            level.kept.parent_n = original_n > 0 ? original_n : max_idx;
        } else {
            level.kept.parent_n = prev_n;
        }
        level.kept.validate();
        prev_n = level.n;
    }
    return data;
}

std::string densify_csv(const std::vector<gen::DensifyRecord>& records) {
    std::string out = "density,spectral_gamma,random_gamma,upper_bound,trevisan_line\n";
    for (const auto& r : records) {
        out += format_double(r.density) + "," + format_double(r.spectral_gamma) + "," +
               format_double(r.random_gamma) + "," + format_double(r.upper_bound) + "," +
               format_double(r.trevisan_line) + "\n";
    }
    return out;
}

std::string epsilon_csv(const std::vector<gen::EpsilonRecord>& records) {
    std::string out = "epsilon,spectral_distance,edge_count\n";
    for (const auto& r : records) {
        out += format_double(r.epsilon) + "," + format_double(r.spectral_distance) + "," +
               std::to_string(r.edge_count) + "\n";
    }
    return out;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << content;
}

}  // namespace ndp::io
