#include "ndp/partition.hpp"

#include <cmath>
#include <stdexcept>

#include "ndp/linalg.hpp"
#include "ndp/rng.hpp"

namespace ndp {

std::string to_string(CutMethod m) { return m == CutMethod::spectral ? "spectral" : "random"; }

namespace {

void require_assignment(const Graph& g, const std::vector<int>& assignment) {
    if (assignment.size() != g.n())
        throw std::invalid_argument("assignment size != node count");
    for (int z : assignment)
        if (z != 1 && z != -1) throw std::invalid_argument("assignment entries must be +1/-1");
}

Partition from_assignment(const Graph& g, std::vector<int> assignment, CutMethod method) {
    Partition p;
    p.gamma = cut_fraction(g, assignment);
    p.method = method;
    for (std::size_t i = 0; i < assignment.size(); ++i)
        (assignment[i] > 0 ? p.keep : p.drop).push_back(i);
    p.assignment = std::move(assignment);
    return p;
}

}  // namespace

double crossing_weight(const Graph& g, const std::vector<int>& assignment) {
    require_assignment(g, assignment);
    double s = 0.0;
    for (std::size_t i = 0; i < g.n(); ++i)
        for (std::size_t j = i + 1; j < g.n(); ++j)
            if (assignment[i] != assignment[j]) s += g.weight(i, j);
    return s;
}

double cut_fraction(const Graph& g, const std::vector<int>& assignment) {
    const double total = g.total_edge_weight();
    if (total == 0.0) {
        require_assignment(g, assignment);
        return 0.0;
    }
    return crossing_weight(g, assignment) / total;
}

Partition spectral_partition(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("spectral_partition: empty graph");
    if (!g.has_edges()) {
        // Terminal case: everything goes to V⁺ (L_s is the identity).
        Partition p = from_assignment(g, std::vector<int>(g.n(), 1), CutMethod::spectral);
        p.lambda_s_max = 1.0;
        return p;
    }

    const Matrix ls = sym_laplacian(g);
    std::vector<double> top;
    double lambda = 0.0;
    if (auto pr = linalg::power_iteration(ls)) {
        lambda = pr->eigenvalue;
        top = std::move(pr->eigenvector);
    } else {
        // Near-degenerate top of the spectrum: fall back to the full solve.
        const linalg::Spectrum spec = linalg::jacobi_eigh(ls);
        lambda = spec.eigenvalues.front();
        const Matrix& u = *spec.eigenvectors;
        top.resize(g.n());
        for (std::size_t i = 0; i < g.n(); ++i) top[i] = u(i, 0);
        linalg::apply_sign_convention(top);
    }

    std::vector<int> assignment(g.n());
    for (std::size_t i = 0; i < g.n(); ++i) assignment[i] = top[i] >= 0.0 ? 1 : -1;
    Partition p = from_assignment(g, std::move(assignment), CutMethod::spectral);
    p.lambda_s_max = lambda;
    return p;
}

Partition random_partition(const Graph& g, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<int> assignment(g.n());
    for (auto& z : assignment) z = rng.coin() ? 1 : -1;
    return from_assignment(g, std::move(assignment), CutMethod::random);
}

Partition partition_with_fallback(const Graph& g, std::uint64_t seed) {
    Partition spectral = spectral_partition(g);
    if (spectral.gamma >= 0.5) return spectral;
    Partition fallback = random_partition(g, seed);
    fallback.lambda_s_max = spectral.lambda_s_max;
    return fallback;
}

CutReport maxcut_upper_bound(const Graph& g) {
    if (!g.has_edges()) throw std::invalid_argument("maxcut_upper_bound: graph has no edges");
    const linalg::Spectrum spec = linalg::jacobi_eigh(sym_laplacian(g), /*with_vectors=*/false);
    CutReport report;
    report.lambda_s_max = spec.eigenvalues.front();
    report.upper_bound = report.lambda_s_max / 2.0;
    report.lower_bound = 0.5;
    report.trevisan_ok = report.lambda_s_max >= kTrevisanThreshold;
    report.gamma = spectral_partition(g).gamma;
    return report;
}

TrevisanGuarantee trevisan_guarantee(double lambda_s_max) {
    if (!(lambda_s_max >= -1e-9 && lambda_s_max <= 2.0 + 1e-9))
        throw std::invalid_argument("trevisan_guarantee: lambda outside [0, 2]");
    if (lambda_s_max >= kTrevisanThreshold) return {true, kTrevisanRatio};
    return {false, 0.5};
}

BruteForceCut brute_force_maxcut(const Graph& g) {
    const std::size_t n = g.n();
    if (n == 0) throw std::invalid_argument("brute_force_maxcut: empty graph");
    if (n > kBruteForceMaxNodes)
        throw std::invalid_argument("brute_force_maxcut: graph too large for enumeration");

    const double total = g.total_edge_weight();
    std::vector<int> assignment(n, 1), best(n, 1);
    double best_cross = 0.0;
    // Node 0 fixed to +1; every cut appears exactly once among the 2^{n-1} masks.
    const std::uint64_t count = 1ull << (n - 1);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        for (std::size_t i = 1; i < n; ++i)
            assignment[i] = (mask >> (i - 1)) & 1ull ? -1 : 1;
        const double cross = crossing_weight(g, assignment);
        if (cross > best_cross) {
            best_cross = cross;
            best = assignment;
        }
    }
    return {best, total == 0.0 ? 0.0 : best_cross / total};
}

}  // namespace ndp
