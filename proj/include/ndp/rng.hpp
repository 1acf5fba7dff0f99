#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace ndp {

/// Derives an independent stream seed from a root seed and a stream index
/// (splitmix64 finalizer). Used to give each pooling step / sweep point its
/// own generator so that extending a run never perturbs earlier draws.
inline std::uint64_t mix_seed(std::uint64_t root, std::uint64_t stream) {
    std::uint64_t z = root + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Seeded generator wrapping std::mt19937_64 with explicit conversions,
/// so that every drawn value is reproducible bit-for-bit under a fixed seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform double in [0, 1), 53 significant bits.
    double u01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

    bool coin() { return (eng_() & 1ull) != 0; }

    /// Uniform index in [0, n); rejection sampling keeps it exactly uniform.
    std::size_t index(std::size_t n) {
        const std::uint64_t un = static_cast<std::uint64_t>(n);
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / un * un;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return static_cast<std::size_t>(x % un);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[index(i)]);
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace ndp
