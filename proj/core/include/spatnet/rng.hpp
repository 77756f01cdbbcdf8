#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace spatnet {

/// Seeded random source with a fixed draw discipline so that chains are
/// bit-reproducible: uniform() consumes exactly one engine output,
/// normal() exactly two (Box-Muller, no cached spare), below(n) runs a
/// rejection loop on raw engine outputs. Consumers document their draw
/// order on top of this.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform on the open interval (0,1); never returns 0 or 1.
    double uniform() { return (static_cast<double>(eng_() >> 11) + 0.5) * 0x1p-53; }

    double normal() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
    }

    double exponential() { return -std::log(uniform()); }

    /// Uniform integer in [0, n). Unbiased via rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return x % n;
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

private:
    static constexpr double kTwoPi = 6.283185307179586476925287;
    std::mt19937_64 eng_;
};

/// Derives an independent stream seed from a base seed and a stream index
/// (splitmix64 finalizer). Used for per-fold, per-network, per-chain seeds.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace spatnet
