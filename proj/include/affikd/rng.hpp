#ifndef AFFIKD_RNG_HPP
#define AFFIKD_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace affikd {

// splitmix64 finalizer. Used to derive independent sub-stream seeds from a
// user seed: run r of a LOCO evaluation uses mix_seed(seed, r), a trainer's
// named streams use mix_seed(seed, stream_tag), etc.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic RNG. All value mappings (uniform doubles, Bernoulli,
// shuffling, normals) are hand-rolled on top of the raw mt19937_64 output so
// that a given seed produces bit-identical streams on every platform;
// std::*_distribution is implementation-defined and never used.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    bool bernoulli(double p) { return uniform() < p; }

    // Standard normal via Box-Muller; consumes exactly two raw draws.
    double normal() {
        double u1 = 1.0 - uniform();  // (0, 1]
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    // Uniform integer in [0, n). Modulo bias is < 2^-53 for any n that fits
    // benchmark-scale index ranges.
    std::size_t below(std::size_t n) {
        return static_cast<std::size_t>(uniform() * static_cast<double>(n));
    }

    // Fisher-Yates.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace affikd

#endif
