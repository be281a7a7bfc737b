#ifndef RAINBOW_RNG_HPP
#define RAINBOW_RNG_HPP

#include <cstdint>
#include <random>

namespace rainbow {

// Single RNG discipline for the whole toolkit: std::mt19937_64 (whose output
// sequence is fixed by the standard) with hand-rolled conversions, so results
// are reproducible across platforms. Parallel work derives one seed per trial
// from (base seed, stream index); trials never share a stream, which keeps
// outputs independent of scheduling.

// splitmix64 finalizer; good enough to decorrelate counter-derived seeds.
inline uint64_t mix_bits(uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t derive_seed(uint64_t base, uint64_t stream) {
    return mix_bits(base ^ mix_bits(stream + 1));
}

class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() { return (next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [lo, hi] via rejection; exact distribution.
    int uniform_int(int lo, int hi) {
        const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return lo + static_cast<int>(x % span);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i)
            std::swap(v[i - 1], v[uniform_int(0, static_cast<int>(i) - 1)]);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace rainbow

#endif
