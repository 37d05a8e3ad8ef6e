#pragma once

#include <cstdint>
#include <limits>

namespace stabsim {

// SplitMix64: tiny counter-style engine with full 64-bit state.  Every
// Monte Carlo trial gets its own engine derived from (master seed, stream
// tag, trial index), so results do not depend on execution order or on the
// number of worker threads.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed = 0) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double u01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n).  Modulo bias is ~n/2^64; n here is always a
    // small count (indices, trial numbers), so it is negligible.
    std::uint64_t below(std::uint64_t n) { return (*this)() % n; }

private:
    std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derive an independent substream key from a master seed, a stream tag
// (which experiment phase / lane) and a trial index.
inline std::uint64_t substream_key(std::uint64_t master, std::uint64_t stream,
                                   std::uint64_t trial = 0) {
    std::uint64_t h = mix64(master ^ 0x6a09e667f3bcc909ULL);
    h = mix64(h ^ (stream + 0xbb67ae8584caa73bULL));
    h = mix64(h ^ (trial + 0x3c6ef372fe94f82bULL));
    return h;
}

inline SplitMix64 substream(std::uint64_t master, std::uint64_t stream,
                            std::uint64_t trial = 0) {
    return SplitMix64(substream_key(master, stream, trial));
}

} // namespace stabsim
