#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace qmb {

// Deterministic random source.  std::mt19937_64 has a fully specified
// algorithm, and the helpers below avoid std::uniform_*_distribution
// (whose output is implementation-defined), so streams are reproducible
// across compilers and platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on [0, 1): 53 random mantissa bits.
    double next_unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform on [lo, hi).
    double next_real(double lo, double hi) {
        return lo + (hi - lo) * next_unit();
    }

    // Uniform on {0, ..., n-1} via rejection-free modulo on a wide draw.
    // Bias is at most n / 2^64, negligible for the small ranges used here.
    std::uint64_t next_index(std::uint64_t n) {
        return n == 0 ? 0 : engine_() % n;
    }

    bool next_bool(double p_true = 0.5) { return next_unit() < p_true; }

private:
    std::mt19937_64 engine_;
};

// FNV-1a, used to derive independent substream seeds from check ids so
// adding or reordering checks does not shift the streams of the others.
inline std::uint64_t hash_label(std::string_view label) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : label) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline Rng substream(std::uint64_t master_seed, std::string_view label) {
    return Rng(master_seed ^ hash_label(label));
}

}  // namespace qmb
