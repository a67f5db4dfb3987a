#pragma once

#include <cstdint>
#include <random>

namespace wsn {

/// SplitMix64 finalizer; avalanches a 64-bit value.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
    return splitmix64(a ^ (splitmix64(b) + 0x9e3779b97f4a7c15ULL));
}

/// Derives an independent stream seed from a master seed. Purpose ids keep the
/// placement, election, and field streams decoupled: changing what one stream
/// consumes never perturbs the others.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t purpose) {
    return hash_combine(splitmix64(master), purpose + 1);
}

namespace stream {
inline constexpr std::uint64_t placement = 0;
inline constexpr std::uint64_t election = 1;
inline constexpr std::uint64_t field = 2;
}  // namespace stream

/// Maps 64 random bits to a double in [0, 1). 53-bit resolution, bit-stable
/// across platforms (unlike std::uniform_real_distribution).
inline double unit_from_bits(std::uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Sequential deterministic random stream. mt19937_64 output is fully
/// specified by the standard, so identical seeds give identical draws on
/// every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform draw in [0, 1).
    double unit() { return unit_from_bits(engine_()); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace wsn
