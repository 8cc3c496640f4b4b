#pragma once

#include <cstdint>
#include <string_view>

namespace polaris {

// Small seedable generator (splitmix64). All randomness in the project flows
// from one 64-bit seed through named sub-streams, so replicates are
// reproducible independent of evaluation order.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Uniform integer in [0, n). Rejection-free modulo bias is negligible for
    // the small ranges used here, but do the unbiased thing anyway.
    std::uint64_t next_below(std::uint64_t n);

    // Independent stream derived from (seed, tag, index).
    static Rng derive(std::uint64_t seed, std::string_view tag, std::uint64_t index = 0);

private:
    std::uint64_t state_;
};

// FNV-1a 64-bit, used for stream derivation and file digests.
std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed = 0xcbf29ce484222325ULL);

}  // namespace polaris
