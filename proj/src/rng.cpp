#include "polaris/rng.hpp"

namespace polaris {

std::uint64_t Rng::next_below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return v % n;
}

Rng Rng::derive(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
    std::uint64_t h = fnv1a64(tag.data(), tag.size());
    h = fnv1a64(&index, sizeof(index), h);
    h = fnv1a64(&seed, sizeof(seed), h);
    return Rng(h);
}

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = seed;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace polaris
