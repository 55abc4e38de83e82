#pragma once

#include <cstdint>
#include <random>

namespace d2dsim {

// splitmix64 finalizer; good avalanche, cheap, stable across platforms.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives an independent stream seed from a base seed and tags
/// (e.g. sweep point index, trial index). Order-sensitive by design.
constexpr std::uint64_t derive_seed(std::uint64_t base) {
    return splitmix64(base);
}

template <class... Tags>
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag, Tags... rest) {
    return derive_seed(splitmix64(base ^ (tag + 0x9e3779b97f4a7c15ULL)), rest...);
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
    return std::mt19937_64(splitmix64(seed));
}

} // namespace d2dsim
