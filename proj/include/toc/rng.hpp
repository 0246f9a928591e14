#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace toc {

// Deterministic seed derivation: every randomized component owns a stream
// seeded as mix(master, purpose). splitmix64 finalizer.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t hash_name(std::string_view name) {
    // FNV-1a, used for purpose salts and config hashing.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : name) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::string_view purpose, std::uint64_t salt = 0) {
    return std::mt19937_64(mix_seed(mix_seed(seed, hash_name(purpose)), salt));
}

} // namespace toc
