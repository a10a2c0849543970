#ifndef SPLITDYN_RNG_HPP
#define SPLITDYN_RNG_HPP

#include <cstdint>

namespace splitdyn {

// splitmix64 finalizer; used both as a stream splitter and as a stateless
// hash so that colorings and layer memberships are fixed by the seed alone.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

// Independent child stream: adding structures never perturbs siblings.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
    return mix64(seed ^ mix64(tag));
}

inline std::uint64_t hash3(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return mix64(seed ^ mix64(a * 0x100000001b3ULL + b));
}

} // namespace splitdyn

#endif
