#pragma once

#include <cstdint>
#include <random>

namespace shiftcert::rng {

// Every sampling operation derives its own engine from (seed, operation tag),
// so the same user-facing seed gives independent streams per operation and
// Monte Carlo loops can be chunked deterministically: chunk c of an estimate
// uses derive(seed, tag, c). Results are then invariant to how chunks are
// scheduled across threads.

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

enum class Tag : std::uint64_t {
    dataset = 1,
    shift_draw = 2,
    ood_points = 3,
    ood_shift = 4,
    angled_direction = 5,
    mc_points = 6,
    mc_shift = 7,
    mc_flip = 8,
    margin_points = 9,
    prop_a1_design = 10,
    prop_a1_noise = 11,
    eval_accuracy = 12,
};

inline std::uint64_t derive(std::uint64_t seed, Tag tag) {
    return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(tag)));
}

inline std::uint64_t derive(std::uint64_t seed, Tag tag, std::uint64_t counter) {
    return splitmix64(derive(seed, tag) ^ splitmix64(counter + 0x51ed270b43c5fd1bULL));
}

inline std::mt19937_64 engine(std::uint64_t key) { return std::mt19937_64(key); }

inline std::mt19937_64 engine(std::uint64_t seed, Tag tag) { return engine(derive(seed, tag)); }

inline std::mt19937_64 engine(std::uint64_t seed, Tag tag, std::uint64_t counter) {
    return engine(derive(seed, tag, counter));
}

// Chunk width shared by all Monte Carlo loops.
inline constexpr std::int64_t kChunk = 8192;

}  // namespace shiftcert::rng
