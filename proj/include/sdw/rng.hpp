#pragma once

#include <cstdint>
#include <vector>

namespace sdw {

// Deterministic 64-bit stream (splitmix64). Unlike std::uniform_int_distribution,
// every draw is fixed by the standard-free algorithm below, so results are
// identical across platforms and compilers.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, n) by rejection sampling.
    std::uint64_t bounded(std::uint64_t n) {
        if (n < 2) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// Stream k of a seeded family. Draw k depends on (seed, k) alone, so a set of
// substreams can be consumed in any order, or in parallel, with identical results.
inline Rng substream(std::uint64_t seed, std::uint64_t k) {
    return Rng(mix64(seed + 0x9e3779b97f4a7c15ull) ^
               mix64(k * 0xff51afd7ed558ccdull + 0x2545f4914f6cdd1dull));
}

// Fisher-Yates shuffle order: out[i] is the source index of position i.
inline std::vector<int> random_indices(int n, Rng& rng) {
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
        const int j = static_cast<int>(rng.bounded(static_cast<std::uint64_t>(i) + 1));
        std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
    }
    return idx;
}

}  // namespace sdw
