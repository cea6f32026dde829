#pragma once

#include <cstdint>

#include "mpulam/core.hpp"
#include "mpulam/space.hpp"

// Seeded randomness for the randomized sweeps. splitmix64 with rejection
// sampling, so identical seeds give identical draws on every platform and
// standard library.

namespace mpulam {

class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform draw from [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        for (;;) {
            const std::uint64_t draw = next();
            if (draw < limit) return draw % bound;
        }
    }

  private:
    std::uint64_t state_;
};

template <typename T>
void shuffle(std::vector<T>& values, SplitMix64& rng) {
    for (std::size_t i = values.size(); i > 1; --i)
        std::swap(values[i - 1], values[rng.below(i)]);
}

inline Multipermutation random_multipermutation(int n, int r, SplitMix64& rng) {
    Tuple t = first_multipermutation(n, r);
    shuffle(t, rng);
    return Multipermutation(std::move(t), r);
}

inline Permutation random_permutation(int n, SplitMix64& rng) {
    Tuple t = Permutation::identity(n).images();
    shuffle(t, rng);
    return Permutation(std::move(t));
}

}  // namespace mpulam
