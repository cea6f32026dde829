#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "mpulam/core.hpp"

// Deterministic generation of the full space M_r(S_n) of r-regular
// multipermutations, in strict lexicographic order, plus unranking so that
// sweep workloads can be range-partitioned.

namespace mpulam {

// n!/(r!)^(n/r), the number of distinct r-regular multipermutations.
inline BigInt space_size(int n, int r) {
    if (r < 1 || n < 1 || n % r != 0) throw ParameterError("space_size: r must divide n");
    return big_factorial(static_cast<unsigned long>(n)) /
           big_pow(big_factorial(static_cast<unsigned long>(r)), static_cast<unsigned long>(n / r));
}

// Guarded 64-bit space size for enumeration workloads.
inline std::uint64_t space_size_checked(int n, int r, std::uint64_t cap) {
    BigInt size = space_size(n, r);
    if (size > BigInt(static_cast<unsigned long>(cap)))
        throw CapacityError("multipermutation space exceeds cap " + std::to_string(cap));
    return to_u64(size);
}

inline Tuple first_multipermutation(int n, int r) {
    if (r < 1 || n < 1 || n % r != 0) throw ParameterError("first_multipermutation: r must divide n");
    Tuple t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) t[static_cast<std::size_t>(i)] = i / r + 1;
    return t;
}

// Lexicographic successor on multiset permutations; false once exhausted.
inline bool next_multipermutation(Tuple& t) {
    return std::next_permutation(t.begin(), t.end());
}

// Single-pass cursor over M_r(S_n) in lexicographic order. Yields exactly
// n!/(r!)^(n/r) distinct tuples.
class SpaceIterator {
  public:
    SpaceIterator(int n, int r, std::uint64_t cap = kDefaultSpaceCap)
        : n_(n), r_(r), current_(first_multipermutation(n, r)), done_(false) {
        space_size_checked(n, r, cap);
    }

    static constexpr std::uint64_t kDefaultSpaceCap = 10'000'000;

    bool done() const { return done_; }
    const Tuple& value() const { return current_; }
    void advance() { done_ = !next_multipermutation(current_); }

    int n() const { return n_; }
    int r() const { return r_; }

  private:
    int n_;
    int r_;
    Tuple current_;
    bool done_;
};

// Materializes the whole space; capacity error above `cap`.
inline std::vector<Multipermutation> enumerate_space(int n, int r,
                                                     std::uint64_t cap = SpaceIterator::kDefaultSpaceCap) {
    const std::uint64_t total = space_size_checked(n, r, cap);
    std::vector<Multipermutation> out;
    out.reserve(total);
    for (SpaceIterator it(n, r, cap); !it.done(); it.advance()) out.emplace_back(it.value(), r);
    return out;
}

namespace detail {

// Number of distinct arrangements of the remaining content; counts stay
// within 64 bits because callers guard the total space size first.
inline std::uint64_t multiset_arrangements(const std::vector<int>& counts) {
    std::uint64_t total = 0;
    for (int c : counts) total += static_cast<std::uint64_t>(c);
    std::uint64_t result = 1;
    std::uint64_t placed = 0;
    for (int c : counts) {
        // multiply by C(placed + c, c) incrementally
        for (int i = 1; i <= c; ++i) {
            ++placed;
            result = result * placed / static_cast<std::uint64_t>(i);
        }
    }
    (void)total;
    return result;
}

}  // namespace detail

// The k-th (0-based) multipermutation in lexicographic order. Supports
// range-partitioned parallel sweeps: each worker starts from its own rank.
inline Tuple unrank_multipermutation(int n, int r, std::uint64_t k,
                                     std::uint64_t cap = SpaceIterator::kDefaultSpaceCap) {
    const std::uint64_t total = space_size_checked(n, r, cap);
    if (k >= total) throw ParameterError("unrank_multipermutation: rank out of range");
    const int alphabet = n / r;
    std::vector<int> counts(static_cast<std::size_t>(alphabet), r);
    Tuple out;
    out.reserve(static_cast<std::size_t>(n));
    for (int pos = 0; pos < n; ++pos) {
        for (int v = 1; v <= alphabet; ++v) {
            auto& c = counts[static_cast<std::size_t>(v - 1)];
            if (c == 0) continue;
            --c;
            const std::uint64_t below = detail::multiset_arrangements(counts);
            if (k < below) {
                out.push_back(v);
                break;
            }
            k -= below;
            ++c;
        }
    }
    return out;
}

}  // namespace mpulam
