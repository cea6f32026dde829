#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mpulam/core.hpp"
#include "mpulam/spheres.hpp"

// The r-regular Ulam distance and its independent oracles. The distance on
// multipermutations is n minus the longest-common-subsequence length of the
// two tuples; it equals both the minimum translocation count (measured here
// by breadth-first search over T_n products) and the minimum plain Ulam
// distance over the two permutation equivalence classes (measured by literal
// minimization). Tuples may contain repeats, so the LCS is plain O(n^2)
// dynamic programming.

namespace mpulam {

inline int lcs_length(std::span<const int> u, std::span<const int> v) {
    if (u.size() != v.size()) throw DimensionError("lcs_length: length mismatch");
    const std::size_t n = u.size();
    // Reused scratch rows; sweep workloads call this hundreds of millions
    // of times.
    static thread_local std::vector<int> prev, row;
    prev.assign(n + 1, 0);
    row.assign(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            row[j] = u[i - 1] == v[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], row[j - 1]);
        }
        std::swap(prev, row);
    }
    return prev[n];
}

// O(n log n) longest nondecreasing subsequence; must agree with
// lcs_length(m, sorted(m)) and gives the identity-center fast path.
inline int longest_nondecreasing_subsequence(std::span<const int> m) {
    std::vector<int> tails;  // tails[k] = smallest tail of a subsequence of length k+1
    for (int x : m) {
        auto it = std::upper_bound(tails.begin(), tails.end(), x);
        if (it == tails.end())
            tails.push_back(x);
        else
            *it = x;
    }
    return static_cast<int>(tails.size());
}

struct DistanceResult {
    int distance = 0;
    int lcs = 0;
    // Index sequences (1-based, strictly increasing) realizing the LCS;
    // the lexicographically smallest such pair, for reproducibility.
    std::optional<std::pair<std::vector<int>, std::vector<int>>> witness;
};

namespace detail {

inline std::pair<std::vector<int>, std::vector<int>> lcs_witness(std::span<const int> u,
                                                                 std::span<const int> v) {
    const int n = static_cast<int>(u.size());
    // suffix[i][j] = LCS length of u[i..], v[j..]
    std::vector<std::vector<int>> suffix(static_cast<std::size_t>(n + 1),
                                         std::vector<int>(static_cast<std::size_t>(n + 1), 0));
    for (int i = n - 1; i >= 0; --i)
        for (int j = n - 1; j >= 0; --j)
            suffix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                u[static_cast<std::size_t>(i)] == v[static_cast<std::size_t>(j)]
                    ? suffix[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)] + 1
                    : std::max(suffix[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)],
                               suffix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 1)]);
    std::vector<int> ui, vi;
    int i = 0, j = 0;
    int remaining = suffix[0][0];
    while (remaining > 0) {
        bool advanced = false;
        for (int a = i; a < n && !advanced; ++a) {
            for (int b = j; b < n && !advanced; ++b) {
                if (u[static_cast<std::size_t>(a)] == v[static_cast<std::size_t>(b)] &&
                    1 + suffix[static_cast<std::size_t>(a + 1)][static_cast<std::size_t>(b + 1)] == remaining) {
                    ui.push_back(a + 1);
                    vi.push_back(b + 1);
                    i = a + 1;
                    j = b + 1;
                    --remaining;
                    advanced = true;
                }
            }
        }
    }
    return {std::move(ui), std::move(vi)};
}

}  // namespace detail

inline DistanceResult distance_result(std::span<const int> u, std::span<const int> v,
                                      bool with_witness = false) {
    DistanceResult out;
    out.lcs = lcs_length(u, v);
    out.distance = static_cast<int>(u.size()) - out.lcs;
    if (with_witness) out.witness = detail::lcs_witness(u, v);
    return out;
}

inline int ulam_distance_perm(const Permutation& sigma, const Permutation& pi) {
    if (sigma.size() != pi.size()) throw DimensionError("ulam_distance_perm: length mismatch");
    return sigma.size() - lcs_length(sigma.images(), pi.images());
}

// d(m1, m2) = n - lcs(m1, m2) for two multipermutations of the same content.
inline int ulam_distance(const Multipermutation& a, const Multipermutation& b) {
    if (a.size() != b.size() || a.regularity() != b.regularity())
        throw DimensionError("ulam_distance: shape mismatch");
    return a.size() - lcs_length(a.symbols(), b.symbols());
}

// The r-regular Ulam distance between permutations: n - lcs of projections.
inline int ulam_distance_r(const Permutation& sigma, const Permutation& pi, int r) {
    if (sigma.size() != pi.size()) throw DimensionError("ulam_distance_r: length mismatch");
    return sigma.size() - lcs_length(project(sigma, r).symbols(), project(pi, r).symbols());
}

// Shortest translocation product carrying m1 to m2, by breadth-first search
// over T_n neighbor expansion; nullopt once the search passes `cap`.
// Default cap n: the distance never exceeds n - 1.
inline std::optional<int> bfs_translocation_distance(const Multipermutation& m1,
                                                     const Multipermutation& m2, int cap = -1) {
    if (m1.size() != m2.size() || m1.regularity() != m2.regularity())
        throw DimensionError("bfs_translocation_distance: shape mismatch");
    Tuple sorted_a = m1.symbols(), sorted_b = m2.symbols();
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) throw ParameterError("bfs_translocation_distance: content mismatch");

    const int n = m1.size();
    if (cap < 0) cap = n;
    if (m1.symbols() == m2.symbols()) return 0;
    const auto translocations = unique_translocations(n);
    std::unordered_set<Tuple, TupleHash> seen{m1.symbols()};
    std::vector<Tuple> frontier{m1.symbols()};
    for (int depth = 1; depth <= cap; ++depth) {
        std::vector<Tuple> next;
        for (const Tuple& state : frontier) {
            for (Translocation phi : translocations) {
                if (phi.is_identity()) continue;
                Tuple neighbor = apply_translocation(state, phi);
                if (neighbor == m2.symbols()) return depth;
                if (seen.insert(neighbor).second) next.push_back(std::move(neighbor));
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return std::nullopt;
}

// Literal minimum of the plain Ulam distance over R_r(sigma) x R_r(pi).
// Guarded: the class product must stay within `pair_cap` pairs.
inline int class_min_distance_oracle(const Permutation& sigma, const Permutation& pi, int r,
                                     std::uint64_t pair_cap = 1'000'000) {
    if (sigma.size() != pi.size()) throw DimensionError("class_min_distance_oracle: length mismatch");
    BigInt pairs = equivalence_class_size(sigma.size(), r) * equivalence_class_size(pi.size(), r);
    if (pairs > BigInt(static_cast<unsigned long>(pair_cap)))
        throw CapacityError("class_min_distance_oracle: class product exceeds cap");
    int best = sigma.size();
    EquivalenceClassStream left(sigma, r);
    while (auto s = left.next()) {
        EquivalenceClassStream right(pi, r);
        while (auto p = right.next()) best = std::min(best, ulam_distance_perm(*s, *p));
    }
    return best;
}

// Non-left-invariance witness pair: sigma' reverses the
// first 2r entries, pi' interleaves the first two blocks. For r >= 2 and
// n/r >= 2 these satisfy d^r(e, sigma') = r while d^r(pi', pi' sigma') = 1.
struct InvarianceWitness {
    Permutation sigma_prime;
    Permutation pi_prime;
};

inline InvarianceWitness non_left_invariance_witness(int n, int r) {
    if (r < 2 || n % r != 0 || n / r < 2)
        throw ParameterError("non_left_invariance_witness: need r >= 2 and n/r >= 2");
    Tuple sigma(static_cast<std::size_t>(n));
    Tuple pi(static_cast<std::size_t>(n));
    for (int i = 1; i <= 2 * r; ++i) sigma[static_cast<std::size_t>(i - 1)] = 2 * r - i + 1;
    for (int k = 1; k <= r; ++k) {
        pi[static_cast<std::size_t>(2 * k - 2)] = k;
        pi[static_cast<std::size_t>(2 * k - 1)] = r + k;
    }
    for (int i = 2 * r + 1; i <= n; ++i) {
        sigma[static_cast<std::size_t>(i - 1)] = i;
        pi[static_cast<std::size_t>(i - 1)] = i;
    }
    return InvarianceWitness{Permutation(std::move(sigma)), Permutation(std::move(pi))};
}

}  // namespace mpulam
