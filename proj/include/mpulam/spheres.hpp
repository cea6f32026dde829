#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mpulam/core.hpp"
#include "mpulam/parallel.hpp"
#include "mpulam/space.hpp"

// Radius-1 sphere machinery: the unique translocation set T_n, the standard
// and alternating duplicate translocation sets D(m) and E(m), enumerated
// sphere oracles, and min/max center scans.
//
// D(m) and E(m) are defined for arbitrary integer tuples. Removing
// D*(m) = D(m) u E(m) from T_n leaves exactly one translocation per distinct
// product m.phi, which is what makes the closed-form radius-1 sphere size
//   |S(m,1)| = 1 + (n-1)^2 - |D(m)| - |E(m)|
// work. The enumerated product set is always computed alongside the formula
// as a cross-check.

namespace mpulam {

// T_n = { phi(i,j) : i - j != 1 }, with every phi(i,i) collapsed into the
// single identity element phi(1,1). phi(i,i-1) is excluded because it acts
// identically to phi(i-1,i). |T_n| = 1 + (n-1)^2.
inline std::vector<Translocation> unique_translocations(int n) {
    if (n < 1) throw ParameterError("unique_translocations: n must be positive");
    std::vector<Translocation> out;
    out.reserve(1 + static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n - 1));
    out.push_back(Translocation{1, 1});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j && i - j != 1) out.push_back(Translocation{i, j});
    return out;
}

inline bool in_unique_translocations(Translocation phi, int n) {
    if (phi.from < 1 || phi.from > n || phi.to < 1 || phi.to > n) return false;
    if (phi.is_identity()) return phi.from == 1;  // canonical identity only
    return phi.from - phi.to != 1;
}

// Standard duplicate translocation set D(m), characterized by:
//   - if m(i) = m(i-1): every phi(i,j) in T_n \ {e} with source i;
//   - otherwise (including i = 1): the phi(i,j) in T_n \ {e} with m(j) = m(i).
// For an r-regular m this gives |D(m)| = (n-2)*A + (r-1)*(n-A) where A is the
// number of positions i >= 2 with m(i) = m(i-1).
inline std::vector<Translocation> duplication_set_D(std::span<const int> m) {
    const int n = static_cast<int>(m.size());
    std::vector<Translocation> out;
    for (int i = 1; i <= n; ++i) {
        const bool repeats_left = i >= 2 && m[static_cast<std::size_t>(i - 1)] == m[static_cast<std::size_t>(i - 2)];
        for (int j = 1; j <= n; ++j) {
            if (i == j || i - j == 1) continue;
            if (repeats_left || m[static_cast<std::size_t>(j - 1)] == m[static_cast<std::size_t>(i - 1)])
                out.push_back(Translocation{i, j});
        }
    }
    return out;
}

// A locally maximal alternating substring m[start..end] (1-based, inclusive):
// of the form (a,b,a,b,...) with a != b, extendable in neither direction.
// Singletons count as alternating.
struct AlternatingRun {
    int start = 1;
    int end = 1;

    int length() const { return end - start + 1; }
    friend bool operator==(AlternatingRun a, AlternatingRun b) = default;
};

// All locally maximal alternating runs, left to right. Adjacent runs may
// overlap in at most one position; together they cover every index.
inline std::vector<AlternatingRun> alternating_runs(std::span<const int> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return {};
    // reach[i] = largest j such that m[i..j] is alternating (0-based here).
    std::vector<int> reach(static_cast<std::size_t>(n));
    reach[static_cast<std::size_t>(n - 1)] = n - 1;
    for (int i = n - 2; i >= 0; --i) {
        if (m[static_cast<std::size_t>(i)] == m[static_cast<std::size_t>(i + 1)]) {
            reach[static_cast<std::size_t>(i)] = i;
        } else if (i + 2 < n && m[static_cast<std::size_t>(i + 2)] == m[static_cast<std::size_t>(i)]) {
            reach[static_cast<std::size_t>(i)] = reach[static_cast<std::size_t>(i + 1)];
        } else {
            reach[static_cast<std::size_t>(i)] = i + 1;
        }
    }
    std::vector<AlternatingRun> out;
    for (int i = 0; i < n; ++i) {
        if (i > 0 && reach[static_cast<std::size_t>(i - 1)] >= reach[static_cast<std::size_t>(i)]) continue;
        out.push_back(AlternatingRun{i + 1, reach[static_cast<std::size_t>(i)] + 1});
    }
    return out;
}

// |E(m)| via |E*(m)|: count alternating substrings of even length >= 4.
// Each such substring lies inside exactly one locally maximal run, and a run
// of length k contributes ((k-2)/2)^2 when k is even and ((k-3)/2)((k-1)/2)
// when k is odd (zero for k < 4 either way).
inline std::uint64_t duplication_set_E_size(std::span<const int> m) {
    std::uint64_t total = 0;
    for (AlternatingRun run : alternating_runs(m)) {
        const std::uint64_t k = static_cast<std::uint64_t>(run.length());
        if (k < 4) continue;
        total += (k % 2 == 0) ? ((k - 2) / 2) * ((k - 2) / 2) : ((k - 3) / 2) * ((k - 1) / 2);
    }
    return total;
}

// Literal membership test for the alternating duplicate translocation set:
// phi(i,j) with i < j, outside D(m), such that some phi(j,k) with
// k in [i, j-2], also outside D(m), produces the same tuple.
inline std::vector<Translocation> duplication_set_E_bruteforce(std::span<const int> m) {
    const int n = static_cast<int>(m.size());
    const Tuple tuple(m.begin(), m.end());
    std::unordered_set<Translocation, TranslocationHash> d_set;
    for (Translocation phi : duplication_set_D(m)) d_set.insert(phi);
    auto in_t_minus_d = [&](Translocation phi) {
        return in_unique_translocations(phi, n) && !phi.is_identity() && !d_set.contains(phi);
    };
    std::vector<Translocation> out;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const Translocation phi{i, j};
            if (!in_t_minus_d(phi)) continue;
            const Tuple image = apply_translocation(tuple, phi);
            for (int k = i; k <= j - 2; ++k) {
                const Translocation mate{j, k};
                if (!in_t_minus_d(mate)) continue;
                if (apply_translocation(tuple, mate) == image) {
                    out.push_back(phi);
                    break;
                }
            }
        }
    }
    return out;
}

// Distinct products { m.phi : phi in T_n }, i.e. the radius-1 sphere around
// m, enumerated and deduplicated.
inline std::vector<Tuple> radius1_products(std::span<const int> m) {
    const int n = static_cast<int>(m.size());
    const Tuple tuple(m.begin(), m.end());
    std::unordered_set<Tuple, TupleHash> seen;
    for (Translocation phi : unique_translocations(n)) seen.insert(apply_translocation(tuple, phi));
    std::vector<Tuple> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

// Radius-1 report for one center: |T_n|, |D|, |E|, the closed-form size and
// the enumerated size side by side. The two sizes are expected to agree;
// callers decide what to do when they do not.
struct DuplicationReport {
    int n = 0;
    int r = 0;
    Multipermutation center;
    std::uint64_t size_T = 0;
    std::uint64_t size_D = 0;
    std::uint64_t size_E = 0;
    std::uint64_t sphere_size_formula = 0;
    std::uint64_t sphere_size_enumerated = 0;

    bool agree() const { return sphere_size_formula == sphere_size_enumerated; }
};

inline DuplicationReport sphere_size_radius1(const Multipermutation& center) {
    const int n = center.size();
    const auto& symbols = center.symbols();
    DuplicationReport report{n,
                             center.regularity(),
                             center,
                             1 + static_cast<std::uint64_t>(n - 1) * static_cast<std::uint64_t>(n - 1),
                             duplication_set_D(symbols).size(),
                             duplication_set_E_size(symbols),
                             0,
                             0};
    report.sphere_size_formula = report.size_T - report.size_D - report.size_E;
    report.sphere_size_enumerated = radius1_products(symbols).size();
    return report;
}

// BFS over T_n products to depth t; the radius-t sphere around m.
inline std::vector<Multipermutation> sphere_enumerate(const Multipermutation& center, int t,
                                                      std::uint64_t state_cap = 10'000'000) {
    if (t < 0) throw ParameterError("sphere_enumerate: radius must be nonnegative");
    const int n = center.size();
    const auto translocations = unique_translocations(n);
    std::unordered_set<Tuple, TupleHash> seen{center.symbols()};
    std::vector<Tuple> frontier{center.symbols()};
    for (int depth = 0; depth < t && !frontier.empty(); ++depth) {
        std::vector<Tuple> next;
        for (const Tuple& state : frontier) {
            for (Translocation phi : translocations) {
                if (phi.is_identity()) continue;
                Tuple neighbor = apply_translocation(state, phi);
                if (seen.insert(neighbor).second) {
                    if (seen.size() > state_cap) throw CapacityError("sphere_enumerate: state cap exceeded");
                    next.push_back(std::move(neighbor));
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<Tuple> sorted(seen.begin(), seen.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<Multipermutation> out;
    out.reserve(sorted.size());
    for (auto& tuple : sorted) out.emplace_back(std::move(tuple), center.regularity());
    return out;
}

// The center maximizing the radius-1 sphere when n/r > 2:
// omega(i) = ((i-1) mod (n/r)) * r + ceil(i*r/n), whose projection cycles
// through 1..n/r repeatedly.
struct OmegaCenter {
    Permutation permutation;
    Multipermutation projection;
};

inline OmegaCenter omega_center(int n, int r) {
    if (r < 1 || n < 1 || n % r != 0) throw ParameterError("omega_center: r must divide n");
    Tuple images(static_cast<std::size_t>(n));
    const int k = n / r;
    for (int i = 1; i <= n; ++i)
        images[static_cast<std::size_t>(i - 1)] = ((i - 1) % k) * r + (i * r + n - 1) / n;
    Permutation omega{std::move(images)};
    Multipermutation m = project(omega, r);
    return OmegaCenter{std::move(omega), std::move(m)};
}

// Exhaustive scan of every center's enumerated radius-t sphere size.
// Ties are broken toward the lexicographically smallest center, so the
// result does not depend on scan partitioning or thread count.
struct ExtremalScanResult {
    Multipermutation min_center;
    std::uint64_t min_size = 0;
    Multipermutation max_center;
    std::uint64_t max_size = 0;
};

inline ExtremalScanResult extremal_center_scan(int n, int r, int t = 1, int threads = 1,
                                               std::uint64_t space_cap = SpaceIterator::kDefaultSpaceCap,
                                               std::uint64_t state_cap = 10'000'000) {
    const std::uint64_t total = space_size_checked(n, r, space_cap);
    struct Local {
        std::uint64_t min_size = UINT64_MAX;
        std::uint64_t max_size = 0;
        Tuple min_center;
        Tuple max_center;
    };
    auto scan_chunk = [&](std::uint64_t lo, std::uint64_t hi) {
        Local local;
        Tuple current = unrank_multipermutation(n, r, lo, space_cap);
        for (std::uint64_t k = lo; k < hi; ++k) {
            const std::uint64_t size =
                t == 1 ? radius1_products(current).size()
                       : sphere_enumerate(Multipermutation(current, r), t, state_cap).size();
            if (size < local.min_size) {
                local.min_size = size;
                local.min_center = current;
            }
            if (size > local.max_size) {
                local.max_size = size;
                local.max_center = current;
            }
            next_multipermutation(current);
        }
        return local;
    };
    auto locals = parallel_map_chunks<Local>(0, total, threads, scan_chunk);
    // Chunks are folded in lexicographic order and strict comparisons keep
    // the first attaining center, so the reported centers are the
    // lexicographically smallest argmin/argmax.
    Local best;
    for (const Local& l : locals) {
        if (l.min_size < best.min_size) {
            best.min_size = l.min_size;
            best.min_center = l.min_center;
        }
        if (l.max_size > best.max_size) {
            best.max_size = l.max_size;
            best.max_center = l.max_center;
        }
    }
    return ExtremalScanResult{Multipermutation(best.min_center, r), best.min_size,
                              Multipermutation(best.max_center, r), best.max_size};
}

}  // namespace mpulam
