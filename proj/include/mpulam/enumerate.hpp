#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mpulam/core.hpp"
#include "mpulam/metric.hpp"
#include "mpulam/parallel.hpp"
#include "mpulam/space.hpp"
#include "mpulam/spheres.hpp"

// Small-instance brute-force surfaces consumed by the verification sweeps:
// the full pairwise distance matrix and the per-center sphere-size
// histogram over the whole multipermutation space.

namespace mpulam {

struct DistanceMatrix {
    int n = 0;
    int r = 0;
    std::vector<Tuple> labels;           // row/column labels in lexicographic order
    std::vector<std::vector<int>> cell;  // cell[i][j] = d(labels[i], labels[j])
};

inline DistanceMatrix distance_matrix(int n, int r, std::uint64_t cap = 5000) {
    const std::uint64_t total = space_size_checked(n, r, cap);
    DistanceMatrix out;
    out.n = n;
    out.r = r;
    out.labels.reserve(total);
    for (SpaceIterator it(n, r, cap); !it.done(); it.advance()) out.labels.push_back(it.value());
    const std::size_t count = out.labels.size();
    out.cell.assign(count, std::vector<int>(count, 0));
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            const int d = n - lcs_length(out.labels[i], out.labels[j]);
            out.cell[i][j] = d;
            out.cell[j][i] = d;
        }
    }
    return out;
}

// size -> number of centers whose radius-t sphere has that size.
inline std::map<std::uint64_t, std::uint64_t> histogram_sphere_sizes(
    int n, int r, int t, int threads = 1, std::uint64_t space_cap = SpaceIterator::kDefaultSpaceCap,
    std::uint64_t state_cap = 10'000'000) {
    const std::uint64_t total = space_size_checked(n, r, space_cap);
    using Histogram = std::map<std::uint64_t, std::uint64_t>;
    auto chunk = [&](std::uint64_t lo, std::uint64_t hi) {
        Histogram local;
        Tuple current = unrank_multipermutation(n, r, lo, space_cap);
        for (std::uint64_t k = lo; k < hi; ++k) {
            const std::uint64_t size =
                t == 1 ? radius1_products(current).size()
                       : sphere_enumerate(Multipermutation(current, r), t, state_cap).size();
            ++local[size];
            next_multipermutation(current);
        }
        return local;
    };
    Histogram merged;
    for (const Histogram& local : parallel_map_chunks<Histogram>(0, total, threads, chunk))
        for (auto [size, count] : local) merged[size] += count;
    return merged;
}

}  // namespace mpulam
