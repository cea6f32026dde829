#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

// Chunked parallel map with a deterministic merge: the range is cut into a
// chunk grid that depends only on the range itself, workers pull chunks, and
// results are folded in chunk order. Output is therefore bit-identical for
// every thread count.

namespace mpulam {

inline int default_thread_count() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

template <typename Result, typename ChunkFn>
std::vector<Result> parallel_map_chunks(std::uint64_t begin, std::uint64_t end, int threads,
                                        ChunkFn&& fn) {
    if (end <= begin) return {};
    const std::uint64_t total = end - begin;
    if (threads < 1) threads = 1;
    const std::uint64_t chunk_size = std::max<std::uint64_t>(1, total / 64);
    const std::uint64_t chunks = (total + chunk_size - 1) / chunk_size;
    std::vector<Result> results(static_cast<std::size_t>(chunks));

    if (threads == 1 || chunks == 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) {
            const std::uint64_t lo = begin + c * chunk_size;
            const std::uint64_t hi = std::min(end, lo + chunk_size);
            results[static_cast<std::size_t>(c)] = fn(lo, hi);
        }
        return results;
    }

    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= chunks) return;
            const std::uint64_t lo = begin + c * chunk_size;
            const std::uint64_t hi = std::min(end, lo + chunk_size);
            results[static_cast<std::size_t>(c)] = fn(lo, hi);
        }
    };
    std::vector<std::thread> pool;
    const int workers = static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), chunks));
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace mpulam
