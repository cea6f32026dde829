#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mpulam/bigint.hpp"
#include "mpulam/core.hpp"
#include "mpulam/metric.hpp"
#include "mpulam/parallel.hpp"
#include "mpulam/rng.hpp"
#include "mpulam/space.hpp"

// Code-size bounds for r-regular multipermutation codes under the Ulam
// distance, plus a greedy constructor witnessing the Gilbert-Varshamov
// argument. All bound arithmetic is exact: big integers and rationals only.
//
// The sphere-packing bound divides the space by the minimal radius-1 sphere
// 1 + (n-1)(n/r - 1) (attained at the identity projection). The perfect-code
// and Gilbert-Varshamov bounds divide by powers of the maximal radius-1
// sphere 1 + (n-1)^2 - (r-1)n (attained at the omega center when n/r > 2).
// The maximal-sphere formula has no counterpart at n/r = 2, and degenerates
// at n/r = 1; both regimes are reported as unsupported rather than guessed.

namespace mpulam {

enum class BoundKind { sphere_packing_upper, perfect_lower, gv_lower };

inline std::string to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::sphere_packing_upper: return "sphere_packing_upper";
        case BoundKind::perfect_lower: return "perfect_lower";
        case BoundKind::gv_lower: return "gv_lower";
    }
    return "unknown";
}

struct BoundReport {
    int n = 0;
    int r = 0;
    std::optional<int> d;  // minimum distance (Gilbert-Varshamov)
    std::optional<int> t;  // correction radius (packing / perfect bounds)
    BigInt space_size;
    Rational bound_value;  // exact
    BigInt bound_integer;  // floor for upper bounds, ceiling for lower bounds
    BoundKind kind = BoundKind::sphere_packing_upper;
};

namespace detail {

inline void check_divides(int n, int r, const char* what) {
    if (r < 1 || n < 1 || n % r != 0) throw ParameterError(std::string(what) + ": r must divide n");
}

// 1 + (n-1)^2 - (r-1)n, the maximal radius-1 sphere size for n/r > 2.
inline BigInt max_sphere_term(int n, int r) {
    const int k = n / r;
    if (k == 2)
        throw UnsupportedRegimeError("maximal-sphere formula has no n/r = 2 hypothesis");
    BigInt term = 1 + BigInt(n - 1) * (n - 1) - BigInt(r - 1) * n;
    if (term <= 0)
        throw UnsupportedRegimeError("maximal-sphere formula degenerates at n/r = 1 for n > 1");
    return term;
}

}  // namespace detail

// Upper bound on any single-error-correcting code:
// n! / ((r!)^(n/r) * (1 + (n-1)(n/r-1))).
inline BoundReport sphere_packing_upper(int n, int r) {
    detail::check_divides(n, r, "sphere_packing_upper");
    BoundReport report;
    report.n = n;
    report.r = r;
    report.t = 1;
    report.kind = BoundKind::sphere_packing_upper;
    report.space_size = space_size(n, r);
    const BigInt min_sphere = 1 + BigInt(n - 1) * (n / r - 1);
    report.bound_value = Rational(report.space_size, min_sphere);
    report.bound_value.canonicalize();
    report.bound_integer = floor_div(report.space_size, min_sphere);
    return report;
}

// Lower bound on any perfect single-error-correcting code (n/r > 2):
// n! / ((r!)^(n/r) * (1 + (n-1)^2 - (r-1)n)).
inline BoundReport perfect_code_lower(int n, int r) {
    detail::check_divides(n, r, "perfect_code_lower");
    const BigInt max_sphere = detail::max_sphere_term(n, r);
    BoundReport report;
    report.n = n;
    report.r = r;
    report.t = 1;
    report.kind = BoundKind::perfect_lower;
    report.space_size = space_size(n, r);
    report.bound_value = Rational(report.space_size, max_sphere);
    report.bound_value.canonicalize();
    report.bound_integer = ceil_div(report.space_size, max_sphere);
    return report;
}

// Gilbert-Varshamov lower bound on a maximal minimum-distance-d code
// (n/r > 2): n! / ((r!)^(n/r) * (1 + (n-1)^2 - (r-1)n)^(d-1)).
inline BoundReport gv_lower(int n, int r, int d) {
    detail::check_divides(n, r, "gv_lower");
    if (d < 1 || d > n - 1) throw ParameterError("gv_lower: d must lie in [1..n-1]");
    const BigInt denom = big_pow(detail::max_sphere_term(n, r), static_cast<unsigned long>(d - 1));
    BoundReport report;
    report.n = n;
    report.r = r;
    report.d = d;
    report.kind = BoundKind::gv_lower;
    report.space_size = space_size(n, r);
    report.bound_value = Rational(report.space_size, denom);
    report.bound_value.canonicalize();
    report.bound_integer = ceil_div(report.space_size, denom);
    return report;
}

// A set of multipermutation codewords with verified pairwise distance.
// min_distance is the exact minimum over distinct pairs; a code with fewer
// than two codewords reports n (no pair constrains it).
struct CodeSet {
    std::vector<Multipermutation> codewords;
    int min_distance = 0;
};

struct CodeViolation {
    std::size_t first = 0;
    std::size_t second = 0;
    int distance = 0;
};

struct VerifyCodeResult {
    bool ok = true;
    std::optional<CodeViolation> violation;  // first violating pair in index order
};

inline VerifyCodeResult verify_code(const CodeSet& code, int d, int threads = 1) {
    const std::size_t count = code.codewords.size();
    if (count < 2) return {};
    if (d <= 1) {
        // Distinct tuples are always at distance >= 1, so only duplicates
        // can violate the bound. Report the pair earliest in index order.
        std::vector<std::pair<Tuple, std::size_t>> sorted;
        sorted.reserve(count);
        for (std::size_t i = 0; i < count; ++i) sorted.emplace_back(code.codewords[i].symbols(), i);
        std::sort(sorted.begin(), sorted.end());
        std::optional<CodeViolation> best;
        for (std::size_t k = 1; k < count; ++k) {
            if (sorted[k - 1].first != sorted[k].first) continue;
            auto [i, j] = std::minmax(sorted[k - 1].second, sorted[k].second);
            if (!best || std::pair(i, j) < std::pair(best->first, best->second))
                best = CodeViolation{i, j, 0};
        }
        return best ? VerifyCodeResult{false, best} : VerifyCodeResult{};
    }
    const std::uint64_t pairs = static_cast<std::uint64_t>(count) * (count - 1) / 2;
    auto pair_at = [count](std::uint64_t index) {
        // row-major over the strict upper triangle
        std::size_t i = 0;
        std::uint64_t row_len = count - 1;
        while (index >= row_len) {
            index -= row_len;
            ++i;
            --row_len;
        }
        return std::pair<std::size_t, std::size_t>{i, i + 1 + static_cast<std::size_t>(index)};
    };
    auto chunk = [&](std::uint64_t lo, std::uint64_t hi) -> std::optional<CodeViolation> {
        for (std::uint64_t k = lo; k < hi; ++k) {
            auto [i, j] = pair_at(k);
            const int dist = ulam_distance(code.codewords[i], code.codewords[j]);
            if (dist < d) return CodeViolation{i, j, dist};
        }
        return std::nullopt;
    };
    for (const auto& found :
         parallel_map_chunks<std::optional<CodeViolation>>(0, pairs, threads, chunk))
        if (found) return VerifyCodeResult{false, found};
    return {};
}

enum class GreedyOrder { lexicographic, seeded_random };

// Greedy code construction: scan the space, keep every multipermutation at
// distance >= d from all kept so far. The result is maximal (nothing left
// to add) and at least as large as the Gilbert-Varshamov bound when that
// bound applies. Lexicographic order is the reproducible default; the
// seeded random order probes size variance.
inline CodeSet greedy_code(int n, int r, int d, GreedyOrder order = GreedyOrder::lexicographic,
                           std::uint64_t seed = 0,
                           std::uint64_t space_cap = SpaceIterator::kDefaultSpaceCap) {
    if (d < 1 || d > n) throw ParameterError("greedy_code: d must lie in [1..n]");
    const std::uint64_t total = space_size_checked(n, r, space_cap);

    std::vector<Tuple> candidates;
    candidates.reserve(total);
    for (SpaceIterator it(n, r, space_cap); !it.done(); it.advance()) candidates.push_back(it.value());
    if (order == GreedyOrder::seeded_random) {
        SplitMix64 rng(seed);
        shuffle(candidates, rng);
    }

    CodeSet code;
    if (d == 1) {
        // Every distinct pair is at distance >= 1 already.
        for (const Tuple& candidate : candidates) code.codewords.emplace_back(candidate, r);
        code.min_distance = code.codewords.size() < 2 ? n : 1;
        return code;
    }
    int min_seen = n;
    for (const Tuple& candidate : candidates) {
        bool admissible = true;
        int closest = n;
        for (const Multipermutation& chosen : code.codewords) {
            const int dist = static_cast<int>(candidate.size()) - lcs_length(candidate, chosen.symbols());
            closest = std::min(closest, dist);
            if (dist < d) {
                admissible = false;
                break;
            }
        }
        if (admissible) {
            min_seen = std::min(min_seen, closest);
            code.codewords.emplace_back(candidate, r);
        }
    }
    code.min_distance = code.codewords.size() < 2 ? n : min_seen;
    return code;
}

}  // namespace mpulam
