#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "mpulam/bounds.hpp"
#include "mpulam/enumerate.hpp"
#include "mpulam/metric.hpp"
#include "mpulam/rng.hpp"
#include "mpulam/space.hpp"
#include "mpulam/spheres.hpp"
#include "mpulam/tableaux.hpp"

// Exhaustive and seeded-random verification sweeps over small instances.
// Each check pits two independent routes against each other (closed formula
// vs enumeration, LCS vs breadth-first search, hook lengths vs backtracking
// fill) and reports the first failing instance in the text tuple format.

namespace mpulam {

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = true;
    std::string detail;          // human-readable summary (counts, resolved values)
    std::string counterexample;  // first failing instance, empty when passed
};

struct VerifyOptions {
    int n_max = 5;
    std::optional<int> r_filter;  // restrict sweeps to this regularity
    std::uint64_t seed = 20240901;
    int threads = 1;
};

namespace detail {

inline std::vector<int> divisors_of(int n, const VerifyOptions& opt) {
    std::vector<int> out;
    for (int r = 1; r <= n; ++r)
        if (n % r == 0 && (!opt.r_filter || *opt.r_filter == r)) out.push_back(r);
    return out;
}

inline bool is_alternating_span(std::span<const int> m, int lo, int hi) {
    for (int p = lo; p < hi; ++p)
        if (m[static_cast<std::size_t>(p)] == m[static_cast<std::size_t>(p + 1)]) return false;
    for (int p = lo; p + 2 <= hi; ++p)
        if (m[static_cast<std::size_t>(p)] != m[static_cast<std::size_t>(p + 2)]) return false;
    return true;
}

// The structural nonemptiness criterion for E(m): some source index i with
// m(i) != m(i-1) (or i = 1) leading, after a plateau of equal symbols, into
// an alternating substring of length >= 4.
inline bool e_set_structural_criterion(std::span<const int> m) {
    const int n = static_cast<int>(m.size());
    for (int i = 1; i <= n; ++i) {
        if (i > 1 && m[static_cast<std::size_t>(i - 1)] == m[static_cast<std::size_t>(i - 2)]) continue;
        for (int j = i + 1; j <= n; ++j) {
            for (int k = i; k <= j - 2; ++k) {
                bool plateau = true;
                for (int p = i; p < k && plateau; ++p)
                    if (m[static_cast<std::size_t>(p - 1)] != m[static_cast<std::size_t>(p)]) plateau = false;
                if (!plateau) continue;
                if (j - k + 1 < 4) continue;
                if (is_alternating_span(m, k - 1, j - 1)) return true;
            }
        }
    }
    return false;
}

template <typename Fn>
CheckResult sweep(std::string suite, std::string name, Fn&& body) {
    CheckResult result;
    result.suite = std::move(suite);
    result.name = std::move(name);
    body(result);
    return result;
}

inline void fail(CheckResult& r, std::string counterexample, std::string detail = {}) {
    if (!r.passed) return;  // keep the first (minimal) counterexample
    r.passed = false;
    r.counterexample = std::move(counterexample);
    if (!detail.empty()) r.detail = std::move(detail);
}

}  // namespace detail

// ---- metric suite ----------------------------------------------------------

inline std::vector<CheckResult> run_metric_suite(const VerifyOptions& opt) {
    using detail::fail;
    std::vector<CheckResult> out;

    // Metric axioms, exhaustive over the whole space.
    out.push_back(detail::sweep("metric", "axioms_exhaustive", [&](CheckResult& r) {
        std::uint64_t checked = 0;
        for (int n = 1; n <= std::min(opt.n_max, 6); ++n) {
            for (int reg : detail::divisors_of(n, opt)) {
                DistanceMatrix matrix = distance_matrix(n, reg, 10'000);
                const std::size_t count = matrix.labels.size();
                for (std::size_t i = 0; i < count; ++i)
                    for (std::size_t j = 0; j < count; ++j) {
                        const int d = matrix.cell[i][j];
                        if (d < 0 || (d == 0) != (i == j) || d != matrix.cell[j][i])
                            fail(r, format_tuple(matrix.labels[i]) + " / " + format_tuple(matrix.labels[j]));
                    }
                for (std::size_t i = 0; i < count && r.passed; ++i)
                    for (std::size_t j = 0; j < count && r.passed; ++j)
                        for (std::size_t k = 0; k < count; ++k)
                            if (matrix.cell[i][k] > matrix.cell[i][j] + matrix.cell[j][k]) {
                                fail(r, format_tuple(matrix.labels[i]) + " / " +
                                            format_tuple(matrix.labels[j]) + " / " +
                                            format_tuple(matrix.labels[k]));
                                break;
                            }
                checked += count * count;
            }
        }
        r.detail = "pairs checked: " + std::to_string(checked);
    }));

    // Random triangle triples at n = 9, r = 3.
    if (opt.n_max >= 9) {
        out.push_back(detail::sweep("metric", "axioms_random_n9", [&](CheckResult& r) {
            SplitMix64 rng(opt.seed);
            for (int trial = 0; trial < 10'000; ++trial) {
                Multipermutation a = random_multipermutation(9, 3, rng);
                Multipermutation b = random_multipermutation(9, 3, rng);
                Multipermutation c = random_multipermutation(9, 3, rng);
                if (ulam_distance(a, c) > ulam_distance(a, b) + ulam_distance(b, c))
                    fail(r, format_tuple(a.symbols()) + " / " + format_tuple(b.symbols()) + " / " +
                                format_tuple(c.symbols()));
            }
            r.detail = "10000 seeded triples";
        }));
    }

    // d^r = literal class minimum (exhaustive small, randomized larger).
    out.push_back(detail::sweep("metric", "class_min_equivalence", [&](CheckResult& r) {
        std::uint64_t checked = 0;
        if (opt.n_max >= 4 && (!opt.r_filter || *opt.r_filter == 2)) {
            std::vector<Permutation> all;
            Tuple t = Permutation::identity(4).images();
            do {
                all.emplace_back(Tuple(t));
            } while (std::next_permutation(t.begin(), t.end()));
            for (const Permutation& sigma : all)
                for (const Permutation& pi : all) {
                    if (ulam_distance_r(sigma, pi, 2) != class_min_distance_oracle(sigma, pi, 2))
                        fail(r, format_tuple(sigma.images()) + " / " + format_tuple(pi.images()));
                    ++checked;
                }
        }
        if (opt.n_max >= 6) {
            SplitMix64 rng(opt.seed + 1);
            for (int reg : detail::divisors_of(6, opt)) {
                if (reg == 1 || reg == 6) continue;
                for (int trial = 0; trial < 200; ++trial) {
                    Permutation sigma = random_permutation(6, rng);
                    Permutation pi = random_permutation(6, rng);
                    if (ulam_distance_r(sigma, pi, reg) != class_min_distance_oracle(sigma, pi, reg))
                        fail(r, format_tuple(sigma.images()) + " / " + format_tuple(pi.images()));
                    ++checked;
                }
            }
        }
        r.detail = "pairs checked: " + std::to_string(checked);
    }));

    // n - lcs = BFS translocation distance over all pairs.
    out.push_back(detail::sweep("metric", "bfs_equivalence", [&](CheckResult& r) {
        std::uint64_t checked = 0;
        for (int n = 1; n <= std::min(opt.n_max, 5); ++n) {
            for (int reg : detail::divisors_of(n, opt)) {
                auto space = enumerate_space(n, reg);
                for (const auto& a : space)
                    for (const auto& b : space) {
                        auto bfs = bfs_translocation_distance(a, b);
                        if (!bfs || *bfs != ulam_distance(a, b))
                            fail(r, format_tuple(a.symbols()) + " / " + format_tuple(b.symbols()));
                        ++checked;
                    }
            }
        }
        r.detail = "pairs checked: " + std::to_string(checked);
    }));

    // The constructed witness pair shows left invariance failing: distance r
    // from the identity collapses to 1 after left multiplication.
    out.push_back(detail::sweep("metric", "non_left_invariance", [&](CheckResult& r) {
        for (int n : {4, 8, 12}) {
            if (n > std::max(opt.n_max, 4)) continue;
            for (int reg : detail::divisors_of(n, opt)) {
                if (reg < 2 || n / reg < 2) continue;
                auto witness = non_left_invariance_witness(n, reg);
                const Permutation e = Permutation::identity(n);
                const Permutation moved = compose(witness.pi_prime, witness.sigma_prime);
                if (ulam_distance_r(e, witness.sigma_prime, reg) != reg ||
                    ulam_distance_r(witness.pi_prime, moved, reg) != 1)
                    fail(r, "n=" + std::to_string(n) + " r=" + std::to_string(reg) + " sigma'=" +
                                format_tuple(witness.sigma_prime.images()));
            }
        }
    }));

    // Sanity contrast: left invariance does hold at r = 1.
    out.push_back(detail::sweep("metric", "left_invariance_r1", [&](CheckResult& r) {
        SplitMix64 rng(opt.seed + 2);
        const int n = std::min(std::max(opt.n_max, 4), 8);
        for (int trial = 0; trial < 200; ++trial) {
            Permutation sigma = random_permutation(n, rng);
            Permutation pi = random_permutation(n, rng);
            Permutation tau = random_permutation(n, rng);
            if (ulam_distance_perm(sigma, pi) !=
                ulam_distance_perm(compose(tau, sigma), compose(tau, pi)))
                fail(r, format_tuple(tau.images()) + " / " + format_tuple(sigma.images()) + " / " +
                            format_tuple(pi.images()));
        }
    }));

    return out;
}

// ---- rsk suite -------------------------------------------------------------

inline std::vector<CheckResult> run_rsk_suite(const VerifyOptions& opt) {
    using detail::fail;
    std::vector<CheckResult> out;

    // Column count of P = longest nondecreasing subsequence = lcs with the
    // sorted tuple.
    out.push_back(detail::sweep("rsk", "columns_vs_lnds", [&](CheckResult& r) {
        for (int n = 1; n <= std::min(opt.n_max, 6); ++n)
            for (int reg : detail::divisors_of(n, opt)) {
                const Tuple sorted = first_multipermutation(n, reg);
                for (SpaceIterator it(n, reg); !it.done(); it.advance()) {
                    const int cols = rsk(std::span<const int>(it.value())).p.column_count();
                    if (cols != longest_nondecreasing_subsequence(it.value()) ||
                        cols != lcs_length(sorted, it.value()))
                        fail(r, format_tuple(it.value()));
                }
            }
    }));

    // Distinct multipermutations map to distinct (P, Q) pairs and the mass
    // identity sum f^lambda K^lambda_r = n!/(r!)^(n/r) holds.
    out.push_back(detail::sweep("rsk", "injectivity", [&](CheckResult& r) {
        for (int n = 1; n <= std::min(opt.n_max, 6); ++n)
            for (int reg : detail::divisors_of(n, opt)) {
                std::set<std::vector<std::vector<int>>> images;
                std::uint64_t total = 0;
                for (SpaceIterator it(n, reg); !it.done(); it.advance()) {
                    auto pair = rsk(std::span<const int>(it.value()));
                    auto key = pair.p.rows();
                    for (const auto& row : pair.q.rows()) key.push_back(row);
                    if (!images.insert(key).second) fail(r, format_tuple(it.value()));
                    ++total;
                }
                if (BigInt(static_cast<unsigned long>(total)) != space_size(n, reg))
                    fail(r, "n=" + std::to_string(n) + " r=" + std::to_string(reg));
            }
    }));

    out.push_back(detail::sweep("rsk", "mass_identity", [&](CheckResult& r) {
        for (int n = 1; n <= std::min(opt.n_max, 10); ++n)
            for (int reg : detail::divisors_of(n, opt)) {
                BigInt total = 0;
                for (PartitionGenerator gen(n); !gen.done(); gen.advance()) {
                    Partition lambda(gen.value());
                    total += hook_length_count(lambda) * count_content_tableaux(lambda, reg);
                }
                if (total != space_size(n, reg))
                    fail(r, "n=" + std::to_string(n) + " r=" + std::to_string(reg));
            }
    }));

    // Hook-length formula vs exhaustive standard fillings (content r = 1).
    out.push_back(detail::sweep("rsk", "hook_vs_backtracking", [&](CheckResult& r) {
        for (int n = 1; n <= std::min(opt.n_max, 8); ++n)
            for (PartitionGenerator gen(n); !gen.done(); gen.advance()) {
                Partition lambda(gen.value());
                if (hook_length_count(lambda) != count_content_tableaux(lambda, 1))
                    fail(r, format_tuple(gen.value()));
            }
    }));

    // Identity-centered sphere sizes: tableau sum vs breadth-first search.
    out.push_back(detail::sweep("rsk", "identity_sphere_vs_bfs", [&](CheckResult& r) {
        for (int n = 1; n <= std::min(opt.n_max, 6); ++n)
            for (int reg : detail::divisors_of(n, opt)) {
                const Multipermutation center(first_multipermutation(n, reg), reg);
                for (int t = 0; t <= n - 1; ++t) {
                    const BigInt by_tableaux = sphere_size_identity(n, reg, t);
                    const std::uint64_t by_bfs = sphere_enumerate(center, t).size();
                    if (by_tableaux != BigInt(static_cast<unsigned long>(by_bfs)))
                        fail(r, "n=" + std::to_string(n) + " r=" + std::to_string(reg) +
                                    " t=" + std::to_string(t));
                }
            }
    }));

    // Radius-1 closed form at the identity center, against both routes.
    out.push_back(detail::sweep("rsk", "radius1_identity_formula", [&](CheckResult& r) {
        for (int n = 2; n <= std::min(opt.n_max, 8); ++n)
            for (int reg : detail::divisors_of(n, opt)) {
                const BigInt expected = 1 + BigInt(n - 1) * (n / reg - 1);
                const Tuple center = first_multipermutation(n, reg);
                if (sphere_size_identity(n, reg, 1) != expected ||
                    BigInt(static_cast<unsigned long>(radius1_products(center).size())) != expected)
                    fail(r, "n=" + std::to_string(n) + " r=" + std::to_string(reg));
            }
    }));

    // Partition stream: counted against the independent recurrence, ordered,
    // duplicate-free.
    out.push_back(detail::sweep("rsk", "partition_stream", [&](CheckResult& r) {
        for (int n = 1; n <= std::min(opt.n_max, 12); ++n) {
            std::uint64_t count = 0;
            std::vector<int> previous;
            for (PartitionGenerator gen(n); !gen.done(); gen.advance()) {
                const auto& current = gen.value();
                int sum = 0;
                for (int p : current) sum += p;
                if (sum != n) fail(r, format_tuple(current));
                if (!previous.empty() && !(current < previous)) fail(r, format_tuple(current));
                previous = current;
                ++count;
            }
            if (BigInt(static_cast<unsigned long>(count)) != partition_count(n))
                fail(r, "n=" + std::to_string(n));
        }
    }));

    return out;
}

// ---- spheres suite ---------------------------------------------------------

inline std::vector<CheckResult> run_spheres_suite(const VerifyOptions& opt) {
    using detail::fail;
    std::vector<CheckResult> out;

    // Products over T_n vs products over T_n \ D(m): equal as sets. And
    // injectivity over T_n \ D*(m): as many distinct products as members.
    out.push_back(detail::sweep("spheres", "duplication_sets", [&](CheckResult& r) {
        std::uint64_t centers = 0;
        auto check_center = [&](const Tuple& m) {
            const int n = static_cast<int>(m.size());
            std::unordered_set<Translocation, TranslocationHash> d_set;
            for (Translocation phi : duplication_set_D(m)) d_set.insert(phi);
            const auto e_set = duplication_set_E_bruteforce(m);
            std::unordered_set<Translocation, TranslocationHash> e_lookup(e_set.begin(), e_set.end());

            std::unordered_set<Tuple, TupleHash> over_t;
            std::unordered_set<Tuple, TupleHash> over_t_minus_d;
            std::unordered_set<Tuple, TupleHash> over_t_minus_dstar;
            std::uint64_t dstar_members = 0;
            for (Translocation phi : unique_translocations(n)) {
                Tuple image = apply_translocation(m, phi);
                over_t.insert(image);
                const bool in_d = d_set.contains(phi);
                const bool in_e = e_lookup.contains(phi);
                if (in_d && in_e) fail(r, format_tuple(m), "D and E overlap");
                if (!in_d) over_t_minus_d.insert(image);
                if (!in_d && !in_e) {
                    ++dstar_members;
                    over_t_minus_dstar.insert(std::move(image));
                }
            }
            if (over_t != over_t_minus_d) fail(r, format_tuple(m), "T_n \\ D misses sphere elements");
            if (over_t_minus_dstar.size() != dstar_members)
                fail(r, format_tuple(m), "duplicate products outside D*");
            if (over_t.size() != dstar_members)
                fail(r, format_tuple(m), "sphere size disagrees with |T_n \\ D*|");
            ++centers;
        };
        for (int n = 1; n <= std::min(opt.n_max, 8); ++n)
            for (int reg : detail::divisors_of(n, opt)) {
                if (reg == 1 && n > 6) continue;  // covered by radius1_r1_constant below
                for (SpaceIterator it(n, reg); !it.done(); it.advance()) check_center(it.value());
            }
        if (opt.n_max >= 9) {
            SplitMix64 rng(opt.seed + 3);
            for (int reg : detail::divisors_of(12, opt)) {
                if (reg == 1 || reg == 12) continue;
                for (int trial = 0; trial < 100; ++trial)
                    check_center(random_multipermutation(12, reg, rng).symbols());
            }
        }
        r.detail = "centers checked: " + std::to_string(centers);
    }));

    // Closed-form |E| vs literal membership enumeration.
    out.push_back(detail::sweep("spheres", "e_size_formula", [&](CheckResult& r) {
        std::uint64_t centers = 0;
        auto check_center = [&](const Tuple& m) {
            if (duplication_set_E_size(m) != duplication_set_E_bruteforce(m).size())
                fail(r, format_tuple(m));
            if ((duplication_set_E_bruteforce(m).empty()) == detail::e_set_structural_criterion(m))
                fail(r, format_tuple(m), "nonemptiness criterion disagrees");
            ++centers;
        };
        for (int n = 1; n <= std::min(opt.n_max, 8); ++n)
            for (int reg : detail::divisors_of(n, opt)) {
                if (reg == 1 && n > 6) continue;
                for (SpaceIterator it(n, reg); !it.done(); it.advance()) check_center(it.value());
            }
        SplitMix64 rng(opt.seed + 4);
        for (int n : {6, 8, 9, 12}) {
            if (n > opt.n_max) continue;
            for (int reg : detail::divisors_of(n, opt)) {
                if (reg == 1 || reg == n) continue;
                for (int trial = 0; trial < 500; ++trial)
                    check_center(random_multipermutation(n, reg, rng).symbols());
            }
        }
        r.detail = "centers checked: " + std::to_string(centers);
    }));

    // Alternating end moves: phi(1,n) and phi(n,1) coincide exactly when n
    // is even.
    out.push_back(detail::sweep("spheres", "alternating_end_moves", [&](CheckResult& r) {
        for (int n = 3; n <= 12; ++n) {
            Tuple m(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i % 2 + 1;
            const Tuple left = apply_translocation(m, Translocation{1, n});
            const Tuple right = apply_translocation(m, Translocation{n, 1});
            if ((left == right) != (n % 2 == 0)) fail(r, format_tuple(m));
        }
    }));

    // r = 1 degeneration: every center has the full sphere 1 + (n-1)^2.
    out.push_back(detail::sweep("spheres", "radius1_r1_constant", [&](CheckResult& r) {
        if (opt.r_filter && *opt.r_filter != 1) return;
        for (int n = 1; n <= std::min(opt.n_max, 8); ++n) {
            const std::uint64_t expected =
                1 + static_cast<std::uint64_t>(n - 1) * static_cast<std::uint64_t>(n - 1);
            for (SpaceIterator it(n, 1); !it.done(); it.advance())
                if (radius1_products(it.value()).size() != expected) fail(r, format_tuple(it.value()));
        }
    }));

    // The worked 12-cell center: |D| = 48, |E| = 2, and the enumerated
    // dedup settles the radius-1 size.
    out.push_back(detail::sweep("spheres", "twelve_cell_center_resolution", [&](CheckResult& r) {
        const Multipermutation center(Tuple{1, 1, 1, 2, 3, 2, 3, 2, 4, 4, 3, 4}, 3);
        DuplicationReport report = sphere_size_radius1(center);
        if (report.size_D != 48 || report.size_E != 2 ||
            report.size_E != duplication_set_E_bruteforce(center.symbols()).size())
            fail(r, format_tuple(center.symbols()));
        if (!report.agree()) fail(r, format_tuple(center.symbols()), "formula vs enumeration disagree");
        const std::uint64_t with_unit = report.size_T - report.size_D - report.size_E;
        std::string resolved =
            report.sphere_size_enumerated == with_unit    ? "1+(n-1)^2-|D|-|E| (the +1 is required)"
            : report.sphere_size_enumerated == with_unit - 1 ? "(n-1)^2-|D|-|E| (no +1)"
                                                             : "neither closed form";
        r.detail = "|T_12|=" + std::to_string(report.size_T) + " |D|=48 |E|=2; enumerated sphere = " +
                   std::to_string(report.sphere_size_enumerated) + ", matching " + resolved;
    }));

    // Extremal centers: minimum at the identity projection with
    // 1+(n-1)(n/r-1); maximum at the omega center with 1+(n-1)^2-(r-1)n
    // whenever n/r > 2.
    out.push_back(detail::sweep("spheres", "extremal_centers", [&](CheckResult& r) {
        struct Instance {
            int n, reg;
        };
        for (Instance inst : {Instance{6, 2}, Instance{8, 2}, Instance{6, 3}, Instance{9, 3}}) {
            if (inst.n > opt.n_max) continue;
            if (opt.r_filter && *opt.r_filter != inst.reg) continue;
            ExtremalScanResult scan = extremal_center_scan(inst.n, inst.reg, 1, opt.threads);
            const std::uint64_t expected_min =
                1 + static_cast<std::uint64_t>(inst.n - 1) * (inst.n / inst.reg - 1);
            const Tuple identity_center = first_multipermutation(inst.n, inst.reg);
            if (scan.min_size != expected_min || scan.min_center.symbols() != identity_center)
                fail(r, "n=" + std::to_string(inst.n) + " r=" + std::to_string(inst.reg) +
                            " min=" + std::to_string(scan.min_size));
            if (inst.n / inst.reg > 2) {
                const std::uint64_t expected_max =
                    1 + static_cast<std::uint64_t>(inst.n - 1) * (inst.n - 1) -
                    static_cast<std::uint64_t>(inst.reg - 1) * inst.n;
                const auto omega = omega_center(inst.n, inst.reg);
                if (scan.max_size != expected_max ||
                    radius1_products(omega.projection.symbols()).size() != expected_max)
                    fail(r, "n=" + std::to_string(inst.n) + " r=" + std::to_string(inst.reg) +
                                " max=" + std::to_string(scan.max_size));
            }
        }
    }));

    return out;
}

inline std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    auto append = [&](std::vector<CheckResult> results) {
        out.insert(out.end(), std::make_move_iterator(results.begin()),
                   std::make_move_iterator(results.end()));
    };
    if (suite == "metric" || suite == "all") append(run_metric_suite(opt));
    if (suite == "rsk" || suite == "all") append(run_rsk_suite(opt));
    if (suite == "spheres" || suite == "all") append(run_spheres_suite(opt));
    return out;
}

}  // namespace mpulam
