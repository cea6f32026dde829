// Acceptance suite: every end-to-end contract the library must honor, one
// pass/fail line per criterion. Each check pits the implementation against
// an independent route (exhaustive enumeration, breadth-first search,
// literal class minimization) at desk scale. Exit code 0 only when every
// criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "mpulam/mpulam.hpp"

using namespace mpulam;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool(std::string&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        note = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    std::printf("%s criterion %2d: %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                static_cast<long long>(ms), note.empty() ? "" : " -- ", note.c_str());
    if (!ok) ++failures;
}

std::vector<int> divisors(int n) {
    std::vector<int> out;
    for (int r = 1; r <= n; ++r)
        if (n % r == 0) out.push_back(r);
    return out;
}

}  // namespace

int main() {
    criterion(1, "projection worked example", [](std::string&) {
        return project(Permutation{Tuple{1, 5, 2, 4, 3, 6}}, 2).symbols() ==
               Tuple{1, 3, 1, 2, 2, 3};
    });

    criterion(2, "LCS worked example and distance", [](std::string&) {
        const Tuple u{2, 1, 2, 1, 3, 3};
        const Tuple v{3, 2, 2, 1, 3, 1};
        return lcs_length(u, v) == 4 && distance_result(u, v).distance == 2;
    });

    criterion(3, "n - LCS = BFS distance = class minimum, all pairs, n <= 5", [](std::string& note) {
        std::uint64_t pairs = 0;
        for (int n = 1; n <= 5; ++n) {
            for (int r : divisors(n)) {
                const auto space = enumerate_space(n, r);
                // one permutation representative per class, for the oracle
                std::vector<Permutation> representative;
                for (const auto& m : space) {
                    Tuple images(static_cast<std::size_t>(n));
                    std::vector<int> next_value(static_cast<std::size_t>(n / r));
                    for (int b = 0; b < n / r; ++b) next_value[static_cast<std::size_t>(b)] = b * r + 1;
                    for (int i = 0; i < n; ++i)
                        images[static_cast<std::size_t>(i)] =
                            next_value[static_cast<std::size_t>(m.symbols()[static_cast<std::size_t>(i)] - 1)]++;
                    representative.emplace_back(std::move(images));
                }
                for (std::size_t i = 0; i < space.size(); ++i) {
                    for (std::size_t j = 0; j < space.size(); ++j) {
                        const int by_lcs = ulam_distance(space[i], space[j]);
                        const auto by_bfs = bfs_translocation_distance(space[i], space[j]);
                        if (!by_bfs || *by_bfs != by_lcs) return false;
                        if (class_min_distance_oracle(representative[i], representative[j], r) != by_lcs)
                            return false;
                        ++pairs;
                    }
                }
            }
        }
        note = std::to_string(pairs) + " pairs";
        return true;
    });

    criterion(4, "non-left-invariance at n=4, r=2", [](std::string&) {
        const auto witness = non_left_invariance_witness(4, 2);
        const Permutation e = Permutation::identity(4);
        return ulam_distance_r(e, witness.sigma_prime, 2) == 2 &&
               ulam_distance_r(witness.pi_prime, compose(witness.pi_prime, witness.sigma_prime), 2) == 1;
    });

    criterion(5, "RSK worked example, cell for cell", [](std::string&) {
        const RskResult pair = rsk(Tuple{2, 3, 2, 1, 3, 1});
        return pair.p.rows() == std::vector<std::vector<int>>{{1, 1, 3}, {2, 2}, {3}} &&
               pair.q.rows() == std::vector<std::vector<int>>{{1, 2, 5}, {3, 6}, {4}};
    });

    criterion(6, "mass identity for n <= 10, all divisors", [](std::string& note) {
        int instances = 0;
        for (int n = 1; n <= 10; ++n) {
            for (int r : divisors(n)) {
                BigInt mass = 0;
                for (PartitionGenerator gen(n); !gen.done(); gen.advance()) {
                    const Partition lambda(gen.value());
                    mass += hook_length_count(lambda) * count_content_tableaux(lambda, r);
                }
                if (mass != space_size(n, r)) return false;
                ++instances;
            }
        }
        note = std::to_string(instances) + " (n, r) instances";
        return true;
    });

    criterion(7, "radius-1 identity sphere: formula, tableaux, dedup, n <= 8", [](std::string&) {
        for (int n = 1; n <= 8; ++n) {
            for (int r : divisors(n)) {
                const BigInt expected = n == 1 ? BigInt(1) : 1 + BigInt(n - 1) * (n / r - 1);
                if (sphere_size_identity(n, r, std::min(1, n - 1)) != expected) return false;
                const std::uint64_t dedup = radius1_products(first_multipermutation(n, r)).size();
                if (BigInt(static_cast<unsigned long>(dedup)) != expected) return false;
            }
        }
        return true;
    });

    criterion(8, "twelve-cell worked center: |D| = 48, |E| = 2, dedup decides", [](std::string& note) {
        const Multipermutation center(Tuple{1, 1, 1, 2, 3, 2, 3, 2, 4, 4, 3, 4}, 3);
        const DuplicationReport report = sphere_size_radius1(center);
        if (report.size_D != 48 || report.size_E != 2) return false;
        if (duplication_set_E_bruteforce(center.symbols()).size() != 2) return false;
        const std::uint64_t with_unit = report.size_T - report.size_D - report.size_E;  // 72
        note = "enumerated " + std::to_string(report.sphere_size_enumerated) + "; 1+(n-1)^2-|D|-|E|=" +
               std::to_string(with_unit) + ", (n-1)^2-|D|-|E|=" + std::to_string(with_unit - 1) +
               "; the enumeration confirms the variant with the +1";
        return report.sphere_size_enumerated == with_unit && report.agree();
    });

    criterion(9, "T_n \\ D set equality and T_n \\ D* injectivity, all centers, n <= 8",
              [](std::string& note) {
                  std::uint64_t centers = 0;
                  for (int n = 1; n <= 8; ++n) {
                      const auto translocations = unique_translocations(n);
                      for (int r : divisors(n)) {
                          for (SpaceIterator it(n, r); !it.done(); it.advance()) {
                              const Tuple& m = it.value();
                              std::unordered_set<Translocation, TranslocationHash> d_set;
                              for (Translocation phi : duplication_set_D(m)) d_set.insert(phi);
                              std::unordered_set<Translocation, TranslocationHash> e_set;
                              for (Translocation phi : duplication_set_E_bruteforce(m)) e_set.insert(phi);
                              for (Translocation phi : e_set)
                                  if (d_set.contains(phi)) return false;  // D and E disjoint
                              std::unordered_set<Tuple, TupleHash> over_t, minus_d, minus_dstar;
                              std::uint64_t dstar_members = 0;
                              for (Translocation phi : translocations) {
                                  Tuple image = apply_translocation(m, phi);
                                  over_t.insert(image);
                                  if (d_set.contains(phi)) continue;
                                  minus_d.insert(image);
                                  if (!e_set.contains(phi)) {
                                      ++dstar_members;
                                      minus_dstar.insert(std::move(image));
                                  }
                              }
                              if (over_t != minus_d) return false;                    // set equality
                              if (minus_dstar.size() != dstar_members) return false;  // injectivity
                              if (over_t.size() != dstar_members) return false;       // |S| = |T \ D*|
                              ++centers;
                          }
                      }
                  }
                  note = std::to_string(centers) + " centers";
                  return true;
              });

    criterion(10, "extremal scans at (6,2), (8,2), (6,3), (9,3)", [](std::string&) {
        struct Instance {
            int n, r;
        };
        for (Instance inst : {Instance{6, 2}, Instance{8, 2}, Instance{6, 3}, Instance{9, 3}}) {
            const ExtremalScanResult scan = extremal_center_scan(inst.n, inst.r);
            const std::uint64_t expected_min =
                1 + static_cast<std::uint64_t>(inst.n - 1) * (inst.n / inst.r - 1);
            if (scan.min_size != expected_min) return false;
            if (scan.min_center.symbols() != first_multipermutation(inst.n, inst.r)) return false;
            if (inst.n / inst.r > 2) {
                const std::uint64_t expected_max =
                    1 + static_cast<std::uint64_t>(inst.n - 1) * (inst.n - 1) -
                    static_cast<std::uint64_t>(inst.r - 1) * inst.n;
                if (scan.max_size != expected_max) return false;
                const auto omega = omega_center(inst.n, inst.r);
                if (radius1_products(omega.projection.symbols()).size() != expected_max) return false;
            }
        }
        return true;
    });

    criterion(11, "bounds arithmetic and greedy witness at (6,2)", [](std::string& note) {
        const BoundReport packing = sphere_packing_upper(6, 2);
        if (packing.bound_integer != 8) return false;
        const BoundReport gv = gv_lower(6, 2, 2);
        if (gv.bound_integer != 5) return false;
        const CodeSet code = greedy_code(6, 2, 2);
        if (!verify_code(code, 2).ok) return false;
        note = "greedy size " + std::to_string(code.codewords.size());
        return code.codewords.size() >= 5;
    });

    criterion(12, "metric axioms: exhaustive n <= 6, random triples at n=9, r=3",
              [](std::string& note) {
                  for (int n = 1; n <= 6; ++n) {
                      for (int r : divisors(n)) {
                          const DistanceMatrix matrix = distance_matrix(n, r, 10'000);
                          const std::size_t count = matrix.labels.size();
                          for (std::size_t i = 0; i < count; ++i)
                              for (std::size_t j = 0; j < count; ++j) {
                                  if (matrix.cell[i][j] < 0) return false;
                                  if ((matrix.cell[i][j] == 0) != (i == j)) return false;
                                  if (matrix.cell[i][j] != matrix.cell[j][i]) return false;
                              }
                          for (std::size_t i = 0; i < count; ++i)
                              for (std::size_t j = 0; j < count; ++j) {
                                  const int dij = matrix.cell[i][j];
                                  for (std::size_t k = 0; k < count; ++k)
                                      if (matrix.cell[i][k] > dij + matrix.cell[j][k]) return false;
                              }
                      }
                  }
                  SplitMix64 rng(20240901);
                  for (int trial = 0; trial < 10'000; ++trial) {
                      const Multipermutation a = random_multipermutation(9, 3, rng);
                      const Multipermutation b = random_multipermutation(9, 3, rng);
                      const Multipermutation c = random_multipermutation(9, 3, rng);
                      if (ulam_distance(a, c) > ulam_distance(a, b) + ulam_distance(b, c)) return false;
                  }
                  note = "10000 seeded triples";
                  return true;
              });

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                failures);
    return failures == 0 ? 0 : 1;
}
