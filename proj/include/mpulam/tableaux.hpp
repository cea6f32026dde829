#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "mpulam/bigint.hpp"
#include "mpulam/core.hpp"

// Partitions, Young tableaux, Schensted insertion and the RSK
// correspondence, plus the two counting routes used for identity-centered
// sphere sizes: f^lambda by the hook length formula and K^lambda_r by
// exhaustive semistandard filling. The sphere of radius t around the
// identity projection has size
//   sum over lambda |- n with lambda_1 >= n - t of f^lambda * K^lambda_r.

namespace mpulam {

// Weakly decreasing positive parts summing to n.
class Partition {
  public:
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw StructuralError("partition: must have at least one part");
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1) throw StructuralError("partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw StructuralError("partition: parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int first_part() const { return parts_.front(); }
    int sum() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    friend bool operator==(const Partition& a, const Partition& b) = default;

  private:
    std::vector<int> parts_;
};

// A filling of a Young diagram: weakly increasing along rows, strictly
// increasing down columns. Equality is structural (shape plus entries).
class Tableau {
  public:
    Tableau() = default;

    explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) { validate(); }

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    int cell_count() const {
        int c = 0;
        for (const auto& row : rows_) c += static_cast<int>(row.size());
        return c;
    }
    int column_count() const { return rows_.empty() ? 0 : static_cast<int>(rows_.front().size()); }

    Partition shape() const {
        if (rows_.empty()) throw StructuralError("tableau: empty tableau has no shape");
        std::vector<int> parts;
        parts.reserve(rows_.size());
        for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
        return Partition(std::move(parts));
    }

    // True when the entries are exactly 1..n, each once.
    bool is_standard() const {
        std::vector<int> all;
        for (const auto& row : rows_) all.insert(all.end(), row.begin(), row.end());
        std::sort(all.begin(), all.end());
        for (std::size_t i = 0; i < all.size(); ++i)
            if (all[i] != static_cast<int>(i) + 1) return false;
        return true;
    }

    friend bool operator==(const Tableau& a, const Tableau& b) = default;

  private:
    void validate() const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i].empty()) throw StructuralError("tableau: empty row");
            if (i > 0 && rows_[i].size() > rows_[i - 1].size())
                throw StructuralError("tableau: row lengths must weakly decrease");
            for (std::size_t j = 0; j + 1 < rows_[i].size(); ++j)
                if (rows_[i][j] > rows_[i][j + 1])
                    throw StructuralError("tableau: rows must be weakly increasing");
            if (i > 0)
                for (std::size_t j = 0; j < rows_[i].size(); ++j)
                    if (rows_[i - 1][j] >= rows_[i][j])
                        throw StructuralError("tableau: columns must be strictly increasing");
        }
    }

    std::vector<std::vector<int>> rows_;
};

namespace detail {

// Row-insert x; returns the (row, column) of the new box (0-based).
inline std::pair<int, int> schensted_insert_inplace(std::vector<std::vector<int>>& rows, int x) {
    for (std::size_t i = 0;; ++i) {
        if (i == rows.size()) {
            rows.push_back({x});
            return {static_cast<int>(i), 0};
        }
        auto& row = rows[i];
        // Minimum entry strictly greater than x, if any.
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return {static_cast<int>(i), static_cast<int>(row.size()) - 1};
        }
        std::swap(*it, x);
    }
}

}  // namespace detail

inline Tableau schensted_insert(const Tableau& t, int x) {
    auto rows = t.rows();
    detail::schensted_insert_inplace(rows, x);
    return Tableau(std::move(rows));
}

struct RskResult {
    Tableau p;
    Tableau q;
};

// Insert the tuple left to right; Q records in which box each step grew.
inline RskResult rsk(std::span<const int> m) {
    std::vector<std::vector<int>> p_rows, q_rows;
    for (std::size_t step = 0; step < m.size(); ++step) {
        auto [row, col] = detail::schensted_insert_inplace(p_rows, m[step]);
        if (row == static_cast<int>(q_rows.size())) q_rows.emplace_back();
        q_rows[static_cast<std::size_t>(row)].push_back(static_cast<int>(step) + 1);
        (void)col;
    }
    return RskResult{Tableau(std::move(p_rows)), Tableau(std::move(q_rows))};
}

inline RskResult rsk(const Multipermutation& m) { return rsk(std::span<const int>(m.symbols())); }

// f^lambda = n! / prod of hook lengths.
inline BigInt hook_length_count(const Partition& lambda) {
    const auto& parts = lambda.parts();
    const int n = lambda.sum();
    std::vector<int> column_heights(static_cast<std::size_t>(lambda.first_part()), 0);
    for (int p : parts)
        for (int j = 0; j < p; ++j) ++column_heights[static_cast<std::size_t>(j)];
    BigInt denom = 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (int j = 0; j < parts[i]; ++j) {
            const int arm = parts[i] - j - 1;
            const int leg = column_heights[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            denom *= arm + leg + 1;
        }
    }
    return big_factorial(static_cast<unsigned long>(n)) / denom;
}

namespace detail {

inline void count_fillings(const std::vector<int>& parts, std::vector<std::vector<int>>& cells,
                           std::vector<int>& remaining, int row, int col, BigInt& total) {
    if (row == static_cast<int>(parts.size())) {
        ++total;
        return;
    }
    const int next_row = col + 1 == parts[static_cast<std::size_t>(row)] ? row + 1 : row;
    const int next_col = col + 1 == parts[static_cast<std::size_t>(row)] ? 0 : col + 1;
    const int left = col > 0 ? cells[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)] : 1;
    const int above = row > 0 && col < parts[static_cast<std::size_t>(row - 1)]
                          ? cells[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] + 1
                          : 1;
    // Column strictness forces value >= row index + 1.
    const int lo = std::max({left, above, row + 1});
    for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
        auto& count = remaining[static_cast<std::size_t>(v - 1)];
        if (count == 0) continue;
        --count;
        cells[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
        count_fillings(parts, cells, remaining, next_row, next_col, total);
        ++count;
    }
}

}  // namespace detail

// K^lambda_r: semistandard fillings of lambda in which every symbol of
// [1..n/r] appears exactly r times, counted by backtracking fill with
// pruning. Exact at desk scale without Kostka recurrences.
inline BigInt count_content_tableaux(const Partition& lambda, int r) {
    const int n = lambda.sum();
    if (r < 1 || n % r != 0) throw ParameterError("count_content_tableaux: r must divide |lambda|");
    const int alphabet = n / r;
    if (lambda.rows() > alphabet) return 0;  // column strictness cannot be met
    std::vector<std::vector<int>> cells;
    for (int p : lambda.parts()) cells.emplace_back(static_cast<std::size_t>(p), 0);
    std::vector<int> remaining(static_cast<std::size_t>(alphabet), r);
    BigInt total = 0;
    detail::count_fillings(lambda.parts(), cells, remaining, 0, 0, total);
    return total;
}

// Streams partitions of n in reverse-lexicographic order: (n) first,
// (1,...,1) last. Partitions with first part >= min_first form a prefix of
// that order, so the stream stops as soon as the first part drops below.
class PartitionGenerator {
  public:
    explicit PartitionGenerator(int n, int min_first = 1) : min_first_(min_first), current_{n} {
        if (n < 1) throw ParameterError("PartitionGenerator: n must be positive");
        if (min_first < 1 || min_first > n)
            throw ParameterError("PartitionGenerator: min_first must lie in [1..n]");
        done_ = current_.front() < min_first_;
    }

    bool done() const { return done_; }
    const std::vector<int>& value() const { return current_; }

    void advance() {
        // Remove trailing 1s, decrement the last remaining part, then pad
        // with chunks no larger than the decremented part.
        int ones = 0;
        while (!current_.empty() && current_.back() == 1) {
            current_.pop_back();
            ++ones;
        }
        if (current_.empty()) {
            done_ = true;
            return;
        }
        int part = --current_.back();
        int rest = ones + 1;
        while (rest > 0) {
            const int chunk = std::min(part, rest);
            current_.push_back(chunk);
            rest -= chunk;
        }
        done_ = current_.front() < min_first_;
    }

  private:
    int min_first_;
    std::vector<int> current_;
    bool done_ = false;
};

inline std::vector<Partition> partitions_with_min_first_part(int n, int min_first) {
    std::vector<Partition> out;
    for (PartitionGenerator gen(n, min_first); !gen.done(); gen.advance())
        out.emplace_back(gen.value());
    return out;
}

// Independent p(n) by the parts-bounded recurrence; used to cross-check the
// generator, never derived from it.
inline BigInt partition_count(int n) {
    if (n < 0) return 0;
    // table[m][k] = partitions of m into parts <= k
    std::vector<std::vector<BigInt>> table(static_cast<std::size_t>(n + 1),
                                           std::vector<BigInt>(static_cast<std::size_t>(n + 1), 0));
    for (int k = 0; k <= n; ++k) table[0][static_cast<std::size_t>(k)] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= n; ++k)
            table[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)] =
                table[static_cast<std::size_t>(m)][static_cast<std::size_t>(k - 1)] +
                (m >= k ? table[static_cast<std::size_t>(m - k)][static_cast<std::size_t>(k)] : BigInt(0));
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)];
}

// |S(m_e^r, t)| = sum over lambda |- n, lambda_1 >= n-t of f^lambda K^lambda_r.
inline BigInt sphere_size_identity(int n, int r, int t) {
    if (r < 1 || n < 1 || n % r != 0) throw ParameterError("sphere_size_identity: r must divide n");
    if (t < 0 || t > n - 1) throw ParameterError("sphere_size_identity: t must lie in [0..n-1]");
    BigInt total = 0;
    for (PartitionGenerator gen(n, n - t); !gen.done(); gen.advance()) {
        Partition lambda(gen.value());
        total += hook_length_count(lambda) * count_content_tableaux(lambda, r);
    }
    return total;
}

}  // namespace mpulam
