#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mpulam/bigint.hpp"

// Permutations on [n], r-regular multipermutations over [n/r],
// translocations phi(i,j), the projection sigma -> m_sigma^r and the right
// action of permutations on integer tuples. All indices at the API boundary
// are 1-based; storage is 0-based and never leaks through the interface.
// Every value is immutable after construction and safe to share across
// threads.

namespace mpulam {

class Error : public std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Operands have incompatible lengths.
class DimensionError : public Error {
    using Error::Error;
};
// An argument violates a precondition (bad index, r not dividing n, ...).
class ParameterError : public Error {
    using Error::Error;
};
// The requested computation exceeds a configured enumeration cap.
class CapacityError : public Error {
    using Error::Error;
};
// A structured value (tableau, partition) violates its shape rules.
class StructuralError : public Error {
    using Error::Error;
};
// The formula requested is outside its hypothesis (e.g. n/r = 2 bounds).
class UnsupportedRegimeError : public Error {
    using Error::Error;
};

// Plain integer tuple; the common currency of the low-level routines.
using Tuple = std::vector<int>;

struct TupleHash {
    std::size_t operator()(const Tuple& t) const noexcept {
        std::uint64_t h = 1469598103934665603ull;  // FNV-1a
        for (int v : t) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// The translocation phi(i,j): delete the entry at position i, reinsert it
// so that it lands at position j. phi(i,i) means the identity for every i.
struct Translocation {
    int from = 1;
    int to = 1;

    constexpr bool is_identity() const { return from == to; }
    friend constexpr bool operator==(Translocation a, Translocation b) = default;
    friend constexpr auto operator<=>(Translocation a, Translocation b) = default;
};

struct TranslocationHash {
    std::size_t operator()(Translocation t) const noexcept {
        return std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(t.from) << 32) |
                                          static_cast<std::uint32_t>(t.to));
    }
};

namespace detail {

inline void check_index(int i, int n, const char* what) {
    if (i < 1 || i > n) throw ParameterError(std::string(what) + " index out of range [1..n]");
}

// Delete the entry at 1-based position i and reinsert it at position j.
inline Tuple delete_insert(const Tuple& t, int i, int j) {
    const int n = static_cast<int>(t.size());
    check_index(i, n, "translocation source");
    check_index(j, n, "translocation destination");
    Tuple out = t;
    const int x = out[i - 1];
    out.erase(out.begin() + (i - 1));
    out.insert(out.begin() + (j - 1), x);
    return out;
}

}  // namespace detail

// A bijection on [1..n], stored as the image sequence [sigma(1),...,sigma(n)].
class Permutation {
  public:
    explicit Permutation(Tuple images) : images_(std::move(images)) {
        const int n = static_cast<int>(images_.size());
        if (n < 1) throw ParameterError("permutation must have length >= 1");
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        for (int v : images_) {
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
                throw ParameterError("permutation images must be exactly {1..n}");
            seen[static_cast<std::size_t>(v - 1)] = true;
        }
    }

    static Permutation identity(int n) {
        Tuple t(static_cast<std::size_t>(n));
        std::iota(t.begin(), t.end(), 1);
        return Permutation(std::move(t));
    }

    int size() const { return static_cast<int>(images_.size()); }

    // sigma(i), 1-based.
    int operator()(int i) const {
        detail::check_index(i, size(), "permutation");
        return images_[static_cast<std::size_t>(i - 1)];
    }

    const Tuple& images() const { return images_; }

    Permutation inverse() const {
        Tuple inv(images_.size());
        for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(images_[static_cast<std::size_t>(i)] - 1)] = i + 1;
        return Permutation(std::move(inv));
    }

    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

  private:
    Tuple images_;
};

// (sigma tau)(i) = sigma(tau(i)).
inline Permutation compose(const Permutation& sigma, const Permutation& tau) {
    if (sigma.size() != tau.size()) throw DimensionError("compose: length mismatch");
    Tuple out(static_cast<std::size_t>(sigma.size()));
    for (int i = 1; i <= sigma.size(); ++i) out[static_cast<std::size_t>(i - 1)] = sigma(tau(i));
    return Permutation(std::move(out));
}

// The explicit image sequence of phi(i,j) in S_n:
//   i < j : [1,..,i-1, i+1,..,j, i, j+1,..,n]
//   i > j : [1,..,j-1, i, j,..,i-1, i+1,..,n]
inline Permutation translocation_permutation(Translocation phi, int n) {
    return Permutation(detail::delete_insert(Permutation::identity(n).images(), phi.from, phi.to));
}

// An r-regular multipermutation: a length-n tuple over [1..n/r] in which
// every symbol occurs exactly r times.
class Multipermutation {
  public:
    Multipermutation(Tuple symbols, int r) : symbols_(std::move(symbols)), regularity_(r) {
        const int n = static_cast<int>(symbols_.size());
        if (r < 1 || n < 1 || n % r != 0)
            throw ParameterError("multipermutation: r must be positive and divide n");
        const int k = n / r;
        std::vector<int> count(static_cast<std::size_t>(k), 0);
        for (int v : symbols_) {
            if (v < 1 || v > k) throw ParameterError("multipermutation: symbol outside [1..n/r]");
            ++count[static_cast<std::size_t>(v - 1)];
        }
        for (int c : count)
            if (c != r) throw ParameterError("multipermutation: content is not r-regular");
    }

    int size() const { return static_cast<int>(symbols_.size()); }
    int regularity() const { return regularity_; }
    // The alphabet size n/r.
    int alphabet() const { return size() / regularity_; }

    // m(i), 1-based.
    int operator()(int i) const {
        detail::check_index(i, size(), "multipermutation");
        return symbols_[static_cast<std::size_t>(i - 1)];
    }

    const Tuple& symbols() const { return symbols_; }

    friend bool operator==(const Multipermutation& a, const Multipermutation& b) {
        return a.regularity_ == b.regularity_ && a.symbols_ == b.symbols_;
    }
    friend auto operator<=>(const Multipermutation& a, const Multipermutation& b) {
        if (auto c = a.symbols_ <=> b.symbols_; c != 0) return c;
        return a.regularity_ <=> b.regularity_;
    }

  private:
    Tuple symbols_;
    int regularity_;
};

// m_sigma^r(i) = ceil(sigma(i) / r), i.e. the block of [1..n] holding sigma(i).
inline Multipermutation project(const Permutation& sigma, int r) {
    const int n = sigma.size();
    if (r < 1 || n % r != 0) throw ParameterError("project: r must divide n");
    Tuple out(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i - 1)] = (sigma(i) + r - 1) / r;
    return Multipermutation(std::move(out), r);
}

inline Tuple apply_translocation(const Tuple& t, Translocation phi) {
    return detail::delete_insert(t, phi.from, phi.to);
}

inline Permutation apply_translocation(const Permutation& sigma, Translocation phi) {
    return Permutation(detail::delete_insert(sigma.images(), phi.from, phi.to));
}

inline Multipermutation apply_translocation(const Multipermutation& m, Translocation phi) {
    return Multipermutation(detail::delete_insert(m.symbols(), phi.from, phi.to), m.regularity());
}

// The right action (m . sigma)(i) = m(sigma(i)) on arbitrary integer tuples.
inline Tuple act(const Tuple& m, const Permutation& sigma) {
    if (static_cast<int>(m.size()) != sigma.size()) throw DimensionError("act: length mismatch");
    Tuple out(m.size());
    for (int i = 1; i <= sigma.size(); ++i) out[static_cast<std::size_t>(i - 1)] = m[static_cast<std::size_t>(sigma(i) - 1)];
    return out;
}

// |R_r(sigma)| = (r!)^(n/r).
inline BigInt equivalence_class_size(int n, int r) {
    if (r < 1 || n < 1 || n % r != 0) throw ParameterError("equivalence_class_size: r must divide n");
    return big_pow(big_factorial(static_cast<unsigned long>(r)), static_cast<unsigned long>(n / r));
}

// Streams R_r(sigma) = { pi : m_pi^r = m_sigma^r } in lexicographic order of
// the image sequence. The class has (r!)^(n/r) members, so large classes are
// consumed one element at a time instead of being materialized.
class EquivalenceClassStream {
  public:
    EquivalenceClassStream(const Permutation& sigma, int r)
        : blocks_(project(sigma, r).symbols()), images_(blocks_.size()), done_(false) {
        // Lexicographically smallest member: each block's values ascending
        // into that block's positions, left to right.
        const int k = static_cast<int>(blocks_.size()) / r;
        std::vector<int> next_value(static_cast<std::size_t>(k));
        for (int b = 0; b < k; ++b) next_value[static_cast<std::size_t>(b)] = b * r + 1;
        for (std::size_t p = 0; p < blocks_.size(); ++p)
            images_[p] = next_value[static_cast<std::size_t>(blocks_[p] - 1)]++;
    }

    std::optional<Permutation> next() {
        if (done_) return std::nullopt;
        Permutation out{Tuple(images_)};
        done_ = !advance();
        return out;
    }

  private:
    // Standard next-lexicographic step on a word whose per-position
    // candidate set is the value block of that position.
    bool advance() {
        const int n = static_cast<int>(images_.size());
        for (int q = n - 1; q >= 0; --q) {
            const int block = blocks_[static_cast<std::size_t>(q)];
            // Values of this block currently placed at positions >= q.
            Tuple avail;
            for (int p = q; p < n; ++p)
                if (blocks_[static_cast<std::size_t>(p)] == block) avail.push_back(images_[static_cast<std::size_t>(p)]);
            std::sort(avail.begin(), avail.end());
            auto it = std::upper_bound(avail.begin(), avail.end(), images_[static_cast<std::size_t>(q)]);
            if (it == avail.end()) continue;
            const int chosen = *it;
            avail.erase(it);
            images_[static_cast<std::size_t>(q)] = chosen;
            // Refill the suffix: smallest remaining value of each block, in
            // position order.
            std::vector<Tuple> per_block(static_cast<std::size_t>(*std::max_element(blocks_.begin(), blocks_.end())));
            per_block[static_cast<std::size_t>(block - 1)] = avail;
            for (int p = q + 1; p < n; ++p) {
                const int b = blocks_[static_cast<std::size_t>(p)];
                if (b != block) per_block[static_cast<std::size_t>(b - 1)].push_back(images_[static_cast<std::size_t>(p)]);
            }
            for (auto& vals : per_block) std::sort(vals.begin(), vals.end());
            std::vector<std::size_t> cursor(per_block.size(), 0);
            for (int p = q + 1; p < n; ++p) {
                const int b = blocks_[static_cast<std::size_t>(p)];
                images_[static_cast<std::size_t>(p)] = per_block[static_cast<std::size_t>(b - 1)][cursor[static_cast<std::size_t>(b - 1)]++];
            }
            return true;
        }
        return false;
    }

    Tuple blocks_;  // block id of each position (the shared projection)
    Tuple images_;
    bool done_;
};

// Materializes R_r(sigma); refuses classes larger than `cap` elements.
inline std::vector<Permutation> equivalence_class(const Permutation& sigma, int r,
                                                  std::uint64_t cap = 1'000'000) {
    BigInt size = equivalence_class_size(sigma.size(), r);
    if (size > BigInt(static_cast<unsigned long>(cap)))
        throw CapacityError("equivalence_class: class size exceeds cap; use EquivalenceClassStream");
    std::vector<Permutation> out;
    out.reserve(static_cast<std::size_t>(to_u64(size)));
    EquivalenceClassStream stream(sigma, r);
    while (auto pi = stream.next()) out.push_back(std::move(*pi));
    return out;
}

// ---- text format ----------------------------------------------------------
// Comma-separated integers, no brackets, whitespace ignored: "1,3,1,2,2,3".
// This is the wire format used by every CLI flag and JSON field carrying a
// sequence.

inline Tuple parse_tuple(std::string_view text) {
    Tuple out;
    std::string token;
    auto flush = [&] {
        if (token.empty()) throw ParameterError("tuple text: empty entry");
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw ParameterError("tuple text: not an integer: '" + token + "'");
        out.push_back(value);
        token.clear();
    };
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') continue;
        if (c == ',') {
            flush();
        } else {
            token.push_back(c);
        }
    }
    flush();
    return out;
}

inline std::string format_tuple(std::span<const int> t) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out.push_back(',');
        out += std::to_string(t[i]);
    }
    return out;
}

// True when the tuple is a bijection image sequence on [1..n].
inline bool is_permutation_tuple(const Tuple& t) {
    const int n = static_cast<int>(t.size());
    if (n < 1) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : t) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) return false;
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    return true;
}

// True when the tuple is a valid r-regular multipermutation over [1..n/r].
inline bool is_multipermutation_tuple(const Tuple& t, int r) {
    const int n = static_cast<int>(t.size());
    if (r < 1 || n < 1 || n % r != 0) return false;
    const int k = n / r;
    std::vector<int> count(static_cast<std::size_t>(k), 0);
    for (int v : t) {
        if (v < 1 || v > k) return false;
        ++count[static_cast<std::size_t>(v - 1)];
    }
    return std::all_of(count.begin(), count.end(), [&](int c) { return c == r; });
}

}  // namespace mpulam
