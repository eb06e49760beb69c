#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace padj {

/// Largest n for which brute-force enumeration of P_n is allowed by default.
inline constexpr unsigned kDefaultOracleLimit = 9;

/// Largest n for which rank() fits in 64 bits.
inline constexpr unsigned kMaxRankable = 20;

/// Adjacency conventions. Type2 imagines a trailing symbol n, Type3 a leading
/// symbol -1, Type4 both.
enum class AdjacencyType { Type1, Type2, Type3, Type4 };

/// n + offset(t) is the largest adjacency count a size-n permutation can have.
constexpr int offset(AdjacencyType t) {
    switch (t) {
        case AdjacencyType::Type1: return -1;
        case AdjacencyType::Type2: return 0;
        case AdjacencyType::Type3: return 0;
        case AdjacencyType::Type4: return 1;
    }
    return 0;
}

constexpr bool has_leading_sentinel(AdjacencyType t) {
    return t == AdjacencyType::Type3 || t == AdjacencyType::Type4;
}

constexpr bool has_trailing_sentinel(AdjacencyType t) {
    return t == AdjacencyType::Type2 || t == AdjacencyType::Type4;
}

inline constexpr AdjacencyType kAllAdjacencyTypes[] = {
    AdjacencyType::Type1, AdjacencyType::Type2, AdjacencyType::Type3, AdjacencyType::Type4};

std::string_view name(AdjacencyType t);

/// Accepts "type1".."type4" and the bare digits "1".."4".
AdjacencyType parse_adjacency_type(std::string_view text);

/// A bijection from positions 0..n-1 onto symbols 0..n-1. The size-0
/// permutation exists only as the reduction of an identity under a type with
/// sentinels, and stands for "already sorted".
class Permutation {
public:
    Permutation() = default;

    /// Throws input_error unless `symbols` is a permutation of 0..size-1.
    explicit Permutation(std::vector<int> symbols);
    Permutation(std::initializer_list<int> symbols);

    static Permutation identity(std::size_t n);
    static Permutation reversed(std::size_t n);

    std::size_t size() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    int operator[](std::size_t i) const { return symbols_[i]; }
    std::span<const int> symbols() const { return symbols_; }

    bool is_identity() const;

    /// Position of a symbol (0-based).
    std::size_t position_of(int symbol) const;

    std::string to_string() const;

    auto operator<=>(const Permutation&) const = default;
    bool operator==(const Permutation&) const = default;

private:
    std::vector<int> symbols_;
};

/// Parses a comma-separated decimal list such as "4,2,1,3,0".
Permutation parse_permutation(std::string_view text);

/// Zero for the empty permutation: sentinels alone never form an adjacency.
std::size_t count_adjacencies(const Permutation& p, AdjacencyType t);

/// Collapses every maximal run of adjacencies to its first symbol, drops runs
/// anchored at a sentinel, relabels onto 0..m-1, and repeats until no
/// adjacency remains.
Permutation reduce(const Permutation& p, AdjacencyType t);

/// Relabels distinct integers order-isomorphically onto 0..size-1.
Permutation mirror_canonicalize(std::span<const int> values);

/// Calls `fn` on every permutation of size n in lexicographic order.
void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& fn);

/// Every permutation of size n with exactly k adjacencies under t, in
/// lexicographic order. Refuses n above `oracle_limit`.
std::vector<Permutation> enumerate_class(std::size_t n, std::size_t k, AdjacencyType t,
                                         unsigned oracle_limit = kDefaultOracleLimit);

/// Class sizes |P_n(k)| for k = 0..n+offset by brute force.
std::vector<std::uint64_t> enumerate_class_sizes(std::size_t n, AdjacencyType t,
                                                 unsigned oracle_limit = kDefaultOracleLimit);

/// Lexicographic rank in [0, n!).
std::uint64_t rank(const Permutation& p);
Permutation unrank(std::size_t n, std::uint64_t r);

}  // namespace padj
