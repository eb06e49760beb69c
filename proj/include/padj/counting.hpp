#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "padj/numeric.hpp"
#include "padj/permutation.hpp"

namespace padj {

/// Triangular table f(n, k) = |P_n(k)| for one adjacency type, 1 <= n <= n_max,
/// 0 <= k <= n + offset. Entries outside that range read as zero.
class CountTable {
public:
    CountTable(AdjacencyType type, std::vector<std::vector<BigInt>> rows);

    AdjacencyType type() const { return type_; }
    std::size_t n_max() const { return rows_.size(); }

    /// f(n, k); zero for any (n, k) outside the table's shape.
    const BigInt& at(long n, long k) const;

    /// Row n as k = 0..n+offset.
    std::span<const BigInt> row(std::size_t n) const;

    BigInt row_sum(std::size_t n) const;

    /// Number of irreducible permutations of size m, including the size-0
    /// class that identities collapse to under types with sentinels.
    BigInt irreducible_count(std::size_t m) const;

private:
    AdjacencyType type_;
    std::vector<std::vector<BigInt>> rows_;  // rows_[n - 1]
};

/// D_0..D_{n_max}.
std::vector<BigInt> derangements(std::size_t n_max);

/// Fills f(n, k) by the insertion recurrences. Type1 uses the three-term
/// recurrence from f(2, .) = (1, 1). Types 2/3 seed n <= 4 from enumeration and
/// Type4 seeds n <= 3 with (1,0,0,1) and (1,4,0,0,1); all three then use the
/// six-term recurrence that tracks whether the current maximum sits last.
CountTable build_count_table(std::size_t n_max, AdjacencyType t);

/// C(n-1, k) * (D_{n-k} + D_{n-1-k}).
BigInt tanny_count(std::size_t n, std::size_t k);

/// n! * sum_{j=0..n} (-1)^j / j!, evaluated exactly.
BigInt whitworth_zero_count(std::size_t n);

/// f(n, 0) / n!.
Rational irreducible_fraction(const CountTable& table, std::size_t n);

/// Multiplicity of each irreducible permutation of size k inside P_n(n-k).
struct CopyCount {
    std::size_t n;
    std::size_t k;
    AdjacencyType type;
    BigInt copies;
};

/// Type1: C(n-1, k-1). Types 2/3: sum_{i=1..n-k+1} C(n-i, k-1). Type4: exact
/// quotient f(n, n-k) / f(k, 0), raising consistency_error if it does not divide.
CopyCount copies_count(const CountTable& table, std::size_t n, std::size_t k);

/// Number of distinct irreducible permutations that members of P_n reduce to.
BigInt vector_alphabet_size(const CountTable& table, std::size_t n);

/// The union-range formula sum_{k=1..n+offset} f(k, 0), kept for comparison
/// against vector_alphabet_size.
BigInt vector_alphabet_formula(const CountTable& table, std::size_t n);

/// sum_k f(n, k) / n! * values[max(n - k, 0)], with values indexed by reduced
/// size. Under Type4 the identity carries n + 1 adjacencies and still reduces
/// to size 0, hence the clamp.
Rational weighted_by_reduced_size(const CountTable& table, std::size_t n,
                                  std::span<const Rational> values);

}  // namespace padj
