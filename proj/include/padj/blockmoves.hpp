#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string_view>
#include <vector>

#include "padj/counting.hpp"
#include "padj/numeric.hpp"
#include "padj/permutation.hpp"

namespace padj {

/// Largest n for which a full distance table is built by default.
inline constexpr unsigned kDefaultSearchLimit = 9;
/// Hard ceiling on full distance tables (n! bytes).
inline constexpr unsigned kMaxSearchLimit = 10;

enum class MoveKind { Transposition, PrefixTransposition, SuffixTransposition };

inline constexpr MoveKind kAllMoveKinds[] = {
    MoveKind::Transposition, MoveKind::PrefixTransposition, MoveKind::SuffixTransposition};

/// The adjacency convention whose adjacencies a move kind never needs to break.
constexpr AdjacencyType paired_type(MoveKind kind) {
    switch (kind) {
        case MoveKind::Transposition: return AdjacencyType::Type4;
        case MoveKind::PrefixTransposition: return AdjacencyType::Type2;
        case MoveKind::SuffixTransposition: return AdjacencyType::Type3;
    }
    return AdjacencyType::Type1;
}

/// "t", "pt", "st".
std::string_view name(MoveKind kind);
MoveKind parse_move_kind(std::string_view text);

/// Exchanges the adjacent segments [i, j-1] and [j, k-1] (1-based positions,
/// 1 <= i < j < k <= n+1).
struct BlockMove {
    int i;
    int j;
    int k;

    auto operator<=>(const BlockMove&) const = default;
};

/// The move that undoes `m`.
constexpr BlockMove inverse(BlockMove m) { return {m.i, m.i + (m.k - m.j), m.k}; }

bool is_valid(BlockMove m, std::size_t n, MoveKind kind);

/// All moves of `kind` on size n, ordered by (i, j, k).
std::vector<BlockMove> generate_moves(std::size_t n, MoveKind kind);

/// Throws input_error if the cut points do not fit p.
Permutation apply_move(const Permutation& p, BlockMove m);

/// Change in adjacency count under t caused by applying m.
int adjacency_delta(const Permutation& p, BlockMove m, AdjacencyType t);

/// Whether some prefix transposition creates two Type2 adjacencies, decided
/// from the positions of pi_1 - 1 and its successor without trying moves.
/// Requires p irreducible under Type2.
bool double_feasible_prefix(const Permutation& p);

/// Exact distance from the identity for every permutation of size n, indexed
/// by lexicographic rank.
class DistanceTable {
public:
    DistanceTable(std::size_t n, MoveKind kind, std::vector<std::uint8_t> dist);

    std::size_t size() const { return n_; }
    MoveKind kind() const { return kind_; }
    std::uint8_t at(std::uint64_t r) const { return dist_.at(r); }
    std::uint8_t at(const Permutation& p) const;
    const std::vector<std::uint8_t>& distances() const { return dist_; }
    std::uint8_t diameter() const { return diameter_; }

    /// Number of permutations at each distance 0..diameter.
    std::vector<std::uint64_t> layer_counts() const;

private:
    std::size_t n_;
    MoveKind kind_;
    std::vector<std::uint8_t> dist_;
    std::uint8_t diameter_ = 0;
};

/// Layer-synchronous breadth-first search from the identity. Workers split
/// each layer by rank range; claims are idempotent so the result does not
/// depend on scheduling.
DistanceTable bfs_distances(std::size_t n, MoveKind kind, unsigned search_limit = kDefaultSearchLimit,
                            unsigned workers = 1);

/// Per-class summary of a distance table under one adjacency type.
struct ClassStats {
    std::size_t k;
    std::uint64_t count;
    std::uint64_t total_distance;

    Rational average() const;
};

std::vector<ClassStats> class_statistics(const DistanceTable& table, AdjacencyType t);

/// Mean distance over P_n(0) under t (the paired type by default).
Rational average_moves_zero(const DistanceTable& table);
Rational average_moves_zero(const DistanceTable& table, AdjacencyType t);

/// Mean distance over all of P_n.
Rational expected_moves_exact(const DistanceTable& table);

/// Distance tables for sizes 0..max_n of one move kind. Size 0 is the
/// reduction of an identity and has distance 0.
class DistanceFamily {
public:
    DistanceFamily(MoveKind kind, std::vector<DistanceTable> tables);

    MoveKind kind() const { return kind_; }
    std::size_t max_n() const { return tables_.size(); }
    const DistanceTable& table(std::size_t n) const;
    std::uint8_t distance(const Permutation& p) const;

    /// average_moves_zero for sizes 0..max_n, zero for sizes without
    /// irreducible members (0 and 1).
    std::vector<Rational> zero_averages() const;

private:
    MoveKind kind_;
    std::vector<DistanceTable> tables_;  // tables_[n - 1]
};

DistanceFamily build_family(std::size_t max_n, MoveKind kind, unsigned search_limit = kDefaultSearchLimit,
                            unsigned workers = 1);

struct InvarianceViolation {
    Permutation permutation;
    Permutation reduced;
    unsigned distance;
    unsigned reduced_distance;
};

struct InvarianceReport {
    std::size_t n;
    MoveKind kind;
    AdjacencyType type;
    std::uint64_t checked = 0;
    std::vector<InvarianceViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// Compares dist[p] with dist[reduce(p, t)] for every p of size n. The
/// family must cover size n.
InvarianceReport reduction_invariance_check(const DistanceFamily& family, std::size_t n,
                                            AdjacencyType t);
InvarianceReport reduction_invariance_check(const DistanceFamily& family, std::size_t n);

}  // namespace padj
