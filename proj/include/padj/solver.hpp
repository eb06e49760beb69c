#pragma once

#include <vector>

#include "padj/blockmoves.hpp"

namespace padj {

/// Largest size accepted by the iterative-deepening solver.
inline constexpr unsigned kMaxSolverSize = 12;

struct Solution {
    std::vector<BlockMove> moves;

    std::size_t length() const { return moves.size(); }
};

/// Breakpoints under the paired type divided (rounding up) by the most
/// adjacencies one move of `kind` can create.
unsigned breakpoint_lower_bound(const Permutation& p, MoveKind kind);

/// Walks down a complete distance table to the identity.
Solution solve_with_table(const Permutation& p, const DistanceTable& table);

/// Iterative-deepening search bounded by breakpoint_lower_bound.
Solution solve_iddfs(const Permutation& p, MoveKind kind);

/// Applies the moves in order.
Permutation replay(const Permutation& p, const std::vector<BlockMove>& moves);

}  // namespace padj
