#include "padj/solver.hpp"

#include <algorithm>

#include "padj/errors.hpp"

namespace padj {

unsigned breakpoint_lower_bound(const Permutation& p, MoveKind kind) {
    if (p.empty()) return 0;
    const AdjacencyType t = paired_type(kind);
    const long max_adj = static_cast<long>(p.size()) + offset(t);
    const long breakpoints = max_adj - static_cast<long>(count_adjacencies(p, t));
    const long gain = kind == MoveKind::Transposition ? 3 : 2;
    return static_cast<unsigned>((breakpoints + gain - 1) / gain);
}

Solution solve_with_table(const Permutation& p, const DistanceTable& table) {
    if (p.size() != table.size()) throw input_error("solve_with_table: size mismatch");
    const auto moves = generate_moves(p.size(), table.kind());
    Solution out;
    Permutation current = p;
    unsigned d = table.at(current);
    while (d > 0) {
        bool stepped = false;
        for (const auto& m : moves) {
            Permutation next = apply_move(current, m);
            if (table.at(next) + 1u == d) {
                out.moves.push_back(m);
                current = std::move(next);
                --d;
                stepped = true;
                break;
            }
        }
        if (!stepped) throw consistency_error("solve_with_table: no descending move from " + current.to_string());
    }
    return out;
}

namespace {

class DeepeningSearch {
public:
    DeepeningSearch(MoveKind kind, std::size_t n) : kind_(kind), moves_(generate_moves(n, kind)) {}

    bool search(const Permutation& p, unsigned budget, std::vector<BlockMove>& path) {
        if (p.is_identity()) return true;
        if (breakpoint_lower_bound(p, kind_) > budget) return false;
        for (const auto& m : moves_) {
            if (!path.empty() && inverse(path.back()) == m) continue;
            path.push_back(m);
            if (search(apply_move(p, m), budget - 1, path)) return true;
            path.pop_back();
        }
        return false;
    }

private:
    MoveKind kind_;
    std::vector<BlockMove> moves_;
};

}  // namespace

Solution solve_iddfs(const Permutation& p, MoveKind kind) {
    if (p.size() > kMaxSolverSize)
        throw resource_error("solver refused: size " + std::to_string(p.size()) + " exceeds " +
                             std::to_string(kMaxSolverSize));
    Solution out;
    if (p.size() < 2) return out;
    DeepeningSearch search(kind, p.size());
    for (unsigned budget = breakpoint_lower_bound(p, kind);; ++budget) {
        out.moves.clear();
        if (search.search(p, budget, out.moves)) return out;
    }
}

Permutation replay(const Permutation& p, const std::vector<BlockMove>& moves) {
    Permutation current = p;
    for (const auto& m : moves) current = apply_move(current, m);
    return current;
}

}  // namespace padj
