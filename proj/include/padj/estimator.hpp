#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "padj/blockmoves.hpp"
#include "padj/counting.hpp"
#include "padj/numeric.hpp"

namespace padj {

/// Limiting: psi = 3/2. Sized: psi(n) = 1 + sigma(n).
enum class PsiMode { Limiting, Sized };

std::string_view name(PsiMode mode);
PsiMode parse_psi_mode(std::string_view text);

/// Probability that a random irreducible permutation of size n admits a
/// prefix-transposition double: 1/2 - 2/(n(n-1)). Requires n >= 3.
Rational sigma(std::size_t n);

/// Expected adjacencies created per move.
Rational psi(std::size_t n, PsiMode mode);

/// Exact fraction of Type2-irreducible permutations of size n for which
/// double_feasible_prefix holds.
Rational empirical_double_probability(std::size_t n, unsigned oracle_limit = kDefaultOracleLimit);

/// Average moves to sort P_n(0), exact up to `limit` and predicted beyond.
struct EstimateModel {
    MoveKind kind;
    std::size_t limit;
    PsiMode psi_mode;
    std::vector<Rational> base;  // base[0..n_max]

    std::size_t n_max() const { return base.size() - 1; }
    bool is_predicted(std::size_t n) const { return n > limit; }
};

/// Extends `exact` (indexed 0..limit, exact[0] = exact[1] = 0) to n_max. Each
/// new size i averages two estimates: one move plus the interpolated base at
/// the fractional size i - psi, and (i - 1) / psi.
EstimateModel move_count_model(MoveKind kind, std::size_t limit, std::span<const Rational> exact,
                               std::size_t n_max, PsiMode mode = PsiMode::Limiting);

/// E(X_n) = sum_k f(n, k) / n! * base[n - k] for n = 0..model.n_max(); entries
/// 0 and 1 are zero. The table must use the move kind's paired type.
std::vector<Rational> expected_value_model(const EstimateModel& model, const CountTable& table);

}  // namespace padj
