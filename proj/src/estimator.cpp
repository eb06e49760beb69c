#include "padj/estimator.hpp"

#include <string>

#include "padj/errors.hpp"

namespace padj {

std::string_view name(PsiMode mode) { return mode == PsiMode::Limiting ? "limiting" : "sized"; }

PsiMode parse_psi_mode(std::string_view text) {
    if (text == "limiting") return PsiMode::Limiting;
    if (text == "sized") return PsiMode::Sized;
    throw input_error("unknown psi mode: " + std::string(text));
}

Rational sigma(std::size_t n) {
    if (n < 3) throw input_error("sigma: n must be at least 3, got " + std::to_string(n));
    const BigInt nn = n;
    return Rational(1, 2) - Rational(BigInt(2), nn * (nn - 1));
}

Rational psi(std::size_t n, PsiMode mode) {
    if (mode == PsiMode::Limiting) return Rational(3, 2);
    return 1 + sigma(n);
}

Rational empirical_double_probability(std::size_t n, unsigned oracle_limit) {
    const auto irreducible = enumerate_class(n, 0, AdjacencyType::Type2, oracle_limit);
    if (irreducible.empty()) throw undefined_error("no Type2-irreducible permutations of size " + std::to_string(n));
    std::uint64_t doubles = 0;
    for (const auto& p : irreducible)
        if (double_feasible_prefix(p)) ++doubles;
    return Rational(BigInt(doubles), BigInt(irreducible.size()));
}

EstimateModel move_count_model(MoveKind kind, std::size_t limit, std::span<const Rational> exact,
                               std::size_t n_max, PsiMode mode) {
    if (kind == MoveKind::Transposition)
        throw input_error("move_count_model: the double probability is only modelled for prefix and suffix moves");
    if (limit < 3) throw input_error("move_count_model: limit must be at least 3");
    if (exact.size() < limit + 1) throw input_error("move_count_model: exact averages must cover 0..limit");
    if (n_max < limit) throw input_error("move_count_model: n_max below limit");

    EstimateModel model{kind, limit, mode, std::vector<Rational>(exact.begin(), exact.begin() + limit + 1)};
    for (std::size_t i = limit + 1; i <= n_max; ++i) {
        const Rational step = psi(i, mode);
        const Rational j = Rational(BigInt(i)) - step;
        const BigInt lo = floor(j);
        const BigInt hi = ceil(j);
        const auto& base_lo = model.base[lo.convert_to<std::size_t>()];
        const auto& base_hi = model.base[hi.convert_to<std::size_t>()];
        // Linear interpolation between the neighbouring integer sizes; an
        // integral j would zero both weights, so it reads base[j] directly.
        const Rational x = lo == hi ? Rational(1 + base_lo)
                                    : Rational(1 + (j - Rational(lo)) * base_hi + (Rational(hi) - j) * base_lo);
        const Rational y = Rational(BigInt(i - 1)) / step;
        model.base.push_back((x + y) / 2);
    }
    return model;
}

std::vector<Rational> expected_value_model(const EstimateModel& model, const CountTable& table) {
    if (table.type() != paired_type(model.kind))
        throw input_error("expected_value_model: count table type does not match move kind");
    if (table.n_max() < model.n_max()) throw input_error("expected_value_model: count table too small");
    std::vector<Rational> out(model.n_max() + 1, Rational(0));
    for (std::size_t n = 2; n <= model.n_max(); ++n) out[n] = weighted_by_reduced_size(table, n, model.base);
    return out;
}

}  // namespace padj
