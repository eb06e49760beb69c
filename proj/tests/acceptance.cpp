// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "padj/blockmoves.hpp"
#include "padj/counting.hpp"
#include "padj/estimator.hpp"
#include "padj/numeric.hpp"
#include "published_counts.hpp"

using namespace padj;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects the first few failures for the report line.
class Findings {
public:
    void fail(const std::string& what) {
        ++count_;
        if (count_ <= 4) notes_ << (count_ > 1 ? "; " : "") << what;
    }
    bool ok() const { return count_ == 0; }
    std::string summary(const std::string& success) const {
        if (ok()) return success;
        std::ostringstream s;
        s << count_ << " failure(s): " << notes_.str();
        if (count_ > 4) s << "; ...";
        return s.str();
    }

private:
    std::size_t count_ = 0;
    std::ostringstream notes_;
};

Rational dec(const std::string& s) { return parse_decimal(s); }

// Printed two-decimal rows for n = 2..9.
const std::vector<std::string> kAveragesIrreducible{"1.00", "2.00", "2.33", "3.09", "3.68", "4.29", "4.91", "5.50"};
const std::vector<std::string> kExpectedMoves{"0.5", "1.16", "1.79", "2.42", "3.06", "3.68", "4.29", "4.90"};
// Predictions with the first six sizes exact, n = 10..16.
const std::vector<std::string> kPredAveragesLimit6{"6.07", "6.71", "7.37", "8.02", "8.69", "9.35", "10.01"};
const std::vector<std::string> kPredExpectedLimit6{"5.44", "6.07", "6.72", "7.37", "8.03", "8.69", "9.35"};

// Exact tables for prefix transpositions, shared by criteria 5, 6 and 8.
struct PrefixData {
    DistanceFamily family;
    double build_seconds;
};

const PrefixData& prefix_data() {
    static const PrefixData data = [] {
        const auto start = Clock::now();
        auto family = build_family(9, MoveKind::PrefixTransposition);
        return PrefixData{std::move(family), seconds_since(start)};
    }();
    return data;
}

Outcome count_tables_exact() {
    const auto start = Clock::now();
    Findings f;
    const std::pair<AdjacencyType, const testdata::CountRows*> cases[] = {
        {AdjacencyType::Type1, &testdata::kType1Counts},
        {AdjacencyType::Type2, &testdata::kType2Counts},
        {AdjacencyType::Type3, &testdata::kType2Counts},
        {AdjacencyType::Type4, &testdata::kType4Counts}};
    for (const auto& [t, rows] : cases) {
        const auto table = build_count_table(14, t);
        for (std::size_t r = 0; r < rows->size(); ++r) {
            const long n = static_cast<long>(r) + 2;
            const auto& printed = (*rows)[r];
            if (table.row(static_cast<std::size_t>(n)).size() != printed.size())
                f.fail(std::string(name(t)) + " row width n=" + std::to_string(n));
            for (std::size_t k = 0; k < printed.size(); ++k)
                if (table.at(n, static_cast<long>(k)) != BigInt(std::string(printed[k])))
                    f.fail(std::string(name(t)) + " f(" + std::to_string(n) + "," + std::to_string(k) + ")");
        }
    }
    if (build_count_table(14, AdjacencyType::Type1).at(14, 0) != BigInt("34361893981")) f.fail("type1 f(14,0)");
    if (build_count_table(14, AdjacencyType::Type2).at(14, 0) != BigInt("32071101049")) f.fail("type2 f(14,0)");
    if (build_count_table(14, AdjacencyType::Type4).at(14, 0) != BigInt("29943053061")) f.fail("type4 f(14,0)");
    const double secs = seconds_since(start);
    if (secs >= 1.0) f.fail("runtime " + std::to_string(secs) + " s");
    return {f.ok(), f.summary("all printed entries for 2 <= n <= 14 match, four types")};
}

Outcome oracle_equality() {
    const auto start = Clock::now();
    Findings f;
    for (auto t : kAllAdjacencyTypes) {
        const auto table = build_count_table(8, t);
        for (std::size_t n = 1; n <= 8; ++n) {
            const auto sizes = enumerate_class_sizes(n, t);
            auto row = table.row(n);
            if (row.size() != sizes.size()) f.fail(std::string(name(t)) + " width n=" + std::to_string(n));
            for (std::size_t k = 0; k < sizes.size() && k < row.size(); ++k)
                if (row[k] != sizes[k])
                    f.fail(std::string(name(t)) + " f(" + std::to_string(n) + "," + std::to_string(k) + ")");
            if (table.row_sum(n) != factorial(static_cast<unsigned>(n)))
                f.fail(std::string(name(t)) + " row sum n=" + std::to_string(n));
        }
    }
    const double secs = seconds_since(start);
    if (secs >= 120.0) f.fail("runtime " + std::to_string(secs) + " s");
    return {f.ok(), f.summary("recurrences equal enumeration for n <= 8, rows sum to n!")};
}

Outcome closed_forms() {
    const auto start = Clock::now();
    Findings f;
    const auto t1 = build_count_table(14, AdjacencyType::Type1);
    const auto t2 = build_count_table(14, AdjacencyType::Type2);
    for (std::size_t n = 1; n <= 14; ++n) {
        for (std::size_t k = 0; k < n; ++k)
            if (tanny_count(n, k) != t1.at(static_cast<long>(n), static_cast<long>(k)))
                f.fail("tanny (" + std::to_string(n) + "," + std::to_string(k) + ")");
        if (n >= 2 && whitworth_zero_count(n) != t2.at(static_cast<long>(n), 0))
            f.fail("whitworth n=" + std::to_string(n));
    }
    const double secs = seconds_since(start);
    if (secs >= 1.0) f.fail("runtime " + std::to_string(secs) + " s");
    return {f.ok(), f.summary("closed forms agree for n <= 14")};
}

Outcome copies_structure() {
    Findings f;
    for (auto t : kAllAdjacencyTypes) {
        const auto table = build_count_table(14, t);
        for (unsigned n = 2; n <= 14; ++n)
            for (unsigned k = 2; k <= n; ++k) {
                const std::string where =
                    std::string(name(t)) + " (" + std::to_string(n) + "," + std::to_string(k) + ")";
                const BigInt& whole = table.at(n, n - k);
                const BigInt& base = table.at(k, 0);
                if (base == 0 || whole % base != 0) {
                    f.fail("divisibility " + where);
                    continue;
                }
                const BigInt c = copies_count(table, n, k).copies;
                if (c * base != whole) f.fail("product " + where);
                if (t == AdjacencyType::Type1 && c != binomial(n - 1, k - 1)) f.fail("multiplicity " + where);
                if (t == AdjacencyType::Type2) {
                    BigInt sum = 0;
                    for (unsigned i = 1; i <= n - k + 1; ++i) sum += binomial(n - i, k - 1);
                    if (c != sum) f.fail("multiplicity " + where);
                }
            }
    }
    return {f.ok(), f.summary("divisibility and multiplicities hold for 2 <= k <= n <= 14")};
}

Outcome exact_sorting_averages() {
    const auto& data = prefix_data();
    Findings f;
    const Rational tol = dec("0.005");
    for (std::size_t n = 2; n <= 9; ++n) {
        const auto& table = data.family.table(n);
        const Rational avg = average_moves_zero(table);
        const Rational e = expected_moves_exact(table);
        if (!within(avg, dec(kAveragesIrreducible[n - 2]), tol))
            f.fail("avg n=" + std::to_string(n) + " " + format_fixed(avg, 4) + " vs " + kAveragesIrreducible[n - 2]);
        if (!within(e, dec(kExpectedMoves[n - 2]), tol))
            f.fail("E n=" + std::to_string(n) + " " + format_fixed(e, 4) + " vs " + kExpectedMoves[n - 2]);
    }
    // Build time covers every size up to 9 on one worker.
    if (data.build_seconds > 150.0) f.fail("runtime " + std::to_string(data.build_seconds) + " s");
    return {f.ok(), f.summary("both computed rows within 0.005 for n = 2..9")};
}

Outcome decomposition_identity() {
    const auto& family = prefix_data().family;
    const auto zero = family.zero_averages();
    const auto counts = build_count_table(8, AdjacencyType::Type2);
    Findings f;
    for (std::size_t n = 2; n <= 8; ++n)
        if (expected_moves_exact(family.table(n)) != weighted_by_reduced_size(counts, n, zero))
            f.fail("n=" + std::to_string(n));
    return {f.ok(), f.summary("exact rational equality for n <= 8")};
}

Outcome reduction_invariance() {
    Findings f;
    std::uint64_t checked = 0;
    for (auto kind : {MoveKind::PrefixTransposition, MoveKind::Transposition}) {
        const auto family = build_family(7, kind);
        for (std::size_t n = 1; n <= 7; ++n) {
            const auto report = reduction_invariance_check(family, n);
            checked += report.checked;
            for (const auto& v : report.violations)
                f.fail(std::string(name(kind)) + " " + v.permutation.to_string() + " d=" +
                       std::to_string(v.distance) + " reduced " + v.reduced.to_string() + " d=" +
                       std::to_string(v.reduced_distance));
        }
    }
    return {f.ok(), f.summary(std::to_string(checked) + " permutations checked, no violations")};
}

Outcome model_predictions() {
    const auto exact = prefix_data().family.zero_averages();
    const auto start = Clock::now();
    Findings f;
    const Rational tol = dec("0.05");
    const auto counts = build_count_table(16, AdjacencyType::Type2);

    const auto m8 = move_count_model(MoveKind::PrefixTransposition, 8, exact, 16);
    const auto e8 = expected_value_model(m8, counts);
    if (!within(m8.base[9], dec("5.47"), tol)) f.fail("limit 8 base[9]=" + format_fixed(m8.base[9], 3));
    if (!within(e8[9], dec("4.89"), tol)) f.fail("limit 8 E9=" + format_fixed(e8[9], 3));

    const auto m6 = move_count_model(MoveKind::PrefixTransposition, 6, exact, 16);
    const auto e6 = expected_value_model(m6, counts);
    for (std::size_t n = 10; n <= 16; ++n) {
        if (!within(m6.base[n], dec(kPredAveragesLimit6[n - 10]), tol))
            f.fail("limit 6 base[" + std::to_string(n) + "]=" + format_fixed(m6.base[n], 3));
        if (!within(e6[n], dec(kPredExpectedLimit6[n - 10]), tol))
            f.fail("limit 6 E" + std::to_string(n) + "=" + format_fixed(e6[n], 3));
    }
    const double secs = seconds_since(start);
    if (secs >= 1.0) f.fail("runtime " + std::to_string(secs) + " s");
    return {f.ok(), f.summary("base[9]=" + format_fixed(m8.base[9], 2) + ", E9=" + format_fixed(e8[9], 2) +
                              ", limit-6 cells n=10..16 within 0.05")};
}

Outcome double_probability_gap() {
    Findings f;
    const Rational p8 = empirical_double_probability(8);
    const Rational p9 = empirical_double_probability(9);
    if (!within(p8, sigma(8), dec("0.05"))) f.fail("n=8 gap " + format_fixed(p8 - sigma(8), 4));
    if (!within(p9, sigma(9), dec("0.04"))) f.fail("n=9 gap " + format_fixed(p9 - sigma(9), 4));
    return {f.ok(), f.summary("gap " + format_fixed(p8 - sigma(8), 4) + " at n=8, " +
                              format_fixed(p9 - sigma(9), 4) + " at n=9")};
}

// Bracket e by its series; the tail after term m is below 2/(m+1)!.
struct EBounds {
    Rational lo;
    Rational hi;
};

EBounds e_bounds() {
    Rational sum = 0;
    const unsigned m = 90;
    for (unsigned j = 0; j <= m; ++j) sum += Rational(BigInt(1), factorial(j));
    return {sum, sum + Rational(BigInt(2), factorial(m + 1))};
}

// -1, 0, +1 for x versus 1/e; throws if the bracket is too coarse to decide.
int compare_to_inverse_e(const Rational& x, const EBounds& e) {
    if (x * e.lo > 1) return 1;
    if (x * e.hi < 1) return -1;
    throw std::runtime_error("1/e bracket too coarse");
}

Outcome irreducible_fraction_bounds() {
    Findings f;
    const auto e = e_bounds();
    const std::size_t top = 50;
    const auto t1 = build_count_table(top, AdjacencyType::Type1);
    const auto t2 = build_count_table(top, AdjacencyType::Type2);
    const auto t3 = build_count_table(top, AdjacencyType::Type3);
    const auto t4 = build_count_table(top, AdjacencyType::Type4);
    for (std::size_t n = 1; n <= top; ++n) {
        const std::string at = " n=" + std::to_string(n);
        if (compare_to_inverse_e(irreducible_fraction(t1, n), e) <= 0) f.fail("type1 not above 1/e" + at);
        if (compare_to_inverse_e(irreducible_fraction(t2, n), e) > 0) f.fail("type2 above 1/e" + at);
        if (compare_to_inverse_e(irreducible_fraction(t3, n), e) > 0) f.fail("type3 above 1/e" + at);
        if (compare_to_inverse_e(irreducible_fraction(t4, n), e) >= 0) f.fail("type4 not below 1/e" + at);
    }
    if (irreducible_fraction(t4, 20) < dec("0.34056")) f.fail("type4 n=20 below 0.34056");
    if (irreducible_fraction(t4, 50) < dec("0.35688")) f.fail("type4 n=50 below 0.35688");
    return {f.ok(), f.summary("all four inequalities hold for n <= 50")};
}

Outcome single_always_available() {
    Findings f;
    std::uint64_t checked = 0;
    for (auto kind : kAllMoveKinds) {
        const auto t = paired_type(kind);
        for (std::size_t n = 2; n <= 8; ++n) {
            const auto moves = generate_moves(n, kind);
            for (const auto& p : enumerate_class(n, 0, t)) {
                ++checked;
                bool found = false;
                for (const auto& m : moves)
                    if (adjacency_delta(p, m, t) >= 1) {
                        found = true;
                        break;
                    }
                if (!found) f.fail(std::string(name(kind)) + " " + p.to_string());
            }
        }
    }
    return {f.ok(), f.summary(std::to_string(checked) + " irreducible permutations each admit a single")};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 count tables exact", count_tables_exact},
        {"2 oracle equality", oracle_equality},
        {"3 closed-form cross-checks", closed_forms},
        {"4 copy multiplicities", copies_structure},
        {"5 exact sorting averages", exact_sorting_averages},
        {"6 decomposition identity", decomposition_identity},
        {"7 reduction invariance", reduction_invariance},
        {"8 model predictions", model_predictions},
        {"9 double probability gap", double_probability_gap},
        {"10 irreducible fraction bounds", irreducible_fraction_bounds},
        {"11 single move always available", single_always_available},
    };
    int failures = 0;
    for (const auto& [label, run] : criteria) {
        const auto start = Clock::now();
        Outcome out;
        try {
            out = run();
        } catch (const std::exception& ex) {
            out = {false, std::string("exception: ") + ex.what()};
        }
        if (!out.pass) ++failures;
        std::printf("[%s] %s: %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", label.c_str(), out.detail.c_str(),
                    seconds_since(start));
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
