#include "padj/counting.hpp"

#include <string>

#include "padj/errors.hpp"

namespace padj {

namespace {

const BigInt kZero = 0;

std::size_t row_width(std::size_t n, AdjacencyType t) {
    const long w = static_cast<long>(n) + offset(t) + 1;
    return w > 0 ? static_cast<std::size_t>(w) : 0;
}

std::vector<BigInt> to_row(const std::vector<std::uint64_t>& sizes) {
    return std::vector<BigInt>(sizes.begin(), sizes.end());
}

}  // namespace

CountTable::CountTable(AdjacencyType type, std::vector<std::vector<BigInt>> rows)
    : type_(type), rows_(std::move(rows)) {
    for (std::size_t n = 1; n <= rows_.size(); ++n)
        if (rows_[n - 1].size() != row_width(n, type_))
            throw input_error("CountTable: row " + std::to_string(n) + " has wrong width");
}

const BigInt& CountTable::at(long n, long k) const {
    if (n < 1 || static_cast<std::size_t>(n) > rows_.size() || k < 0) return kZero;
    const auto& r = rows_[static_cast<std::size_t>(n) - 1];
    if (static_cast<std::size_t>(k) >= r.size()) return kZero;
    return r[static_cast<std::size_t>(k)];
}

std::span<const BigInt> CountTable::row(std::size_t n) const {
    if (n < 1 || n > rows_.size())
        throw input_error("CountTable: row " + std::to_string(n) + " not in table");
    return rows_[n - 1];
}

BigInt CountTable::row_sum(std::size_t n) const {
    BigInt s = 0;
    for (const auto& v : row(n)) s += v;
    return s;
}

BigInt CountTable::irreducible_count(std::size_t m) const {
    if (m == 0) return type_ == AdjacencyType::Type1 ? 0 : 1;
    return at(static_cast<long>(m), 0);
}

std::vector<BigInt> derangements(std::size_t n_max) {
    std::vector<BigInt> d(n_max + 1);
    d[0] = 1;
    if (n_max >= 1) d[1] = 0;
    for (std::size_t n = 2; n <= n_max; ++n) d[n] = (n - 1) * (d[n - 1] + d[n - 2]);
    return d;
}

CountTable build_count_table(std::size_t n_max, AdjacencyType t) {
    if (n_max < 2) throw input_error("build_count_table: n_max must be at least 2");

    std::vector<std::vector<BigInt>> rows;
    switch (t) {
        case AdjacencyType::Type1:
            rows = {{1}, {1, 1}};
            break;
        case AdjacencyType::Type2:
        case AdjacencyType::Type3:
            for (std::size_t n = 1; n <= 4; ++n) rows.push_back(to_row(enumerate_class_sizes(n, t)));
            break;
        case AdjacencyType::Type4:
            rows = {{0, 0, 1}, {1, 0, 0, 1}, {1, 4, 0, 0, 1}};
            break;
    }
    if (rows.size() > n_max) rows.resize(n_max);

    auto f = [&rows](long n, long k) -> const BigInt& {
        if (n < 1 || n > static_cast<long>(rows.size()) || k < 0) return kZero;
        const auto& r = rows[static_cast<std::size_t>(n) - 1];
        return static_cast<std::size_t>(k) < r.size() ? r[static_cast<std::size_t>(k)] : kZero;
    };

    for (std::size_t n = rows.size() + 1; n <= n_max; ++n) {
        std::vector<BigInt> row(row_width(n, t));
        const long i = static_cast<long>(n);
        for (long j = 0; j < static_cast<long>(row.size()); ++j) {
            BigInt v;
            if (t == AdjacencyType::Type1) {
                // Insert n-1 into a member of P_{n-1}: after n-2 (creates one),
                // into an existing adjacency (breaks one), anywhere else (neutral).
                v = f(i - 1, j - 1) + (i - 1 - j) * f(i - 1, j) + (j + 1) * f(i - 1, j + 1);
            } else {
                // f(i-2, j-1) counts members of P_{i-1}(j) whose last symbol is the
                // maximum; those lose the trailing adjacency when i-1 is inserted.
                v = (f(i - 1, j) - f(i - 2, j - 1)) * (i - j - 2)
                  + (f(i - 1, j - 1) - f(i - 2, j - 2)) * 2 + f(i - 2, j - 2)
                  + (f(i - 1, j + 1) - f(i - 2, j)) * (j + 1) + f(i - 2, j) * (i - j - 1)
                  + f(i - 2, j + 1) * (j + 1);
            }
            if (v < 0)
                throw consistency_error("negative count at f(" + std::to_string(n) + "," +
                                        std::to_string(j) + ")");
            row[static_cast<std::size_t>(j)] = std::move(v);
        }
        rows.push_back(std::move(row));
    }
    return CountTable(t, std::move(rows));
}

BigInt tanny_count(std::size_t n, std::size_t k) {
    if (n < 1 || k > n - 1)
        throw input_error("tanny_count: need 0 <= k <= n-1, got n=" + std::to_string(n) +
                          " k=" + std::to_string(k));
    auto d = derangements(n);
    BigInt tail = n - k >= 1 ? d[n - 1 - k] : BigInt(0);
    return binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(k)) * (d[n - k] + tail);
}

BigInt whitworth_zero_count(std::size_t n) {
    if (n < 1) throw input_error("whitworth_zero_count: n must be positive");
    Rational partial = 0;
    BigInt fact = 1;
    for (std::size_t j = 0; j <= n; ++j) {
        if (j > 0) fact *= j;
        Rational term(BigInt(1), fact);
        partial += (j % 2 == 0) ? term : Rational(-term);
    }
    Rational scaled = partial * Rational(factorial(static_cast<unsigned>(n)));
    if (boost::multiprecision::denominator(scaled) != 1)
        throw consistency_error("whitworth_zero_count: non-integral result");
    return boost::multiprecision::numerator(scaled);
}

Rational irreducible_fraction(const CountTable& table, std::size_t n) {
    return Rational(table.at(static_cast<long>(n), 0), factorial(static_cast<unsigned>(n)));
}

CopyCount copies_count(const CountTable& table, std::size_t n, std::size_t k) {
    if (k < 1 || k > n || n > table.n_max())
        throw input_error("copies_count: need 1 <= k <= n <= n_max");
    const BigInt& base = table.at(static_cast<long>(k), 0);
    if (base == 0)
        throw input_error("copies_count: no irreducible permutations of size " + std::to_string(k));

    CopyCount out{n, k, table.type(), 0};
    const auto un = static_cast<unsigned>(n);
    const auto uk = static_cast<unsigned>(k);
    switch (table.type()) {
        case AdjacencyType::Type1:
            out.copies = binomial(un - 1, uk - 1);
            break;
        case AdjacencyType::Type2:
        case AdjacencyType::Type3:
            for (unsigned i = 1; i <= un - uk + 1; ++i) out.copies += binomial(un - i, uk - 1);
            break;
        case AdjacencyType::Type4: {
            const BigInt& whole = table.at(static_cast<long>(n), static_cast<long>(n - k));
            if (whole % base != 0)
                throw consistency_error("copies_count: f(" + std::to_string(n) + "," +
                                        std::to_string(n - k) + ") not divisible by f(" +
                                        std::to_string(k) + ",0)");
            out.copies = whole / base;
            break;
        }
    }
    return out;
}

BigInt vector_alphabet_size(const CountTable& table, std::size_t n) {
    if (n > table.n_max()) throw input_error("vector_alphabet_size: table too small");
    BigInt total = 0;
    for (std::size_t m = 0; m <= n; ++m) total += table.irreducible_count(m);
    return total;
}

BigInt vector_alphabet_formula(const CountTable& table, std::size_t n) {
    if (n > table.n_max()) throw input_error("vector_alphabet_formula: table too small");
    BigInt total = 0;
    const long top = static_cast<long>(n) + offset(table.type());
    for (long k = 1; k <= top; ++k) total += table.at(k, 0);
    return total;
}

Rational weighted_by_reduced_size(const CountTable& table, std::size_t n,
                                  std::span<const Rational> values) {
    if (n < 1 || n > table.n_max()) throw input_error("weighted_by_reduced_size: n not in table");
    if (values.size() < n + 1) throw input_error("weighted_by_reduced_size: values too short");
    Rational sum = 0;
    auto r = table.row(n);
    for (std::size_t k = 0; k < r.size(); ++k) {
        if (r[k] == 0) continue;
        const std::size_t reduced = k >= n ? 0 : n - k;
        sum += Rational(r[k]) * values[reduced];
    }
    return sum / Rational(factorial(static_cast<unsigned>(n)));
}

}  // namespace padj
