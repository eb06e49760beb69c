#include "padj/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "padj/errors.hpp"

namespace padj {

std::string_view name(AdjacencyType t) {
    switch (t) {
        case AdjacencyType::Type1: return "type1";
        case AdjacencyType::Type2: return "type2";
        case AdjacencyType::Type3: return "type3";
        case AdjacencyType::Type4: return "type4";
    }
    return "type?";
}

AdjacencyType parse_adjacency_type(std::string_view text) {
    if (text.starts_with("type")) text.remove_prefix(4);
    if (text == "1") return AdjacencyType::Type1;
    if (text == "2") return AdjacencyType::Type2;
    if (text == "3") return AdjacencyType::Type3;
    if (text == "4") return AdjacencyType::Type4;
    throw input_error("unknown adjacency type: " + std::string(text));
}

Permutation::Permutation(std::vector<int> symbols) : symbols_(std::move(symbols)) {
    std::vector<bool> seen(symbols_.size(), false);
    for (int s : symbols_) {
        if (s < 0 || static_cast<std::size_t>(s) >= symbols_.size())
            throw input_error("symbol " + std::to_string(s) + " out of range for size " +
                              std::to_string(symbols_.size()));
        if (seen[s]) throw input_error("duplicate symbol " + std::to_string(s));
        seen[s] = true;
    }
}

Permutation::Permutation(std::initializer_list<int> symbols)
    : Permutation(std::vector<int>(symbols)) {}

Permutation Permutation::identity(std::size_t n) {
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 0);
    return Permutation(std::move(s));
}

Permutation Permutation::reversed(std::size_t n) {
    std::vector<int> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<int>(n - 1 - i);
    return Permutation(std::move(s));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i] != static_cast<int>(i)) return false;
    return true;
}

std::size_t Permutation::position_of(int symbol) const {
    auto it = std::find(symbols_.begin(), symbols_.end(), symbol);
    if (it == symbols_.end()) throw input_error("symbol not present: " + std::to_string(symbol));
    return static_cast<std::size_t>(it - symbols_.begin());
}

std::string Permutation::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(symbols_[i]);
    }
    return out;
}

Permutation parse_permutation(std::string_view text) {
    std::vector<int> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view field = text.substr(start, end - start);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            throw input_error("bad permutation literal: \"" + std::string(text) + "\"");
        values.push_back(v);
        start = end + 1;
    }
    return Permutation(std::move(values));
}

namespace {

// Symbols with the sentinels of t attached.
std::vector<int> extended(std::span<const int> s, AdjacencyType t) {
    std::vector<int> out;
    out.reserve(s.size() + 2);
    if (has_leading_sentinel(t)) out.push_back(-1);
    out.insert(out.end(), s.begin(), s.end());
    if (has_trailing_sentinel(t)) out.push_back(static_cast<int>(s.size()));
    return out;
}

std::size_t count_in(std::span<const int> s, AdjacencyType t) {
    if (s.empty()) return 0;  // the sorted remnant; its sentinels do not count
    std::vector<int> e = extended(s, t);
    std::size_t k = 0;
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
        if (e[i + 1] == e[i] + 1) ++k;
    return k;
}

}  // namespace

std::size_t count_adjacencies(const Permutation& p, AdjacencyType t) {
    return count_in(p.symbols(), t);
}

Permutation mirror_canonicalize(std::span<const int> values) {
    std::vector<int> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw input_error("mirror_canonicalize: duplicate values");
    std::vector<int> out;
    out.reserve(values.size());
    for (int v : values)
        out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                                       sorted.begin()));
    return Permutation(std::move(out));
}

Permutation reduce(const Permutation& p, AdjacencyType t) {
    std::vector<int> current(p.symbols().begin(), p.symbols().end());
    while (count_in(current, t) > 0) {
        const int n = static_cast<int>(current.size());
        std::vector<int> e = extended(current, t);
        std::vector<int> kept;
        std::size_t i = 0;
        while (i < e.size()) {
            std::size_t j = i;
            while (j + 1 < e.size() && e[j + 1] == e[j] + 1) ++j;
            bool anchored = (has_leading_sentinel(t) && e[i] == -1) ||
                            (has_trailing_sentinel(t) && e[j] == n);
            if (!anchored) kept.push_back(e[i]);
            i = j + 1;
        }
        Permutation relabeled = mirror_canonicalize(kept);
        current.assign(relabeled.symbols().begin(), relabeled.symbols().end());
    }
    return Permutation(std::move(current));
}

void for_each_permutation(std::size_t n, const std::function<void(const Permutation&)>& fn) {
    std::vector<int> s(n);
    std::iota(s.begin(), s.end(), 0);
    do {
        fn(Permutation(s));
    } while (std::next_permutation(s.begin(), s.end()));
}

namespace {

void check_oracle_limit(std::size_t n, unsigned oracle_limit) {
    if (n > oracle_limit)
        throw resource_error("enumeration of P_" + std::to_string(n) +
                             " refused: above oracle limit " + std::to_string(oracle_limit));
}

}  // namespace

std::vector<Permutation> enumerate_class(std::size_t n, std::size_t k, AdjacencyType t,
                                         unsigned oracle_limit) {
    check_oracle_limit(n, oracle_limit);
    std::vector<Permutation> out;
    for_each_permutation(n, [&](const Permutation& p) {
        if (count_adjacencies(p, t) == k) out.push_back(p);
    });
    return out;
}

std::vector<std::uint64_t> enumerate_class_sizes(std::size_t n, AdjacencyType t,
                                                 unsigned oracle_limit) {
    check_oracle_limit(n, oracle_limit);
    const long width = static_cast<long>(n) + offset(t) + 1;
    std::vector<std::uint64_t> sizes(width > 0 ? width : 0, 0);
    for_each_permutation(n, [&](const Permutation& p) { ++sizes.at(count_adjacencies(p, t)); });
    return sizes;
}

std::uint64_t rank(const Permutation& p) {
    const std::size_t n = p.size();
    if (n > kMaxRankable) throw input_error("rank: size exceeds 64-bit factorial range");
    std::uint64_t r = 0;
    std::uint64_t used = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const int s = p[i];
        const std::uint64_t smaller_unused =
            static_cast<std::uint64_t>(s) -
            static_cast<std::uint64_t>(__builtin_popcountll(used & ((1ULL << s) - 1)));
        r = r * (n - i) + smaller_unused;
        used |= 1ULL << s;
    }
    return r;
}

Permutation unrank(std::size_t n, std::uint64_t r) {
    if (n > kMaxRankable) throw input_error("unrank: size exceeds 64-bit factorial range");
    std::uint64_t total = 1;
    for (std::size_t i = 2; i <= n; ++i) total *= i;
    if (r >= total)
        throw input_error("unrank: rank " + std::to_string(r) + " out of range for size " +
                          std::to_string(n));
    std::vector<int> digits(n);
    for (std::size_t i = n; i-- > 0;) {
        const std::uint64_t base = n - i;
        digits[i] = static_cast<int>(r % base);
        r /= base;
    }
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.push_back(pool[digits[i]]);
        pool.erase(pool.begin() + digits[i]);
    }
    return Permutation(std::move(out));
}

}  // namespace padj
