#include "padj/blockmoves.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <numeric>
#include <thread>

#include "padj/errors.hpp"

namespace padj {

std::string_view name(MoveKind kind) {
    switch (kind) {
        case MoveKind::Transposition: return "t";
        case MoveKind::PrefixTransposition: return "pt";
        case MoveKind::SuffixTransposition: return "st";
    }
    return "?";
}

MoveKind parse_move_kind(std::string_view text) {
    if (text == "t" || text == "transposition") return MoveKind::Transposition;
    if (text == "pt" || text == "prefix") return MoveKind::PrefixTransposition;
    if (text == "st" || text == "suffix") return MoveKind::SuffixTransposition;
    throw input_error("unknown move kind: " + std::string(text));
}

bool is_valid(BlockMove m, std::size_t n, MoveKind kind) {
    const int end = static_cast<int>(n) + 1;
    if (!(1 <= m.i && m.i < m.j && m.j < m.k && m.k <= end)) return false;
    if (kind == MoveKind::PrefixTransposition && m.i != 1) return false;
    if (kind == MoveKind::SuffixTransposition && m.k != end) return false;
    return true;
}

std::vector<BlockMove> generate_moves(std::size_t n, MoveKind kind) {
    std::vector<BlockMove> out;
    const int end = static_cast<int>(n) + 1;
    for (int i = 1; i <= end; ++i)
        for (int j = i + 1; j <= end; ++j)
            for (int k = j + 1; k <= end; ++k)
                if (is_valid({i, j, k}, n, kind)) out.push_back({i, j, k});
    return out;
}

Permutation apply_move(const Permutation& p, BlockMove m) {
    if (!is_valid(m, p.size(), MoveKind::Transposition))
        throw input_error("apply_move: cut points (" + std::to_string(m.i) + "," +
                          std::to_string(m.j) + "," + std::to_string(m.k) +
                          ") invalid for size " + std::to_string(p.size()));
    auto s = p.symbols();
    std::vector<int> out(s.begin(), s.end());
    std::rotate(out.begin() + (m.i - 1), out.begin() + (m.j - 1), out.begin() + (m.k - 1));
    return Permutation(std::move(out));
}

int adjacency_delta(const Permutation& p, BlockMove m, AdjacencyType t) {
    return static_cast<int>(count_adjacencies(apply_move(p, m), t)) -
           static_cast<int>(count_adjacencies(p, t));
}

bool double_feasible_prefix(const Permutation& p) {
    if (count_adjacencies(p, AdjacencyType::Type2) != 0)
        throw input_error("double_feasible_prefix: " + p.to_string() + " is reducible under type2");
    const int n = static_cast<int>(p.size());
    const int first = p[0];
    if (first == 0) return false;
    // Moving the prefix up to (but excluding) the successor `a` of first-1
    // joins first-1|first on the left; the right end joins iff a-1 closes the
    // moved prefix, i.e. a-1 lies strictly before first-1. When first-1 is
    // last, its successor is the sentinel n and n-1 is never last.
    const auto pos = static_cast<int>(p.position_of(first - 1));
    const int successor = pos + 1 < n ? p[static_cast<std::size_t>(pos) + 1] : n;
    if (successor == 0) return false;
    return static_cast<int>(p.position_of(successor - 1)) < pos;
}

namespace {

using Packed = std::array<std::uint8_t, 16>;

std::uint64_t packed_rank(const Packed& s, std::size_t n) {
    std::uint64_t r = 0;
    std::uint32_t used = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint32_t v = s[i];
        const auto smaller_unused = v - static_cast<std::uint32_t>(__builtin_popcount(used & ((1u << v) - 1)));
        r = r * (n - i) + smaller_unused;
        used |= 1u << v;
    }
    return r;
}

Packed packed_unrank(std::size_t n, std::uint64_t r) {
    std::array<std::uint8_t, 16> digits{};
    for (std::size_t i = n; i-- > 0;) {
        const std::uint64_t base = n - i;
        digits[i] = static_cast<std::uint8_t>(r % base);
        r /= base;
    }
    Packed pool{};
    for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<std::uint8_t>(i);
    std::size_t remaining = n;
    Packed out{};
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t d = digits[i];
        out[i] = pool[d];
        for (std::size_t q = d; q + 1 < remaining; ++q) pool[q] = pool[q + 1];
        --remaining;
    }
    return out;
}

Packed packed_apply(const Packed& s, BlockMove m) {
    Packed out = s;
    std::rotate(out.begin() + (m.i - 1), out.begin() + (m.j - 1), out.begin() + (m.k - 1));
    return out;
}

constexpr std::uint8_t kUnvisited = 0xFF;

std::uint64_t factorial64(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

DistanceTable::DistanceTable(std::size_t n, MoveKind kind, std::vector<std::uint8_t> dist)
    : n_(n), kind_(kind), dist_(std::move(dist)) {
    if (n_ < 1 || n_ > kMaxRankable || dist_.size() != factorial64(n_))
        throw input_error("DistanceTable: distance array does not match size " + std::to_string(n_));
    for (auto d : dist_) {
        if (d == kUnvisited) throw input_error("DistanceTable: unreached permutation");
        diameter_ = std::max(diameter_, d);
    }
}

std::uint8_t DistanceTable::at(const Permutation& p) const {
    if (p.size() != n_)
        throw input_error("DistanceTable: permutation of size " + std::to_string(p.size()) +
                          " looked up in table of size " + std::to_string(n_));
    return dist_[rank(p)];
}

std::vector<std::uint64_t> DistanceTable::layer_counts() const {
    std::vector<std::uint64_t> layers(static_cast<std::size_t>(diameter_) + 1, 0);
    for (auto d : dist_) ++layers[d];
    return layers;
}

DistanceTable bfs_distances(std::size_t n, MoveKind kind, unsigned search_limit, unsigned workers) {
    if (n < 1) throw input_error("bfs_distances: n must be positive");
    if (search_limit > kMaxSearchLimit) search_limit = kMaxSearchLimit;
    if (n > search_limit)
        throw resource_error("distance table for n=" + std::to_string(n) + " refused: above search limit " +
                             std::to_string(search_limit) + " (" + std::to_string(n) + "! entries)");
    if (workers == 0) workers = 1;

    const std::uint64_t total = factorial64(n);
    std::vector<std::uint8_t> dist(total, kUnvisited);
    const auto moves = n >= 2 ? generate_moves(n, kind) : std::vector<BlockMove>{};
    dist[0] = 0;  // rank of the identity

    auto expand = [&](std::uint8_t layer, std::uint64_t begin, std::uint64_t end) -> std::uint64_t {
        std::uint64_t claimed = 0;
        for (std::uint64_t r = begin; r < end; ++r) {
            if (std::atomic_ref<std::uint8_t>(dist[r]).load(std::memory_order_relaxed) != layer) continue;
            const Packed s = packed_unrank(n, r);
            for (const auto& m : moves) {
                const std::uint64_t q = packed_rank(packed_apply(s, m), n);
                std::uint8_t expected = kUnvisited;
                if (std::atomic_ref<std::uint8_t>(dist[q]).compare_exchange_strong(
                        expected, static_cast<std::uint8_t>(layer + 1), std::memory_order_relaxed))
                    ++claimed;
            }
        }
        return claimed;
    };

    std::uint64_t reached = 1;
    for (std::uint8_t layer = 0; reached < total; ++layer) {
        std::uint64_t claimed = 0;
        if (workers == 1) {
            claimed = expand(layer, 0, total);
        } else {
            std::vector<std::uint64_t> per_worker(workers, 0);
            std::vector<std::thread> pool;
            const std::uint64_t chunk = (total + workers - 1) / workers;
            for (unsigned w = 0; w < workers; ++w) {
                const std::uint64_t b = std::min(total, w * chunk);
                const std::uint64_t e = std::min(total, b + chunk);
                pool.emplace_back([&, w, b, e] { per_worker[w] = expand(layer, b, e); });
            }
            for (auto& th : pool) th.join();
            claimed = std::accumulate(per_worker.begin(), per_worker.end(), std::uint64_t{0});
        }
        if (claimed == 0) throw consistency_error("bfs_distances: moves do not generate the symmetric group");
        reached += claimed;
    }
    return DistanceTable(n, kind, std::move(dist));
}

Rational ClassStats::average() const {
    if (count == 0) throw undefined_error("average over an empty class");
    return Rational(BigInt(total_distance), BigInt(count));
}

std::vector<ClassStats> class_statistics(const DistanceTable& table, AdjacencyType t) {
    const long width = static_cast<long>(table.size()) + offset(t) + 1;
    std::vector<ClassStats> stats;
    for (long k = 0; k < width; ++k) stats.push_back({static_cast<std::size_t>(k), 0, 0});
    std::uint64_t r = 0;
    for_each_permutation(table.size(), [&](const Permutation& p) {
        auto& s = stats[count_adjacencies(p, t)];
        ++s.count;
        s.total_distance += table.at(r++);
    });
    return stats;
}

Rational average_moves_zero(const DistanceTable& table, AdjacencyType t) {
    auto stats = class_statistics(table, t);
    if (stats.empty() || stats[0].count == 0)
        throw undefined_error("no irreducible permutations of size " + std::to_string(table.size()) +
                              " under " + std::string(name(t)));
    return stats[0].average();
}

Rational average_moves_zero(const DistanceTable& table) {
    return average_moves_zero(table, paired_type(table.kind()));
}

Rational expected_moves_exact(const DistanceTable& table) {
    std::uint64_t sum = 0;
    for (auto d : table.distances()) sum += d;
    return Rational(BigInt(sum), BigInt(table.distances().size()));
}

DistanceFamily::DistanceFamily(MoveKind kind, std::vector<DistanceTable> tables)
    : kind_(kind), tables_(std::move(tables)) {
    for (std::size_t i = 0; i < tables_.size(); ++i)
        if (tables_[i].size() != i + 1 || tables_[i].kind() != kind_)
            throw input_error("DistanceFamily: tables must cover sizes 1..max_n of one kind");
}

const DistanceTable& DistanceFamily::table(std::size_t n) const {
    if (n < 1 || n > tables_.size())
        throw input_error("DistanceFamily: no table for size " + std::to_string(n));
    return tables_[n - 1];
}

std::uint8_t DistanceFamily::distance(const Permutation& p) const {
    if (p.empty()) return 0;
    return table(p.size()).at(p);
}

std::vector<Rational> DistanceFamily::zero_averages() const {
    std::vector<Rational> out(tables_.size() + 1, Rational(0));
    for (std::size_t n = 1; n <= tables_.size(); ++n) {
        auto stats = class_statistics(tables_[n - 1], paired_type(kind_));
        if (stats[0].count > 0) out[n] = stats[0].average();
    }
    return out;
}

DistanceFamily build_family(std::size_t max_n, MoveKind kind, unsigned search_limit, unsigned workers) {
    std::vector<DistanceTable> tables;
    for (std::size_t n = 1; n <= max_n; ++n) tables.push_back(bfs_distances(n, kind, search_limit, workers));
    return DistanceFamily(kind, std::move(tables));
}

InvarianceReport reduction_invariance_check(const DistanceFamily& family, std::size_t n, AdjacencyType t) {
    InvarianceReport report{n, family.kind(), t, 0, {}};
    const DistanceTable& table = family.table(n);
    std::uint64_t r = 0;
    for_each_permutation(n, [&](const Permutation& p) {
        const unsigned d = table.at(r++);
        Permutation reduced = reduce(p, t);
        const unsigned dr = family.distance(reduced);
        ++report.checked;
        if (d != dr) report.violations.push_back({p, std::move(reduced), d, dr});
    });
    return report;
}

InvarianceReport reduction_invariance_check(const DistanceFamily& family, std::size_t n) {
    return reduction_invariance_check(family, n, paired_type(family.kind()));
}

}  // namespace padj
