// padj: adjacency class counts, exact block-move distances and sorting-cost
// estimates from the command line.
//
// Exit codes: 0 success, 1 usage or parse error, 2 verification mismatch,
// 3 resource refusal.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "padj/blockmoves.hpp"
#include "padj/counting.hpp"
#include "padj/distance_store.hpp"
#include "padj/errors.hpp"
#include "padj/estimator.hpp"
#include "padj/permutation.hpp"
#include "padj/report.hpp"
#include "padj/solver.hpp"

namespace {

using namespace padj;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitResource = 3;

struct RunConfig {
    std::string type = "1";
    std::string move = "pt";
    std::size_t n = 0;
    std::size_t n_max = 14;
    std::optional<std::size_t> limit;
    std::string psi = "limiting";
    std::string format = "csv";
    std::string check;
    std::string perm;
    std::string cache_dir_flag;
    unsigned workers = 1;
    unsigned oracle_limit = kDefaultOracleLimit;
    unsigned search_limit = kDefaultSearchLimit;
    unsigned precision = 2;
};

// Flag beats environment beats built-in default.
std::filesystem::path resolve_cache_dir(const RunConfig& cfg, bool flag_given) {
    if (flag_given) return cfg.cache_dir_flag;
    if (const char* env = std::getenv("PADJ_CACHE_DIR"); env && *env) return env;
    return cfg.cache_dir_flag;
}

DistanceStore make_store(const RunConfig& cfg, bool cache_flag_given) {
    if (cfg.search_limit > kMaxSearchLimit)
        throw input_error("--search-limit may not exceed " + std::to_string(kMaxSearchLimit));
    return DistanceStore(resolve_cache_dir(cfg, cache_flag_given), cfg.search_limit, cfg.workers,
                         [](const std::string& msg) { std::cerr << "warning: " << msg << '\n'; });
}

int cmd_tables(const RunConfig& cfg) {
    const AdjacencyType t = parse_adjacency_type(cfg.type);
    const Format format = parse_format(cfg.format);
    if (!cfg.check.empty() && cfg.check != "tanny" && cfg.check != "whitworth" && cfg.check != "oracle")
        throw input_error("unknown check: " + cfg.check);
    if (cfg.check == "tanny" && t != AdjacencyType::Type1) throw input_error("--check tanny applies to type 1");
    if (cfg.check == "whitworth" && t != AdjacencyType::Type2 && t != AdjacencyType::Type3)
        throw input_error("--check whitworth applies to types 2 and 3");

    const CountTable table = build_count_table(cfg.n_max, t);
    write_count_table(std::cout, table, format);
    if (cfg.check.empty()) return kExitOk;

    auto mismatch = [](std::size_t n, std::size_t k, const BigInt& got, const BigInt& want) {
        std::cerr << "mismatch at n=" << n << " k=" << k << ": table " << got << ", check " << want << '\n';
        return kExitMismatch;
    };
    if (cfg.check == "tanny") {
        for (std::size_t n = 1; n <= table.n_max(); ++n)
            for (std::size_t k = 0; k < n; ++k)
                if (table.at(n, k) != tanny_count(n, k)) return mismatch(n, k, table.at(n, k), tanny_count(n, k));
    } else if (cfg.check == "whitworth") {
        for (std::size_t n = 1; n <= table.n_max(); ++n)
            if (table.at(n, 0) != whitworth_zero_count(n))
                return mismatch(n, 0, table.at(n, 0), whitworth_zero_count(n));
    } else {
        const std::size_t top = std::min<std::size_t>(table.n_max(), cfg.oracle_limit);
        if (top < table.n_max())
            std::cerr << "oracle comparison limited to n <= " << top << " (oracle limit)\n";
        for (std::size_t n = 1; n <= top; ++n) {
            const auto sizes = enumerate_class_sizes(n, t, cfg.oracle_limit);
            for (std::size_t k = 0; k < sizes.size(); ++k)
                if (table.at(n, k) != sizes[k]) return mismatch(n, k, table.at(n, k), BigInt(sizes[k]));
        }
    }
    std::cerr << "check " << cfg.check << ": ok\n";
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, bool cache_flag_given) {
    const MoveKind kind = parse_move_kind(cfg.move);
    if (cfg.n < 1) throw input_error("--n must be positive");
    if (cfg.n > cfg.oracle_limit)
        throw resource_error("verify refused: n=" + std::to_string(cfg.n) + " above oracle limit " +
                             std::to_string(cfg.oracle_limit));
    const std::size_t n = cfg.n;
    bool all_ok = true;
    auto report = [&](const std::string& property, bool ok, const std::string& detail = {}) {
        std::cout << (ok ? "PASS " : "FAIL ") << property;
        if (!ok && !detail.empty()) std::cout << " (" << detail << ')';
        std::cout << '\n';
        all_ok = all_ok && ok;
    };

    std::vector<CountTable> tables;
    for (auto t : kAllAdjacencyTypes) tables.push_back(build_count_table(std::max<std::size_t>(n, 2), t));

    {
        std::string detail;
        for (const auto& table : tables)
            for (std::size_t m = 1; m <= n && detail.empty(); ++m) {
                const auto sizes = enumerate_class_sizes(m, table.type(), cfg.oracle_limit);
                for (std::size_t k = 0; k < sizes.size(); ++k)
                    if (table.at(m, k) != sizes[k]) {
                        detail = std::string(name(table.type())) + " n=" + std::to_string(m) + " k=" + std::to_string(k);
                        break;
                    }
            }
        report("oracle_equality", detail.empty(), detail);
    }
    {
        std::string detail;
        for (const auto& table : tables)
            for (std::size_t m = 1; m <= n; ++m)
                if (table.row_sum(m) != factorial(static_cast<unsigned>(m)) && detail.empty())
                    detail = std::string(name(table.type())) + " n=" + std::to_string(m);
        report("row_sums", detail.empty(), detail);
    }
    {
        std::string detail;
        for (auto t : kAllAdjacencyTypes)
            for_each_permutation(n, [&](const Permutation& p) {
                const Permutation r = reduce(p, t);
                if (detail.empty() && (reduce(r, t) != r || count_adjacencies(r, t) != 0))
                    detail = std::string(name(t)) + " " + p.to_string();
            });
        report("reduction_idempotence", detail.empty(), detail);
    }

    DistanceStore store = make_store(cfg, cache_flag_given);
    const DistanceFamily family = store.family(n, kind);
    {
        const InvarianceReport inv = reduction_invariance_check(family, n);
        std::string detail;
        if (!inv.ok()) {
            const auto& v = inv.violations.front();
            detail = std::to_string(inv.violations.size()) + " violations, e.g. " + v.permutation.to_string() +
                     " (" + std::to_string(v.distance) + ") vs " + v.reduced.to_string() + " (" +
                     std::to_string(v.reduced_distance) + ")";
        }
        report("reduction_distance_invariance", inv.ok(), detail);
    }
    {
        const AdjacencyType t = paired_type(kind);
        const CountTable& table = tables[static_cast<std::size_t>(t)];
        const auto zero = family.zero_averages();
        const Rational direct = expected_moves_exact(family.table(n));
        const Rational decomposed = weighted_by_reduced_size(table, n, zero);
        report("decomposition_identity", direct == decomposed,
               direct.str() + " != " + decomposed.str());
    }
    return all_ok ? kExitOk : kExitMismatch;
}

int cmd_distances(const RunConfig& cfg, bool cache_flag_given, bool type_given) {
    const MoveKind kind = parse_move_kind(cfg.move);
    const Format format = parse_format(cfg.format);
    const AdjacencyType t = type_given ? parse_adjacency_type(cfg.type) : paired_type(kind);
    if (cfg.n < 1) throw input_error("--n must be positive");
    DistanceStore store = make_store(cfg, cache_flag_given);
    const DistanceTable& table = store.get(cfg.n, kind);
    write_class_stats(std::cout, table, t, format, cfg.precision);
    if (format == Format::Csv) std::cerr << "diameter: " << static_cast<unsigned>(table.diameter()) << '\n';
    return kExitOk;
}

int cmd_sort(const RunConfig& cfg, bool cache_flag_given) {
    const MoveKind kind = parse_move_kind(cfg.move);
    const Permutation p = parse_permutation(cfg.perm);
    Solution solution;
    if (p.size() >= 1 && p.size() <= cfg.search_limit) {
        DistanceStore store = make_store(cfg, cache_flag_given);
        solution = solve_with_table(p, store.get(p.size(), kind));
    } else {
        solution = solve_iddfs(p, kind);
    }
    std::cout << "length " << solution.length() << '\n';
    Permutation current = p;
    for (const auto& m : solution.moves) {
        current = apply_move(current, m);
        std::cout << "move " << m.i << ' ' << m.j << ' ' << m.k << " -> " << current.to_string() << '\n';
    }
    return kExitOk;
}

int cmd_estimate(const RunConfig& cfg, bool cache_flag_given) {
    const MoveKind kind = parse_move_kind(cfg.move);
    const Format format = parse_format(cfg.format);
    const PsiMode mode = parse_psi_mode(cfg.psi);
    if (kind == MoveKind::Transposition) throw input_error("estimate supports --move pt and st");

    const std::vector<std::size_t> limits =
        cfg.limit ? std::vector<std::size_t>{*cfg.limit} : std::vector<std::size_t>{6, 7, 8};
    for (auto l : limits) {
        if (l > cfg.search_limit)
            throw input_error("--limit " + std::to_string(l) + " exceeds search limit " +
                              std::to_string(cfg.search_limit));
        if (cfg.n_max < l) throw input_error("--n-max must be at least the limit");
    }

    DistanceStore store = make_store(cfg, cache_flag_given);
    const std::size_t computed_top = std::min<std::size_t>(cfg.n_max, store.search_limit());
    const DistanceFamily family = store.family(computed_top, kind);
    const auto exact_zero = family.zero_averages();
    const CountTable counts = build_count_table(std::max<std::size_t>(cfg.n_max, 2), paired_type(kind));

    SeriesTable irreducible{"average_moves_irreducible", {"computed"}, 2, {}};
    SeriesTable all{"expected_moves", {"computed"}, 2, {}};
    for (auto l : limits) {
        irreducible.columns.push_back("pred_i" + std::to_string(l));
        all.columns.push_back("pred_i" + std::to_string(l));
    }
    for (std::size_t n = 2; n <= cfg.n_max; ++n) {
        std::vector<std::optional<Rational>> zero_row(1 + limits.size());
        std::vector<std::optional<Rational>> all_row(1 + limits.size());
        if (n <= computed_top) {
            zero_row[0] = exact_zero[n];
            all_row[0] = expected_moves_exact(family.table(n));
        }
        irreducible.rows.push_back(std::move(zero_row));
        all.rows.push_back(std::move(all_row));
    }
    for (std::size_t c = 0; c < limits.size(); ++c) {
        const std::size_t l = limits[c];
        const EstimateModel model =
            move_count_model(kind, l, std::span<const Rational>(exact_zero).first(l + 1), cfg.n_max, mode);
        const auto expected = expected_value_model(model, counts);
        for (std::size_t n = l + 1; n <= cfg.n_max; ++n) {
            irreducible.rows[n - 2][c + 1] = model.base[n];
            all.rows[n - 2][c + 1] = expected[n];
        }
    }
    write_series_set(std::cout, {irreducible, all}, format, cfg.precision);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Adjacency counts, block-move distances and sorting-cost estimates for permutations"};
    app.require_subcommand(1);
    RunConfig cfg;
    cfg.cache_dir_flag = ".padj-cache";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "csv | json | markdown")->check(CLI::IsMember({"csv", "json", "markdown"}));
        return sub;
    };
    auto add_search = [&](CLI::App* sub) {
        sub->add_option("--cache-dir", cfg.cache_dir_flag, "distance table cache directory (env PADJ_CACHE_DIR)");
        sub->add_option("--workers", cfg.workers, "BFS worker threads")->check(CLI::Range(1u, 256u));
        sub->add_option("--search-limit", cfg.search_limit, "largest n for full distance tables")
            ->check(CLI::Range(1u, kMaxSearchLimit));
    };

    auto* tables = add_common(app.add_subcommand("tables", "adjacency class counts f(n,k)"));
    tables->add_option("--type", cfg.type, "adjacency type 1..4");
    tables->add_option("--n-max", cfg.n_max, "largest n")->check(CLI::Range(2, 100000));
    tables->add_option("--check", cfg.check, "tanny | whitworth | oracle");
    tables->add_option("--oracle-limit", cfg.oracle_limit, "largest n for brute-force enumeration");

    auto* verify = app.add_subcommand("verify", "run the invariant suite at one size");
    verify->add_option("--n", cfg.n, "size")->required();
    verify->add_option("--move", cfg.move, "t | pt | st");
    verify->add_option("--oracle-limit", cfg.oracle_limit, "largest n for brute-force enumeration");
    add_search(verify);

    auto* distances = add_common(app.add_subcommand("distances", "exact distance statistics per adjacency class"));
    distances->add_option("--n", cfg.n, "size")->required();
    distances->add_option("--move", cfg.move, "t | pt | st");
    auto* type_opt = distances->add_option("--type", cfg.type, "adjacency type for classes (default: paired)");
    distances->add_option("--precision", cfg.precision, "decimal places");
    add_search(distances);

    auto* sort = app.add_subcommand("sort", "optimal block-move sequence for one permutation");
    sort->add_option("--perm", cfg.perm, "comma-separated symbols, e.g. 4,2,1,3,0")->required();
    sort->add_option("--move", cfg.move, "t | pt | st");
    add_search(sort);

    auto* estimate = add_common(app.add_subcommand("estimate", "predicted average moves beyond exact reach"));
    estimate->add_option("--move", cfg.move, "pt | st");
    estimate->add_option("--limit", cfg.limit, "largest size with exact averages (default: 6, 7 and 8)");
    estimate->add_option("--n-max", cfg.n_max, "prediction horizon");
    estimate->add_option("--psi", cfg.psi, "limiting | sized")->check(CLI::IsMember({"limiting", "sized"}));
    estimate->add_option("--precision", cfg.precision, "decimal places");
    add_search(estimate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    auto cache_flag_given = [&](CLI::App* sub) { return sub->count("--cache-dir") > 0; };
    try {
        if (tables->parsed()) return cmd_tables(cfg);
        if (verify->parsed()) return cmd_verify(cfg, cache_flag_given(verify));
        if (distances->parsed()) return cmd_distances(cfg, cache_flag_given(distances), type_opt->count() > 0);
        if (sort->parsed()) return cmd_sort(cfg, cache_flag_given(sort));
        if (estimate->parsed()) return cmd_estimate(cfg, cache_flag_given(estimate));
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResource;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMismatch;
    }
    return kExitUsage;
}
