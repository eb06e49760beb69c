#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>

#include "padj/blockmoves.hpp"

namespace padj {

/// Cache file layout: "PADJ", version, n, kind code, then n! distance bytes
/// in rank order.
inline constexpr char kCacheMagic[4] = {'P', 'A', 'D', 'J'};
inline constexpr std::uint8_t kCacheVersion = 1;

std::uint8_t kind_code(MoveKind kind);
MoveKind kind_from_code(std::uint8_t code);

void write_distance_table(std::ostream& out, const DistanceTable& table);

/// Throws input_error on a bad header, unknown kind, or truncated body.
DistanceTable read_distance_table(std::istream& in);

std::filesystem::path cache_file_name(std::size_t n, MoveKind kind);

/// Builds distance tables on demand and persists them under a cache
/// directory. An empty directory path disables the disk cache.
class DistanceStore {
public:
    using Warn = std::function<void(const std::string&)>;

    explicit DistanceStore(std::filesystem::path cache_dir, unsigned search_limit = kDefaultSearchLimit,
                           unsigned workers = 1, Warn warn = {});

    const DistanceTable& get(std::size_t n, MoveKind kind);
    DistanceFamily family(std::size_t max_n, MoveKind kind);

    unsigned search_limit() const { return search_limit_; }

private:
    std::filesystem::path dir_;
    unsigned search_limit_;
    unsigned workers_;
    Warn warn_;
    std::map<std::pair<std::size_t, MoveKind>, DistanceTable> memo_;
};

}  // namespace padj
