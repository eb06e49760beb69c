#include "padj/distance_store.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>

#include "padj/errors.hpp"

namespace padj {

std::uint8_t kind_code(MoveKind kind) {
    switch (kind) {
        case MoveKind::Transposition: return 0;
        case MoveKind::PrefixTransposition: return 1;
        case MoveKind::SuffixTransposition: return 2;
    }
    return 0xFF;
}

MoveKind kind_from_code(std::uint8_t code) {
    switch (code) {
        case 0: return MoveKind::Transposition;
        case 1: return MoveKind::PrefixTransposition;
        case 2: return MoveKind::SuffixTransposition;
        default: throw input_error("unknown move kind code " + std::to_string(code));
    }
}

void write_distance_table(std::ostream& out, const DistanceTable& table) {
    out.write(kCacheMagic, sizeof kCacheMagic);
    const char header[3] = {static_cast<char>(kCacheVersion), static_cast<char>(table.size()),
                            static_cast<char>(kind_code(table.kind()))};
    out.write(header, sizeof header);
    const auto& d = table.distances();
    out.write(reinterpret_cast<const char*>(d.data()), static_cast<std::streamsize>(d.size()));
}

DistanceTable read_distance_table(std::istream& in) {
    char magic[4];
    if (!in.read(magic, sizeof magic) || !std::equal(magic, magic + 4, kCacheMagic))
        throw input_error("distance cache: bad magic");
    char header[3];
    if (!in.read(header, sizeof header)) throw input_error("distance cache: truncated header");
    if (static_cast<std::uint8_t>(header[0]) != kCacheVersion)
        throw input_error("distance cache: unsupported version " +
                          std::to_string(static_cast<std::uint8_t>(header[0])));
    const std::size_t n = static_cast<std::uint8_t>(header[1]);
    const MoveKind kind = kind_from_code(static_cast<std::uint8_t>(header[2]));
    if (n < 1 || n > kMaxSearchLimit) throw input_error("distance cache: size out of range");

    std::uint64_t count = 1;
    for (std::size_t i = 2; i <= n; ++i) count *= i;
    std::vector<std::uint8_t> dist(count);
    if (!in.read(reinterpret_cast<char*>(dist.data()), static_cast<std::streamsize>(count)))
        throw input_error("distance cache: truncated body");
    if (in.peek() != std::char_traits<char>::eof()) throw input_error("distance cache: trailing bytes");
    return DistanceTable(n, kind, std::move(dist));
}

std::filesystem::path cache_file_name(std::size_t n, MoveKind kind) {
    return "dist_" + std::string(name(kind)) + "_" + std::to_string(n) + ".padj";
}

DistanceStore::DistanceStore(std::filesystem::path cache_dir, unsigned search_limit, unsigned workers, Warn warn)
    : dir_(std::move(cache_dir)), search_limit_(search_limit), workers_(workers), warn_(std::move(warn)) {}

const DistanceTable& DistanceStore::get(std::size_t n, MoveKind kind) {
    const auto key = std::make_pair(n, kind);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (n > search_limit_)
        throw resource_error("distance table for n=" + std::to_string(n) + " refused: above search limit " +
                             std::to_string(search_limit_));

    const std::filesystem::path file = dir_.empty() ? std::filesystem::path{} : dir_ / cache_file_name(n, kind);
    if (!file.empty() && std::filesystem::exists(file)) {
        try {
            std::ifstream in(file, std::ios::binary);
            DistanceTable loaded = read_distance_table(in);
            if (loaded.size() != n || loaded.kind() != kind) throw input_error("distance cache: header mismatch");
            return memo_.emplace(key, std::move(loaded)).first->second;
        } catch (const input_error& e) {
            if (warn_) warn_("rebuilding " + file.string() + ": " + e.what());
        }
    }

    DistanceTable built = bfs_distances(n, kind, search_limit_, workers_);
    if (!file.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        std::ofstream out(file, std::ios::binary | std::ios::trunc);
        if (out) write_distance_table(out, built);
        if ((ec || !out) && warn_) warn_("could not write cache file " + file.string());
    }
    return memo_.emplace(key, std::move(built)).first->second;
}

DistanceFamily DistanceStore::family(std::size_t max_n, MoveKind kind) {
    std::vector<DistanceTable> tables;
    for (std::size_t n = 1; n <= max_n; ++n) tables.push_back(get(n, kind));
    return DistanceFamily(kind, std::move(tables));
}

}  // namespace padj
