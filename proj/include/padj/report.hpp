#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "padj/blockmoves.hpp"
#include "padj/counting.hpp"
#include "padj/numeric.hpp"

namespace padj {

enum class Format { Csv, Json, Markdown };

Format parse_format(std::string_view text);

/// CSV: "n,k,count" one line per entry. JSON: {"type", "rows"} with rows as
/// arrays of decimal strings (counts overflow 64 bits). Markdown: an n-by-k
/// grid with a row-sum column.
void write_count_table(std::ostream& out, const CountTable& table, Format format);

/// "n,class_k,count,avg_distance" per adjacency class.
void write_class_stats(std::ostream& out, const DistanceTable& table, AdjacencyType t, Format format,
                       unsigned digits = 2);

/// Rows indexed by n with optional cells; empty cells print as nothing (CSV),
/// null (JSON) or "-" (Markdown).
struct SeriesTable {
    std::string title;
    std::vector<std::string> columns;  // excludes the leading "n"
    std::size_t n_min = 2;
    std::vector<std::vector<std::optional<Rational>>> rows;  // rows[n - n_min][column]
};

void write_series(std::ostream& out, const SeriesTable& table, Format format, unsigned digits = 2);

/// Several series in one document: CSV blocks separated by a blank line and
/// headed by "# <title>", a JSON object keyed by title, or Markdown sections.
void write_series_set(std::ostream& out, const std::vector<SeriesTable>& tables, Format format,
                      unsigned digits = 2);

}  // namespace padj
