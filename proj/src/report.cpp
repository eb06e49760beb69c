#include "padj/report.hpp"

#include <ostream>

#include <json.hpp>

#include "padj/errors.hpp"

namespace padj {

Format parse_format(std::string_view text) {
    if (text == "csv") return Format::Csv;
    if (text == "json") return Format::Json;
    if (text == "markdown" || text == "md") return Format::Markdown;
    throw input_error("unknown format: " + std::string(text));
}

void write_count_table(std::ostream& out, const CountTable& table, Format format) {
    const std::size_t n_max = table.n_max();
    switch (format) {
        case Format::Csv:
            out << "n,k,count\n";
            for (std::size_t n = 1; n <= n_max; ++n) {
                auto row = table.row(n);
                for (std::size_t k = 0; k < row.size(); ++k) out << n << ',' << k << ',' << row[k] << '\n';
            }
            break;
        case Format::Json: {
            nlohmann::json rows = nlohmann::json::array();
            for (std::size_t n = 1; n <= n_max; ++n) {
                nlohmann::json row = nlohmann::json::array();
                for (const auto& v : table.row(n)) row.push_back(v.str());
                rows.push_back(std::move(row));
            }
            nlohmann::json doc{{"type", name(table.type())}, {"n_min", 1}, {"rows", std::move(rows)}};
            out << doc.dump(1) << '\n';
            break;
        }
        case Format::Markdown: {
            const long width = static_cast<long>(n_max) + offset(table.type()) + 1;
            out << "| n\\k |";
            for (long k = 0; k < width; ++k) out << ' ' << k << " |";
            out << " sum |\n|---|";
            for (long k = 0; k <= width; ++k) out << "---|";
            out << '\n';
            for (std::size_t n = 1; n <= n_max; ++n) {
                out << "| " << n << " |";
                for (long k = 0; k < width; ++k) out << ' ' << table.at(static_cast<long>(n), k) << " |";
                out << ' ' << table.row_sum(n) << " |\n";
            }
            break;
        }
    }
}

void write_class_stats(std::ostream& out, const DistanceTable& table, AdjacencyType t, Format format,
                       unsigned digits) {
    const auto stats = class_statistics(table, t);
    auto avg = [&](const ClassStats& s) { return s.count ? format_fixed(s.average(), digits) : std::string(); };
    switch (format) {
        case Format::Csv:
            out << "n,class_k,count,avg_distance\n";
            for (const auto& s : stats) out << table.size() << ',' << s.k << ',' << s.count << ',' << avg(s) << '\n';
            break;
        case Format::Json: {
            nlohmann::json classes = nlohmann::json::array();
            for (const auto& s : stats) {
                nlohmann::json c{{"class_k", s.k}, {"count", s.count}};
                c["avg_distance"] = s.count ? nlohmann::json(avg(s)) : nlohmann::json(nullptr);
                classes.push_back(std::move(c));
            }
            nlohmann::json doc{{"n", table.size()},
                               {"move", name(table.kind())},
                               {"type", name(t)},
                               {"diameter", table.diameter()},
                               {"classes", std::move(classes)}};
            out << doc.dump(1) << '\n';
            break;
        }
        case Format::Markdown:
            out << "n = " << table.size() << ", move " << name(table.kind()) << ", " << name(t)
                << ", diameter " << static_cast<unsigned>(table.diameter()) << "\n\n";
            out << "| class_k | count | avg_distance |\n|---|---|---|\n";
            for (const auto& s : stats) out << "| " << s.k << " | " << s.count << " | " << avg(s) << " |\n";
            break;
    }
}

namespace {

std::string cell_text(const std::optional<Rational>& cell, unsigned digits, std::string_view empty) {
    return cell ? format_fixed(*cell, digits) : std::string(empty);
}

nlohmann::json series_json(const SeriesTable& table, unsigned digits) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        nlohmann::json row{{"n", table.n_min + r}};
        for (std::size_t c = 0; c < table.columns.size(); ++c) {
            const auto& cell = table.rows[r][c];
            row[table.columns[c]] = cell ? nlohmann::json(format_fixed(*cell, digits)) : nlohmann::json(nullptr);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

void write_series(std::ostream& out, const SeriesTable& table, Format format, unsigned digits) {
    switch (format) {
        case Format::Csv:
            out << 'n';
            for (const auto& c : table.columns) out << ',' << c;
            out << '\n';
            for (std::size_t r = 0; r < table.rows.size(); ++r) {
                out << table.n_min + r;
                for (const auto& cell : table.rows[r]) out << ',' << cell_text(cell, digits, "");
                out << '\n';
            }
            break;
        case Format::Json:
            out << series_json(table, digits).dump(1) << '\n';
            break;
        case Format::Markdown:
            out << "| n |";
            for (const auto& c : table.columns) out << ' ' << c << " |";
            out << "\n|---|";
            for (std::size_t c = 0; c < table.columns.size(); ++c) out << "---|";
            out << '\n';
            for (std::size_t r = 0; r < table.rows.size(); ++r) {
                out << "| " << table.n_min + r << " |";
                for (const auto& cell : table.rows[r]) out << ' ' << cell_text(cell, digits, "-") << " |";
                out << '\n';
            }
            break;
    }
}

void write_series_set(std::ostream& out, const std::vector<SeriesTable>& tables, Format format, unsigned digits) {
    if (format == Format::Json) {
        nlohmann::json doc = nlohmann::json::object();
        for (const auto& t : tables) doc[t.title] = series_json(t, digits);
        out << doc.dump(1) << '\n';
        return;
    }
    for (std::size_t i = 0; i < tables.size(); ++i) {
        if (i) out << '\n';
        out << (format == Format::Csv ? "# " : "### ") << tables[i].title << '\n';
        if (format == Format::Markdown) out << '\n';
        write_series(out, tables[i], format, digits);
    }
}

}  // namespace padj
