/** \file io.hpp
    \brief Machine-readable table output (CSV and JSON) with an embedded
           metadata block.

    CSV layout: `# key = value` metadata lines, a header row, then data
    rows; UTF-8, comma delimited, `.` decimal separator.  JSON mirrors the
    same table as {"meta": {...}, "columns": [...], "rows": [{...}]}.
    Energies and other floating cells are printed with 12 significant
    digits.  Output never includes wall-clock data, so reruns with the same
    configuration are byte identical.
*/
#ifndef SUPERINT_IO_HPP
#define SUPERINT_IO_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace superint::io {

enum class Format { Csv, Json };

Format parse_format(const std::string& name);  // "csv" | "json"

struct Table {
    std::vector<std::pair<std::string, std::string>> meta;  // ordered
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void meta_entry(std::string key, std::string value) {
        meta.emplace_back(std::move(key), std::move(value));
    }
    Table& row(std::vector<std::string> cells) {
        rows.push_back(std::move(cells));
        return *this;
    }
};

/// %.12g with inf/nan spelled as "inf"/"nan".
std::string num(double v);
/// %.17g, round-trip exact; used for trajectory samples.
std::string num_exact(double v);

void write(std::ostream& os, const Table& table, Format format);

/// Writes to `path` ("-" means stdout).  Relative paths are resolved
/// against dir (when nonempty).
void write_file(const std::string& path, const std::string& dir,
                const Table& table, Format format);

}  // namespace superint::io

#endif
