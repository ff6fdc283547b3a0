#include "superint/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <json.hpp>

namespace superint::io {

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw std::invalid_argument("unknown format '" + name +
                                "' (expected csv or json)");
}

namespace {

std::string printf_num(const char* fmt, double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

}  // namespace

std::string num(double v) { return printf_num("%.12g", v); }
std::string num_exact(double v) { return printf_num("%.17g", v); }

namespace {

void write_csv(std::ostream& os, const Table& t) {
    for (const auto& [k, v] : t.meta) os << "# " << k << " = " << v << "\n";
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        os << t.columns[c] << (c + 1 < t.columns.size() ? "," : "");
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c)
            os << row[c] << (c + 1 < row.size() ? "," : "");
        os << "\n";
    }
}

nlohmann::ordered_json cell_to_json(const std::string& cell) {
    // Numeric-looking cells become JSON numbers; inf/nan stay strings.
    if (cell.empty()) return cell;
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (end && *end == '\0' && std::isfinite(v)) {
        if (cell.find_first_of(".eE") == std::string::npos &&
            std::fabs(v) < 9.0e15)
            return static_cast<long long>(v);
        return v;
    }
    return cell;
}

void write_json(std::ostream& os, const Table& t) {
    nlohmann::ordered_json j;
    j["meta"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : t.meta) j["meta"][k] = cell_to_json(v);
    j["columns"] = t.columns;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t c = 0; c < row.size() && c < t.columns.size(); ++c)
            obj[t.columns[c]] = cell_to_json(row[c]);
        j["rows"].push_back(std::move(obj));
    }
    os << j.dump(2) << "\n";
}

}  // namespace

void write(std::ostream& os, const Table& table, Format format) {
    if (format == Format::Csv)
        write_csv(os, table);
    else
        write_json(os, table);
}

void write_file(const std::string& path, const std::string& dir,
                const Table& table, Format format) {
    if (path == "-") {
        write(std::cout, table, format);
        return;
    }
    std::filesystem::path p(path);
    if (p.is_relative() && !dir.empty()) p = std::filesystem::path(dir) / p;
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream os(p);
    if (!os) throw std::runtime_error("cannot open output file " + p.string());
    write(os, table, format);
}

}  // namespace superint::io
