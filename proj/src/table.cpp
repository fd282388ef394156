#include "wellsep/table.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <cmath>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "wellsep/errors.hpp"

namespace wellsep {

namespace {

constexpr std::array<const char*, 4> kRequiredMeta = {"input_hash", "radius_mode", "seed",
                                                      "tool_version"};

bool cell_matches(const Cell& c, ColumnType t) {
    switch (t) {
        case ColumnType::index: return std::holds_alternative<std::int64_t>(c);
        case ColumnType::real: return std::holds_alternative<double>(c);
        case ColumnType::complex: return std::holds_alternative<Complex>(c);
        case ColumnType::string: return std::holds_alternative<std::string>(c);
    }
    return false;
}

const char* type_name(ColumnType t) {
    switch (t) {
        case ColumnType::index: return "index";
        case ColumnType::real: return "real";
        case ColumnType::complex: return "complex";
        case ColumnType::string: return "string";
    }
    return "string";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// Column names after splitting complex columns.
std::vector<std::pair<std::string, ColumnType>> flat_columns(const ResultTable& t) {
    std::vector<std::pair<std::string, ColumnType>> out;
    for (const auto& c : t.columns()) {
        if (c.type == ColumnType::complex) {
            out.emplace_back(c.name + "_re", ColumnType::real);
            out.emplace_back(c.name + "_im", ColumnType::real);
        } else {
            out.emplace_back(c.name, c.type);
        }
    }
    return out;
}

void check_metadata(const ResultTable& t) {
    for (const char* key : kRequiredMeta) {
        if (!t.metadata().contains(key)) {
            throw PreconditionError("table '" + t.schema_name() + "' lacks metadata key '" + key + "'");
        }
    }
}

void write_csv(const ResultTable& t, std::ostream& out) {
    out << "# schema=" << t.schema_name() << '\n';
    for (const auto& [k, v] : t.metadata()) out << "# " << k << '=' << v << '\n';
    const auto cols = flat_columns(t);
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i) out << ',';
        out << csv_field(cols[i].first);
    }
    out << '\n';
    for (const auto& row : t.rows()) {
        bool first = true;
        auto emit = [&](const std::string& s) {
            if (!first) out << ',';
            first = false;
            out << s;
        };
        for (const auto& cell : row) {
            if (const auto* i = std::get_if<std::int64_t>(&cell)) {
                emit(std::to_string(*i));
            } else if (const auto* d = std::get_if<double>(&cell)) {
                emit(format_real(*d));
            } else if (const auto* z = std::get_if<Complex>(&cell)) {
                emit(format_real(z->real()));
                emit(format_real(z->imag()));
            } else {
                emit(csv_field(std::get<std::string>(cell)));
            }
        }
        out << '\n';
    }
}

void write_json(const ResultTable& t, std::ostream& out) {
    using nlohmann::json;
    json doc;
    json meta = json::object();
    meta["schema"] = t.schema_name();
    for (const auto& [k, v] : t.metadata()) meta[k] = v;
    doc["metadata"] = meta;
    json cols = json::array();
    for (const auto& [name, type] : flat_columns(t)) {
        cols.push_back({{"name", name}, {"type", type_name(type)}});
    }
    doc["columns"] = cols;
    json rows = json::array();
    for (const auto& row : t.rows()) {
        json r = json::array();
        for (const auto& cell : row) {
            if (const auto* i = std::get_if<std::int64_t>(&cell)) {
                r.push_back(*i);
            } else if (const auto* d = std::get_if<double>(&cell)) {
                r.push_back(*d);
            } else if (const auto* z = std::get_if<Complex>(&cell)) {
                r.push_back(z->real());
                r.push_back(z->imag());
            } else {
                r.push_back(std::get<std::string>(cell));
            }
        }
        rows.push_back(std::move(r));
    }
    doc["rows"] = rows;
    out << doc.dump(2) << '\n';
}

}  // namespace

ResultTable::ResultTable(std::string schema_name, std::vector<Column> columns)
    : schema_(std::move(schema_name)), columns_(std::move(columns)) {}

void ResultTable::add_row(std::vector<Cell> row) {
    if (row.size() != columns_.size()) {
        throw PreconditionError("table '" + schema_ + "': row has " + std::to_string(row.size()) +
                                " cells, expected " + std::to_string(columns_.size()));
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (!cell_matches(row[i], columns_[i].type)) {
            throw PreconditionError("table '" + schema_ + "': column '" + columns_[i].name +
                                    "' expects " + type_name(columns_[i].type));
        }
    }
    rows_.push_back(std::move(row));
}

void ResultTable::set_meta(const std::string& key, std::string value) {
    meta_[key] = std::move(value);
}

TableFormat parse_table_format(std::string_view name) {
    if (name == "csv") return TableFormat::csv;
    if (name == "json") return TableFormat::json;
    throw PreconditionError("unknown table format '" + std::string(name) + "'");
}

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                   std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

void write_table(const ResultTable& table, TableFormat format, std::ostream& out) {
    check_metadata(table);
    if (format == TableFormat::csv) {
        write_csv(table, out);
    } else {
        write_json(table, out);
    }
}

void write_table(const ResultTable& table, TableFormat format, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    write_table(table, format, out);
    out.flush();
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::array<char, 17> buf{};
    std::snprintf(buf.data(), buf.size(), "%016llx", static_cast<unsigned long long>(h));
    return buf.data();
}

std::string file_hash(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return fnv1a_hex(bytes);
}

}  // namespace wellsep
