#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wellsep/matrix.hpp"

namespace wellsep {

enum class ColumnType { index, real, complex, string };

struct Column {
    std::string name;
    ColumnType type = ColumnType::real;
};

using Cell = std::variant<std::int64_t, double, Complex, std::string>;

/// Named, typed rows plus run metadata. Every emitted file carries the
/// metadata keys radius_mode, seed, tool_version and input_hash.
class ResultTable {
public:
    ResultTable(std::string schema_name, std::vector<Column> columns);

    /// Throws PreconditionError when the row does not match the column types.
    void add_row(std::vector<Cell> row);
    void set_meta(const std::string& key, std::string value);

    const std::string& schema_name() const noexcept { return schema_; }
    const std::vector<Column>& columns() const noexcept { return columns_; }
    const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }
    const std::map<std::string, std::string>& metadata() const noexcept { return meta_; }

private:
    std::string schema_;
    std::vector<Column> columns_;
    std::vector<std::vector<Cell>> rows_;
    std::map<std::string, std::string> meta_;
};

enum class TableFormat { csv, json };

TableFormat parse_table_format(std::string_view name);

/// Shortest-round-trip-safe text for a double: 17 significant digits.
std::string format_real(double v);

/// CSV: `# key=value` metadata lines, a header row, then data rows. Complex
/// columns become two columns suffixed _re/_im. Fields are quoted per RFC 4180.
/// JSON: {"metadata": {...}, "columns": [...], "rows": [...]} with the same
/// column split.
///
/// Throws PreconditionError when a required metadata key is missing.
void write_table(const ResultTable& table, TableFormat format, std::ostream& out);
/// Throws IoError when the file cannot be written.
void write_table(const ResultTable& table, TableFormat format, const std::filesystem::path& path);

/// 64-bit FNV-1a digest as 16 hex digits; used for input_hash.
std::string fnv1a_hex(std::string_view bytes);
/// fnv1a_hex of a file's bytes. Throws IoError.
std::string file_hash(const std::filesystem::path& path);

}  // namespace wellsep
