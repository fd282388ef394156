#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "wellsep/matrix.hpp"

namespace wellsep {

struct MatrixMarketHeader {
    enum class Format { coordinate, array };
    enum class Field { real, complex, integer, pattern };
    enum class Symmetry { general, symmetric, skew_symmetric, hermitian };

    Format format = Format::coordinate;
    Field field = Field::real;
    Symmetry symmetry = Symmetry::general;
};

/// Parses the "%%MatrixMarket matrix <format> <field> <symmetry>" banner.
/// Throws ParseError (line 1) or UnsupportedField for `pattern`.
MatrixMarketHeader parse_matrix_market_banner(const std::string& line);

/// Reads a Matrix Market stream into a dense matrix.
///
/// Coordinate entries use 1-based indices; duplicates are summed. Symmetric,
/// skew-symmetric and hermitian storage is mirrored. Array data is read
/// column-major (lower triangle only for the symmetric kinds). A symmetric
/// real or integer file yields a matrix tagged symmetric.
///
/// Errors: ParseError with the offending line, UnsupportedField for pattern
/// files, DimensionMismatch for non-square matrices.
DenseMatrix read_matrix_market(std::istream& in);
DenseMatrix read_matrix_market(const std::filesystem::path& path);

/// Writes `a` in array format with 17 significant digits. A symmetric-tagged
/// matrix is written as symmetric (lower triangle). `comments` become `%`
/// lines after the banner.
void write_matrix_market(const DenseMatrix& a, std::ostream& out,
                         const std::vector<std::string>& comments = {});
void write_matrix_market(const DenseMatrix& a, const std::filesystem::path& path,
                         const std::vector<std::string>& comments = {});

}  // namespace wellsep
