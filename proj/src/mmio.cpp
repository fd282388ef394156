#include "wellsep/mmio.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "wellsep/errors.hpp"
#include "wellsep/table.hpp"

namespace wellsep {

namespace {

using Header = MatrixMarketHeader;

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// Line reader that tracks 1-based line numbers and skips comments/blank lines.
class LineSource {
public:
    explicit LineSource(std::istream& in) : in_(in) {}

    bool next_data(std::string& line) {
        while (std::getline(in_, line)) {
            ++lineno_;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos) continue;
            if (line[first] == '%') continue;
            return true;
        }
        return false;
    }

    bool next_raw(std::string& line) {
        if (!std::getline(in_, line)) return false;
        ++lineno_;
        return true;
    }

    std::size_t line() const noexcept { return lineno_; }

private:
    std::istream& in_;
    std::size_t lineno_ = 0;
};

double parse_number(const std::string& tok, std::size_t line) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(begin, &end);
    if (end == begin || *end != '\0') throw ParseError(line, "invalid number '" + tok + "'");
    return v;
}

long long parse_integer(const std::string& tok, std::size_t line) {
    const char* begin = tok.c_str();
    char* end = nullptr;
    errno = 0;
    const long long v = std::strtoll(begin, &end, 10);
    if (end == begin || *end != '\0' || errno == ERANGE) {
        throw ParseError(line, "invalid integer '" + tok + "'");
    }
    return v;
}

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

std::size_t values_per_entry(Header::Field f) { return f == Header::Field::complex ? 2 : 1; }

Complex read_value(const std::vector<std::string>& tok, std::size_t offset, Header::Field field,
                   std::size_t line) {
    if (field == Header::Field::integer) {
        return static_cast<double>(parse_integer(tok[offset], line));
    }
    const double re = parse_number(tok[offset], line);
    if (field == Header::Field::complex) return {re, parse_number(tok[offset + 1], line)};
    return re;
}

void place(std::vector<Complex>& a, std::size_t n, std::size_t i, std::size_t j, Complex v,
           Header::Symmetry sym, std::size_t line) {
    a[i * n + j] += v;
    if (i == j) {
        if (sym == Header::Symmetry::skew_symmetric && v != Complex(0.0)) {
            throw ParseError(line, "skew-symmetric matrix with a nonzero diagonal entry");
        }
        return;
    }
    switch (sym) {
        case Header::Symmetry::general: break;
        case Header::Symmetry::symmetric: a[j * n + i] += v; break;
        case Header::Symmetry::skew_symmetric: a[j * n + i] -= v; break;
        case Header::Symmetry::hermitian: a[j * n + i] += std::conj(v); break;
    }
}

}  // namespace

MatrixMarketHeader parse_matrix_market_banner(const std::string& line) {
    const auto tok = tokens(line);
    if (tok.empty() || tok[0] != "%%MatrixMarket") {
        throw ParseError(1, "missing %%MatrixMarket banner");
    }
    if (tok.size() != 5) throw ParseError(1, "banner needs object, format, field and symmetry");
    if (lower(tok[1]) != "matrix") throw ParseError(1, "unsupported object '" + tok[1] + "'");

    Header h;
    const auto fmt = lower(tok[2]);
    if (fmt == "coordinate") {
        h.format = Header::Format::coordinate;
    } else if (fmt == "array") {
        h.format = Header::Format::array;
    } else {
        throw ParseError(1, "unknown format '" + tok[2] + "'");
    }

    const auto field = lower(tok[3]);
    if (field == "real" || field == "double") {
        h.field = Header::Field::real;
    } else if (field == "complex") {
        h.field = Header::Field::complex;
    } else if (field == "integer") {
        h.field = Header::Field::integer;
    } else if (field == "pattern") {
        throw UnsupportedField("pattern matrices carry no values to analyze");
    } else {
        throw ParseError(1, "unknown field '" + tok[3] + "'");
    }

    const auto sym = lower(tok[4]);
    if (sym == "general") {
        h.symmetry = Header::Symmetry::general;
    } else if (sym == "symmetric") {
        h.symmetry = Header::Symmetry::symmetric;
    } else if (sym == "skew-symmetric") {
        h.symmetry = Header::Symmetry::skew_symmetric;
    } else if (sym == "hermitian") {
        h.symmetry = Header::Symmetry::hermitian;
    } else {
        throw ParseError(1, "unknown symmetry '" + tok[4] + "'");
    }
    if (h.symmetry == Header::Symmetry::hermitian && h.field != Header::Field::complex &&
        h.field != Header::Field::real) {
        throw ParseError(1, "hermitian symmetry needs a real or complex field");
    }
    return h;
}

DenseMatrix read_matrix_market(std::istream& in) {
    LineSource src(in);
    std::string line;
    if (!src.next_raw(line)) throw ParseError(1, "empty input");
    const Header h = parse_matrix_market_banner(line);

    if (!src.next_data(line)) throw ParseError(src.line() + 1, "missing size line");
    const auto size_tok = tokens(line);
    const std::size_t want = h.format == Header::Format::coordinate ? 3 : 2;
    if (size_tok.size() != want) throw ParseError(src.line(), "malformed size line");
    const long long rows = parse_integer(size_tok[0], src.line());
    const long long cols = parse_integer(size_tok[1], src.line());
    if (rows <= 0 || cols <= 0) throw ParseError(src.line(), "dimensions must be positive");
    if (rows != cols) {
        throw DimensionMismatch("matrix is " + std::to_string(rows) + "x" + std::to_string(cols) +
                                ", expected square");
    }
    const auto n = static_cast<std::size_t>(rows);
    std::vector<Complex> a(n * n);
    const std::size_t nvals = values_per_entry(h.field);

    if (h.format == Header::Format::coordinate) {
        const long long nnz = parse_integer(size_tok[2], src.line());
        if (nnz < 0) throw ParseError(src.line(), "negative entry count");
        long long seen = 0;
        while (src.next_data(line)) {
            const auto tok = tokens(line);
            if (seen == nnz) throw ParseError(src.line(), "more entries than the declared " +
                                                              std::to_string(nnz));
            if (tok.size() != 2 + nvals) throw ParseError(src.line(), "wrong number of fields");
            const long long i = parse_integer(tok[0], src.line());
            const long long j = parse_integer(tok[1], src.line());
            if (i < 1 || j < 1 || i > rows || j > cols) {
                throw ParseError(src.line(), "index out of range");
            }
            const Complex v = read_value(tok, 2, h.field, src.line());
            place(a, n, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), v,
                  h.symmetry, src.line());
            ++seen;
        }
        if (seen != nnz) {
            throw ParseError(src.line(), "expected " + std::to_string(nnz) + " entries, found " +
                                             std::to_string(seen));
        }
    } else {
        // Column-major; symmetric kinds list the lower triangle only.
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t first = 0;
            if (h.symmetry == Header::Symmetry::symmetric || h.symmetry == Header::Symmetry::hermitian) {
                first = j;
            } else if (h.symmetry == Header::Symmetry::skew_symmetric) {
                first = j + 1;
            }
            for (std::size_t i = first; i < n; ++i) slots.emplace_back(i, j);
        }
        std::size_t k = 0;
        while (src.next_data(line)) {
            const auto tok = tokens(line);
            if (k == slots.size()) throw ParseError(src.line(), "more values than the matrix holds");
            if (tok.size() != nvals) throw ParseError(src.line(), "wrong number of fields");
            const Complex v = read_value(tok, 0, h.field, src.line());
            place(a, n, slots[k].first, slots[k].second, v, h.symmetry, src.line());
            ++k;
        }
        if (k != slots.size()) {
            throw ParseError(src.line(), "expected " + std::to_string(slots.size()) +
                                             " values, found " + std::to_string(k));
        }
    }

    bool tag_symmetric = h.symmetry == Header::Symmetry::symmetric;
    if (h.symmetry == Header::Symmetry::hermitian && h.field != Header::Field::complex) {
        tag_symmetric = true;
    }
    return DenseMatrix(n, std::move(a),
                       tag_symmetric ? DenseMatrix::Symmetry::symmetric
                                     : DenseMatrix::Symmetry::general);
}

DenseMatrix read_matrix_market(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    return read_matrix_market(in);
}

void write_matrix_market(const DenseMatrix& a, std::ostream& out,
                         const std::vector<std::string>& comments) {
    const bool real = a.is_real();
    const bool sym = a.is_symmetric_tagged();
    out << "%%MatrixMarket matrix array " << (real ? "real" : "complex") << ' '
        << (sym ? "symmetric" : "general") << '\n';
    for (const auto& c : comments) out << "% " << c << '\n';
    const std::size_t n = a.size();
    out << n << ' ' << n << '\n';
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = sym ? j : 0; i < n; ++i) {
            const Complex v = a(i, j);
            out << format_real(v.real());
            if (!real) out << ' ' << format_real(v.imag());
            out << '\n';
        }
    }
}

void write_matrix_market(const DenseMatrix& a, const std::filesystem::path& path,
                         const std::vector<std::string>& comments) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    write_matrix_market(a, out, comments);
    if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace wellsep
