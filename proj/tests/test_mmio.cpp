#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "doctest.h"
#include "test_support.hpp"
#include "wellsep/errors.hpp"
#include "wellsep/mmio.hpp"
#include "wellsep/table.hpp"

using namespace wellsep;

namespace {

DenseMatrix parse(const std::string& text) {
    std::istringstream in(text);
    return read_matrix_market(in);
}

std::size_t error_line(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("banner errors") {
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("%%MatrixMarket matrix\n1 1\n"), ParseError);
    CHECK_THROWS_AS(parse("%%MatrixMarket vector coordinate real general\n"), ParseError);
    CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate quaternion general\n"), ParseError);
    CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n1 1\n"),
                    UnsupportedField);
    CHECK(error_line("hello\n") == 1);
}

TEST_CASE("coordinate diagonal example") {
    const auto a = parse("%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 5\n2 2 7\n");
    CHECK(a.size() == 2);
    CHECK(a(0, 0) == Complex(5.0));
    CHECK(a(1, 1) == Complex(7.0));
    CHECK(a(0, 1) == Complex(0.0));
    CHECK_FALSE(a.is_symmetric_tagged());
}

TEST_CASE("symmetric storage is mirrored and tagged") {
    const auto a = read_matrix_market(std::filesystem::path(WELLSEP_FIXTURES) / "sym3.mtx");
    CHECK(a.is_symmetric_tagged());
    CHECK(a(0, 1) == Complex(1.0));
    CHECK(a(1, 0) == Complex(1.0));
    CHECK(a(1, 2) == Complex(-2.0));
    CHECK(a(0, 2) == Complex(0.0));
}

TEST_CASE("skew, hermitian, integer and complex fields") {
    const auto s = parse("%%MatrixMarket matrix coordinate real skew-symmetric\n2 2 1\n2 1 3\n");
    CHECK(s(1, 0) == Complex(3.0));
    CHECK(s(0, 1) == Complex(-3.0));
    const auto h = parse("%%MatrixMarket matrix coordinate complex hermitian\n2 2 3\n1 1 1 0\n2 1 2 3\n2 2 4 0\n");
    CHECK(h(1, 0) == Complex(2.0, 3.0));
    CHECK(h(0, 1) == Complex(2.0, -3.0));
    CHECK_FALSE(h.is_symmetric_tagged());
    const auto i = parse("%%MatrixMarket matrix array integer general\n2 2\n1\n2\n3\n4\n");
    CHECK(i(1, 0) == Complex(2.0));
    CHECK(i(0, 1) == Complex(3.0));
}

TEST_CASE("duplicates are summed") {
    const auto a = parse("%%MatrixMarket matrix coordinate real general\n1 1 2\n1 1 2\n1 1 3\n");
    CHECK(a(0, 0) == Complex(5.0));
}

TEST_CASE("structural errors carry line numbers") {
    CHECK(error_line("%%MatrixMarket matrix coordinate real general\n2 2 3\n1 1 5\n2 2 7\n") == 4);
    CHECK(error_line("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1 5\n2 2 7\n") == 4);
    CHECK(error_line("%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 5\n") == 3);
    CHECK(error_line("%%MatrixMarket matrix coordinate real general\n% c\n2 2 1\n1 1 x\n") == 4);
    CHECK_THROWS_AS(parse("%%MatrixMarket matrix coordinate real general\n2 3 0\n"), DimensionMismatch);
    CHECK_THROWS_AS(read_matrix_market(std::filesystem::path("/nonexistent/none.mtx")), IoError);
    try {
        parse("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1 x\n");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("line 3: ", 0) == 0);
    }
}

TEST_CASE("property: Matrix Market round trip is exact") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const std::size_t n = 1 + 3 * seed;
        for (const auto& a : {testing::random_general(n, seed), testing::random_symmetric(n, seed)}) {
            std::stringstream buf;
            write_matrix_market(a, buf, {"seed " + std::to_string(seed)});
            const auto b = read_matrix_market(buf);
            CHECK(b == a);
            CHECK(b.is_symmetric_tagged() == a.is_symmetric_tagged());
        }
        std::vector<std::vector<Complex>> rows(n, std::vector<Complex>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rows[i][j] = Complex(0.1 * double(i) + 1.0 / 3.0, -double(j) / 7.0);
        const auto z = DenseMatrix::from_complex_rows(rows);
        std::stringstream buf;
        write_matrix_market(z, buf);
        CHECK(read_matrix_market(buf) == z);
    }
}

namespace {

ResultTable sample_table() {
    ResultTable t("sample", {{"i", ColumnType::index}, {"x", ColumnType::real},
                             {"z", ColumnType::complex}, {"note", ColumnType::string}});
    t.set_meta("input_hash", "abc");
    t.set_meta("radius_mode", "row");
    t.set_meta("seed", "42");
    t.set_meta("tool_version", "test");
    return t;
}

}  // namespace

TEST_CASE("CSV with no rows has metadata and header only") {
    auto t = sample_table();
    std::ostringstream out;
    write_table(t, TableFormat::csv, out);
    CHECK(out.str() ==
          "# schema=sample\n# input_hash=abc\n# radius_mode=row\n# seed=42\n# tool_version=test\n"
          "i,x,z_re,z_im,note\n");
}

TEST_CASE("CSV values round-trip at 17 significant digits") {
    auto t = sample_table();
    const double x = 1.0 / 3.0;
    t.add_row({std::int64_t{3}, x, Complex(0.1, -2.5e-300), std::string("a,\"b\"")});
    std::ostringstream out;
    write_table(t, TableFormat::csv, out);
    const std::string s = out.str();
    const auto last = s.substr(s.rfind("i,x,z_re,z_im,note\n") + 19);
    CHECK(last == "3," + format_real(x) + ",0.10000000000000001,-2.5e-300,\"a,\"\"b\"\"\"\n");
    CHECK(std::stod(format_real(x)) == x);
    CHECK(format_real(std::numeric_limits<double>::quiet_NaN()) == "nan");
    CHECK(format_real(-std::numeric_limits<double>::infinity()) == "-inf");
}

TEST_CASE("JSON layout") {
    auto t = sample_table();
    t.add_row({std::int64_t{0}, 2.0, Complex(1.0, 2.0), std::string("ok")});
    std::ostringstream out;
    write_table(t, TableFormat::json, out);
    const auto doc = nlohmann::json::parse(out.str());
    CHECK(doc["metadata"]["schema"] == "sample");
    CHECK(doc["metadata"]["seed"] == "42");
    CHECK(doc["columns"].size() == 5);
    CHECK(doc["columns"][3]["name"] == "z_im");
    CHECK(doc["rows"][0][3] == 2.0);
}

TEST_CASE("table checks") {
    auto t = sample_table();
    CHECK_THROWS_AS(t.add_row({std::int64_t{0}}), PreconditionError);
    CHECK_THROWS_AS(t.add_row({1.0, 2.0, Complex(), std::string()}), PreconditionError);
    ResultTable bare("bare", {{"x", ColumnType::real}});
    std::ostringstream out;
    CHECK_THROWS_AS(write_table(bare, TableFormat::csv, out), PreconditionError);
    CHECK_THROWS_AS(parse_table_format("xml"), PreconditionError);
}

TEST_CASE("fnv1a digest") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(file_hash(std::filesystem::path(WELLSEP_FIXTURES) / "diag2.mtx").size() == 16);
}
