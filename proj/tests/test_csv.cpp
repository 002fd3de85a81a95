#include <doctest.h>

#include <random>

#include "fuzzmat/csv.hpp"
#include "fuzzmat/report.hpp"
#include "support/paper_fixtures.hpp"

using namespace fuzzmat;

TEST_CASE("a divisor column loads as a raw data table") {
    const std::string text =
        "label,divisor,A1,A2\n"
        "20-23,4,3,2\n"
        "24-30,6,20,6\n";
    const RawDataTable t = require_table(parse_table(text), "t");
    CHECK(t.row_labels == std::vector<std::string>{"20-23", "24-30"});
    CHECK(t.row_divisors == std::vector<double>{4, 6});
    CHECK(t.col_labels == std::vector<std::string>{"A1", "A2"});
    CHECK(t.counts == Matrix{{3, 2}, {20, 6}});
}

TEST_CASE("a label header without divisor loads as a labeled matrix") {
    const LabeledMatrix m = require_matrix(parse_table("label,R1,R2\nD1,1,0\nD2,-1,1\n"), "m");
    CHECK(m.row_labels == std::vector<std::string>{"D1", "D2"});
    CHECK(m.matrix == Matrix{{1, 0}, {-1, 1}});
}

TEST_CASE("a headerless file loads as a bare matrix") {
    const LabeledMatrix m = require_matrix(parse_table("1,2\n3,4"), "m");
    CHECK(m.row_labels.empty());
    CHECK(m.matrix == Matrix{{1, 2}, {3, 4}});
}

TEST_CASE("the trailing newline is optional") {
    CHECK(require_matrix(parse_table("1,2\n3,4"), "a").matrix ==
          require_matrix(parse_table("1,2\n3,4\n"), "b").matrix);
}

TEST_CASE("parse errors carry coordinates") {
    CHECK_THROWS_WITH_AS(parse_table(""), doctest::Contains("empty"), input_error);
    CHECK_THROWS_WITH_AS(parse_table("label,A\nx,1\ny,2,3\n"), doctest::Contains("row 3"),
                         input_error);
    CHECK_THROWS_WITH_AS(parse_table("label,A\nx,foo\n"), doctest::Contains("column 2"),
                         input_error);
    CHECK_THROWS_WITH_AS(parse_table("label,A\nx,foo\n"), doctest::Contains("'foo'"),
                         input_error);
    CHECK_THROWS_WITH_AS(parse_table("label,A\nx,1\nx,2\n"), doctest::Contains("duplicate"),
                         input_error);
    CHECK_THROWS_WITH_AS(parse_table("label,A,A\nx,1,2\n"), doctest::Contains("duplicate"),
                         input_error);
    CHECK_THROWS_AS(require_matrix(parse_table("label,divisor,A\nx,1,2\n"), "m"), input_error);
    CHECK_THROWS_AS(require_table(parse_table("1,2\n"), "t"), input_error);
}

TEST_CASE("negative counts are rejected at table validation") {
    CHECK_THROWS_AS(parse_table("label,divisor,A\nx,1,-3\n"), input_error);
}

TEST_CASE("written TSV matrices reload identically") {
    std::mt19937 rng(107);
    std::uniform_int_distribution<int> w(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 7);
        Matrix m(dim(rng), dim(rng));
        for (double& v : m.entries()) v = w(rng);
        const auto rows = fixtures::labels("r", m.rows());
        const auto cols = fixtures::labels("c", m.cols());

        const LabeledMatrix back =
            require_matrix(parse_table(matrix_tsv(m, rows, cols, true)), "roundtrip");
        CHECK(back.matrix == m);
        CHECK(back.row_labels == rows);
        CHECK(back.col_labels == cols);
    }
}

TEST_CASE("real-valued TSV survives a reload at 6 significant digits") {
    Matrix m{{0.75, 0.333333}, {2.67, 0.121212}};
    const LabeledMatrix back = require_matrix(
        parse_table(matrix_tsv(m, fixtures::labels("r", 2), fixtures::labels("c", 2), false)),
        "roundtrip");
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            CHECK(back.matrix.at(i, j) == doctest::Approx(m.at(i, j)).epsilon(1e-6));
}

TEST_CASE("the shipped study fixture matches the embedded data") {
    const std::string dir = FUZZMAT_FIXTURES_DIR;
    const RawDataTable t = require_table(load_table(dir + "/hiv_migrant_ird.csv"), "fixture");
    const RawDataTable want = fixtures::hiv_migrant_ird();
    CHECK(t.counts == want.counts);
    CHECK(t.row_divisors == want.row_divisors);
    CHECK(t.row_labels == want.row_labels);
}

TEST_CASE("registry files parse") {
    const std::string dir = FUZZMAT_FIXTURES_DIR;
    const TransformRegistry reg = load_registry(dir + "/paper_registry.csv");
    CHECK(reg.has(ModelKind::CetdMatrix, ModelKind::Bam));
    CHECK(reg.has(ModelKind::Bam, ModelKind::CetdMatrix));
    CHECK(reg.has(ModelKind::Frm, ModelKind::Bam));
    CHECK(reg.has(ModelKind::Bam, ModelKind::Frm));
    CHECK_FALSE(reg.has(ModelKind::Fam, ModelKind::Bam));
}
