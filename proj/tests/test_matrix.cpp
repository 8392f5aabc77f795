#include <doctest.h>

#include <random>

#include "apolar/errors.hpp"
#include "apolar/matrix.hpp"
#include "testutil.hpp"

using namespace apolar;
using namespace apolar::testutil;

namespace {

RationalMatrix mat(const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<Rational>> converted;
    for (const auto& row : rows) converted.push_back(std::vector<Rational>(row.begin(), row.end()));
    return RationalMatrix::from_rows(converted);
}

RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool kills(const RationalMatrix& m, const std::vector<Rational>& v) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Rational dot(0);
        for (std::size_t j = 0; j < m.cols(); ++j) dot += m.at(i, j) * v[j];
        if (!dot.is_zero()) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("exactla");

TEST_CASE("rref examples") {
    RrefResult r1 = rref(mat({{2, 4}, {1, 2}}));
    CHECK(r1.reduced == mat({{1, 2}, {0, 0}}));
    CHECK(r1.rank == 1);
    CHECK(r1.pivot_cols == std::vector<std::size_t>{0});

    RrefResult r2 = rref(identity(3));
    CHECK(r2.reduced == identity(3));
    CHECK(r2.rank == 3);

    RrefResult r3 = rref(mat({{1, 2, 3}, {0, 1, 1}}));
    CHECK(r3.reduced == mat({{1, 0, 1}, {0, 1, 1}}));
    CHECK(r3.rank == 2);
}

TEST_CASE("rref handles fractions exactly") {
    RationalMatrix m(2, 2);
    m.at(0, 0) = make_rational(1, 3);
    m.at(0, 1) = make_rational(1, 6);
    m.at(1, 0) = make_rational(2, 3);
    m.at(1, 1) = make_rational(1, 3);
    RrefResult r = rref(m);
    CHECK(r.rank == 1);
    CHECK(r.reduced.at(0, 0) == Rational(1));
    CHECK(r.reduced.at(0, 1) == make_rational(1, 2));
}

TEST_CASE("null_space examples") {
    CHECK(null_space(identity(2)).empty());

    auto basis = null_space(RationalMatrix(2, 3));
    REQUIRE(basis.size() == 3);
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(basis[k][j] == (k == j ? Rational(1) : Rational(0)));

    RationalMatrix m = mat({{1, 2, 3}, {0, 1, 1}});
    auto ns = null_space(m);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0] == std::vector<Rational>{Rational(-1), Rational(-1), Rational(1)});
    CHECK(kills(m, ns[0]));
}

TEST_CASE("row_space_equal examples") {
    CHECK(row_space_equal(mat({{1, 0}}), mat({{2, 0}})));
    CHECK_FALSE(row_space_equal(mat({{1, 0}}), mat({{0, 1}})));
    CHECK(row_space_equal(mat({{1, 1}, {0, 1}}), identity(2)));
    CHECK_THROWS_AS(row_space_equal(mat({{1, 0}}), mat({{1, 0, 0}})), ShapeMismatch);
}

TEST_CASE("rref properties on random matrices") {
    std::mt19937 rng(6u);
    for (int i = 0; i < 80; ++i) {
        std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        RationalMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = small_rational(rng);

        RrefResult first = rref(m);
        CHECK(rref(first.reduced).reduced == first.reduced);  // idempotent

        auto ns = null_space(m);
        CHECK(first.rank + ns.size() == cols);  // rank-nullity
        for (const auto& v : ns) CHECK(kills(m, v));
        CHECK(row_space_equal(m, first.reduced));
    }
}

TEST_SUITE_END();
