#include <doctest.h>

#include <random>

#include "apolar/errors.hpp"
#include "apolar/parser.hpp"
#include "apolar/polynomial.hpp"
#include "testutil.hpp"

using namespace apolar;
using namespace apolar::testutil;

TEST_SUITE_BEGIN("polycore");

TEST_CASE("rationals normalize and round-trip") {
    CHECK(make_rational(1, -2) == make_rational(-1, 2));
    CHECK(make_rational(-4, -6) == make_rational(2, 3));
    CHECK(denominator(make_rational(3, -9)) == 3);
    CHECK(format_rational(q("-6/8")) == "-3/4");
    CHECK(format_rational(Rational(7)) == "7");
    CHECK(parse_rational("0") == Rational(0));
    CHECK(parse_rational("+5/10") == make_rational(1, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), SyntaxError);
    CHECK_THROWS_AS(parse_rational("2x"), SyntaxError);
    CHECK_THROWS_AS(parse_rational(""), SyntaxError);
}

TEST_CASE("points parse and format") {
    Point x = pt("1/2,-3");
    CHECK(x == Point{make_rational(1, 2), Rational(-3)});
    CHECK(format_point(x) == "(1/2, -3)");
    CHECK_THROWS_AS(pt("1,,2"), SyntaxError);
    CHECK_THROWS_AS(pt(""), SyntaxError);
}

TEST_CASE("parse_poly examples") {
    Polynomial f = pp("x^2 - y");
    CHECK(f.coefficient(MultiIndex{2, 0}) == Rational(1));
    CHECK(f.coefficient(MultiIndex{0, 1}) == Rational(-1));
    CHECK(f.terms().size() == 2);

    Polynomial g = pp("3/4*x*y + 1");
    CHECK(g.coefficient(MultiIndex{1, 1}) == make_rational(3, 4));
    CHECK(g.coefficient(MultiIndex{0, 0}) == Rational(1));

    CHECK_THROWS_AS(pp("x + z"), UnknownVariable);
}

TEST_CASE("parse_poly grammar corners") {
    CHECK(pp("-x") == pp("0 - x"));
    CHECK(pp("(x + y)^2") == pp("x^2 + 2*x*y + y^2"));
    CHECK(pp("x - (-1)").coefficient(MultiIndex{0, 0}) == Rational(1));
    CHECK(pp("2") == Polynomial::constant(2, Rational(2)));
    CHECK_THROWS_AS(pp("x - -1"), SyntaxError);   // signs do not stack
    CHECK_THROWS_AS(pp("2x"), SyntaxError);       // no implicit multiplication
    CHECK_THROWS_AS(pp("x^-1"), SyntaxError);     // exponents are nonnegative
    CHECK_THROWS_AS(pp("x^(2)"), SyntaxError);    // exponent must be a literal
    CHECK_THROWS_AS(pp("x/y"), SyntaxError);      // '/' only inside rational literals
    CHECK_THROWS_AS(pp("(x"), SyntaxError);
    CHECK_THROWS_AS(pp(""), SyntaxError);
    CHECK_THROWS_AS(pp("x +"), SyntaxError);
}

TEST_CASE("syntax errors carry 1-based columns") {
    try {
        pp("x + *y");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 5);
    }
    try {
        pp("x + zz*y");
        FAIL("expected UnknownVariable");
    } catch (const UnknownVariable& e) {
        CHECK(e.name() == "zz");
    }
}

TEST_CASE("format_poly examples") {
    CHECK(format_poly(Polynomial(2), XY) == "0");
    CHECK(format_poly(pp("x^2 - y"), XY) == "x^2 - y");
    CHECK(format_poly(pp("3/4*x*y"), XY) == "3/4*x*y");
    CHECK(format_poly(pp("-x - 1"), XY) == "-x - 1");
    // graded-lex descending: higher degree first, x-major within a degree
    CHECK(format_poly(pp("y + x + y^2 + x*y + 1 + x^2"), XY) ==
          "x^2 + x*y + y^2 + x + y + 1");
}

TEST_CASE("ring operations") {
    CHECK((pp("x") + pp("-x")).is_zero());
    CHECK(pp("x + y") * pp("x - y") == pp("x^2 - y^2"));
    CHECK(pp("x^2 - y") * pp("y^2") == pp("x^2*y^2 - y^3"));
    CHECK(pp("x") - pp("x") == Polynomial(2));
    CHECK_THROWS_AS(pp("x") + parse_poly("x", X), ArityMismatch);
}

TEST_CASE("pow") {
    CHECK(pp("x + 1").pow(2) == pp("x^2 + 2*x + 1"));
    CHECK(pp("x*y - 7").pow(0) == pp("1"));
    CHECK(Polynomial(2).pow(0) == pp("1"));
    CHECK(pp("x*y").pow(2) == pp("x^2*y^2"));
}

TEST_CASE("differentiate") {
    CHECK(pp("x^2").derivative(MultiIndex{1, 0}) == pp("2*x"));
    CHECK(pp("x^2 - y").derivative(MultiIndex{2, 0}) == pp("2"));
    CHECK(pp("y^2").derivative(MultiIndex{0, 3}).is_zero());
    // falling factorials, no division: D^(3,0) x^3 = 6
    CHECK(pp("x^3").derivative(MultiIndex{3, 0}) == pp("6"));
}

TEST_CASE("evaluate") {
    CHECK(pp("x^2 + y").evaluate({Rational(2), Rational(3)}) == Rational(7));
    CHECK(pp("x^2 + y^2 - 1").evaluate({Rational(1), Rational(0)}) == Rational(0));
    CHECK(pp("x - 1").evaluate({Rational(0), Rational(0)}) == Rational(-1));
}

TEST_CASE("shift to origin") {
    CHECK(parse_poly("x^2", X).shifted({Rational(1)}) == parse_poly("x^2 + 2*x + 1", X));
    Polynomial f = pp("x^3*y - 2*x + 5/3");
    CHECK(f.shifted({Rational(0), Rational(0)}) == f);
    CHECK(pp("x*y").shifted(pt("1,2")) == pp("x*y + 2*x + y + 2"));
}

TEST_CASE("degree and leading form") {
    CHECK(pp("x^2 + y^2 - 1").degree() == 2);
    CHECK(pp("x^2 + y^2 - 1").leading_form() == pp("x^2 + y^2"));
    CHECK(pp("y - x^2").leading_form() == pp("-x^2"));
    CHECK(pp("5").degree() == 0);
    CHECK(pp("5").leading_form() == pp("5"));
    CHECK_THROWS_AS(Polynomial(2).degree(), ZeroPolynomial);
    CHECK_THROWS_AS(Polynomial(2).leading_form(), ZeroPolynomial);
}

TEST_CASE("parse/format round trip on random polynomials") {
    std::mt19937 rng(1u);
    for (int i = 0; i < 200; ++i) {
        std::size_t nvars = 1 + rng() % 3;
        const auto& vars = nvars == 1 ? X : nvars == 2 ? XY : XYZ;
        Polynomial f = random_poly(rng, nvars, 4, 6);
        CHECK(parse_poly(format_poly(f, vars), vars) == f);
    }
    CHECK(parse_poly(format_poly(Polynomial(2), XY), XY) == Polynomial(2));
}

TEST_CASE("ring laws on random triples") {
    std::mt19937 rng(2u);
    for (int i = 0; i < 60; ++i) {
        Polynomial f = random_poly(rng, 2, 4, 6);
        Polynomial g = random_poly(rng, 2, 4, 6);
        Polynomial h = random_poly(rng, 2, 4, 6);
        CHECK((f + g) + h == f + (g + h));
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
    }
}

TEST_CASE("Leibniz rule for unit derivatives") {
    std::mt19937 rng(3u);
    for (int i = 0; i < 60; ++i) {
        Polynomial f = random_poly(rng, 2, 4, 5);
        Polynomial g = random_poly(rng, 2, 4, 5);
        for (std::size_t j = 0; j < 2; ++j)
            CHECK((f * g).derivative(j) == f.derivative(j) * g + f * g.derivative(j));
    }
}

TEST_CASE("shift correctness at random points") {
    std::mt19937 rng(4u);
    for (int i = 0; i < 60; ++i) {
        Polynomial f = random_poly(rng, 2, 4, 5);
        Point x0 = random_point(rng, 2);
        Point y = random_point(rng, 2);
        Point sum{x0[0] + y[0], x0[1] + y[1]};
        CHECK(f.shifted(x0).evaluate(y) == f.evaluate(sum));
    }
}

TEST_CASE("degree is multiplicative") {
    std::mt19937 rng(5u);
    int checked = 0;
    while (checked < 60) {
        Polynomial f = random_poly(rng, 2, 4, 5);
        Polynomial g = random_poly(rng, 2, 4, 5);
        if (f.is_zero() || g.is_zero()) continue;
        CHECK((f * g).degree() == f.degree() + g.degree());
        ++checked;
    }
}

TEST_CASE("variable name validation") {
    CHECK_THROWS_AS(validate_var_names({}), SyntaxError);
    CHECK_THROWS_AS(validate_var_names({"x", "x"}), SyntaxError);
    CHECK_THROWS_AS(validate_var_names({"1x"}), SyntaxError);
    CHECK_THROWS_AS(validate_var_names({"a-b"}), SyntaxError);
    CHECK_NOTHROW(validate_var_names({"x1", "Y", "zz9"}));
    CHECK(dual_var_names(3) == std::vector<std::string>{"l1", "l2", "l3"});
}

TEST_SUITE_END();
