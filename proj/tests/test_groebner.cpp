#include <doctest.h>

#include <algorithm>
#include <random>

#include "apolar/groebner.hpp"
#include "testutil.hpp"

using namespace apolar;
using namespace apolar::testutil;

namespace {

const MonomialOrder lex2 = MonomialOrder::lex(2);

Polynomial spoly(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
    MultiIndex lf = leading_monomial(f, order), lg = leading_monomial(g, order);
    MultiIndex l = lf.lcm(lg);
    Polynomial a = Polynomial::monomial(l.minus(lf), Rational(1) / f.coefficient(lf));
    Polynomial b = Polynomial::monomial(l.minus(lg), Rational(1) / g.coefficient(lg));
    return a * f - b * g;
}

}  // namespace

TEST_SUITE_BEGIN("groebner");

TEST_CASE("monomial orders") {
    MultiIndex one{0, 0}, x{1, 0}, y{0, 1}, x2{2, 0}, y3{0, 3};
    CHECK(lex2.less(y, x));
    CHECK(lex2.less(one, y));
    CHECK(lex2.less(y3, x));  // lex ignores total degree
    CHECK(lex2.less(x, x2));

    // grevlex on three variables, degree-2 slice:
    // x^2 > x*y > y^2 > x*z > y*z > z^2
    MonomialOrder g3 = MonomialOrder::grevlex(3);
    std::vector<MultiIndex> expected{{2, 0, 0}, {1, 1, 0}, {0, 2, 0},
                                     {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
    for (std::size_t i = 0; i + 1 < expected.size(); ++i)
        CHECK(g3.less(expected[i + 1], expected[i]));
    CHECK(g3.less(MultiIndex{0, 0, 0}, MultiIndex{0, 0, 1}));  // 1 is minimal
    CHECK(g3.less(MultiIndex{0, 0, 1}, MultiIndex{0, 1, 0}));  // z < y
    CHECK(g3.less(MultiIndex{0, 1, 0}, MultiIndex{1, 0, 0}));  // y < x

    // multiplicative on random pairs
    std::mt19937 rng(8u);
    for (int i = 0; i < 60; ++i) {
        MultiIndex a = random_exponent(rng, 3, 4), b = random_exponent(rng, 3, 4);
        MultiIndex c = random_exponent(rng, 3, 4);
        for (const MonomialOrder& ord : {MonomialOrder::lex(3), g3})
            if (ord.less(a, b)) CHECK(ord.less(a.plus(c), b.plus(c)));
    }
}

TEST_CASE("normal_form examples") {
    CHECK(normal_form(pp("x^3"), f3(), lex2) == pp("x*y"));
    CHECK(normal_form(pp("y - x^2"), f3(), lex2).is_zero());
    CHECK(normal_form(pp("1"), f3(), lex2) == pp("1"));
}

TEST_CASE("normal_form takes the first applicable divisor") {
    Polynomial f = pp("x*y^2 - x");
    std::vector<Polynomial> forward = sys({"x*y - 1", "y^2 - 1"});
    std::vector<Polynomial> backward = sys({"y^2 - 1", "x*y - 1"});
    CHECK(normal_form(f, forward, lex2) == pp("y - x"));
    CHECK(normal_form(f, backward, lex2).is_zero());
}

TEST_CASE("normal_form is idempotent and linear over the remainder") {
    std::mt19937 rng(9u);
    GroebnerBasis gb = buchberger(f3(), lex2);
    for (int i = 0; i < 60; ++i) {
        Polynomial f = random_poly(rng, 2, 5, 6);
        Polynomial r = normal_form(f, gb.generators, gb.order);
        CHECK(normal_form(r, gb.generators, gb.order) == r);
    }
}

TEST_CASE("buchberger examples") {
    GroebnerBasis gb3 = buchberger(f3(), lex2);
    REQUIRE(gb3.generators.size() == 2);
    CHECK(gb3.generators[0] == pp("x^2 - y"));
    CHECK(gb3.generators[1] == pp("y^2"));

    GroebnerBasis gb8 = buchberger(f8(), lex2);
    REQUIRE(gb8.generators.size() == 1);
    CHECK(gb8.generators[0] == pp("x"));

    GroebnerBasis single = buchberger({pp("x")}, lex2);
    REQUIRE(single.generators.size() == 1);
    CHECK(single.generators[0] == pp("x"));
}

TEST_CASE("reduced basis invariants") {
    for (const auto& gens : {f3(), f4(), f5(), f6(), f8()}) {
        GroebnerBasis gb = buchberger(gens, lex2);
        for (const Polynomial& g : gb.generators) {
            CHECK(g.coefficient(leading_monomial(g, gb.order)) == Rational(1));  // monic
            for (const Polynomial& other : gb.generators) {
                if (&other == &g) continue;
                MultiIndex lm = leading_monomial(other, gb.order);
                for (const auto& [alpha, c] : g.terms()) CHECK_FALSE(lm.divides(alpha));
            }
        }
        // Buchberger criterion: every S-polynomial reduces to zero.
        for (std::size_t i = 0; i < gb.generators.size(); ++i)
            for (std::size_t j = i + 1; j < gb.generators.size(); ++j) {
                Polynomial s = spoly(gb.generators[i], gb.generators[j], gb.order);
                if (!s.is_zero()) CHECK(normal_form(s, gb.generators, gb.order).is_zero());
            }
        // Generators of the input reduce to zero.
        for (const Polynomial& f : gens) CHECK(normal_form(f, gb.generators, gb.order).is_zero());
    }
}

TEST_CASE("reduced basis is unique under input shuffling and scaling") {
    std::mt19937 rng(10u);
    for (const auto& gens : {f3(), f4(), f5(), f6()}) {
        GroebnerBasis reference = buchberger(gens, lex2);
        std::vector<Polynomial> mixed = gens;
        mixed.push_back(gens[0] * gens[1]);  // redundant element of the ideal
        for (int trial = 0; trial < 5; ++trial) {
            std::shuffle(mixed.begin(), mixed.end(), rng);
            std::vector<Polynomial> scaled;
            for (const Polynomial& g : mixed)
                scaled.push_back(g * make_rational(1 + rng() % 5, 1 + rng() % 5));
            GroebnerBasis gb = buchberger(scaled, lex2);
            CHECK(gb.generators == reference.generators);
        }
    }
}

TEST_CASE("standard_monomials examples") {
    auto sm3 = standard_monomials(buchberger(f3(), lex2));
    REQUIRE(sm3.has_value());
    CHECK(*sm3 == std::vector<MultiIndex>{{0, 0}, {1, 0}, {0, 1}, {1, 1}});

    CHECK_FALSE(standard_monomials(buchberger({pp("x")}, lex2)).has_value());

    auto sm1 = standard_monomials(buchberger(f1(), lex2));
    REQUIRE(sm1.has_value());
    CHECK(*sm1 == std::vector<MultiIndex>{{0, 0}});
}

TEST_CASE("quotient_dimension examples") {
    CHECK(quotient_dimension(buchberger(f3(), lex2)) == 4);
    CHECK(quotient_dimension(buchberger(f1(), lex2)) == 1);
    CHECK_FALSE(quotient_dimension(buchberger(f8(), lex2)).has_value());
    // unit ideal: dimension 0, still zero-dimensional
    CHECK(quotient_dimension(buchberger(f7(), MonomialOrder::lex(1))) == 0);
}

TEST_CASE("quotient dimension does not depend on the order") {
    for (const auto& gens : {f2(), f3(), f4(), f5(), f6()}) {
        auto via_lex = quotient_dimension(buchberger(gens, lex2));
        auto via_grevlex = quotient_dimension(buchberger(gens, MonomialOrder::grevlex(2)));
        CHECK(via_lex == via_grevlex);
    }
}

TEST_CASE("membership oracle detects ideal elements") {
    std::mt19937 rng(11u);
    GroebnerBasis gb = buchberger(f3(), lex2);
    for (int i = 0; i < 40; ++i) {
        Polynomial a = random_poly(rng, 2, 2, 4);
        Polynomial b = random_poly(rng, 2, 2, 4);
        Polynomial member = a * f3()[0] + b * f3()[1];
        CHECK(normal_form(member, gb.generators, gb.order).is_zero());
    }
    CHECK_FALSE(normal_form(pp("x"), gb.generators, gb.order).is_zero());
    CHECK_FALSE(normal_form(pp("x*y + 1"), gb.generators, gb.order).is_zero());
}

TEST_SUITE_END();
