#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "qtorus/quad_field.hpp"

using namespace qtorus;

namespace {

QuadNum sqrt2() { return QuadNum::sqrt_of(2); }
QuadNum golden() { return QuadNum::make(1, 1, 2, 5); }

// Deterministic cross-section of one field, exercised by the axiom checks.
std::vector<QuadNum> field_samples(long d) {
    std::vector<QuadNum> xs;
    for (long p = -2; p <= 2; ++p)
        for (long q = -2; q <= 2; ++q)
            for (long r = 1; r <= 3; ++r) xs.push_back(QuadNum::make(p, q, r, d));
    return xs;
}

} // namespace

TEST_CASE("normalization reaches the canonical form") {
    QuadNum x = QuadNum::make(2, 2, 4, 8); // (2 + 2*sqrt(8))/4 = (1 + 2*sqrt(2))/2
    CHECK(x.p() == 1);
    CHECK(x.q() == 2);
    CHECK(x.r() == 2);
    CHECK(x.disc() == 2);
    CHECK(QuadNum::make(x.p(), x.q(), x.r(), x.disc()) == x); // idempotent

    QuadNum y = QuadNum::make(0, 1, 1, 2);
    CHECK(y == sqrt2());
    CHECK_FALSE(y.is_rational());

    CHECK(QuadNum::make(-1, -1, -2, 2) == QuadNum::make(1, 1, 2, 2)); // sign of r
    CHECK(QuadNum::make(3, 1, 1, 4) == QuadNum(5)); // perfect square radicand
    CHECK(QuadNum::make(4, 0, 6, 7) == QuadNum(make_rational(2, 3)));

    CHECK_THROWS_AS(QuadNum::make(1, 1, 0, 2), ZeroDenominator);
    CHECK_THROWS_AS(QuadNum::make(1, 0, 2, 5).require_irrational(), RationalValue);
}

TEST_CASE("arithmetic matches hand-computed values") {
    CHECK(sqrt2() * sqrt2() == QuadNum(2));
    CHECK((sqrt2() * sqrt2()).is_rational());

    QuadNum phi = golden();
    QuadNum phibar = QuadNum::make(1, -1, 2, 5);
    CHECK(phi + phibar == QuadNum(1));

    // sqrt(2)/(1 + sqrt(2)) rationalizes to 2 - sqrt(2); back-multiplication
    // is the independent check.
    QuadNum quot = sqrt2() / (QuadNum(1) + sqrt2());
    CHECK(quot == QuadNum::make(2, -1, 1, 2));
    CHECK(quot * (QuadNum(1) + sqrt2()) == sqrt2());

    CHECK_THROWS_AS(sqrt2() + QuadNum::sqrt_of(3), MixedDiscriminant);
    CHECK_THROWS_AS(sqrt2() / QuadNum(0), DivisionByZero);
    CHECK_THROWS_AS(QuadNum(0).inverse(), DivisionByZero);
}

TEST_CASE("field axioms hold exactly on a sample cross-section") {
    std::vector<QuadNum> xs = field_samples(3);
    for (std::size_t i = 0; i < xs.size(); i += 7) {
        for (std::size_t j = 1; j < xs.size(); j += 11) {
            for (std::size_t k = 2; k < xs.size(); k += 13) {
                const QuadNum &x = xs[i], &y = xs[j], &z = xs[k];
                CHECK((x + y) + z == x + (y + z));
                CHECK(x * (y + z) == x * y + x * z);
            }
        }
    }
    for (const QuadNum& x : xs) {
        if (x.is_zero()) continue;
        CHECK(x * x.inverse() == QuadNum(1));
    }
}

TEST_CASE("floor is exact at integer boundaries") {
    CHECK(sqrt2().floor() == 1);
    CHECK((-sqrt2()).floor() == -2);
    CHECK(golden().floor() == 1);
    CHECK((-golden()).floor() == -2);
    CHECK(QuadNum(make_rational(7, 2)).floor() == 3);
    CHECK(QuadNum(make_rational(-7, 2)).floor() == -4);
    CHECK(QuadNum(-3).floor() == -3);
    // 5*sqrt(2) sits just above 7; 7 - 5*sqrt(2) just below 0
    CHECK((QuadNum(5) * sqrt2()).floor() == 7);
    CHECK((QuadNum(7) - QuadNum(5) * sqrt2()).floor() == -1);
}

TEST_CASE("value comparisons are exact") {
    CHECK(sqrt2() < QuadNum(make_rational(3, 2)));
    CHECK(sqrt2() > QuadNum(make_rational(7, 5)));
    CHECK(golden() > QuadNum(1));
    CHECK(sqrt2().sign() == 1);
    CHECK((-sqrt2()).sign() == -1);
    CHECK(QuadNum(0).sign() == 0);
}

TEST_CASE("grammar round-trips") {
    CHECK(parse_quad("sqrt(2)") == sqrt2());
    CHECK(parse_quad("(1+sqrt(5))/2") == golden());
    CHECK(parse_quad("-3*sqrt(7)/2") == QuadNum::make(0, -3, 2, 7));
    CHECK(parse_quad("1/2 + sqrt(8)") == QuadNum::make(1, 4, 2, 2));
    CHECK(parse_quad("3/4") == QuadNum(make_rational(3, 4)));
    CHECK(parse_quad("sqrt(9/4)") == QuadNum(make_rational(3, 2)));

    std::vector<QuadNum> values = {sqrt2(),
                                   golden(),
                                   QuadNum::make(0, -3, 2, 7),
                                   QuadNum::make(-1, 2, 3, 2),
                                   QuadNum(make_rational(-5, 3)),
                                   QuadNum(0),
                                   QuadNum(7)};
    for (const QuadNum& x : values) CHECK(parse_quad(to_string(x)) == x);

    CHECK_THROWS_AS(parse_quad("sqrt(sqrt(2))"), ParseError);
    CHECK_THROWS_AS(parse_quad("sqrt(0 - 1)"), ParseError);
    CHECK_THROWS_AS(parse_quad("2 +"), ParseError);
    CHECK_THROWS_AS(parse_quad("2 & 3"), ParseError);
    CHECK_THROWS_AS(parse_quad("1/0"), ParseError);
}

TEST_CASE("decimal rendering is display-only but correct") {
    CHECK(sqrt2().approx_decimal(6) == "1.414213");
    CHECK(golden().approx_decimal(4) == "1.6180");
    CHECK(QuadNum(make_rational(1, 4)).approx_decimal(2) == "0.25");
}

TEST_CASE("matrices enforce the unimodular invariant") {
    CHECK_THROWS_AS(Mat2Z(1, 1, 1, 1), NotUnimodular);
    CHECK_THROWS_AS(Mat2Z(0, 2, 1, 0), NotUnimodular);
    Mat2Z m(2, 1, 1, 1);
    CHECK(m.det() == 1);
    Mat2Z s(0, 1, 1, 0);
    CHECK(s.det() == -1);
    CHECK(m * m.inverse() == Mat2Z::identity());
    CHECK(s * s.inverse() == Mat2Z::identity());
    CHECK(s.inverse() * s == Mat2Z::identity());
}

TEST_CASE("Moebius action matches hand values and composes") {
    CHECK(mobius_apply(Mat2Z::identity(), sqrt2()) == sqrt2());
    CHECK(mobius_apply(Mat2Z(1, 1, 0, 1), sqrt2()) == QuadNum(1) + sqrt2());
    CHECK(mobius_apply(Mat2Z(0, 1, 1, 0), sqrt2()) == QuadNum::make(0, 1, 2, 2)); // sqrt(2)/2

    std::vector<Mat2Z> ms = {Mat2Z(1, 1, 0, 1), Mat2Z(0, 1, 1, 0), Mat2Z(2, 1, 1, 1),
                             Mat2Z(3, -1, -2, 1), Mat2Z(-1, 0, 4, -1)};
    std::vector<QuadNum> xs = {sqrt2(), QuadNum(3) + sqrt2(), QuadNum::make(-1, 2, 3, 2)};
    for (const Mat2Z& m1 : ms)
        for (const Mat2Z& m2 : ms)
            for (const QuadNum& x : xs)
                CHECK(mobius_apply(m1 * m2, x) == mobius_apply(m1, mobius_apply(m2, x)));
}

TEST_CASE("continued fractions match the pinned expansions") {
    CFExpansion cf = cf_expand(sqrt2());
    CHECK(cf.preperiod() == std::vector<Int>{1});
    CHECK(cf.period() == std::vector<Int>{2});

    CFExpansion cfphi = cf_expand(golden());
    CHECK(cfphi.preperiod() == std::vector<Int>{1});
    CHECK(cfphi.period() == std::vector<Int>{1});

    CFExpansion cf3 = cf_expand(QuadNum::sqrt_of(3));
    CHECK(cf3.preperiod() == std::vector<Int>{1});
    CHECK(cf3.period() == std::vector<Int>{1, 2});

    CFExpansion cf18 = cf_expand(QuadNum::sqrt_of(18));
    CHECK(cf18.preperiod() == std::vector<Int>{4});
    CHECK(cf18.period() == std::vector<Int>{4, 8});

    CHECK(to_string(cf18) == "[4; (4, 8)]");
    CHECK_THROWS_AS(cf_expand(QuadNum(make_rational(3, 4))), RationalInput);
}

TEST_CASE("expansion evaluation inverts cf_expand") {
    std::vector<QuadNum> values = {sqrt2(),          golden(),
                                   -sqrt2(),         QuadNum::sqrt_of(18),
                                   -golden(),        QuadNum::make(-3, 5, 7, 13),
                                   QuadNum::make(2, -1, 3, 7)};
    for (long p = -2; p <= 2; ++p)
        for (long q = 1; q <= 2; ++q)
            for (long r = 1; r <= 3; ++r) values.push_back(QuadNum::make(p, q, r, 5));
    for (const QuadNum& x : values) {
        CFExpansion cf = cf_expand(x);
        CHECK(cf.evaluate() == x);
        for (const Int& a : cf.period()) CHECK(a >= 1);
    }
}

TEST_CASE("convergent matrices satisfy the recurrence contracts") {
    CFExpansion cf = cf_expand(sqrt2());
    CHECK(convergent_matrix(cf, 0) == Mat2Z::identity());
    CHECK(convergent_matrix(cf, 2) == Mat2Z(3, 1, 2, 1));

    CFExpansion cfphi = cf_expand(golden());
    CHECK(convergent_matrix(cfphi, 3) == Mat2Z(3, 2, 2, 1));

    for (const QuadNum& x : {sqrt2(), golden(), QuadNum::sqrt_of(18)}) {
        CFExpansion e = cf_expand(x);
        QuadNum state = x; // k-th complete quotient, advanced alongside k
        for (std::size_t k = 0; k <= 20; ++k) {
            Mat2Z m = convergent_matrix(e, k);
            CHECK(m.det() == (k % 2 == 0 ? 1 : -1));
            CHECK(mobius_apply(m, state) == x);
            state = (state - QuadNum(state.floor())).inverse();
        }
    }
}
