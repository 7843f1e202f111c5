#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "pairing_oracle.hpp"
#include "qtorus/torus_checks.hpp"
#include "qtorus/torus_core.hpp"

using namespace qtorus;

namespace {

const RepPair REP{"a", "b"};
const RepPair OTHER{"c", "d"};

Monomial mono(long scalar, long qe, long ue, long ve) {
    return Monomial(Rational(scalar), Int(qe), Int(ue), Int(ve));
}

} // namespace

TEST_CASE("generator actions reproduce the pinned single steps") {
    Torus t("q");
    // U on the u-side bundle: coefficient gains q^g * u, fiber unchanged.
    CHECK(apply_U(t.u_vector(REP, 0)) == t.u_vector(REP, 0, mono(1, 0, 1, 0)));
    CHECK(apply_U(t.u_vector(REP, 3)) == t.u_vector(REP, 3, mono(1, 3, 1, 0)));
    // U on the v-side bundle: coefficient gains u, fiber steps up.
    CHECK(apply_U(t.v_vector(REP, 2)) == t.v_vector(REP, 3, mono(1, 0, 1, 0)));
    // V on the v-side bundle: coefficient gains q^g * v, fiber unchanged.
    CHECK(apply_V(t.v_vector(REP, 0)) == t.v_vector(REP, 0, mono(1, 0, 0, 1)));
    // V on the u-side bundle: coefficient gains v, fiber steps down.
    CHECK(apply_V(t.u_vector(REP, 3)) == t.u_vector(REP, 2, mono(1, 0, 0, 1)));
    // V^-1 on the u-side bundle: coefficient gains v^-1, fiber steps up.
    CHECK(apply_Vinv(t.u_vector(REP, 0)) == t.u_vector(REP, 1, mono(1, 0, 0, -1)));
}

TEST_CASE("the defining relation VU = q UV holds exactly") {
    Torus t("q");
    TorusElement base = t.u_vector(REP, 0);
    CHECK(apply_V(apply_U(base)) == Monomial::q_power(1) * apply_U(apply_V(base)));
    // and on arbitrary fibers of both bundles
    for (long g = -6; g <= 6; ++g) {
        for (const TorusElement& x : {t.u_vector(REP, g), t.v_vector(REP, g)})
            CHECK(apply_V(apply_U(x)) == Monomial::q_power(1) * apply_U(apply_V(x)));
    }
}

TEST_CASE("inverses compose to the identity") {
    Torus t("q");
    CHECK(apply_Uinv(apply_U(t.u_vector(REP, 2))) == t.u_vector(REP, 2));
    CHECK(apply_Vinv(apply_V(t.v_vector(REP, 1))) == t.v_vector(REP, 1));
    for (long g = -6; g <= 6; ++g) {
        for (const TorusElement& x : {t.u_vector(REP, g), t.v_vector(REP, g)}) {
            CHECK(apply_U(apply_Uinv(x)) == x);
            CHECK(apply_Uinv(apply_U(x)) == x);
            CHECK(apply_V(apply_Vinv(x)) == x);
            CHECK(apply_Vinv(apply_V(x)) == x);
        }
    }
}

TEST_CASE("iterated powers agree with repeated application") {
    Torus t("q");
    TorusElement x = t.v_vector(REP, -2, mono(3, 1, 0, 0));
    CHECK(apply_U_power(x, 0) == x);
    CHECK(apply_U_power(x, 3) == apply_U(apply_U(apply_U(x))));
    CHECK(apply_U_power(x, -2) == apply_Uinv(apply_Uinv(x)));
    CHECK(apply_V_power(x, 2) == apply_V(apply_V(x)));
    CHECK(apply_V_power(x, -1) == apply_Vinv(x));
}

TEST_CASE("operators are linear over sums") {
    Torus t("q");
    TorusElement x = t.u_vector(REP, 1) + t.v_vector(REP, -2, Monomial::q_power(3)) +
                     t.u_vector(OTHER, 0, mono(-2, 0, 0, 0));
    CHECK(apply_U(x) == apply_U(t.u_vector(REP, 1)) +
                            apply_U(t.v_vector(REP, -2, Monomial::q_power(3))) +
                            apply_U(t.u_vector(OTHER, 0, mono(-2, 0, 0, 0))));
    CHECK(apply_Vinv(x) == apply_Vinv(t.u_vector(REP, 1)) +
                               apply_Vinv(t.v_vector(REP, -2, Monomial::q_power(3))) +
                               apply_Vinv(t.u_vector(OTHER, 0, mono(-2, 0, 0, 0))));
}

TEST_CASE("element sums merge, cancel, and reject non-monomial mixes") {
    Torus t("q");
    TorusElement doubled = t.u_vector(REP, 0) + t.u_vector(REP, 0);
    CHECK(doubled == t.u_vector(REP, 0, mono(2, 0, 0, 0)));
    TorusElement cancelled = t.u_vector(REP, 0) + t.u_vector(REP, 0, mono(-1, 0, 0, 0));
    CHECK(cancelled.is_zero());
    CHECK_THROWS_AS(t.u_vector(REP, 0) + t.u_vector(REP, 0, Monomial::q_power(1)),
                    NotMonomialCoefficient);
    CHECK_THROWS_AS(t.u_vector(REP, 0) + Torus("other").u_vector(REP, 0), TorusMismatch);
    CHECK_THROWS_AS(TorusElement("q").single_term(), NotSingleTerm);
}

TEST_CASE("monomials form a group") {
    Monomial a = mono(3, 1, -2, 5);
    Monomial b = mono(-2, 4, 2, -5);
    CHECK(a * a.inverse() == Monomial());
    CHECK((a * b).inverse() == b.inverse() * a.inverse());
    CHECK(Monomial::q_power(3) * Monomial::q_power(-3) == Monomial());
    CHECK(mono(1, 2, 0, 0).is_q_power());
    CHECK_FALSE(mono(1, 2, 1, 0).is_q_power());
    CHECK_THROWS_AS(Monomial(Rational(0), 0, 0, 0), Error);
}

TEST_CASE("pairing matches the pinned values") {
    Torus t("q");
    CHECK(pairing(t.v_vector(REP, 0), t.u_vector(REP, 0)) == PairingValue{0});
    // < q^1 v(q^2 v, u) | q^3 u(q^4 u, v) > = q^(3 - 1 - 4*2)
    TorusElement left = t.v_vector(REP, 2, Monomial::q_power(1));
    TorusElement right = t.u_vector(REP, 4, Monomial::q_power(3));
    CHECK(pairing(left, right) == PairingValue{-6});
    CHECK(pairing(right, left) == PairingValue{6});
}

TEST_CASE("pairing is invariant under a simultaneous operator word") {
    Torus t("q");
    TorusElement xi = apply_V_power(apply_U_power(t.v_vector(REP, 0), 2), 3);
    TorusElement eta = apply_V_power(apply_U_power(t.u_vector(REP, 0), 2), 3);
    CHECK(pairing(xi, eta) == PairingValue{0});
}

TEST_CASE("pairing agrees with the composition oracle on a grid") {
    Torus t("q");
    for (long s = -3; s <= 3; ++s)
        for (long m = -3; m <= 3; ++m)
            for (long r = -3; r <= 3; ++r)
                for (long k = -3; k <= 3; ++k) {
                    Int expected = testing::expected_pairing_exponent(t, REP, s, m, r, k);
                    TorusElement vterm = t.v_vector(REP, m, Monomial::q_power(s));
                    TorusElement uterm = t.u_vector(REP, k, Monomial::q_power(r));
                    CHECK(pairing(vterm, uterm).exponent == expected);
                    CHECK(pairing(uterm, vterm).exponent == -expected);
                }
}

TEST_CASE("matching u/v coefficient factors cancel in the pairing") {
    Torus t("q");
    TorusElement left = t.v_vector(REP, 2, mono(1, 1, 5, -2));
    TorusElement right = t.u_vector(REP, 4, mono(1, 3, 5, -2));
    CHECK(pairing(left, right) == PairingValue{-6});
}

TEST_CASE("pairing rejects the documented invalid inputs") {
    Torus t("q");
    TorusElement v0 = t.v_vector(REP, 0);
    TorusElement u0 = t.u_vector(REP, 0);
    CHECK_THROWS_AS(pairing(v0 + t.v_vector(REP, 1), u0), NotSingleTerm);
    CHECK_THROWS_AS(pairing(u0, t.u_vector(REP, 1)), SameBundle);
    CHECK_THROWS_AS(pairing(v0, t.v_vector(REP, 1)), SameBundle);
    CHECK_THROWS_AS(pairing(v0, t.u_vector(OTHER, 0)), UndefinedPairing);
    CHECK_THROWS_AS(pairing(t.v_vector(REP, 0, mono(2, 0, 0, 0)), u0), NotGammaCoefficient);
    CHECK_THROWS_AS(pairing(t.v_vector(REP, 0, mono(1, 0, 1, 0)), u0), NotGammaCoefficient);
    CHECK_THROWS_AS(pairing(v0, Torus("other").u_vector(REP, 0)), TorusMismatch);
}

TEST_CASE("canonical orbit elements carry the q^(n*l) normalization") {
    Torus t("q");
    CHECK(t.canonical_basis_elem(REP, 0, 7) == t.u_vector(REP, 0));
    CHECK(t.canonical_basis_elem(REP, 2, 3) == t.u_vector(REP, 2, Monomial::q_power(6)));
    CHECK(t.canonical_basis_elem(REP, -1, 4) == t.u_vector(REP, -1, Monomial::q_power(-4)));
}

TEST_CASE("canonical label equality tracks element equality") {
    Torus t("q");
    CHECK(CanonicalBasisElem{REP, 0, 7} == CanonicalBasisElem{REP, 0, -2});
    CHECK_FALSE(CanonicalBasisElem{REP, 2, 3} == CanonicalBasisElem{REP, 3, 2});
    CHECK_FALSE(CanonicalBasisElem{REP, 2, 3} == CanonicalBasisElem{REP, 2, 4});
    for (long n = -3; n <= 3; ++n)
        for (long l = -3; l <= 3; ++l)
            for (long n2 = -3; n2 <= 3; ++n2)
                for (long l2 = -3; l2 <= 3; ++l2) {
                    bool labels = CanonicalBasisElem{REP, n, l} == CanonicalBasisElem{REP, n2, l2};
                    bool elems = t.canonical_basis_elem(REP, n, l) ==
                                 t.canonical_basis_elem(REP, n2, l2);
                    CHECK(labels == elems);
                }
}

TEST_CASE("terms render and parse through the documented grammar") {
    Torus t("q");
    CHECK(to_string(TorusElement("q")) == "0");
    CHECK(to_string(t.u_vector(REP, 0)) == "u[0; a, b]");
    CHECK(to_string(t.v_vector(REP, 2, Monomial::q_power(3))) == "q^3 * v[2; b, a]");
    CHECK(to_string(t.u_vector(REP, -1, Monomial(make_rational(2, 3), -1, 2, 1))) ==
          "2/3 * q^-1 * u^2 * v * u[-1; a, b]");
    CHECK(to_string(t.u_vector(REP, 0) + t.v_vector(REP, 0)) == "u[0; a, b] + v[0; b, a]");

    std::vector<TorusElement> samples = {
        TorusElement("q"),
        t.u_vector(REP, 0),
        t.v_vector(REP, -4, mono(-7, 2, -1, 3)),
        t.u_vector(RepPair{"(1 + sqrt(2))/2", "sqrt(2)/7"}, 5, Monomial::q_power(-2)),
        t.u_vector(REP, 1) + t.v_vector(REP, -2, Monomial::q_power(3)) +
            t.u_vector(OTHER, 0, mono(-2, 0, 0, 0)),
        apply_V_power(apply_U_power(t.v_vector(REP, 0), 3), -2),
    };
    for (const TorusElement& x : samples) CHECK(parse_element(t, to_string(x)) == x);

    CHECK(parse_element(t, "q^(-4) * u[-1; a, b]") ==
          t.u_vector(REP, -1, Monomial::q_power(-4)));
    CHECK_THROWS_AS(parse_element(t, "u[0; a, b"), ParseError);
    CHECK_THROWS_AS(parse_element(t, "w[0; a, b]"), ParseError);
    CHECK_THROWS_AS(parse_element(t, "u[0; , b]"), ParseError);
    CHECK_THROWS_AS(parse_element(t, "q^ * u[0; a, b]"), ParseError);
}

TEST_CASE("the bundled self-checks pass") {
    Report report = torus_core_checks(3);
    INFO(report.to_text());
    CHECK(report.all_ok());
    CHECK(report.checked() > 100);
}
