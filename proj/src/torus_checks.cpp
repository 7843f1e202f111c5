#include "qtorus/torus_checks.hpp"

#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>

namespace qtorus {

namespace {

std::string label(const char* kind, std::initializer_list<std::pair<const char*, long>> args) {
    std::ostringstream out;
    out << kind;
    for (const auto& [name, value] : args) out << ";" << name << "=" << value;
    return out.str();
}

void check_equal(Report& report, std::string name, const TorusElement& lhs,
                 const TorusElement& rhs) {
    if (lhs == rhs) report.add_ok(std::move(name));
    else report.add_fail(std::move(name), to_string(lhs), to_string(rhs));
}

} // namespace

Report torus_core_checks(long exp_range) {
    Report report;
    const long n = exp_range;
    Torus torus("q");
    RepPair rep{"u0", "v0"};

    auto base = [&](int side, long g) {
        return side == 0 ? torus.u_vector(rep, g) : torus.v_vector(rep, g);
    };

    for (int side = 0; side < 2; ++side) {
        const char* bundle = side == 0 ? "u" : "v";
        for (long g = -n; g <= n; ++g) {
            TorusElement x = base(side, g);
            // V U = q U V
            check_equal(report, std::string("relation;bundle=") + bundle + ";g=" + std::to_string(g),
                        apply_V(apply_U(x)), Monomial::q_power(1) * apply_U(apply_V(x)));
            check_equal(report, std::string("inverse;id=UUinv;bundle=") + bundle + ";g=" + std::to_string(g),
                        apply_U(apply_Uinv(x)), x);
            check_equal(report, std::string("inverse;id=UinvU;bundle=") + bundle + ";g=" + std::to_string(g),
                        apply_Uinv(apply_U(x)), x);
            check_equal(report, std::string("inverse;id=VVinv;bundle=") + bundle + ";g=" + std::to_string(g),
                        apply_V(apply_Vinv(x)), x);
            check_equal(report, std::string("inverse;id=VinvV;bundle=") + bundle + ";g=" + std::to_string(g),
                        apply_Vinv(apply_V(x)), x);
        }
    }

    // Canonical labels: q^(n*l) u(q^n u, v) and q^(n'*l') u(q^n' u, v) denote
    // one element iff n = n' and n*l = n'*l'; element equality must agree.
    for (long a = -n; a <= n; ++a) {
        for (long b = -n; b <= n; ++b) {
            bool label_eq = CanonicalBasisElem{rep, a, b} == CanonicalBasisElem{rep, b, a};
            bool elem_eq = torus.canonical_basis_elem(rep, a, b) ==
                           torus.canonical_basis_elem(rep, b, a);
            if (label_eq == elem_eq) report.add_ok(label("canonical", {{"n", a}, {"l", b}}));
            else
                report.add_fail(label("canonical", {{"n", a}, {"l", b}}),
                                label_eq ? "labels-equal" : "labels-differ",
                                elem_eq ? "elements-equal" : "elements-differ");
        }
    }

    // Linearity over a two-term sum with distinct fibers.
    for (long g = -n; g < n; ++g) {
        TorusElement sum = base(0, g) + base(1, g + 1);
        check_equal(report, label("linearity;op=U", {{"g", g}}), apply_U(sum),
                    apply_U(base(0, g)) + apply_U(base(1, g + 1)));
        check_equal(report, label("linearity;op=V", {{"g", g}}), apply_V(sum),
                    apply_V(base(0, g)) + apply_V(base(1, g + 1)));
    }

    // Pairing invariance under joint shifts: both sides of the normalized
    // pair < u(u,v) | v(v,u) > = q^0 are moved by the same word U^r V^s
    // through the real operators; the pairing of the images must stay q^0.
    for (long r = -n; r <= n; ++r) {
        for (long s = -n; s <= n; ++s) {
            TorusElement uside = apply_U_power(apply_V_power(base(0, 0), s), r);
            TorusElement vside = apply_U_power(apply_V_power(base(1, 0), s), r);
            PairingValue got = pairing(uside, vside);
            if (got.exponent == 0) report.add_ok(label("pairing-shift", {{"r", r}, {"s", s}}));
            else
                report.add_fail(label("pairing-shift", {{"r", r}, {"s", s}}),
                                "q^" + got.exponent.get_str(), "q^0");
        }
    }

    // Coefficient extraction: scaling the arguments by q^a, q^b shifts the
    // exponent by the left-inverse-times-right rule.
    for (long a = -n; a <= n; ++a) {
        for (long b = -n; b <= n; ++b) {
            TorusElement x = torus.v_vector(rep, 2, Monomial::q_power(a));
            TorusElement y = torus.u_vector(rep, -3, Monomial::q_power(b));
            Int expect = pairing(torus.v_vector(rep, 2), torus.u_vector(rep, -3)).exponent + b - a;
            PairingValue got = pairing(x, y);
            if (got.exponent == expect) report.add_ok(label("pairing-scale", {{"a", a}, {"b", b}}));
            else
                report.add_fail(label("pairing-scale", {{"a", a}, {"b", b}}),
                                "q^" + got.exponent.get_str(), "q^" + expect.get_str());
        }
    }

    // Swapping the arguments inverts the value.
    for (long k = -n; k <= n; ++k) {
        for (long m = -n; m <= n; ++m) {
            TorusElement x = torus.v_vector(rep, m, Monomial::q_power(-2));
            TorusElement y = torus.u_vector(rep, k, Monomial::q_power(1));
            Int forward = pairing(x, y).exponent;
            Int backward = pairing(y, x).exponent;
            if (forward == -backward) report.add_ok(label("pairing-swap", {{"k", k}, {"m", m}}));
            else
                report.add_fail(label("pairing-swap", {{"k", k}, {"m", m}}),
                                "q^" + forward.get_str(), "q^-(" + backward.get_str() + ")");
        }
    }

    report.add_note("pairing swap yields the inverse value; a literally symmetric pairing "
                    "would contradict the base normalization whenever k*m != 0");
    return report;
}

} // namespace qtorus
