#include "qtorus/coset_model.hpp"

namespace qtorus {

Lattice::Lattice(QuadNum theta) : theta_(std::move(theta)) { theta_.require_irrational(); }

std::optional<std::pair<Int, Int>> lattice_coords(const QuadNum& xi, const Lattice& lattice) {
    const QuadNum& theta = lattice.theta();
    if (!xi.is_rational() && xi.disc() != theta.disc()) return std::nullopt;
    // m*theta + n = xi forces m = radical_coeff(xi)/radical_coeff(theta),
    // then n = rational_part(xi) - m*rational_part(theta).
    if (theta.radical_coeff() == 0) throw InternalDegeneracy{};
    Rational m = xi.radical_coeff() / theta.radical_coeff();
    if (!is_integer(m)) return std::nullopt;
    Rational n = xi.rational_part() - m * theta.rational_part();
    if (!is_integer(n)) return std::nullopt;
    return std::make_pair(Int(m.get_num()), Int(n.get_num()));
}

bool lattice_member(const QuadNum& xi, const Lattice& lattice) {
    return lattice_coords(xi, lattice).has_value();
}

bool group_member(const QuadNum& xi, const QuadNum& theta) {
    if (theta.is_zero()) throw DivisionByZero{};
    if (!theta.is_rational()) return lattice_member(xi, Lattice(theta));
    // Z*(s/t) + Z = (1/t)*Z when gcd(s, t) = 1.
    if (!xi.is_rational()) return false;
    Rational scaled = xi.as_rational() * Rational(theta.r());
    return is_integer(scaled);
}

bool ctheta_related(const ExpPoint& x, const ExpPoint& y, const QuadNum& theta) {
    // Relation queries refuse cross-field inputs outright; a silent "false"
    // would be indistinguishable from a meaningful negative answer even when
    // one operand vanishes and no arithmetic ever mixes the fields.
    QuadNum::common_disc(x.alpha, y.alpha);
    QuadNum::common_disc(x.alpha, theta);
    QuadNum::common_disc(y.alpha, theta);
    return group_member(y.alpha - theta * x.alpha, theta);
}

bool CosetId::same_coset(const CosetId& other) const {
    if (!lattice_member(other.lattice.theta(), lattice)) return false;
    if (!lattice_member(lattice.theta(), other.lattice)) return false;
    return lattice_member(rep_alpha - other.rep_alpha, lattice);
}

std::optional<CosetId> coset_image(const CosetId& a, const QuadNum& theta, const Lattice& target) {
    if (!cosets_correspond(a.lattice.theta(), target.theta(), theta)) return std::nullopt;
    return CosetId{target, theta * a.rep_alpha};
}

bool cosets_correspond(const QuadNum& theta1, const QuadNum& theta2, const QuadNum& theta) {
    theta1.require_irrational();
    theta2.require_irrational();
    if (theta.is_zero()) return false;
    Lattice l1(theta1);
    Lattice l2(theta2);
    // Forward containment theta*L1 <= L2 on the generators, and backward
    // containment L2 <= theta*L1 via division by theta.
    return lattice_member(theta * theta1, l2) && lattice_member(theta, l2) &&
           lattice_member(theta2 / theta, l1) && lattice_member(QuadNum(1) / theta, l1);
}

} // namespace qtorus
