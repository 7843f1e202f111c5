#pragma once

#include <optional>
#include <utility>

#include "qtorus/quad_field.hpp"

namespace qtorus {

// Point exp(2*pi*i*alpha) on the unit circle, held by its exact exponent.
struct ExpPoint {
    QuadNum alpha;

    friend bool operator==(const ExpPoint& x, const ExpPoint& y) { return x.alpha == y.alpha; }
};

// The subgroup Z*theta + Z of the reals, for irrational quadratic theta.
class Lattice {
public:
    explicit Lattice(QuadNum theta); // throws RationalValue on rational theta

    const QuadNum& theta() const { return theta_; }

    friend bool operator==(const Lattice& a, const Lattice& b) { return a.theta_ == b.theta_; }

private:
    QuadNum theta_;
};

// Integer coordinates (m, n) with xi = m*theta + n, if they exist. Coordinates
// are unique because theta is irrational.
std::optional<std::pair<Int, Int>> lattice_coords(const QuadNum& xi, const Lattice& lattice);

bool lattice_member(const QuadNum& xi, const Lattice& lattice);

// Membership of xi in Z*theta + Z for arbitrary nonzero theta; for rational
// theta = s/t in lowest terms the group is (1/t)*Z.
bool group_member(const QuadNum& xi, const QuadNum& theta);

// The relation on circle points defined by theta: x and y are related iff
// y.alpha lies in theta * (x.alpha + Z) + Z, i.e. y.alpha - theta * x.alpha
// lies in Z*theta + Z. pre: theta != 0. Throws MixedDiscriminant unless
// x.alpha, y.alpha, and theta admit one common field.
bool ctheta_related(const ExpPoint& x, const ExpPoint& y, const QuadNum& theta);

// Coset alpha + (Z*theta + Z) of the reals modulo a lattice.
struct CosetId {
    Lattice lattice;
    QuadNum rep_alpha;

    // Same subgroup (mutual generator membership) and representatives that
    // differ by a lattice element.
    bool same_coset(const CosetId& other) const;
};

// Image of a coset under multiplication by theta, defined only when the map
// xi -> theta * xi sends a.lattice into target and back: both theta * theta1
// and theta must lie in the target lattice, and theta2 / theta and 1 / theta
// in the source. Returns nullopt when the scaling fails this.
std::optional<CosetId> coset_image(const CosetId& a, const QuadNum& theta, const Lattice& target);

// True when multiplication by theta carries Z*theta1 + Z onto Z*theta2 + Z,
// equivalently when the integer coordinate matrix of (theta*theta1, theta)
// over (theta2, 1) exists and has determinant +-1.
bool cosets_correspond(const QuadNum& theta1, const QuadNum& theta2, const QuadNum& theta);

} // namespace qtorus
