#pragma once

#include <cstddef>
#include <optional>

#include "qtorus/quad_field.hpp"

namespace qtorus {

// Certificate that theta2 = (a*theta1 + b)/(c*theta1 + d) for an integer
// matrix with |det| = 1, together with the lattice scaling factor theta
// that carries Z*theta1 + Z onto Z*theta2 + Z, and the indices of the
// matching complete quotients the matrix was assembled from.
struct MoritaWitness {
    Mat2Z matrix;
    QuadNum scaling;
    std::size_t tail_index_1;
    std::size_t tail_index_2;
};

// Decides whether two irrational quadratics are related by an integer
// Moebius transformation with |det| = 1: true exactly when their continued
// fractions share a tail. On success the witness maps theta1 to theta2 and
// has been verified against the coset criterion. Throws RationalInput.
std::optional<MoritaWitness> decide_morita(const QuadNum& theta1, const QuadNum& theta2);

// Exhaustive search over |a|,|b|,|c|,|d| <= bound for a matrix with
// |det| = 1 and theta2 = (a*theta1 + b)/(c*theta1 + d); independent of the
// continued-fraction route. Returns the first hit in the ordering
// 0, 1, -1, 2, -2, ... applied to (a, b, c, d) lexicographically.
std::optional<Mat2Z> brute_force_search(const QuadNum& theta1, const QuadNum& theta2, long bound);

// Given coords with theta2 = (d'*theta1 - b')/(-c'*theta1 + a') (so that
// theta1 * theta = a'*theta2 + b' and theta = c'*theta2 + d' are solvable),
// returns the scaling theta = c'*theta2 + d'. The result can degenerate to
// a rational, necessarily +-1. Throws InconsistentWitness when coords does
// not satisfy the system.
QuadNum solve_scaling(const Mat2Z& coords, const QuadNum& theta1, const QuadNum& theta2);

// Checks a witness end to end: the Moebius action maps theta1 to theta2 and
// the scaling identifies the lattices per cosets_correspond.
bool verify_witness(const QuadNum& theta1, const QuadNum& theta2, const MoritaWitness& witness);

} // namespace qtorus
