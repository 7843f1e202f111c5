#pragma once

#include <cstddef>
#include <string>

#include "qtorus/coset_model.hpp"
#include "qtorus/quad_field.hpp"
#include "qtorus/report.hpp"

namespace qtorus {

// Atomic formula C_theta(y^lhs_y * x^lhs_x, x^rhs_x * y^rhs_y): the relation
// "second argument = first argument raised to theta" on circle points, with
// both arguments integer words in the point variables x and y.
struct AtomicFormula {
    Int lhs_y_exp;
    Int lhs_x_exp;
    Int rhs_x_exp;
    Int rhs_y_exp;

    friend bool operator==(const AtomicFormula&, const AtomicFormula&) = default;

    // Inverting both arguments preserves the relation (negate the integer
    // witnesses), so each formula has a twin with all exponents negated.
    // The canonical pick makes the x-exponent of the first argument
    // nonpositive, breaking ties toward the literal form.
    AtomicFormula normalized() const;
};

// The quantifier-free definition of y = x^Theta for
// Theta = (m11*theta + m12)/(m21*theta + m22):
//   C_theta(y^m21 * x^-m11, x^m12 * y^-m22)
// returned literally, without sign normalization.
AtomicFormula rewrite(const Mat2Z& m);

// Truth of f at exponent-level points: both argument exponents are integer
// combinations of x.alpha and y.alpha, and the pair must satisfy
// ctheta_related. Throws MixedDiscriminant on incompatible fields.
bool eval_atomic(const AtomicFormula& f, const ExpPoint& x, const ExpPoint& y,
                 const QuadNum& theta);

// Compares two formulas on a deterministic family of sample points: pairs
// constructed to satisfy each formula (solving its relation for y.alpha with
// small integer witnesses) and a generic grid
// x.alpha in {p/7 + q*sqrt(D)/11}, y.alpha in {p/5 + q*sqrt(D)/13}.
// At most max_samples pairs are evaluated, constructed pairs first.
// pre: theta irrational.
Report semantic_equiv(const AtomicFormula& f1, const AtomicFormula& f2, const QuadNum& theta,
                      std::size_t max_samples);

// Same, then appends extra_samples seeded pseudo-random pairs (exploratory
// fuzzing; the deterministic family alone decides acceptance).
Report semantic_equiv(const AtomicFormula& f1, const AtomicFormula& f2, const QuadNum& theta,
                      std::size_t max_samples, std::size_t extra_samples, unsigned long seed);

// Renders "C_theta(y^a * x^b, x^c * y^d)" with zero exponents elided and "1"
// for an empty argument; parse_formula inverts it exactly.
std::string to_string(const AtomicFormula& f);
AtomicFormula parse_formula(const std::string& text);

} // namespace qtorus
