#pragma once

#include <stdexcept>
#include <string>

namespace qtorus {

// Base class for every error the library raises on bad input or broken
// preconditions. Internal consistency failures (bug traps) use it directly.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// quad_field
struct ZeroDenominator : Error {
    ZeroDenominator() : Error("denominator must be nonzero") {}
};
struct RationalValue : Error {
    explicit RationalValue(const std::string& what = "value is rational where an irrational is required")
        : Error(what) {}
};
struct MixedDiscriminant : Error {
    MixedDiscriminant() : Error("operands lie in different quadratic fields") {}
};
struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};
struct NotUnimodular : Error {
    NotUnimodular() : Error("matrix determinant must be +1 or -1") {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

// torus_core
struct UndefinedPairing : Error {
    UndefinedPairing() : Error("pairing is undefined across distinct representative pairs") {}
};
struct NotGammaCoefficient : Error {
    NotGammaCoefficient() : Error("pairing needs coefficients whose non-q factors cancel") {}
};
struct NotSingleTerm : Error {
    NotSingleTerm() : Error("pairing is defined on single terms only") {}
};
struct SameBundle : Error {
    SameBundle() : Error("pairing needs one u-side and one v-side term") {}
};
struct TorusMismatch : Error {
    TorusMismatch() : Error("elements belong to different tori") {}
};
struct NotMonomialCoefficient : Error {
    NotMonomialCoefficient() : Error("sum would need a non-monomial coefficient") {}
};

// coset_model
struct InternalDegeneracy : Error {
    InternalDegeneracy() : Error("degenerate linear system; arithmetic is corrupted") {}
};

// morita
struct RationalInput : Error {
    explicit RationalInput(const std::string& what = "input must be an irrational quadratic")
        : Error(what) {}
};
struct InconsistentWitness : Error {
    explicit InconsistentWitness(const std::string& what = "matrix does not satisfy the scaling equations")
        : Error(what) {}
};

// transform
struct UnmappedRepresentative : Error {
    UnmappedRepresentative() : Error("representative pair is outside the transform's universe") {}
};
struct InvalidWitness : Error {
    explicit InvalidWitness(const std::string& what = "witness fails its invariants") : Error(what) {}
};

} // namespace qtorus
