#pragma once

#include <map>
#include <vector>

#include "qtorus/coset_model.hpp"
#include "qtorus/morita.hpp"
#include "qtorus/report.hpp"
#include "qtorus/torus_core.hpp"

namespace qtorus {

// Bijection between source and target representative pairs. Inserts keep it
// injective in both directions.
class RepBijection {
public:
    void insert(const RepPair& from, const RepPair& to);
    const RepPair& image(const RepPair& from) const; // throws UnmappedRepresentative
    const std::map<RepPair, RepPair>& pairs() const { return forward_; }

private:
    std::map<RepPair, RepPair> forward_;
    std::map<RepPair, RepPair> backward_;
};

// The geometric transformation between two equivalent tori: it carries the
// canonical orbit element q1^(n*l) u(q1^n u, v) to q2^(n*l) u(q2^n u', v')
// over the mapped representatives, exponents untouched.
class GeoTransform {
public:
    GeoTransform(Torus source, Torus target, RepBijection bijection);

    const Torus& source() const { return source_; }
    const Torus& target() const { return target_; }
    const RepBijection& bijection() const { return bijection_; }

    CanonicalBasisElem apply_L(const CanonicalBasisElem& e) const;

    // Coefficient symbols are transported by the substitution
    // {q1 -> q2, u -> u', v -> v'}: exponents are preserved, the basis
    // representatives are mapped, the torus tag switches.
    TorusElement transport(const TorusElement& x) const;

private:
    Torus source_;
    Torus target_;
    RepBijection bijection_;
};

// Exponent-level universe entry: a representative pair is the point pair
// (exp(2*pi*i*alpha_u), exp(2*pi*i*alpha_v)).
struct UniverseEntry {
    QuadNum alpha_u;
    QuadNum alpha_v;
};

// Builds the transform induced by a Morita witness on a finite universe of
// representative pairs. Validates the witness (Moebius identity and coset
// criterion; throws InvalidWitness otherwise), maps each representative
// alpha to scaling * alpha, and certifies every image against the relation
// that defines corresponding points. Representative ids are the canonical
// renderings of the exponents. Source tag "q1", target tag "q2".
GeoTransform build_transform(const QuadNum& theta1, const QuadNum& theta2,
                             const MoritaWitness& witness,
                             const std::vector<UniverseEntry>& universe);

// Commutation of the square: transport(op(x)) = op(transport(x)) for every
// mapped representative, fiber exponents in [lo, hi], checked on bare basis
// vectors of both bundles.
Report check_diagram_U(const GeoTransform& t, long lo, long hi);
Report check_diagram_V(const GeoTransform& t, long lo, long hi);

// Pairing exponents computed before and after transport agree, for all
// (s, m, r, k) in [lo, hi]^4 and every mapped representative.
Report check_pairing_preserved(const GeoTransform& t, long lo, long hi);

} // namespace qtorus
