#pragma once

#include "qtorus/report.hpp"
#include "qtorus/torus_core.hpp"

namespace qtorus {

// Internal-coherence sweeps for the operator algebra and the pairing, all on
// a scratch torus. exp_range bounds every swept exponent.
//
// Checks: the defining relation V U = q U V on both bundles; the four
// inverse identities; equality semantics of canonical basis labels; operator
// linearity over sums; pairing invariance under joint U^r V^s shifts
// (computed by composing the operators, not by the pairing formula);
// coefficient extraction; and inversion of the pairing under swapping the
// arguments, which is the coherent replacement for a literal symmetry (a
// self-inverse pairing would contradict the base normalization whenever the
// base value q^(-k*m) is not q^0; a note records this).
Report torus_core_checks(long exp_range);

} // namespace qtorus
