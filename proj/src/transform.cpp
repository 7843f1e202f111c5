#include "qtorus/transform.hpp"

#include <sstream>
#include <utility>

namespace qtorus {

void RepBijection::insert(const RepPair& from, const RepPair& to) {
    auto fwd = forward_.find(from);
    if (fwd != forward_.end()) {
        if (fwd->second == to) return;
        throw Error("representative already mapped to a different image");
    }
    if (backward_.count(to)) throw Error("two representatives share one image");
    forward_.emplace(from, to);
    backward_.emplace(to, from);
}

const RepPair& RepBijection::image(const RepPair& from) const {
    auto it = forward_.find(from);
    if (it == forward_.end()) throw UnmappedRepresentative{};
    return it->second;
}

GeoTransform::GeoTransform(Torus source, Torus target, RepBijection bijection)
    : source_(std::move(source)), target_(std::move(target)), bijection_(std::move(bijection)) {
    if (source_ == target_) throw Error("source and target tori must be distinct");
}

CanonicalBasisElem GeoTransform::apply_L(const CanonicalBasisElem& e) const {
    return CanonicalBasisElem{bijection_.image(e.rep), e.n, e.l};
}

TorusElement GeoTransform::transport(const TorusElement& x) const {
    if (x.torus_tag() != source_.tag()) throw TorusMismatch{};
    TorusElement out(target_.tag());
    for (const auto& [basis, coeff] : x.terms())
        out.add_term(BasisVector{basis.bundle, bijection_.image(basis.rep), basis.gamma_exp},
                     coeff);
    return out;
}

GeoTransform build_transform(const QuadNum& theta1, const QuadNum& theta2,
                             const MoritaWitness& witness,
                             const std::vector<UniverseEntry>& universe) {
    if (mobius_apply(witness.matrix, theta1) != theta2)
        throw InvalidWitness("matrix does not map theta1 to theta2");
    if (!cosets_correspond(theta1, theta2, witness.scaling))
        throw InvalidWitness("scaling does not identify the lattices");
    RepBijection bijection;
    for (const UniverseEntry& entry : universe) {
        QuadNum image_u = witness.scaling * entry.alpha_u;
        QuadNum image_v = witness.scaling * entry.alpha_v;
        // Certify that each image is the corresponding point of its source
        // under the scaling relation; by construction the difference is 0,
        // but the certificate must come from the relation itself.
        if (!ctheta_related(ExpPoint{entry.alpha_u}, ExpPoint{image_u}, witness.scaling) ||
            !ctheta_related(ExpPoint{entry.alpha_v}, ExpPoint{image_v}, witness.scaling))
            throw InvalidWitness("scaled representative fails the correspondence relation");
        bijection.insert(RepPair{to_string(entry.alpha_u), to_string(entry.alpha_v)},
                         RepPair{to_string(image_u), to_string(image_v)});
    }
    return GeoTransform(Torus("q1"), Torus("q2"), std::move(bijection));
}

namespace {

std::string rep_label(const RepPair& rep) { return rep.uid + "|" + rep.vid; }

Report check_diagram(const GeoTransform& t, long lo, long hi, bool use_u) {
    Report report;
    const char* op_name = use_u ? "U" : "V";
    auto op = [&](const TorusElement& x) { return use_u ? apply_U(x) : apply_V(x); };
    for (const auto& [rep, image] : t.bijection().pairs()) {
        for (long g = lo; g <= hi; ++g) {
            for (int side = 0; side < 2; ++side) {
                TorusElement e = side == 0 ? t.source().u_vector(rep, g)
                                           : t.source().v_vector(rep, g);
                TorusElement lhs = t.transport(op(e));
                TorusElement rhs = op(t.transport(e));
                std::ostringstream name;
                name << "diagram-" << op_name << ";rep=" << rep_label(rep)
                     << ";bundle=" << (side == 0 ? "u" : "v") << ";g=" << g;
                if (lhs == rhs) report.add_ok(name.str());
                else report.add_fail(name.str(), to_string(lhs), to_string(rhs));
            }
        }
    }
    return report;
}

} // namespace

Report check_diagram_U(const GeoTransform& t, long lo, long hi) {
    return check_diagram(t, lo, hi, true);
}

Report check_diagram_V(const GeoTransform& t, long lo, long hi) {
    return check_diagram(t, lo, hi, false);
}

Report check_pairing_preserved(const GeoTransform& t, long lo, long hi) {
    Report report;
    for (const auto& [rep, image] : t.bijection().pairs()) {
        for (long s = lo; s <= hi; ++s) {
            for (long m = lo; m <= hi; ++m) {
                for (long r = lo; r <= hi; ++r) {
                    for (long k = lo; k <= hi; ++k) {
                        TorusElement vterm = t.source().v_vector(rep, m, Monomial::q_power(s));
                        TorusElement uterm = t.source().u_vector(rep, k, Monomial::q_power(r));
                        PairingValue before = pairing(vterm, uterm);
                        PairingValue after = pairing(t.transport(vterm), t.transport(uterm));
                        std::ostringstream name;
                        name << "pairing;rep=" << rep_label(rep) << ";s=" << s << ";m=" << m
                             << ";r=" << r << ";k=" << k;
                        if (before == after) report.add_ok(name.str());
                        else
                            report.add_fail(name.str(), "q^" + before.exponent.get_str(),
                                            "q^" + after.exponent.get_str());
                    }
                }
            }
        }
    }
    return report;
}

} // namespace qtorus
