#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qtorus/numeric.hpp"

namespace qtorus {

// Which Gamma-bundle a basis vector belongs to: u(gamma*u, v) or v(gamma*v, u).
enum class Bundle { U, V };

// Names the pair of circle representatives (u, v) a bundle fiber sits over.
// Ids are opaque here; builders use the canonical rendering of the exponents.
struct RepPair {
    std::string uid;
    std::string vid;

    friend auto operator<=>(const RepPair&, const RepPair&) = default;
};

// Coefficient monomial scalar * q^qexp * u^uexp * v^vexp with scalar != 0.
// These form a group under multiplication; sums of unequal monomials are not
// representable, which models coefficients staying inside the symbol group.
class Monomial {
public:
    Monomial() : scalar_(1), qexp_(0), uexp_(0), vexp_(0) {}
    Monomial(Rational scalar, Int qexp, Int uexp, Int vexp);

    static Monomial q_power(Int e) { return Monomial(Rational(1), std::move(e), 0, 0); }

    const Rational& scalar() const { return scalar_; }
    const Int& qexp() const { return qexp_; }
    const Int& uexp() const { return uexp_; }
    const Int& vexp() const { return vexp_; }

    bool is_one() const { return scalar_ == 1 && qexp_ == 0 && uexp_ == 0 && vexp_ == 0; }
    bool is_q_power() const { return scalar_ == 1 && uexp_ == 0 && vexp_ == 0; }

    Monomial inverse() const;
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) = default;

private:
    Rational scalar_;
    Int qexp_, uexp_, vexp_;
};

// Basis vector u(q^gamma_exp * u, v) of the u-side bundle, or
// v(q^gamma_exp * v, u) of the v-side bundle, over a representative pair.
struct BasisVector {
    Bundle bundle;
    RepPair rep;
    Int gamma_exp;

    friend bool operator==(const BasisVector&, const BasisVector&) = default;
    friend bool operator<(const BasisVector& a, const BasisVector& b) {
        return std::tie(a.bundle, a.rep, a.gamma_exp) < std::tie(b.bundle, b.rep, b.gamma_exp);
    }
};

// Finite linear combination of basis vectors with Monomial coefficients,
// tagged with the torus it lives on so elements of different tori never mix.
class TorusElement {
public:
    explicit TorusElement(std::string torus_tag) : tag_(std::move(torus_tag)) {}

    const std::string& torus_tag() const { return tag_; }
    const std::map<BasisVector, Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Adds coeff * basis; merging equal bases requires equal monomial
    // exponents (throws NotMonomialCoefficient otherwise).
    void add_term(const BasisVector& basis, const Monomial& coeff);

    // The unique term of a single-term element; throws NotSingleTerm.
    std::pair<BasisVector, Monomial> single_term() const;

    friend TorusElement operator+(const TorusElement& x, const TorusElement& y);
    friend TorusElement operator*(const Monomial& c, const TorusElement& x);
    friend bool operator==(const TorusElement& x, const TorusElement& y) = default;

private:
    std::string tag_;
    std::map<BasisVector, Monomial> terms_;
};

// A symbolic quantum 2-torus: the tag names its deformation symbol, and all
// elements carry the tag of the torus that created them.
class Torus {
public:
    explicit Torus(std::string tag) : tag_(std::move(tag)) {}

    const std::string& tag() const { return tag_; }

    TorusElement u_vector(const RepPair& rep, Int gamma_exp, const Monomial& coeff = Monomial()) const;
    TorusElement v_vector(const RepPair& rep, Int gamma_exp, const Monomial& coeff = Monomial()) const;

    // Canonical orbit element q^(n*l) * u(q^n * u, v).
    TorusElement canonical_basis_elem(const RepPair& rep, const Int& n, const Int& l) const;

    friend bool operator==(const Torus& a, const Torus& b) { return a.tag_ == b.tag_; }

private:
    std::string tag_;
};

// Identifies a canonical orbit element up to the q^(n*l) normalization:
// two labels denote the same element iff rep, n, and n*l agree.
struct CanonicalBasisElem {
    RepPair rep;
    Int n;
    Int l;

    friend bool operator==(const CanonicalBasisElem& a, const CanonicalBasisElem& b) {
        return a.rep == b.rep && a.n == b.n && a.n * a.l == b.n * b.l;
    }
};

// Generator actions, linear over terms:
//   U: u(g u, v) -> g u * u(g u, v)        V: u(g u, v) -> v * u(q^-1 g u, v)
//   U: v(g v, u) -> u * v(q g v, u)        V: v(g v, u) -> g v * v(g v, u)
// with g the fiber coordinate q^gamma_exp, and the inverses determined by
// U U^-1 = U^-1 U = V V^-1 = V^-1 V = id. They satisfy V U = q U V.
TorusElement apply_U(const TorusElement& x);
TorusElement apply_V(const TorusElement& x);
TorusElement apply_Uinv(const TorusElement& x);
TorusElement apply_Vinv(const TorusElement& x);

// U or V iterated; negative powers apply the inverse.
TorusElement apply_U_power(const TorusElement& x, const Int& n);
TorusElement apply_V_power(const TorusElement& x, const Int& n);

// Value q^exponent of the bundle pairing.
struct PairingValue {
    Int exponent;

    friend bool operator==(const PairingValue&, const PairingValue&) = default;
};

// Pairing of one v-side and one u-side term over the same representatives:
//   < q^s v(q^m v, u) | q^r u(q^k u, v) > = q^(r - s - k*m)
// and the u-side-first order gives the inverse value q^(k*m + s - r).
// Coefficients may carry matching u/v factors and unit scalars; the factors
// cancel in the extraction rule. Throws NotSingleTerm, SameBundle,
// UndefinedPairing (distinct reps), NotGammaCoefficient, TorusMismatch.
PairingValue pairing(const TorusElement& left, const TorusElement& right);

// Renders a term list in the grammar
//   [scalar *] [q^a *] [u^b *] [v^c *] u[k; uid, vid]   (or v[m; vid, uid])
// joined by " + ", zero exponents elided, "0" for the empty element.
std::string to_string(const TorusElement& x);

// Parses the to_string grammar back; exact round-trip. Throws ParseError.
TorusElement parse_element(const Torus& torus, const std::string& text);

} // namespace qtorus
