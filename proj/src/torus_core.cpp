#include "qtorus/torus_core.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace qtorus {

Monomial::Monomial(Rational scalar, Int qexp, Int uexp, Int vexp)
    : scalar_(std::move(scalar)), qexp_(std::move(qexp)), uexp_(std::move(uexp)),
      vexp_(std::move(vexp)) {
    if (scalar_ == 0) throw Error("monomial coefficients are nonzero");
}

Monomial Monomial::inverse() const {
    return Monomial(1 / scalar_, -qexp_, -uexp_, -vexp_);
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    return Monomial(a.scalar_ * b.scalar_, a.qexp_ + b.qexp_, a.uexp_ + b.uexp_,
                    a.vexp_ + b.vexp_);
}

void TorusElement::add_term(const BasisVector& basis, const Monomial& coeff) {
    auto [it, inserted] = terms_.emplace(basis, coeff);
    if (inserted) return;
    Monomial& held = it->second;
    if (held.qexp() != coeff.qexp() || held.uexp() != coeff.uexp() ||
        held.vexp() != coeff.vexp())
        throw NotMonomialCoefficient{};
    Rational sum = held.scalar() + coeff.scalar();
    if (sum == 0) terms_.erase(it);
    else held = Monomial(sum, coeff.qexp(), coeff.uexp(), coeff.vexp());
}

std::pair<BasisVector, Monomial> TorusElement::single_term() const {
    if (terms_.size() != 1) throw NotSingleTerm{};
    return *terms_.begin();
}

TorusElement operator+(const TorusElement& x, const TorusElement& y) {
    if (x.tag_ != y.tag_) throw TorusMismatch{};
    TorusElement sum = x;
    for (const auto& [basis, coeff] : y.terms_) sum.add_term(basis, coeff);
    return sum;
}

TorusElement operator*(const Monomial& c, const TorusElement& x) {
    TorusElement scaled(x.tag_);
    for (const auto& [basis, coeff] : x.terms_) scaled.add_term(basis, c * coeff);
    return scaled;
}

TorusElement Torus::u_vector(const RepPair& rep, Int gamma_exp, const Monomial& coeff) const {
    TorusElement x(tag_);
    x.add_term(BasisVector{Bundle::U, rep, std::move(gamma_exp)}, coeff);
    return x;
}

TorusElement Torus::v_vector(const RepPair& rep, Int gamma_exp, const Monomial& coeff) const {
    TorusElement x(tag_);
    x.add_term(BasisVector{Bundle::V, rep, std::move(gamma_exp)}, coeff);
    return x;
}

TorusElement Torus::canonical_basis_elem(const RepPair& rep, const Int& n, const Int& l) const {
    return u_vector(rep, n, Monomial::q_power(n * l));
}

namespace {

// One generator step on a single term; returns the new basis and the factor
// multiplied onto its coefficient. op encodes U, V, U^-1, V^-1 as 0..3.
std::pair<BasisVector, Monomial> step(const BasisVector& basis, int op) {
    BasisVector out = basis;
    Monomial factor;
    const Int& g = basis.gamma_exp;
    if (basis.bundle == Bundle::U) {
        switch (op) {
        case 0: factor = Monomial(1, g, 1, 0); break;                         // U: times q^g u
        case 1: factor = Monomial(1, 0, 0, 1); out.gamma_exp = g - 1; break;  // V: times v
        case 2: factor = Monomial(1, -g, -1, 0); break;                       // U^-1
        case 3: factor = Monomial(1, 0, 0, -1); out.gamma_exp = g + 1; break; // V^-1
        }
    } else {
        switch (op) {
        case 0: factor = Monomial(1, 0, 1, 0); out.gamma_exp = g + 1; break;  // U: times u
        case 1: factor = Monomial(1, g, 0, 1); break;                         // V: times q^g v
        case 2: factor = Monomial(1, 0, -1, 0); out.gamma_exp = g - 1; break; // U^-1
        case 3: factor = Monomial(1, -g, 0, -1); break;                       // V^-1
        }
    }
    return {out, factor};
}

TorusElement apply_op(const TorusElement& x, int op) {
    TorusElement out(x.torus_tag());
    for (const auto& [basis, coeff] : x.terms()) {
        auto [nb, factor] = step(basis, op);
        out.add_term(nb, coeff * factor);
    }
    return out;
}

} // namespace

TorusElement apply_U(const TorusElement& x) { return apply_op(x, 0); }
TorusElement apply_V(const TorusElement& x) { return apply_op(x, 1); }
TorusElement apply_Uinv(const TorusElement& x) { return apply_op(x, 2); }
TorusElement apply_Vinv(const TorusElement& x) { return apply_op(x, 3); }

TorusElement apply_U_power(const TorusElement& x, const Int& n) {
    TorusElement out = x;
    for (Int i = 0; i < abs(n); ++i) out = sgn(n) > 0 ? apply_U(out) : apply_Uinv(out);
    return out;
}

TorusElement apply_V_power(const TorusElement& x, const Int& n) {
    TorusElement out = x;
    for (Int i = 0; i < abs(n); ++i) out = sgn(n) > 0 ? apply_V(out) : apply_Vinv(out);
    return out;
}

PairingValue pairing(const TorusElement& left, const TorusElement& right) {
    if (left.torus_tag() != right.torus_tag()) throw TorusMismatch{};
    auto [lb, lc] = left.single_term();
    auto [rb, rc] = right.single_term();
    if (lb.bundle == rb.bundle) throw SameBundle{};
    if (lb.rep != rb.rep) throw UndefinedPairing{};
    // The extraction rule divides out the coefficients, so their non-q parts
    // must cancel: equal scalars (unit) and equal u/v exponents across sides.
    if (lc.scalar() != 1 || rc.scalar() != 1) throw NotGammaCoefficient{};
    if (lc.uexp() != rc.uexp() || lc.vexp() != rc.vexp()) throw NotGammaCoefficient{};
    const bool left_is_v = lb.bundle == Bundle::V;
    const BasisVector& vb = left_is_v ? lb : rb;
    const BasisVector& ub = left_is_v ? rb : lb;
    const Int& s = left_is_v ? lc.qexp() : rc.qexp();
    const Int& r = left_is_v ? rc.qexp() : lc.qexp();
    // < q^s v(q^m v, u) | q^r u(q^k u, v) > = q^(r - s - k*m); the swapped
    // order is its inverse.
    Int e = r - s - ub.gamma_exp * vb.gamma_exp;
    return PairingValue{left_is_v ? e : -e};
}

namespace {

void render_power(std::ostringstream& out, const char* sym, const Int& e, bool& first) {
    if (e == 0) return;
    if (!first) out << " * ";
    first = false;
    out << sym;
    if (e != 1) out << "^" << e;
}

} // namespace

std::string to_string(const TorusElement& x) {
    if (x.is_zero()) return "0";
    std::ostringstream out;
    bool first_term = true;
    for (const auto& [basis, coeff] : x.terms()) {
        if (!first_term) out << " + ";
        first_term = false;
        bool first = true;
        if (coeff.scalar() != 1) {
            out << coeff.scalar();
            first = false;
        }
        render_power(out, "q", coeff.qexp(), first);
        render_power(out, "u", coeff.uexp(), first);
        render_power(out, "v", coeff.vexp(), first);
        if (!first) out << " * ";
        if (basis.bundle == Bundle::U)
            out << "u[" << basis.gamma_exp << "; " << basis.rep.uid << ", " << basis.rep.vid << "]";
        else
            out << "v[" << basis.gamma_exp << "; " << basis.rep.vid << ", " << basis.rep.uid << "]";
    }
    return out.str();
}

namespace {

// Parser for the term grammar printed by to_string.
class ElementParser {
public:
    ElementParser(const Torus& torus, const std::string& text) : torus_(torus), text_(text) {}

    TorusElement parse() {
        TorusElement x(torus_.tag());
        skip_space();
        if (text_.compare(pos_, 1, "0") == 0 && pos_ + 1 == text_.size()) return x;
        for (;;) {
            term(x);
            skip_space();
            if (pos_ == text_.size()) return x;
            expect('+');
        }
    }

private:
    const Torus& torus_;
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "' at '" + text_.substr(pos_, 12) + "'");
        ++pos_;
    }

    bool lookahead_bracket() {
        // Distinguishes the basis tokens u[ / v[ from coefficient symbols.
        std::size_t i = pos_ + 1;
        while (i < text_.size() && std::isspace(static_cast<unsigned char>(text_[i]))) ++i;
        return i < text_.size() && text_[i] == '[';
    }

    Int integer() {
        skip_space();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == digits) throw ParseError("expected an integer at '" + text_.substr(start, 12) + "'");
        return Int(text_.substr(start, pos_ - start));
    }

    Rational rational() {
        Int num = integer();
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            return make_rational(num, integer());
        }
        return Rational(num);
    }

    Int power_exponent() {
        // Caller consumed the symbol; an optional ^e follows (default 1).
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            ++pos_;
            if (peek() == '(') {
                ++pos_;
                Int e = integer();
                expect(')');
                return e;
            }
            return integer();
        }
        return 1;
    }

    std::string rep_id(char terminator) {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != terminator && text_[pos_] != ']') ++pos_;
        std::size_t end = pos_;
        while (end > start && std::isspace(static_cast<unsigned char>(text_[end - 1]))) --end;
        if (end == start) throw ParseError("empty representative id");
        return text_.substr(start, end - start);
    }

    void term(TorusElement& x) {
        Rational scalar(1);
        Int qe = 0, ue = 0, ve = 0;
        for (;;) {
            char c = peek();
            if (c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c))) {
                scalar *= rational();
            } else if (c == 'q') {
                ++pos_;
                qe += power_exponent();
            } else if ((c == 'u' || c == 'v') && !lookahead_bracket()) {
                ++pos_;
                (c == 'u' ? ue : ve) += power_exponent();
            } else if (c == 'u' || c == 'v') {
                ++pos_; // consume the bundle symbol
                expect('[');
                Int gamma = integer();
                expect(';');
                std::string first = rep_id(',');
                expect(',');
                std::string second = rep_id(']');
                expect(']');
                RepPair rep = c == 'u' ? RepPair{first, second} : RepPair{second, first};
                Bundle bundle = c == 'u' ? Bundle::U : Bundle::V;
                x.add_term(BasisVector{bundle, rep, gamma}, Monomial(scalar, qe, ue, ve));
                return;
            } else {
                throw ParseError("expected a term at '" + text_.substr(pos_, 12) + "'");
            }
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '*') ++pos_;
        }
    }
};

} // namespace

TorusElement parse_element(const Torus& torus, const std::string& text) {
    return ElementParser(torus, text).parse();
}

} // namespace qtorus
