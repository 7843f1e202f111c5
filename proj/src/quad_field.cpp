#include "qtorus/quad_field.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <utility>

namespace qtorus {

QuadNum QuadNum::make(Int p, Int q, Int r, Int d) {
    if (r == 0) throw ZeroDenominator{};
    if (sgn(d) < 0) throw Error("negative radicand");
    if (q != 0 && d != 0) {
        auto [s, core] = squarefree_split(d);
        q *= s;
        d = core;
    }
    if (d == 1) {
        p += q;
        q = 0;
    }
    if (q == 0) d = 0;
    if (d == 0) q = 0;
    if (sgn(r) < 0) {
        p = -p;
        q = -q;
        r = -r;
    }
    Int g = gcd(gcd(p, q), r);
    if (g > 1) {
        p /= g;
        q /= g;
        r /= g;
    }
    QuadNum x;
    x.p_ = std::move(p);
    x.q_ = std::move(q);
    x.r_ = std::move(r);
    x.d_ = std::move(d);
    return x;
}

QuadNum QuadNum::sqrt_of(const Int& d) { return make(0, 1, 1, d); }

const QuadNum& QuadNum::require_irrational() const {
    if (is_rational()) throw RationalValue{};
    return *this;
}

Rational QuadNum::as_rational() const {
    if (!is_rational()) throw Error("value is irrational");
    return make_rational(p_, r_);
}

const Int& QuadNum::common_disc(const QuadNum& a, const QuadNum& b) {
    if (a.q_ == 0) return b.d_;
    if (b.q_ == 0) return a.d_;
    if (a.d_ != b.d_) throw MixedDiscriminant{};
    return a.d_;
}

QuadNum operator+(const QuadNum& a, const QuadNum& b) {
    const Int& d = QuadNum::common_disc(a, b);
    return QuadNum::make(a.p_ * b.r_ + b.p_ * a.r_, a.q_ * b.r_ + b.q_ * a.r_, a.r_ * b.r_, d);
}

QuadNum QuadNum::operator-() const {
    QuadNum x = *this;
    x.p_ = -x.p_;
    x.q_ = -x.q_;
    return x;
}

QuadNum operator-(const QuadNum& a, const QuadNum& b) { return a + (-b); }

QuadNum operator*(const QuadNum& a, const QuadNum& b) {
    const Int& d = QuadNum::common_disc(a, b);
    return QuadNum::make(a.p_ * b.p_ + a.q_ * b.q_ * d, a.p_ * b.q_ + a.q_ * b.p_, a.r_ * b.r_, d);
}

QuadNum QuadNum::conjugate() const {
    QuadNum x = *this;
    x.q_ = -x.q_;
    return x;
}

QuadNum QuadNum::inverse() const {
    if (is_zero()) throw DivisionByZero{};
    // r/(p + q*sqrt(d)) = r*(p - q*sqrt(d))/(p^2 - q^2 d)
    return make(r_ * p_, -r_ * q_, p_ * p_ - q_ * q_ * d_, d_);
}

QuadNum operator/(const QuadNum& a, const QuadNum& b) { return a * b.inverse(); }

Int QuadNum::floor() const {
    if (q_ == 0) return fdiv_floor(p_, r_);
    // q*sqrt(d) lies strictly between consecutive integers sgn(q)*s and
    // sgn(q)*(s+1) where s = isqrt(q^2 d); start there and correct exactly.
    Int s = isqrt(q_ * q_ * d_);
    Int lo = q_ > 0 ? Int(p_ + s) : Int(p_ - s - 1);
    Int n = fdiv_floor(lo, r_);
    // x - n has sign radical_sign(p - n*r, q, d); nudge until n <= x < n+1.
    while (radical_sign(p_ - n * r_, q_, d_) < 0) --n;
    while (radical_sign(p_ - (n + 1) * r_, q_, d_) >= 0) ++n;
    return n;
}

std::string QuadNum::approx_decimal(std::size_t digits) const {
    if (digits == 0) return floor().get_str();
    Int scale = 1;
    for (std::size_t i = 0; i < digits; ++i) scale *= 10;
    Int t = (*this * QuadNum(scale)).floor();
    bool negative = sgn(t) < 0;
    if (negative) t = -t;
    std::string body = t.get_str();
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
    return (negative ? "-" : "") + body;
}

std::string to_string(const QuadNum& x) {
    std::ostringstream out;
    if (x.q() == 0) {
        out << x.p();
        if (x.r() != 1) out << "/" << x.r();
        return out.str();
    }
    std::ostringstream core;
    bool parens = false;
    if (x.p() != 0) {
        core << x.p() << (sgn(x.q()) > 0 ? " + " : " - ");
        Int aq = abs(x.q());
        if (aq != 1) core << aq << "*";
        core << "sqrt(" << x.disc() << ")";
        parens = true;
    } else {
        if (x.q() == -1) core << "-";
        else if (x.q() != 1) core << x.q() << "*";
        core << "sqrt(" << x.disc() << ")";
    }
    if (x.r() == 1) return core.str();
    if (parens) out << "(" << core.str() << ")";
    else out << core.str();
    out << "/" << x.r();
    return out.str();
}

namespace {

// Recursive-descent parser for the quadratic number grammar.
class QuadParser {
public:
    explicit QuadParser(const std::string& text) : text_(text) {}

    QuadNum parse() {
        QuadNum x = expr();
        skip_space();
        if (pos_ != text_.size()) throw ParseError("trailing input at '" + rest() + "'");
        return x;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    std::string rest() const { return text_.substr(pos_, 12); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    QuadNum expr() {
        QuadNum x = term();
        for (;;) {
            if (consume('+')) x = x + term();
            else if (consume('-')) x = x - term();
            else return x;
        }
    }

    QuadNum term() {
        QuadNum x = unary();
        for (;;) {
            if (consume('*')) x = x * unary();
            else if (consume('/')) {
                QuadNum y = unary();
                if (y.is_zero()) throw ParseError("division by zero");
                x = x / y;
            } else return x;
        }
    }

    QuadNum unary() {
        if (consume('-')) return -unary();
        if (consume('+')) return unary();
        return primary();
    }

    QuadNum primary() {
        skip_space();
        if (consume('(')) {
            QuadNum x = expr();
            if (!consume(')')) throw ParseError("expected ')' at '" + rest() + "'");
            return x;
        }
        if (std::isdigit(static_cast<unsigned char>(peek()))) return integer();
        if (text_.compare(pos_, 4, "sqrt") == 0) {
            pos_ += 4;
            if (!consume('(')) throw ParseError("expected '(' after sqrt");
            QuadNum arg = expr();
            if (!consume(')')) throw ParseError("expected ')' at '" + rest() + "'");
            if (!arg.is_rational()) throw ParseError("nested radicals are not supported");
            Rational a = arg.as_rational();
            if (sgn(a.get_num()) < 0) throw ParseError("negative radicand");
            // sqrt(m/n) = sqrt(m*n)/n
            return QuadNum::make(0, 1, a.get_den(), a.get_num() * a.get_den());
        }
        throw ParseError("expected a number at '" + rest() + "'");
    }

    QuadNum integer() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return QuadNum(Int(text_.substr(start, pos_ - start)));
    }
};

} // namespace

QuadNum parse_quad(const std::string& text) { return QuadParser(text).parse(); }

Mat2Z::Mat2Z(Int a, Int b, Int c, Int d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    Int det = a_ * d_ - b_ * c_;
    if (det != 1 && det != -1) throw NotUnimodular{};
}

Mat2Z Mat2Z::inverse() const {
    // det = +-1, so the inverse is adj/det = det * adj.
    Mat2Z adj = adjugate();
    if (det() == 1) return adj;
    return Mat2Z(-adj.a_, -adj.b_, -adj.c_, -adj.d_);
}

std::string to_string(const Mat2Z& m) {
    std::ostringstream out;
    out << "[[" << m.a() << ", " << m.b() << "], [" << m.c() << ", " << m.d() << "]]";
    return out.str();
}

QuadNum mobius_apply(const Mat2Z& m, const QuadNum& x) {
    QuadNum den = QuadNum(m.c()) * x + QuadNum(m.d());
    if (den.is_zero()) throw DivisionByZero{};
    return (QuadNum(m.a()) * x + QuadNum(m.b())) / den;
}

CFExpansion::CFExpansion(std::vector<Int> preperiod, std::vector<Int> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (preperiod_.empty()) throw Error("preperiod must contain the leading quotient");
    if (period_.empty()) throw Error("period must be nonempty");
}

Int CFExpansion::quotient(std::size_t i) const {
    if (i < preperiod_.size()) return preperiod_[i];
    return period_[(i - preperiod_.size()) % period_.size()];
}

namespace {

Mat2Z step_matrix(const Int& a) { return Mat2Z(a, 1, 1, 0); }

// Rotation offset giving the lexicographically least rotation of cycle.
std::size_t least_rotation_offset(const std::vector<Int>& cycle) {
    std::size_t best = 0;
    std::size_t n = cycle.size();
    for (std::size_t cand = 1; cand < n; ++cand) {
        for (std::size_t i = 0; i < n; ++i) {
            int c = cmp(cycle[(cand + i) % n], cycle[(best + i) % n]);
            if (c < 0) best = cand;
            if (c != 0) break;
        }
    }
    return best;
}

} // namespace

CFExpansion cf_expand(const QuadNum& x) {
    if (x.is_rational()) throw RationalInput("continued fraction tails need an irrational quadratic");
    std::vector<Int> quots;
    std::map<QuadNum, std::size_t, QuadNumLess> seen;
    QuadNum state = x;
    std::size_t first;
    for (;;) {
        auto it = seen.find(state);
        if (it != seen.end()) {
            first = it->second;
            break;
        }
        seen.emplace(state, quots.size());
        Int a = state.floor();
        quots.push_back(a);
        state = (state - QuadNum(a)).inverse();
    }
    // Complete quotients repeat: state at index quots.size() equals the one
    // at index first, so the cycle is quots[first..quots.size()).
    std::vector<Int> cycle(quots.begin() + static_cast<std::ptrdiff_t>(first), quots.end());
    std::size_t len = cycle.size();
    std::size_t start = first + least_rotation_offset(cycle);
    if (start == 0) start = len; // keep the leading quotient in the preperiod
    std::vector<Int> preperiod, period;
    for (std::size_t i = 0; i < start; ++i)
        preperiod.push_back(i < first ? quots[i] : cycle[(i - first) % len]);
    for (std::size_t i = 0; i < len; ++i)
        period.push_back(cycle[(start - first + i) % len]);
    return CFExpansion(std::move(preperiod), std::move(period));
}

QuadNum CFExpansion::evaluate() const {
    // The purely periodic tail t = [period; period; ...] is the fixed point
    // of its quotient-matrix product P: t = (A t + B)/(C t + D), i.e. the
    // root greater than 1 of C t^2 + (D - A) t - B = 0.
    Mat2Z p = step_matrix(period_[0]);
    for (std::size_t i = 1; i < period_.size(); ++i) p = p * step_matrix(period_[i]);
    Int n = (p.a() - p.d()) * (p.a() - p.d()) + 4 * p.b() * p.c();
    if (sgn(n) <= 0 || is_square(n)) throw Error("period does not describe a quadratic irrational");
    QuadNum tail = QuadNum::make(p.a() - p.d(), 1, 2 * p.c(), n);
    Mat2Z fold = Mat2Z::identity();
    for (const Int& a : preperiod_) fold = fold * step_matrix(a);
    return mobius_apply(fold, tail);
}

std::string to_string(const CFExpansion& cf) {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < cf.preperiod().size(); ++i) {
        if (i) out << ", ";
        out << cf.preperiod()[i];
    }
    out << "; (";
    for (std::size_t i = 0; i < cf.period().size(); ++i) {
        if (i) out << ", ";
        out << cf.period()[i];
    }
    out << ")]";
    return out.str();
}

Mat2Z convergent_matrix(const CFExpansion& cf, std::size_t k) {
    Mat2Z m = Mat2Z::identity();
    for (std::size_t i = 0; i < k; ++i) m = m * step_matrix(cf.quotient(i));
    return m;
}

} // namespace qtorus
