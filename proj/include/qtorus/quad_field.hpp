#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "qtorus/numeric.hpp"

namespace qtorus {

// Exact element of a real quadratic field, stored as (p + q*sqrt(d))/r.
// Invariants: r > 0, gcd(p, q, r) = 1, and d is squarefree with d > 1
// whenever q != 0. Rational values are the q = 0, d = 0 case, so equal
// values always share one representation and operator== is exact.
class QuadNum {
public:
    QuadNum() : p_(0), q_(0), r_(1), d_(0) {}
    QuadNum(const Int& value) : p_(value), q_(0), r_(1), d_(0) {}
    QuadNum(long value) : p_(value), q_(0), r_(1), d_(0) {}
    QuadNum(const Rational& value) : p_(value.get_num()), q_(0), r_(value.get_den()), d_(0) {}

    // Normalizes (p + q*sqrt(d))/r. pre: r != 0 and d >= 0; d may carry a
    // square factor, which is folded into q.
    static QuadNum make(Int p, Int q, Int r, Int d);

    // sqrt(d) for d >= 0; rational when d is a perfect square.
    static QuadNum sqrt_of(const Int& d);

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    const Int& r() const { return r_; }
    const Int& disc() const { return d_; }

    bool is_rational() const { return q_ == 0; }
    bool is_zero() const { return p_ == 0 && q_ == 0; }

    // Throws RationalValue unless the value is an irrational quadratic.
    const QuadNum& require_irrational() const;

    // pre: is_rational()
    Rational as_rational() const;

    // Coordinates in the basis {1, sqrt(disc())}: value = rational_part() +
    // radical_coeff() * sqrt(disc()).
    Rational rational_part() const { return make_rational(p_, r_); }
    Rational radical_coeff() const { return make_rational(q_, r_); }

    int sign() const { return radical_sign(p_, q_, d_); }
    Int floor() const;

    QuadNum conjugate() const;
    QuadNum inverse() const; // throws DivisionByZero on zero

    friend QuadNum operator+(const QuadNum& a, const QuadNum& b);
    friend QuadNum operator-(const QuadNum& a, const QuadNum& b);
    friend QuadNum operator*(const QuadNum& a, const QuadNum& b);
    friend QuadNum operator/(const QuadNum& a, const QuadNum& b);
    QuadNum operator-() const;

    friend bool operator==(const QuadNum& a, const QuadNum& b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && a.r_ == b.r_ && a.d_ == b.d_;
    }
    friend bool operator!=(const QuadNum& a, const QuadNum& b) { return !(a == b); }

    // Exact value comparison; operands must admit a common field.
    friend bool operator<(const QuadNum& a, const QuadNum& b) { return (a - b).sign() < 0; }
    friend bool operator>(const QuadNum& a, const QuadNum& b) { return b < a; }
    friend bool operator<=(const QuadNum& a, const QuadNum& b) { return !(b < a); }
    friend bool operator>=(const QuadNum& a, const QuadNum& b) { return !(a < b); }

    // Truncated decimal expansion for display only; exact routines never use it.
    std::string approx_decimal(std::size_t digits = 6) const;

    // The discriminant of the field both values live in (rationals are
    // compatible with every field); throws MixedDiscriminant otherwise.
    static const Int& common_disc(const QuadNum& a, const QuadNum& b);

private:
    Int p_, q_, r_, d_;
};

// Structural strict weak order for ordered containers.
struct QuadNumLess {
    bool operator()(const QuadNum& a, const QuadNum& b) const {
        if (a.disc() != b.disc()) return a.disc() < b.disc();
        if (a.p() != b.p()) return a.p() < b.p();
        if (a.q() != b.q()) return a.q() < b.q();
        return a.r() < b.r();
    }
};

// Renders in the grammar accepted by parse_quad, e.g. "(1 + sqrt(5))/2".
std::string to_string(const QuadNum& x);

// Parses integers, fractions, and sqrt() terms combined with + - * / and
// parentheses, e.g. "sqrt(2)", "(-3 + 2*sqrt(7))/5", "1/2 + sqrt(8)".
// Radicands must be rational and nonnegative. Throws ParseError.
QuadNum parse_quad(const std::string& text);

// Integer 2x2 matrix with |det| = +-1; the constructor enforces this.
class Mat2Z {
public:
    Mat2Z(Int a, Int b, Int c, Int d);
    static Mat2Z identity() { return Mat2Z(1, 0, 0, 1); }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    Int det() const { return a_ * d_ - b_ * c_; }
    Mat2Z adjugate() const { return Mat2Z(d_, -b_, -c_, a_); }
    Mat2Z inverse() const; // exact, using det = +-1

    friend Mat2Z operator*(const Mat2Z& m, const Mat2Z& n) {
        return Mat2Z(m.a_ * n.a_ + m.b_ * n.c_, m.a_ * n.b_ + m.b_ * n.d_,
                     m.c_ * n.a_ + m.d_ * n.c_, m.c_ * n.b_ + m.d_ * n.d_);
    }
    friend bool operator==(const Mat2Z& m, const Mat2Z& n) {
        return m.a_ == n.a_ && m.b_ == n.b_ && m.c_ == n.c_ && m.d_ == n.d_;
    }

private:
    Int a_, b_, c_, d_;
};

std::string to_string(const Mat2Z& m);

// (a*x + b)/(c*x + d). Throws DivisionByZero when c*x + d = 0.
QuadNum mobius_apply(const Mat2Z& m, const QuadNum& x);

// Continued fraction of a quadratic irrational: the expansion is eventually
// periodic, the first partial quotient always sits in the preperiod, and the
// period is rotated to its lexicographically least form. These two rules pin
// a unique representation, so equal tails compare equal directly.
class CFExpansion {
public:
    CFExpansion(std::vector<Int> preperiod, std::vector<Int> period);

    const std::vector<Int>& preperiod() const { return preperiod_; }
    const std::vector<Int>& period() const { return period_; }

    // Partial quotient a_i of the infinite expansion.
    Int quotient(std::size_t i) const;

    // Exact value of the expansion; inverse of cf_expand.
    QuadNum evaluate() const;

    friend bool operator==(const CFExpansion& x, const CFExpansion& y) {
        return x.preperiod_ == y.preperiod_ && x.period_ == y.period_;
    }

private:
    std::vector<Int> preperiod_;
    std::vector<Int> period_;
};

std::string to_string(const CFExpansion& cf);

// Throws RationalInput on rational arguments.
CFExpansion cf_expand(const QuadNum& x);

// Product [[a_0,1],[1,0]] * ... * [[a_(k-1),1],[1,0]] over the first k
// partial quotients; k = 0 gives the identity. The first column holds the
// convergent numerator and denominator, det = (-1)^k, and the value x
// satisfies x = M * x_k (Moebius action on the k-th complete quotient).
Mat2Z convergent_matrix(const CFExpansion& cf, std::size_t k);

} // namespace qtorus
