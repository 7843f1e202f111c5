#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <utility>

#include "qtorus/errors.hpp"

namespace qtorus {

using Int = mpz_class;
using Rational = mpq_class;

inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

// Floor division; the remainder has the divisor's sign.
inline Int fdiv_floor(const Int& num, const Int& den) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

// Largest s with s*s <= x. pre: x >= 0.
inline Int isqrt(const Int& x) {
    Int s;
    mpz_sqrt(s.get_mpz_t(), x.get_mpz_t());
    return s;
}

inline bool is_square(const Int& x) {
    return sgn(x) >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Reduced fraction with positive denominator.
inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw ZeroDenominator{};
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Splits x > 0 as s^2 * core with core squarefree; returns (s, core).
inline std::pair<Int, Int> squarefree_split(const Int& x) {
    Int core = x;
    Int s = 1;
    for (Int f = 2; f * f <= core; ++f) {
        Int ff = f * f;
        while (core % ff == 0) {
            core /= ff;
            s *= f;
        }
    }
    return {s, core};
}

// Exact sign of a + b*sqrt(d). pre: d >= 0, and d > 0 when b != 0.
inline int radical_sign(const Int& a, const Int& b, const Int& d) {
    if (b == 0) return sgn(a);
    if (a == 0) return sgn(b);
    if (sgn(a) == sgn(b)) return sgn(a);
    int c = cmp(a * a, b * b * d);
    if (c == 0) return 0;
    return c > 0 ? sgn(a) : sgn(b);
}

} // namespace qtorus
