#include "qtorus/morita.hpp"

#include <map>
#include <vector>

#include "qtorus/coset_model.hpp"

namespace qtorus {

namespace {

// Complete quotients x_0 = x, x_i = 1/(x_(i-1) - a_(i-1)) up to index n.
std::vector<QuadNum> complete_quotients(const QuadNum& x, std::size_t n) {
    std::vector<QuadNum> states;
    states.reserve(n + 1);
    QuadNum state = x;
    for (std::size_t i = 0; i <= n; ++i) {
        states.push_back(state);
        state = (state - QuadNum(state.floor())).inverse();
    }
    return states;
}

} // namespace

QuadNum solve_scaling(const Mat2Z& coords, const QuadNum& theta1, const QuadNum& theta2) {
    theta1.require_irrational();
    theta2.require_irrational();
    // The system  theta1 * theta = a'*theta2 + b',  theta = c'*theta2 + d'
    // eliminates theta to theta2 = (d'*theta1 - b')/(-c'*theta1 + a').
    QuadNum rearranged = mobius_apply(coords.adjugate(), theta1);
    if (rearranged != theta2) throw InconsistentWitness{};
    QuadNum theta = QuadNum(coords.c()) * theta2 + QuadNum(coords.d());
    if ((QuadNum(coords.a()) * theta2 + QuadNum(coords.b())) != theta1 * theta)
        throw InconsistentWitness("solution fails the first scaling equation");
    return theta;
}

bool verify_witness(const QuadNum& theta1, const QuadNum& theta2, const MoritaWitness& witness) {
    if (mobius_apply(witness.matrix, theta1) != theta2) return false;
    return cosets_correspond(theta1, theta2, witness.scaling);
}

std::optional<MoritaWitness> decide_morita(const QuadNum& theta1, const QuadNum& theta2) {
    if (theta1.is_rational() || theta2.is_rational())
        throw RationalInput("equivalence is decided for irrational quadratics");
    if (theta1.disc() != theta2.disc()) return std::nullopt;
    CFExpansion cf1 = cf_expand(theta1);
    CFExpansion cf2 = cf_expand(theta2);
    if (cf1.period() != cf2.period()) return std::nullopt;
    // Equal canonical periods mean the expansions share a tail; locate one
    // matching pair of complete quotients. Every index past the preperiod
    // cycles through the same reduced values, so scanning one full cycle of
    // theta1 against preperiod-plus-cycle of theta2 must find a match.
    std::size_t len = cf1.period().size();
    std::size_t n1 = cf1.preperiod().size() + len;
    std::size_t n2 = cf2.preperiod().size() + len;
    std::vector<QuadNum> q1 = complete_quotients(theta1, n1);
    std::vector<QuadNum> q2 = complete_quotients(theta2, n2);
    std::map<QuadNum, std::size_t, QuadNumLess> positions;
    for (std::size_t i = cf1.preperiod().size(); i <= n1; ++i) positions.emplace(q1[i], i);
    for (std::size_t j = 0; j <= n2; ++j) {
        auto it = positions.find(q2[j]);
        if (it == positions.end()) continue;
        std::size_t i = it->second;
        // theta1 = C1(i) * x and theta2 = C2(j) * x on the shared complete
        // quotient x, hence theta2 = C2(j) * C1(i)^-1 * theta1.
        Mat2Z matrix = convergent_matrix(cf2, j) * convergent_matrix(cf1, i).inverse();
        if (mobius_apply(matrix, theta1) != theta2)
            throw Error("tail witness fails its defining identity");
        MoritaWitness witness{matrix, solve_scaling(matrix.adjugate(), theta1, theta2), i, j};
        if (!cosets_correspond(theta1, theta2, witness.scaling))
            throw Error("tail witness fails the coset criterion");
        return witness;
    }
    throw Error("equal periods without a shared complete quotient");
}

std::optional<Mat2Z> brute_force_search(const QuadNum& theta1, const QuadNum& theta2, long bound) {
    if (theta1.is_rational() || theta2.is_rational())
        throw RationalInput("equivalence is decided for irrational quadratics");
    if (bound < 0) throw Error("search bound must be nonnegative");
    if (theta1.disc() != theta2.disc()) return std::nullopt;
    // theta2 * (c*theta1 + d) = a*theta1 + b determines (a, b) from (c, d)
    // by matching coordinates in the basis {1, sqrt(D)}, so the search is
    // quadratic in the bound rather than quartic. The enumeration order
    // 0, 1, -1, 2, -2, ... on c then d, with the same ranking applied to
    // the derived (a, b), reproduces the minimum of the full 4-tuple order.
    auto rank = [](const Int& x) { return sgn(x) >= 0 ? Int(2 * x - 1) : Int(-2 * x); };
    auto rank_le = [&](const Mat2Z& m, const Mat2Z& n) {
        Int rm[4] = {rank(m.a()), rank(m.b()), rank(m.c()), rank(m.d())};
        Int rn[4] = {rank(n.a()), rank(n.b()), rank(n.c()), rank(n.d())};
        for (int i = 0; i < 4; ++i) {
            if (rm[i] != rn[i]) return rm[i] < rn[i];
        }
        return true;
    };
    std::optional<Mat2Z> best;
    Rational t0 = theta1.rational_part();
    Rational t1 = theta1.radical_coeff();
    for (long c = -bound; c <= bound; ++c) {
        for (long d = -bound; d <= bound; ++d) {
            if (c == 0 && d == 0) continue;
            QuadNum rhs = theta2 * (QuadNum(c) * theta1 + QuadNum(d));
            Rational a = rhs.radical_coeff() / t1;
            if (!is_integer(a)) continue;
            Rational b = rhs.rational_part() - a * t0;
            if (!is_integer(b)) continue;
            Int ai(a.get_num()), bi(b.get_num());
            if (abs(ai) > bound || abs(bi) > bound) continue;
            Int det = ai * Int(d) - bi * Int(c);
            if (det != 1 && det != -1) continue;
            Mat2Z m(ai, bi, c, d);
            if (!best || rank_le(m, *best)) best = m;
        }
    }
    return best;
}

} // namespace qtorus
