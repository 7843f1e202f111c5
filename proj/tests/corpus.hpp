#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "qtorus/quad_field.hpp"

namespace qtorus::testing {

// A labelled pair of irrational quadratics; `equivalent` is known by
// construction (unimodular orbit) or by a determinant-parity proof, so the
// labels do not depend on the code under test.
struct CorpusPair {
    QuadNum theta1;
    QuadNum theta2;
    bool equivalent;
    std::string note;
};

inline Int max_entry(const Mat2Z& m) {
    Int mx = abs(m.a());
    for (const Int& e : {Int(abs(m.b())), Int(abs(m.c())), Int(abs(m.d()))})
        if (e > mx) mx = e;
    return mx;
}

// Deterministic GL2(Z) word with entries bounded by 10: alternate a shear
// with a quarter turn while the bound allows.
inline Mat2Z random_unimodular(std::mt19937& rng) {
    std::uniform_int_distribution<int> shear(-3, 3);
    const Mat2Z flip(0, -1, 1, 0);
    Mat2Z m = Mat2Z::identity();
    for (int step = 0; step < 6; ++step) {
        Mat2Z cand = m * Mat2Z(1, shear(rng), 0, 1) * flip;
        if (max_entry(cand) > 10) break;
        m = cand;
    }
    return m;
}

// Fifty pairs over the squarefree discriminants {2, 3, 5, 7, 13}: 25 in the
// same unimodular orbit by construction, 15 same-field pairs with an entry
// parity/divisibility proof of inequivalence, 10 cross-field pairs.
inline std::vector<CorpusPair> morita_corpus() {
    std::vector<CorpusPair> corpus;
    const std::vector<long> discs = {2, 3, 5, 7, 13};
    std::mt19937 rng(20260814u);

    for (long d : discs) {
        const QuadNum seeds[] = {
            QuadNum::sqrt_of(d),
            QuadNum(1) + QuadNum::sqrt_of(d),
            QuadNum::make(1, 1, 2, d),
            QuadNum::make(-2, 3, 5, d),
            QuadNum::make(4, -1, 3, d),
        };
        int i = 0;
        for (const QuadNum& theta1 : seeds) {
            QuadNum theta2 = mobius_apply(random_unimodular(rng), theta1);
            corpus.push_back({theta1, theta2, true,
                              "orbit D=" + std::to_string(d) + " #" + std::to_string(i++)});
        }
    }

    // theta1 = k*sqrt(D), theta2 = sqrt(D): matching coordinates forces
    // b = c*k*D and d = a*k, so det = k*(a^2 - c^2*D), a multiple of k.
    for (long d : discs)
        for (long k : {2, 3})
            corpus.push_back({QuadNum(k) * QuadNum::sqrt_of(d), QuadNum::sqrt_of(d), false,
                              std::to_string(k) + "*sqrt(" + std::to_string(d) + ") vs sqrt"});
    for (long d : {2, 3, 7})
        corpus.push_back({QuadNum(5) * QuadNum::sqrt_of(d), QuadNum::sqrt_of(d), false,
                          "5*sqrt(" + std::to_string(d) + ") vs sqrt"});

    // theta1 = (1+sqrt(D))/2, theta2 = sqrt(D): matching forces a = c + 2*d
    // and b = c*(D-1)/2 - d, so det = 2*c*d + 2*d^2 - c^2*(D-1)/2, which is
    // even for D = 5 and D = 13.
    for (long d : {5, 13})
        corpus.push_back({QuadNum::make(1, 1, 2, d), QuadNum::sqrt_of(d), false,
                          "(1+sqrt(" + std::to_string(d) + "))/2 vs sqrt"});

    for (std::size_t i = 0; i < discs.size(); ++i)
        for (std::size_t j = i + 1; j < discs.size(); ++j)
            corpus.push_back({QuadNum::sqrt_of(discs[i]), QuadNum::sqrt_of(discs[j]), false,
                              "sqrt(" + std::to_string(discs[i]) + ") vs sqrt(" +
                                  std::to_string(discs[j]) + ")"});

    return corpus;
}

} // namespace qtorus::testing
