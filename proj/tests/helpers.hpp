// Shared test utilities: seeded random rationals and small brute-force oracles.
#pragma once

#include "cslie/exactalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace testutil {

using cslie::QMat;
using cslie::QVec;
using cslie::Rat;

inline Rat rand_rat(std::mt19937& g, int span = 3, int den = 1) {
    std::uniform_int_distribution<int> num(-span, span), d(1, den);
    Rat r(num(g), d(g));
    r.canonicalize();
    return r;
}

inline QMat rand_mat(std::mt19937& g, std::size_t r, std::size_t c, int span = 3, int den = 1) {
    QMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rand_rat(g, span, den);
    return m;
}

inline QVec rand_vec(std::mt19937& g, std::size_t n, int span = 3) {
    QVec v(n);
    for (auto& x : v) x = rand_rat(g, span);
    return v;
}

// Leibniz expansion; fine up to n = 7.
inline Rat leibniz_det(const QMat& m) {
    std::size_t n = m.rows();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    Rat total = 0;
    do {
        int inv = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inv;
        Rat term = inv % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
        total += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

inline QMat rand_symmetric(std::mt19937& g, std::size_t n) {
    QMat a = rand_mat(g, n, n);
    return a + a.transpose();
}

inline QMat rand_skew(std::mt19937& g, std::size_t n) {
    QMat a = rand_mat(g, n, n);
    return a - a.transpose();
}

inline QMat rand_invertible(std::mt19937& g, std::size_t n) {
    for (;;) {
        QMat a = rand_mat(g, n, n);
        if (cslie::det(a) != 0) return a;
    }
}

} // namespace testutil
