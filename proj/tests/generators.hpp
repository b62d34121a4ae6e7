// Random valid inputs shared by the unit tests and the acceptance run.
#pragma once

#include "cslie/almostabelian.hpp"
#include "cslie/cotangent.hpp"
#include "cslie/fixtures.hpp"
#include "helpers.hpp"

namespace testutil {

using namespace cslie;

inline Rat nonzero(std::mt19937& g) {
    Rat r = 0;
    while (r == 0) r = rand_rat(g, 3, 2);
    return r;
}

inline ThmCSParams random_params(unsigned n, std::mt19937& g, std::mt19937_64& g64) {
    ThmCSParams P;
    P.fJ = n > 1 ? random_sp_complex(n - 1, g64, 2) : QMat(0, 0);
    P.a = rand_rat(g);
    P.b = rand_rat(g);
    P.c = rand_rat(g);
    P.u = rand_vec(g, 4 * n - 4);
    return P;
}

inline EquivalenceMove random_move(unsigned n, std::mt19937& g, std::mt19937_64& g64) {
    EquivalenceMove M;
    M.Delta = n > 1 ? random_Sp_complex(n - 1, g64) : QMat(0, 0);
    M.lambda = nonzero(g);
    M.mu1 = rand_rat(g);
    M.mu2 = rand_rat(g);
    M.uX = rand_vec(g, 4 * n - 4);
    return M;
}

inline std::vector<Family> families_for(unsigned n) {
    std::vector<Family> out{Family::NonUnimodularPlain, Family::UnimodularPlain};
    if (n >= 2) {
        out.push_back(Family::NonUnimodularJordan);
        out.push_back(Family::UnimodularOdd);
        out.push_back(Family::UnimodularEven);
    }
    return out;
}

inline CanonicalFParams random_family(unsigned n, Family fam, std::mt19937& g, std::mt19937_64& g64) {
    CanonicalFParams P;
    P.family = fam;
    if (fam == Family::NonUnimodularJordan || fam == Family::UnimodularEven) P.index = 1 + g() % (n - 1);
    if (fam == Family::UnimodularOdd) P.index = 1 + g() % (n / 2);
    unsigned size = family_inner_size(n, fam, P.index);
    P.inner = size ? random_sp_complex(size / 4, g64, 2) : QMat(0, 0);
    P.b = rand_rat(g);
    P.c = rand_rat(g);
    return P;
}

inline H7Params random_h7(std::mt19937& g) {
    H7Params p;
    for (Rat* r : {&p.r13, &p.r14, &p.r15, &p.r16, &p.r23, &p.r24, &p.r25, &p.r26, &p.r35, &p.r36, &p.r45,
                   &p.r46})
        *r = rand_rat(g, 2);
    Rat s = 0;
    while (s == 0) s = rand_rat(g, 3, 3);
    auto [c, si] = circle_point(s);
    p.cos_t = c;
    p.sin_t = si;
    return p;
}

inline CotangentData random_rho_zero(std::mt19937& g) {
    RhoZeroFamily p;
    for (int i = 1; i <= 6; ++i) p.a[i] = rand_rat(g, 2), p.c[i] = rand_rat(g, 2);
    for (int i = 1; i <= 4; ++i) p.b[i] = rand_rat(g, 2), p.d[i] = rand_rat(g, 2);
    rho_zero_solve_constraints(p);
    return rho_zero_builder(4, rho_zero_family_forms(p));
}

/// Valid-by-construction extension data: h7 families, the general rho = 0 family, and fixed examples.
inline std::vector<CotangentData> valid_cotangent_pool(std::mt19937& g, int h7_draws = 60, int rho_draws = 25) {
    std::vector<CotangentData> out;
    for (int t = 0; t < h7_draws; ++t) out.push_back(h7_solution_family(1 + t % 4, random_h7(g)));
    for (int t = 0; t < rho_draws; ++t) out.push_back(random_rho_zero(g));
    for (unsigned n = 1; n <= 3; ++n) out.push_back(rho_zero_builder(2 * n, rho_zero_case_a(n)));
    out.push_back(fullrank_dim4());
    out.push_back(fullrank_dim8(0));
    out.push_back(fullrank_dim8(1));
    return out;
}

/// The span of the first half of the coordinates (h* in a built extension).
inline Subspace first_half(std::size_t n) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n / 2; ++i) idx.push_back(i);
    return Subspace::coordinate(n, idx);
}

/// Structural validity of the built algebra, decided without the six conditions.
inline bool built_valid(const CotangentData& D) {
    auto B = build_cotangent(D);
    if (B.algebra.jacobi_witness()) return false;
    if (!verify_cs(B.algebra, B.structure).verdict) return false;
    Subspace hs = first_half(2 * D.dim());
    return is_ideal(B.algebra, hs) && is_abelian_subalgebra(B.algebra, hs);
}

/// Adds 1 to one entry of rho or alpha.
inline CotangentData perturb(CotangentData D, std::mt19937& g) {
    std::size_t d = D.dim();
    if (g() % 2) {
        std::size_t i = g() % d, r = g() % d, c = g() % d;
        D.rho[i](r, c) += 1;
    } else {
        std::size_t i = g() % d, j = (i + 1 + g() % (d - 1)) % d;
        QVec v = D.alpha_at(i, j);
        v[g() % d] += 1;
        D.set_alpha(i, j, v);
    }
    return D;
}

struct LagrangianCase {
    QMat Omega, J;
    Subspace L;
};

/// h* + h with the pairing form, J = J*^T + J (symmetric) or J + J (skew), moved by a random basis change.
inline LagrangianCase random_lagrangian_case(std::mt19937& g, std::size_t half, bool symmetric) {
    std::size_t n = 2 * half;
    QMat J0 = standard_J(half);
    QMat W(n, n);
    for (std::size_t i = 0; i < half; ++i) W(i, half + i) = 1, W(half + i, i) = -1;
    QMat J = QMat::block_diag({symmetric ? J0.transpose() : J0, J0});
    QMat P = rand_invertible(g, n);
    QMat Pi = *inverse(P);
    return {P.transpose() * W * P, Pi * J * P, first_half(n).image(Pi)};
}

} // namespace testutil
