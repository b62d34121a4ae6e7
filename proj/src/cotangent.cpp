#include "cslie/cotangent.hpp"

#include <functional>

namespace cslie {

namespace {

bool is_zero_vec(const QVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

QVec add(QVec a, const QVec& b, const Rat& s = 1) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
    return a;
}

std::string idx(std::size_t i) { return std::to_string(i + 1); }

void fail(ConditionResult& r, const std::string& w) {
    if (r.ok) {
        r.ok = false;
        r.witness = w;
    }
}

QMat rho_of(const CotangentData& D, const QVec& X) {
    QMat M(D.dim(), D.dim());
    for (std::size_t i = 0; i < X.size(); ++i)
        if (X[i] != 0) M = M + X[i] * D.rho[i];
    return M;
}

QVec alpha_of(const CotangentData& D, const QVec& X, const QVec& Y) {
    QVec r(D.dim());
    for (std::size_t a = 0; a < X.size(); ++a) {
        if (X[a] == 0) continue;
        for (std::size_t b = 0; b < Y.size(); ++b)
            if (Y[b] != 0) r = add(r, D.alpha_at(a, b), X[a] * Y[b]);
    }
    return r;
}

void check_shape(const CotangentData& D) {
    std::size_t d = D.dim();
    if (D.J.rows() != d || D.J.cols() != d) throw AlgebraError("cotangent data: J has the wrong size");
    if (D.rho.size() != d) throw AlgebraError("cotangent data: need one rho matrix per basis vector of h");
    for (const auto& m : D.rho)
        if (m.rows() != d || m.cols() != d) throw AlgebraError("cotangent data: rho matrix has the wrong size");
    if (D.alpha.size() != d * d) throw AlgebraError("cotangent data: alpha has the wrong size");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (D.alpha_at(i, j).size() != d) throw AlgebraError("cotangent data: alpha covector has the wrong size");
            if (add(D.alpha_at(i, j), D.alpha_at(j, i)) != QVec(d))
                throw AlgebraError("cotangent data: alpha is not antisymmetric");
        }
}

} // namespace

void CotangentData::set_alpha(std::size_t i, std::size_t j, const QVec& v) {
    alpha[i * dim() + j] = v;
    QVec m = v;
    for (auto& x : m) x = -x;
    alpha[j * dim() + i] = m;
}

CotangentData trivial_cotangent(const LieAlgebra& h, const QMat& J) {
    std::size_t d = h.dim();
    return {h, J, std::vector<QMat>(d, QMat(d, d)), std::vector<QVec>(d * d, QVec(d))};
}

CotangentBuild build_cotangent(const CotangentData& D) {
    check_shape(D);
    std::size_t d = D.dim();
    std::vector<Bracket> br;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t c = 0; c < d; ++c)
            for (std::size_t r = 0; r < d; ++r)
                if (D.rho[i](r, c) != 0) br.push_back({d + i, c, r, D.rho[i](r, c)});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            for (std::size_t k = 0; k < d; ++k)
                if (D.h.c(i, j, k) != 0) br.push_back({d + i, d + j, d + k, D.h.c(i, j, k)});
            const QVec& a = D.alpha_at(i, j);
            for (std::size_t r = 0; r < d; ++r)
                if (a[r] != 0) br.push_back({d + i, d + j, r, a[r]});
        }
    CotangentBuild out{LieAlgebra(2 * d, br, false), {}};
    QMat J(2 * d, 2 * d), W(2 * d, 2 * d);
    J.set_block(0, 0, D.J.transpose());
    J.set_block(d, d, D.J);
    for (std::size_t a = 0; a < d; ++a) {
        W(a, d + a) = 1;
        W(d + a, a) = -1;
    }
    out.structure = {J, W};
    return out;
}

bool ConditionReport::all() const {
    return c1_cocycle.ok && c2_morphism.ok && c3_bianchi.ok && c4_alpha_type.ok && c5_rho_omega.ok && c6_rho_type.ok;
}

ConditionReport check_conditions(const CotangentData& D) {
    check_shape(D);
    ConditionReport R;
    std::size_t d = D.dim();
    QMat Js = D.J.transpose();
    auto e = [&](std::size_t i) { return unit_vector(d, i); };
    auto hb = [&](std::size_t i, std::size_t j) { return D.h.bracket_basis(i, j); };

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                QVec v = D.rho[i] * D.alpha_at(j, k);
                v = add(v, D.rho[j] * D.alpha_at(i, k), -1);
                v = add(v, D.rho[k] * D.alpha_at(i, j));
                v = add(v, alpha_of(D, hb(i, j), e(k)), -1);
                v = add(v, alpha_of(D, hb(i, k), e(j)));
                v = add(v, alpha_of(D, hb(j, k), e(i)), -1);
                if (!is_zero_vec(v)) fail(R.c1_cocycle, "d_rho alpha(e" + idx(i) + ",e" + idx(j) + ",e" + idx(k) + ") != 0");
                Rat b = D.alpha_at(i, j)[k] + D.alpha_at(j, k)[i] + D.alpha_at(k, i)[j];
                if (b != 0) fail(R.c3_bianchi, "cyclic sum at (e" + idx(i) + ",e" + idx(j) + ",e" + idx(k) + ") = " + b.get_str());
            }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (rho_of(D, hb(i, j)) != D.rho[i] * D.rho[j] - D.rho[j] * D.rho[i])
                fail(R.c2_morphism, "rho([e" + idx(i) + ",e" + idx(j) + "]) != [rho(e" + idx(i) + "),rho(e" + idx(j) + ")]");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            QVec Ji = D.J * e(i), Jj = D.J * e(j);
            QVec v = add(D.alpha_at(i, j), alpha_of(D, Ji, Jj), -1);
            v = add(v, Js * add(alpha_of(D, Ji, e(j)), alpha_of(D, e(i), Jj)));
            if (!is_zero_vec(v)) fail(R.c4_alpha_type, "type condition fails at (e" + idx(i) + ",e" + idx(j) + ")");
            for (std::size_t c = 0; c < d; ++c) {
                Rat s = D.rho[i](j, c) - D.rho[j](i, c) + hb(i, j)[c];
                if (s != 0)
                    fail(R.c5_rho_omega, "at X=e" + idx(i) + ", Y=e" + idx(j) + ", phi=e^" + idx(c));
            }
        }
    for (std::size_t i = 0; i < d; ++i) {
        QMat rJ = rho_of(D, D.J * e(i));
        for (std::size_t c = 0; c < d; ++c) {
            QVec phi = e(c), Jphi = Js * phi;
            QVec v = add(D.rho[i] * phi, rJ * Jphi, -1);
            v = add(v, Js * add(D.rho[i] * Jphi, rJ * phi));
            if (!is_zero_vec(v)) fail(R.c6_rho_type, "at X=e" + idx(i) + ", phi=e^" + idx(c));
        }
    }
    return R;
}

ComplexStructureCriteria abelian_parallelizable_criteria(const CotangentData& D) {
    check_shape(D);
    ComplexStructureCriteria C;
    std::size_t d = D.dim();
    QMat Js = D.J.transpose();
    auto e = [&](std::size_t i) { return unit_vector(d, i); };
    C.abelian_J_h = is_abelian_J(D.h, D.J);
    C.parallelizable_J_h = is_parallelizable_J(D.h, D.J);
    C.alpha_11 = C.alpha_complex_linear = true;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (alpha_of(D, D.J * e(i), D.J * e(j)) != D.alpha_at(i, j)) C.alpha_11 = false;
            if (Js * D.alpha_at(i, j) != alpha_of(D, D.J * e(i), e(j))) C.alpha_complex_linear = false;
        }
    C.rho_antiholomorphic = C.rho_commutes_Jstar = C.rho_J_linear = true;
    for (std::size_t i = 0; i < d; ++i) {
        QMat rJ = rho_of(D, D.J * e(i));
        if (rJ != -(D.rho[i] * Js)) C.rho_antiholomorphic = false;
        if (D.rho[i] * Js != Js * D.rho[i]) C.rho_commutes_Jstar = false;
        if (Js * D.rho[i] != rJ) C.rho_J_linear = false;
    }
    C.abelian = C.abelian_J_h && C.alpha_11 && C.rho_antiholomorphic;
    C.parallelizable = C.parallelizable_J_h && C.alpha_complex_linear && C.rho_commutes_Jstar && C.rho_J_linear;
    auto B = build_cotangent(D);
    C.built_abelian = is_abelian_J(B.algebra, B.structure.J);
    C.built_parallelizable = is_parallelizable_J(B.algebra, B.structure.J);
    return C;
}

bool is_lagrangian(const QMat& Omega, const Subspace& s) {
    return 2 * s.dim() == Omega.rows() && is_isotropic(Omega, s);
}

Subspace lagrangian_complement(const QMat& Omega, const QMat& J, const Subspace& L) {
    std::size_t N = Omega.rows();
    if (!is_antisymmetric(Omega) || det(Omega) == 0) throw AlgebraError("lagrangian_complement: Omega is not symplectic");
    if (!is_almost_complex(J)) throw NotAlmostComplex();
    bool sym = J.transpose() * Omega == Omega * J;
    bool skew = J.transpose() * Omega == -(Omega * J);
    if (!sym && !skew) throw AlgebraError("lagrangian_complement: J is neither symmetric nor skew for Omega");
    if (!is_lagrangian(Omega, L)) throw AlgebraError("lagrangian_complement: L is not Lagrangian");
    if (!L.invariant_under(J)) throw AlgebraError("lagrangian_complement: L is not J-invariant");
    // g(v,w) = v.w + Jv.Jw
    QMat G = QMat::identity(N) + J.transpose() * J;
    QMat Lb = L.basis();
    QMat P = annihilated((G * Lb).transpose()).basis();
    QMat M = Lb.transpose() * Omega * P;
    auto Minv = inverse(M);
    if (!Minv) throw AlgebraError("lagrangian_complement: pairing between L and its orthogonal is degenerate");
    // b_f = -1/2 omega on the orthogonal, with b_f(u,v) = omega(f u, v).
    QMat F = (Rat(-1, 2) * (P.transpose() * Omega * P) * *Minv).transpose();
    Subspace out = Subspace::column_span(P + Lb * F);
    if (!is_lagrangian(Omega, out) || !out.invariant_under(J) || out.intersect(L).dim() != 0)
        throw AlgebraError("lagrangian_complement: construction failed its own checks");
    return out;
}

namespace {

Subspace j_saturate(const Subspace& s, const QMat& J) { return s + s.image(J); }

Subspace ideal_closure(const LieAlgebra& L, Subspace s, const QMat& J) {
    Subspace full = Subspace::full(L.dim());
    while (true) {
        Subspace t = j_saturate(s + bracket_span(L, full, s), J);
        if (t.dim() == s.dim()) return t;
        s = t;
    }
}

bool good(const LieAlgebra& L, const CSStructure& S, const Subspace& s) {
    return is_lagrangian(S.Omega, s) && s.invariant_under(S.J) && is_ideal(L, s);
}

std::optional<Subspace> extend(const LieAlgebra& L, const CSStructure& S, Subspace c, bool reverse) {
    std::size_t N = L.dim();
    if (!is_isotropic(S.Omega, c)) return std::nullopt;
    while (2 * c.dim() < N) {
        Subspace cp = symplectic_orthogonal(S.Omega, c);
        std::vector<QVec> cand;
        for (std::size_t k = 0; k < N; ++k) {
            std::size_t i = reverse ? N - 1 - k : k;
            if (cp.contains(unit_vector(N, i))) cand.push_back(unit_vector(N, i));
        }
        for (const auto& v : cp.vectors()) cand.push_back(v);
        bool grown = false;
        for (const auto& v : cand) {
            if (c.contains(v)) continue;
            Subspace t = ideal_closure(L, c + Subspace::span(N, {v}), S.J);
            if (is_isotropic(S.Omega, t)) {
                c = t;
                grown = true;
                break;
            }
        }
        if (!grown) return std::nullopt;
    }
    if (good(L, S, c)) return c;
    return std::nullopt;
}

} // namespace

std::optional<Subspace> find_J_lagrangian_ideal(const LieAlgebra& L, const CSStructure& S) {
    std::size_t N = L.dim();
    std::vector<Subspace> seeds{Subspace(N)};
    std::vector<Subspace> pool;
    for (const auto& t : lower_central_series(L).terms) pool.push_back(t);
    for (const auto& t : derived_series(L).terms) pool.push_back(t);
    Subspace z = center(L);
    pool.push_back(z);
    pool.push_back(z.intersect(commutator_ideal(L)));
    std::size_t base = pool.size();
    for (std::size_t i = 0; i < base; ++i) {
        pool.push_back(j_saturate(pool[i], S.J));
        pool.push_back(pool[i].intersect(pool[i].image(S.J)));
        pool.push_back(symplectic_orthogonal(S.Omega, pool[i]));
    }
    for (const auto& p : pool) {
        if (good(L, S, p)) return p;
        if (p.dim() > 0 && p.invariant_under(S.J) && is_isotropic(S.Omega, p) && is_ideal(L, p)) seeds.push_back(p);
    }
    for (const auto& s : seeds)
        for (bool rev : {false, true})
            if (auto r = extend(L, S, s, rev)) return r;
    return std::nullopt;
}

Reconstruction reconstruct_cotangent_data(const LieAlgebra& L, const CSStructure& S, const Subspace& j) {
    if (!verify_cs(L, S).verdict) throw AlgebraError("reconstruct_cotangent_data: structure does not verify");
    if (!good(L, S, j)) throw AlgebraError("reconstruct_cotangent_data: subspace is not a J-invariant Lagrangian ideal");
    std::size_t N = L.dim(), k = N / 2;
    Subspace l = lagrangian_complement(S.Omega, S.J, j);
    QMat Bj = j.basis(), Bl = l.basis();
    // u_a in j with omega(u_a, l_i) = delta_ai
    QMat M = Bj.transpose() * S.Omega * Bl;
    QMat U = Bj * inverse(M)->transpose();
    Reconstruction R;
    R.basis = hstack(U, Bl);
    LieAlgebra G = L.change_basis(R.basis);
    QMat Jn = *inverse(R.basis) * S.J * R.basis;

    std::vector<Bracket> hb;
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b)
            for (std::size_t m = 0; m < k; ++m)
                if (G.c(k + a, k + b, m + k) != 0) hb.push_back({a, b, m, G.c(k + a, k + b, m + k)});
    CotangentData D = trivial_cotangent(LieAlgebra(k, hb, false), Jn.block(k, k, k, k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t c = 0; c < k; ++c)
            for (std::size_t r = 0; r < k; ++r) D.rho[a](r, c) = G.c(k + a, c, r);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            QVec v(k);
            for (std::size_t r = 0; r < k; ++r) v[r] = G.c(k + a, k + b, r);
            D.set_alpha(a, b, v);
        }
    auto B = build_cotangent(D);
    R.intertwines = B.algebra == G;
    R.commutes_J = B.structure.J == Jn;
    R.pulls_back_omega = R.basis.transpose() * S.Omega * R.basis == B.structure.Omega;
    R.data = std::move(D);
    return R;
}

LieAlgebra h7_algebra() { return parse_salamon("(0,0,0,12,13,23)"); }

QMat h7_complex_structure() {
    QMat J(6, 6);
    J(1, 0) = -1;
    J(0, 1) = 1;
    J(3, 2) = 1;
    J(2, 3) = -1;
    J(5, 4) = -1;
    J(4, 5) = 1;
    return J;
}

std::pair<Rat, Rat> circle_point(const Rat& s) {
    Rat d = 1 + s * s;
    return {(1 - s * s) / d, 2 * s / d};
}

CotangentData h7_solution_family(int family, const H7Params& p0) {
    H7Params p = p0;
    switch (family) {
    case 1:
        p.r23 = p.r14;
        p.r24 = -2 - p.r13;
        p.r45 = p.r46 = 0;
        break;
    case 2:
        p.r23 = p.r14;
        p.r24 = 2 - p.r13;
        p.r35 = p.r36 = 0;
        break;
    case 3: p.r35 = p.r36 = p.r45 = p.r46 = 0; break;
    case 4: {
        if (p.cos_t * p.cos_t + p.sin_t * p.sin_t != 1) throw AlgebraError("h7 family 4: (cos t, sin t) is not on the unit circle");
        if (p.sin_t == 0) throw AlgebraError("h7 family 4: t must avoid 0 and pi");
        Rat k = (p.cos_t + 1) / p.sin_t;
        p.r23 = p.r14 + 2 * p.sin_t;
        p.r24 = -p.r13 + 2 * p.cos_t;
        p.r45 = k * p.r35;
        p.r46 = k * p.r36;
        break;
    }
    default: throw AlgebraError("h7 family must be 1..4");
    }
    CotangentData D = trivial_cotangent(h7_algebra(), h7_complex_structure());
    QMat& a = D.rho[0];
    a(0, 2) = p.r13, a(0, 3) = p.r14, a(0, 4) = p.r15, a(0, 5) = p.r16;
    a(1, 2) = p.r23, a(1, 3) = p.r24, a(1, 4) = p.r25, a(1, 5) = p.r26;
    a(2, 4) = p.r35, a(2, 5) = p.r36, a(3, 4) = p.r45, a(3, 5) = p.r46;
    QMat& b = D.rho[1];
    b(0, 2) = p.r23, b(0, 3) = p.r24 - 1, b(0, 4) = p.r25, b(0, 5) = p.r26;
    b(1, 2) = -p.r13 - 1, b(1, 3) = -p.r14, b(1, 4) = -p.r15, b(1, 5) = -p.r16;
    b(2, 4) = -p.r45, b(2, 5) = -p.r46, b(3, 4) = p.r35, b(3, 5) = p.r36;
    QMat& c = D.rho[2];
    c(0, 4) = p.r35 - 1, c(0, 5) = p.r36, c(1, 4) = -p.r45, c(1, 5) = -p.r46 - 1;
    QMat& d = D.rho[3];
    d(0, 4) = p.r45, d(0, 5) = p.r46, d(1, 4) = p.r35, d(1, 5) = p.r36;
    return D;
}

QMat standard_J(std::size_t dim) {
    if (dim % 2) throw AlgebraError("standard_J: odd dimension");
    QMat J(dim, dim);
    for (std::size_t j = 0; 2 * j < dim; ++j) {
        J(2 * j + 1, 2 * j) = -1;
        J(2 * j, 2 * j + 1) = 1;
    }
    return J;
}

CotangentData rho_zero_builder(std::size_t dim, const std::vector<QMat>& comps) {
    if (comps.size() != dim) throw AlgebraError("rho_zero_builder: need one 2-form per coframe vector");
    CotangentData D = trivial_cotangent(LieAlgebra::abelian(dim), standard_J(dim));
    for (std::size_t j = 0; j < dim; ++j)
        if (comps[j].rows() != dim || !is_antisymmetric(comps[j]))
            throw AlgebraError("rho_zero_builder: alpha_" + idx(j) + " is not a 2-form");
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a + 1; b < dim; ++b) {
            QVec v(dim);
            for (std::size_t j = 0; j < dim; ++j) v[j] = comps[j](a, b);
            D.set_alpha(a, b, v);
        }
    auto R = check_conditions(D);
    if (!R.c3_bianchi.ok) throw AlgebraError("rho_zero_builder: Bianchi identity fails " + R.c3_bianchi.witness);
    if (!R.c4_alpha_type.ok) throw AlgebraError("rho_zero_builder: (0,2) part present, " + R.c4_alpha_type.witness);
    return D;
}

AlphaTypeParts alpha_type_parts(const QMat& ao, const QMat& ae, const QMat& J) {
    // For a 2-form b, b(J.,J.) has matrix J^T b J and b(J.,.) has J^T b.
    auto JJ = [&](const QMat& b) { return J.transpose() * b * J; };
    auto J1 = [&](const QMat& b) { return J.transpose() * b; };
    auto J2 = [&](const QMat& b) { return b * J; };
    Rat h(1, 2), q(1, 4);
    AlphaTypeParts P;
    P.sigma = h * (ao + JJ(ao));
    P.tau = h * (ae + JJ(ae));
    // beta = ao + i ae; (0,2) part = 1/4 [beta - beta(J,J) + i(beta(J.,.) + beta(.,J.))]
    P.anti_re = q * (ao - JJ(ao) - (J1(ae) + J2(ae)));
    P.anti_im = q * (ae - JJ(ae) + (J1(ao) + J2(ao)));
    // (2,0) part = 1/4 [beta - beta(J,J) - i(beta(J.,.) + beta(.,J.))]
    P.psi_re = q * (ao - JJ(ao) + (J1(ae) + J2(ae)));
    P.psi_im = q * (ae - JJ(ae) - (J1(ao) + J2(ao)));
    return P;
}

QVec rho_hat(const CotangentData& D, const QVec& X, const QVec& Y) {
    std::size_t d = D.dim();
    QVec r(d);
    for (std::size_t a = 0; a < d; ++a) {
        if (X[a] == 0) continue;
        for (std::size_t b = 0; b < d; ++b) {
            if (Y[b] == 0) continue;
            for (std::size_t c = 0; c < d; ++c) r[c] += X[a] * Y[b] * D.rho[a](b, c);
        }
    }
    return r;
}

FullRankReport fullrank_rho_toolkit(const CotangentData& D) {
    check_shape(D);
    if (!D.h.is_abelian()) throw AlgebraError("fullrank_rho_toolkit: h must be Abelian");
    std::size_t d = D.dim();
    auto e = [&](std::size_t i) { return unit_vector(d, i); };
    FullRankReport R;
    std::vector<QVec> img;
    R.symmetric = R.cubic_symmetric = R.j_anti_invariant = true;
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            QVec v = rho_hat(D, e(a), e(b));
            img.push_back(v);
            if (v != rho_hat(D, e(b), e(a))) R.symmetric = false;
            if (rho_hat(D, D.J * e(a), D.J * e(b)) != add(QVec(d), v, -1)) R.j_anti_invariant = false;
            for (std::size_t c = 0; c < d; ++c)
                if (rho_hat(D, v, e(c)) != rho_hat(D, rho_hat(D, e(a), e(c)), e(b))) R.cubic_symmetric = false;
        }
    R.full_rank = Subspace::span(d, img).dim() == d;
    // sum_a x_a rho_a(b, c) = delta_bc
    QMat sys(d * d, d);
    QVec rhs(d * d);
    for (std::size_t b = 0; b < d; ++b)
        for (std::size_t c = 0; c < d; ++c) {
            for (std::size_t a = 0; a < d; ++a) sys(b * d + c, a) = D.rho[a](b, c);
            rhs[b * d + c] = b == c ? 1 : 0;
        }
    R.identity_element = solve(sys, rhs);
    if (R.identity_element) {
        QVec JX = D.J * *R.identity_element;
        R.j_element_acts_as_J = true;
        for (std::size_t b = 0; b < d; ++b)
            if (rho_hat(D, JX, e(b)) != D.J * e(b)) R.j_element_acts_as_J = false;
    }
    return R;
}

namespace {

// rho(e_a)(r, c) = rho_hat(e_a, e_r)_c from a symmetric table of values.
CotangentData from_rho_hat(std::size_t d, const QMat& J, const std::function<QVec(std::size_t, std::size_t)>& rh) {
    CotangentData D = trivial_cotangent(LieAlgebra::abelian(d), J);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t r = 0; r < d; ++r) {
            QVec v = rh(a, r);
            for (std::size_t c = 0; c < d; ++c) D.rho[a](r, c) = v[c];
        }
    return D;
}

// J e_{2j-1} = e_{2j}.
QMat forward_J(std::size_t d) { return -standard_J(d); }

} // namespace

CotangentData fullrank_dim4() {
    QMat J = forward_J(2);
    return from_rho_hat(2, J, [&](std::size_t a, std::size_t r) {
        return a == 0 ? unit_vector(2, r) : J * unit_vector(2, r);
    });
}

CotangentData fullrank_dim8(int delta) {
    if (delta != 0 && delta != 1) throw AlgebraError("fullrank_dim8: delta must be 0 or 1");
    QMat J = forward_J(4);
    Rat dl = delta;
    auto e = [](std::size_t i) { return unit_vector(4, i); };
    auto rh = [&](std::size_t a, std::size_t r) -> QVec {
        if (a > r) std::swap(a, r);
        if (a == 0) return e(r);
        if (a == 1) return J * e(r);
        QVec v(4);
        if (a == 2 && r == 2) v[0] = dl;
        if (a == 2 && r == 3) v[1] = dl;
        if (a == 3 && r == 3) v[0] = -dl;
        return v;
    };
    return from_rho_hat(4, J, rh);
}

} // namespace cslie
