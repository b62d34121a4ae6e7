#include "cslie/almostabelian.hpp"

namespace cslie {

namespace {

Rat form(const QMat& W, const QVec& x, const QVec& y) {
    Rat r = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0) r += x[i] * W(i, j) * y[j];
    }
    return r;
}

// Row vector omega(x, .) as a plain vector.
QVec form_row(const QMat& W, const QVec& x) {
    QVec r(W.cols());
    for (std::size_t j = 0; j < W.cols(); ++j)
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] != 0) r[j] += x[i] * W(i, j);
    return r;
}

QVec scaled(QVec v, const Rat& s) {
    for (auto& x : v) x *= s;
    return v;
}

QVec plus(QVec a, const QVec& b, const Rat& s = 1) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
    return a;
}

// e^a (x) e_b with 0-based a, b: J e_a gains coeff * e_b.
void put(QMat& J, std::size_t a, std::size_t b, const Rat& coeff) { J(b, a) += coeff; }

void put_form(QMat& W, std::size_t a, std::size_t b, const Rat& coeff) {
    W(a, b) += coeff;
    W(b, a) -= coeff;
}

} // namespace

LieAlgebra build_semidirect(const QMat& f) {
    if (!f.square()) throw AlgebraError("build_semidirect: f must be square");
    std::size_t m = f.rows(), X = m;
    std::vector<Bracket> br;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k)
            if (f(k, i) != 0) br.push_back({X, i, k, f(k, i)});
    // Any f gives a Lie algebra; skip the cubic Jacobi scan.
    return LieAlgebra(m + 1, br, false);
}

LieAlgebra AlmostAbelianAlg::algebra() const { return build_semidirect(f); }

QMat inner_J(unsigned m) {
    QMat J(4 * m, 4 * m);
    for (std::size_t k = 0; k < 2 * m; ++k) {
        put(J, 2 * k, 2 * k + 1, -1);
        put(J, 2 * k + 1, 2 * k, 1);
    }
    return J;
}

QMat inner_Omega(unsigned m) {
    QMat W(4 * m, 4 * m);
    for (std::size_t l = 0; l < m; ++l) {
        put_form(W, 4 * l, 4 * l + 3, 1);
        put_form(W, 4 * l + 1, 4 * l + 2, 1);
    }
    return W;
}

CSStructure canonical_J0_omega0(unsigned n) {
    if (n == 0) throw AlgebraError("canonical_J0_omega0: n must be positive");
    std::size_t N = 4 * n, b = N - 4;
    QMat J(N, N), W(N, N);
    J.set_block(0, 0, inner_J(n - 1));
    W.set_block(0, 0, inner_Omega(n - 1));
    put(J, b, b + 1, 1);
    put(J, b + 1, b, -1);
    put(J, b + 2, b + 3, -1);
    put(J, b + 3, b + 2, 1);
    put_form(W, b, b + 3, -1);
    put_form(W, b + 1, b + 2, 1);
    return {J, W};
}

QMat split_Omega(unsigned m) {
    std::size_t N = 4 * m, h = 2 * m;
    QMat W(N, N);
    for (std::size_t j = 0; j < m * 2; j += 2) {
        W(j, j + h) = 1;
        W(j + h, j) = -1;
        W(j + 1, j + 1 + h) = -1;
        W(j + 1 + h, j + 1) = 1;
    }
    return W;
}

bool sp_complex_membership(const QMat& A, SpForm form) {
    if (!A.square() || A.rows() % 4 != 0) return false;
    unsigned m = static_cast<unsigned>(A.rows() / 4);
    QMat J = inner_J(m), W = form == SpForm::Split ? split_Omega(m) : inner_Omega(m);
    return A * J == J * A && (A.transpose() * W + W * A).is_zero();
}

std::vector<QMat> sp_complex_basis(unsigned m) {
    std::size_t N = 4 * m, V = N * N;
    QMat J = inner_J(m), W = inner_Omega(m);
    // Unknown A(i,j) sits at index i*N+j; stack the entries of AJ-JA and A^T W + W A.
    QMat sys(2 * V, V);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            std::size_t row = i * N + j;
            for (std::size_t k = 0; k < N; ++k) {
                if (J(k, j) != 0) sys(row, i * N + k) += J(k, j);
                if (J(i, k) != 0) sys(row, k * N + j) -= J(i, k);
                if (W(k, j) != 0) sys(V + row, k * N + i) += W(k, j);
                if (W(i, k) != 0) sys(V + row, k * N + j) += W(i, k);
            }
        }
    QMat ker = kernel(sys);
    std::vector<QMat> out;
    for (std::size_t c = 0; c < ker.cols(); ++c) {
        QMat A(N, N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j) A(i, j) = ker(i * N + j, c);
        out.push_back(std::move(A));
    }
    return out;
}

AlmostAbelianAlg build_f_from_thm_cs(unsigned n, const ThmCSParams& P) {
    if (n == 0) throw AlgebraError("build_f_from_thm_cs: n must be positive");
    std::size_t m = 4 * n - 4;
    if (P.fJ.rows() != m || P.fJ.cols() != m || P.u.size() != m)
        throw AlgebraError("build_f_from_thm_cs: block sizes do not match n");
    if (m > 0 && !sp_complex_membership(P.fJ))
        throw AlgebraError("build_f_from_thm_cs: f'_J is not in sp(2n-2, C)");
    QMat J = inner_J(n - 1), W = inner_Omega(n - 1);
    std::size_t Y = m, JY = m + 1, JX = m + 2;
    QMat f(m + 3, m + 3);
    f.set_block(0, 0, P.fJ);
    QVec rowY = form_row(W, J * P.u), rowJY = form_row(W, P.u);
    for (std::size_t j = 0; j < m; ++j) {
        f(j, JX) = P.u[j];
        f(Y, j) = rowY[j];
        f(JY, j) = rowJY[j];
    }
    f(Y, Y) = P.a;
    f(JY, JY) = P.a;
    f(Y, JX) = P.b;
    f(JY, JX) = P.c;
    f(JX, JX) = -P.a;
    return {n, f};
}

std::optional<ThmCSParams> read_thm_params(unsigned n, const QMat& f) {
    if (n == 0 || f.rows() != 4 * n - 1 || f.cols() != 4 * n - 1) return std::nullopt;
    std::size_t m = 4 * n - 4;
    ThmCSParams P;
    P.fJ = f.block(0, 0, m, m);
    P.u = QVec(m);
    for (std::size_t j = 0; j < m; ++j) P.u[j] = f(j, m + 2);
    P.a = f(m, m);
    P.b = f(m, m + 2);
    P.c = f(m + 1, m + 2);
    if (m > 0 && !sp_complex_membership(P.fJ)) return std::nullopt;
    try {
        if (build_f_from_thm_cs(n, P).f != f) return std::nullopt;
    } catch (const AlgebraError&) {
        return std::nullopt;
    }
    return P;
}

EquivalenceResult apply_equivalence(unsigned n, const ThmCSParams& P, const EquivalenceMove& M) {
    std::size_t m = 4 * n - 4;
    if (M.lambda == 0) throw AlgebraError("apply_equivalence: lambda must be nonzero");
    if (M.Delta.rows() != m || M.Delta.cols() != m || M.uX.size() != m)
        throw AlgebraError("apply_equivalence: block sizes do not match n");
    QMat J = inner_J(n - 1), W = inner_Omega(n - 1);
    if (m > 0 && !(M.Delta * J == J * M.Delta && M.Delta.transpose() * W * M.Delta == W))
        throw AlgebraError("apply_equivalence: Delta is not in Sp(2n-2, C)");
    const Rat& l = M.lambda;
    Rat il = 1 / l;
    QMat Dinv = m > 0 ? *inverse(M.Delta) : QMat(0, 0);

    ThmCSParams T;
    T.fJ = il * (M.Delta * P.fJ * Dinv);
    QVec JuX = J * M.uX;
    QVec Du = M.Delta * P.u;
    T.u = scaled(plus(plus(Du, JuX, -P.a), T.fJ * JuX, -l), il * il);
    QVec w = plus(Du, T.u, l * l);
    T.b = il * il * il * (P.b + 2 * l * P.a * M.mu2 - form(W, M.uX, w));
    T.c = il * il * il * (P.c - 2 * l * P.a * M.mu1 + form(W, JuX, w));
    T.a = P.a * il;

    EquivalenceResult R;
    R.tilde = T;
    R.f_tilde = build_f_from_thm_cs(n, T).f;

    std::size_t N = 4 * n, Y = m, JY = m + 1, JX = m + 2, X = m + 3;
    QMat K(N, N);
    K.set_block(0, 0, M.Delta);
    for (std::size_t i = 0; i < m; ++i) {
        K(i, JX) = JuX[i];
        K(i, X) = M.uX[i];
    }
    QVec rY = form_row(W, M.uX), rJY = form_row(W, JuX);
    for (std::size_t j = 0; j < m; ++j) {
        Rat sY = 0, sJY = 0;
        for (std::size_t k = 0; k < m; ++k) {
            sY += rY[k] * M.Delta(k, j);
            sJY += rJY[k] * M.Delta(k, j);
        }
        K(Y, j) = -il * sY;
        K(JY, j) = il * sJY;
    }
    K(Y, Y) = il;
    K(Y, JX) = -M.mu2;
    K(Y, X) = M.mu1;
    K(JY, JY) = il;
    K(JY, JX) = M.mu1;
    K(JY, X) = M.mu2;
    K(JX, JX) = l;
    K(X, X) = l;
    R.K = K;

    QMat Ku = K.block(0, 0, N - 1, N - 1);
    CSStructure S = canonical_J0_omega0(n);
    R.intertwines = Ku * (build_f_from_thm_cs(n, P).f) == l * (R.f_tilde * Ku);
    R.commutes_J = K * S.J == S.J * K;
    R.preserves_omega = K.transpose() * S.Omega * K == S.Omega;
    return R;
}

namespace {

QMat jordan_like(std::size_t blocks, const QMat& diag_block, const QMat& last_block) {
    QMat I20 = QMat::diag({1, 1, 0, 0}), mI02 = QMat::diag({0, 0, -1, -1});
    QMat M(4 * blocks, 4 * blocks);
    for (std::size_t i = 0; i < blocks; ++i) {
        M.set_block(4 * i, 4 * i, i + 1 == blocks ? last_block : diag_block);
        if (i + 1 < blocks) {
            M.set_block(4 * i, 4 * i + 4, mI02);
            M.set_block(4 * i + 4, 4 * i, I20);
        }
    }
    return M;
}

} // namespace

QMat jtilde_minus1(unsigned m) {
    if (m == 0) throw AlgebraError("jtilde_minus1: m must be positive");
    QMat D = QMat::diag({-1, -1, 1, 1});
    return jordan_like(m, D, D);
}

QMat jtilde_odd(unsigned k) {
    if (k == 0) throw AlgebraError("jtilde_odd: k must be positive");
    return jordan_like(2 * k - 1, QMat(4, 4), QMat(4, 4));
}

QMat jtilde_even(unsigned k) {
    if (k == 0) throw AlgebraError("jtilde_even: k must be positive");
    QMat Nt(4, 4);
    Nt(2, 0) = 1;
    Nt(3, 1) = 1;
    return jordan_like(k, QMat(4, 4), Nt);
}

const char* family_name(Family f) {
    switch (f) {
    case Family::NonUnimodularPlain: return "nonunimodular-plain";
    case Family::UnimodularPlain: return "unimodular-plain";
    case Family::NonUnimodularJordan: return "nonunimodular-jordan";
    case Family::UnimodularOdd: return "unimodular-odd";
    case Family::UnimodularEven: return "unimodular-even";
    }
    return "?";
}

unsigned family_inner_size(unsigned n, Family fam, unsigned index) {
    if (n == 0) throw AlgebraError("family_inner_size: n must be positive");
    auto bad = [&] { return AlgebraError(std::string("index out of range for family ") + family_name(fam)); };
    switch (fam) {
    case Family::NonUnimodularPlain:
    case Family::UnimodularPlain: return 4 * (n - 1);
    case Family::NonUnimodularJordan:
    case Family::UnimodularEven:
        if (index < 1 || index > n - 1) throw bad();
        return 4 * (n - 1 - index);
    case Family::UnimodularOdd:
        if (index < 1 || index > n / 2) throw bad();
        return 4 * (n - 2 * index);
    }
    throw bad();
}

AlmostAbelianAlg canonical_family_build(unsigned n, const CanonicalFParams& P) {
    unsigned isz = family_inner_size(n, P.family, P.index);
    if (P.inner.rows() != isz || P.inner.cols() != isz)
        throw AlgebraError("canonical_family_build: inner block has size " + std::to_string(P.inner.rows()) +
                           ", expected " + std::to_string(isz));
    if (isz > 0 && !sp_complex_membership(P.inner))
        throw AlgebraError("canonical_family_build: inner block is not in sp(2m, C)");
    std::size_t m = 4 * n - 4;
    ThmCSParams T;
    T.u = QVec(m);
    T.a = 0;
    T.b = P.b;
    T.c = P.c;
    QMat tail;
    switch (P.family) {
    case Family::NonUnimodularPlain:
        T.a = 1;
        T.b = T.c = 0;
        break;
    case Family::UnimodularPlain: break;
    case Family::NonUnimodularJordan:
        T.a = 1;
        T.b = T.c = 0;
        tail = jtilde_minus1(P.index);
        break;
    case Family::UnimodularOdd: tail = jtilde_odd(P.index); break;
    case Family::UnimodularEven: tail = jtilde_even(P.index); break;
    }
    if (tail.rows() > 0) {
        T.fJ = QMat::block_diag({P.inner, tail});
        T.u[isz] = 1;
    } else {
        T.fJ = P.inner;
    }
    return build_f_from_thm_cs(n, T);
}

} // namespace cslie

namespace cslie {

QMat random_sp_complex(unsigned m, std::mt19937_64& rng, int range) {
    QMat A(4 * m, 4 * m);
    std::uniform_int_distribution<int> d(-range, range);
    for (const auto& B : sp_complex_basis(m)) A = A + Rat(d(rng)) * B;
    return A;
}

QMat random_Sp_complex(unsigned m, std::mt19937_64& rng, int range) {
    std::size_t N = 4 * m;
    QMat I = QMat::identity(N);
    while (true) {
        QMat S = random_sp_complex(m, rng, range);
        auto inv = inverse(I - S);
        if (inv) return *inv * (I + S);
    }
}

std::optional<Subspace> almost_abelian_ideal(const LieAlgebra& L) {
    auto r = codim1_abelian_ideals(L);
    if ((r.kind == IdealSearch::Unique || r.kind == IdealSearch::Multiple) && !r.ideals.empty())
        return r.ideals.front();
    return std::nullopt;
}

namespace {

// A functional with kernel exactly the hyperplane u.
QVec defining_functional(const Subspace& u) {
    QMat k = kernel(u.basis().transpose());
    return k.column(0);
}

Rat dot(const QVec& a, const QVec& b) {
    Rat r = 0;
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

// X outside u with JX in u, normalized to phi(X) = 1; the last basis vector when it qualifies.
QVec pick_X(const Subspace& u, const QMat& J) {
    std::size_t N = J.rows();
    QVec phi = defining_functional(u);
    QVec last = unit_vector(N, N - 1);
    if (dot(phi, last) != 0 && u.contains(J * last)) return scaled(last, 1 / dot(phi, last));
    QVec psi = J.transpose() * phi;  // phi o J
    QMat row(1, N);
    for (std::size_t i = 0; i < N; ++i) row(0, i) = psi[i];
    QMat k = kernel(row);
    for (std::size_t c = 0; c < k.cols(); ++c) {
        QVec x = k.column(c);
        Rat s = dot(phi, x);
        if (s != 0) return scaled(x, 1 / s);
    }
    throw AlgebraError("no X outside the ideal with JX inside it");
}

// Matrix of ad_X restricted to span(cols of B), in the basis B.
QMat restricted_ad(const LieAlgebra& L, const QVec& X, const QMat& B) {
    QMat out(B.cols(), B.cols());
    for (std::size_t j = 0; j < B.cols(); ++j) {
        auto c = solve(B, L.bracket(X, B.column(j)));
        if (!c) throw AlgebraError("ad_X does not preserve the ideal");
        for (std::size_t i = 0; i < B.cols(); ++i) out(i, j) = (*c)[i];
    }
    return out;
}

QMat restricted_map(const QMat& M, const QMat& B) {
    QMat out(B.cols(), B.cols());
    for (std::size_t j = 0; j < B.cols(); ++j) {
        auto c = solve(B, M * B.column(j));
        if (!c) throw AlgebraError("subspace is not invariant");
        for (std::size_t i = 0; i < B.cols(); ++i) out(i, j) = (*c)[i];
    }
    return out;
}

QMat with_column(const QMat& B, const QVec& v) {
    return hstack(B, QMat::from_columns({v}, v.size()));
}

} // namespace

ComplexBlockForm thm_complex_blockform(const LieAlgebra& L, const QMat& J, const std::optional<Subspace>& u_in) {
    if (!is_almost_complex(J)) throw NotAlmostComplex();
    ComplexBlockForm r;
    auto u = u_in ? u_in : almost_abelian_ideal(L);
    if (!u) {
        r.reason = "no codimension-one Abelian ideal";
        return r;
    }
    r.X = pick_X(*u, J);
    r.uJ = u->intersect(u->image(J));
    QVec JX = J * r.X;
    QMat B = with_column(r.uJ.basis(), JX);
    r.f_split = restricted_ad(L, r.X, B);
    std::size_t k = r.uJ.dim();
    r.f0 = r.f_split.block(0, 0, k, k);
    r.v = QVec(k);
    for (std::size_t i = 0; i < k; ++i) r.v[i] = r.f_split(i, k);
    r.a = r.f_split(k, k);
    if (!r.f_split.block(k, 0, 1, k).is_zero()) {
        r.reason = "f(u_J) is not contained in u_J";
        return r;
    }
    QMat Jr = restricted_map(J, r.uJ.basis());
    if (r.f0 * Jr != Jr * r.f0) {
        r.reason = "f does not commute with J on u_J";
        return r;
    }
    r.conforms = true;
    return r;
}

SymplecticBlockForm thm_symplectic_blockform(const LieAlgebra& L, const QMat& Omega,
                                             const std::optional<Subspace>& u_in) {
    SymplecticBlockForm r;
    auto u = u_in ? u_in : almost_abelian_ideal(L);
    if (!u) {
        r.reason = "no codimension-one Abelian ideal";
        return r;
    }
    std::size_t N = L.dim();
    Subspace perp = symplectic_orthogonal(Omega, *u);
    if (perp.dim() != 1 || !u->contains(perp)) throw AlgebraError("omega is degenerate on the ideal");
    r.Y = perp.vectors().front();
    // Complement of <Y> in u from the echelon basis of u.
    std::vector<QVec> ub = u->vectors(), comp;
    for (std::size_t drop = 0; drop < ub.size(); ++drop) {
        std::vector<QVec> rest;
        for (std::size_t i = 0; i < ub.size(); ++i)
            if (i != drop) rest.push_back(ub[i]);
        rest.push_back(r.Y);
        if (Subspace::span(N, rest).dim() == ub.size()) {
            rest.pop_back();
            comp = rest;
            break;
        }
    }
    r.u_prime = Subspace::span(N, comp);
    for (std::size_t i = 0; i < N; ++i)
        if (!u->contains(unit_vector(N, i))) {
            r.X = unit_vector(N, i);
            break;
        }
    QMat B = with_column(QMat::from_columns(comp, N), r.Y);
    r.f_split = restricted_ad(L, r.X, B);
    std::size_t k = comp.size();
    r.f_prime = r.f_split.block(0, 0, k, k);
    r.alpha = QVec(k);
    for (std::size_t j = 0; j < k; ++j) r.alpha[j] = r.f_split(k, j);
    r.a_prime = r.f_split(k, k);
    if (!r.f_split.block(0, k, k, 1).is_zero()) {
        r.reason = "f does not preserve the omega-orthogonal of the ideal";
        return r;
    }
    QMat Bp = QMat::from_columns(comp, N);
    QMat Wp = Bp.transpose() * Omega * Bp;
    if (!(r.f_prime.transpose() * Wp + Wp * r.f_prime).is_zero()) {
        r.reason = "f' is not in sp(u', omega')";
        return r;
    }
    r.conforms = true;
    return r;
}

CSDecomposition decompose_cs(const LieAlgebra& L, const CSStructure& S) {
    auto rep = verify_cs(L, S);
    if (!rep.verdict) throw AlgebraError("decompose_cs: structure does not verify");
    auto u = almost_abelian_ideal(L);
    if (!u) throw AlgebraError("decompose_cs: algebra is not almost Abelian");
    std::size_t N = L.dim();
    const QMat& J = S.J;
    const QMat& W = S.Omega;
    CSDecomposition d;
    QVec X = pick_X(*u, J);
    QVec Y = symplectic_orthogonal(W, *u).vectors().front();
    Y = scaled(Y, -1 / form(W, Y, X));
    d.V = {Y, J * Y, J * X, X};
    Subspace rest = symplectic_orthogonal(W, Subspace::span(N, d.V));

    // Adapted basis: blocks (x, -Jx, Jy, y) with omega(x,y) = 1 and omega(x,Jy) = 0.
    std::vector<QVec> adapted;
    while (rest.dim() > 0) {
        QVec x = rest.vectors().front();
        QVec y;
        for (const auto& y0 : rest.vectors()) {
            Rat p = form(W, x, y0), q = form(W, x, J * y0);
            if (p == 0 && q == 0) continue;
            Rat nrm = p * p + q * q;
            y = plus(scaled(y0, p / nrm), J * y0, q / nrm);
            break;
        }
        if (y.empty()) throw AlgebraError("decompose_cs: omega degenerate on u'_J");
        std::vector<QVec> blk = {x, scaled(J * x, -1), J * y, y};
        adapted.insert(adapted.end(), blk.begin(), blk.end());
        rest = rest.intersect(symplectic_orthogonal(W, Subspace::span(N, blk)));
    }
    std::size_t m = adapted.size();
    d.u_prime_J = Subspace::span(N, adapted);

    std::vector<QVec> cols = adapted;
    cols.insert(cols.end(), d.V.begin(), d.V.end());
    d.basis = QMat::from_columns(cols, N);
    d.orthogonal = true;
    for (const auto& a : adapted)
        for (const auto& v : d.V)
            if (form(W, a, v) != 0) d.orthogonal = false;
    QMat WV(4, 4);
    WV(0, 3) = -1;
    WV(3, 0) = 1;
    WV(1, 2) = 1;
    WV(2, 1) = -1;
    QMat BV = QMat::from_columns(d.V, N);
    d.omega_V_canonical = BV.transpose() * W * BV == WV;

    QMat Bu = d.basis.block(0, 0, N, N - 1);
    QMat f = restricted_ad(L, X, Bu);
    d.params.fJ = f.block(0, 0, m, m);
    d.params.u = QVec(m);
    for (std::size_t i = 0; i < m; ++i) d.params.u[i] = f(i, m + 2);
    d.params.a = f(m, m);
    d.params.b = f(m, m + 2);
    d.params.c = f(m + 1, m + 2);
    return d;
}

} // namespace cslie
