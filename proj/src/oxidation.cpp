#include "cslie/oxidation.hpp"

#include <array>

namespace cslie {

namespace {

std::size_t base_dim(const OxidationData& D) { return D.base.dim(); }

void check_shape(const OxidationData& D) {
    std::size_t d = base_dim(D);
    auto sq = [d](const QMat& m) { return m.rows() == d && m.cols() == d; };
    if (!sq(D.base_structure.J) || !sq(D.base_structure.Omega) || !sq(D.f1) || !sq(D.f2))
        throw AlgebraError("oxidation data: matrix size does not match the base dimension");
    if (D.S11.size() != d || D.S12.size() != d || D.S22.size() != d)
        throw AlgebraError("oxidation data: S covectors must have the base dimension");
    if (D.tau12.size() != 2) throw AlgebraError("oxidation data: tau12 must have two entries");
}

QVec lin(const QVec& a, const Rat& s, const QVec& b, const Rat& t) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i] + t * b[i];
    return r;
}

// Covector phi o M.
QVec compose(const QVec& phi, const QMat& M) { return M.transpose() * phi; }

} // namespace

DerivedTensors derive_tensors(const OxidationData& D) {
    check_shape(D);
    std::size_t d = base_dim(D);
    const QMat& J = D.base_structure.J;
    const QMat& W = D.base_structure.Omega;
    DerivedTensors T;
    QVec sum = lin(D.S11, 1, D.S22, 1);
    T.A12 = lin(compose(sum, J), Rat(1, 2), QVec(d), 0);
    if (d == 0) {
        T.nu12 = {};
    } else {
        auto Winv = inverse(W);
        if (!Winv) throw AlgebraError("derive_tensors: base form is degenerate");
        // omega(x, .) = -W x as a covector, so sharp(phi) = -W^{-1} phi.
        T.nu12 = J * (Rat(-1) * *Winv * sum);
    }
    const QMat* f[2] = {&D.f1, &D.f2};
    for (int k = 0; k < 2; ++k) T.beta[k] = f[k]->transpose() * W + W * *f[k];
    return T;
}

OxidationData oxidation_over_zero(const QVec& tau12) {
    return {LieAlgebra::abelian(0), {QMat(0, 0), QMat(0, 0)}, QMat(0, 0), QMat(0, 0), {}, {}, {}, tau12};
}

OxidationData trivial_oxidation(const LieAlgebra& base, const CSStructure& structure) {
    std::size_t d = base.dim();
    return {base, structure, QMat(d, d), QMat(d, d), QVec(d), QVec(d), QVec(d), {0, 0}};
}

OxidationBuild build_oxidation(const OxidationData& D) { return build_oxidation(D, derive_tensors(D)); }

OxidationBuild build_oxidation(const OxidationData& D, const DerivedTensors& T) {
    check_shape(D);
    std::size_t d = base_dim(D), N = d + 4, vs = d + 2;
    auto bar = [](std::size_t i) { return i + 2; };
    std::vector<Bracket> br;
    auto put = [&br](std::size_t i, std::size_t j, std::size_t k, const Rat& c) {
        if (c != 0) br.push_back({i, j, k, c});
    };
    for (std::size_t i = 0; i < d; ++i) put(0, 1, bar(i), T.nu12[i]);
    put(0, 1, vs, D.tau12[0]);
    put(0, 1, vs + 1, D.tau12[1]);
    // g(v_j, X)(v_k) = S_jk(X) + A_jk(X)
    QVec g[2][2] = {{D.S11, lin(D.S12, 1, T.A12, 1)}, {lin(D.S12, 1, T.A12, -1), D.S22}};
    const QMat* f[2] = {&D.f1, &D.f2};
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t r = 0; r < d; ++r) put(j, bar(i), bar(r), (*f[j])(r, i));
            for (std::size_t k = 0; k < 2; ++k) put(j, bar(i), vs + k, g[j][k][i]);
        }
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b) {
            for (std::size_t r = 0; r < d; ++r) put(bar(a), bar(b), bar(r), D.base.c(a, b, r));
            for (std::size_t k = 0; k < 2; ++k) put(bar(a), bar(b), vs + k, T.beta[k](a, b));
        }
    OxidationBuild out{LieAlgebra(N, br, false), {QMat(N, N), QMat(N, N)}};
    QMat& J = out.structure.J;
    QMat& W = out.structure.Omega;
    J(1, 0) = 1;
    J(0, 1) = -1;
    J(vs, vs + 1) = 1;
    J(vs + 1, vs) = -1;
    J.set_block(2, 2, D.base_structure.J);
    W.set_block(2, 2, D.base_structure.Omega);
    for (std::size_t k = 0; k < 2; ++k) {
        W(vs + k, k) = 1;
        W(k, vs + k) = -1;
    }
    return out;
}

bool in_sp(const QMat& A, const CSStructure& S) {
    return A * S.J == S.J * A && (A.transpose() * S.Omega + S.Omega * A).is_zero();
}

OxidationValidation validate_oxidation(const OxidationData& D) {
    OxidationValidation V;
    try {
        check_shape(D);
    } catch (const AlgebraError&) {
        return V;
    }
    V.shape_ok = true;
    DerivedTensors T = derive_tensors(D);
    OxidationBuild B = build_oxidation(D, T);
    if (auto w = B.algebra.jacobi_witness()) {
        V.jacobi_witness = w->what();
    } else {
        V.jacobi = true;
        V.cs = verify_cs(B.algebra, B.structure);
    }
    V.f_difference_in_sp = in_sp(D.f2 - D.base_structure.J * D.f1, D.base_structure);
    bool nu_zero = true;
    for (const auto& x : T.nu12)
        if (x != 0) nu_zero = false;
    if (nu_zero)
        V.alt_S_f = compose(D.S12, D.f1) == compose(D.S11, D.f2) && compose(D.S12, D.f2) == compose(D.S22, D.f1);
    V.valid = V.jacobi && V.cs.verdict && V.f_difference_in_sp && V.alt_S_f.value_or(true);
    return V;
}

bool AbelianJConditions::all() const {
    return base_abelian && f_invariant_parts && f_anti_invariant_parts && f1_invariant_in_sp && S12_relation;
}

AbelianJConditions abelian_J_conditions(const OxidationData& D) {
    check_shape(D);
    const QMat& J = D.base_structure.J;
    Rat h(1, 2);
    auto plus = [&](const QMat& f) { return h * (f - J * f * J); };
    auto minus = [&](const QMat& f) { return h * (f + J * f * J); };
    AbelianJConditions C;
    C.base_abelian = is_abelian_J(D.base, J);
    C.f_invariant_parts = plus(D.f2) == -(J * plus(D.f1));
    C.f_anti_invariant_parts = minus(D.f2) == J * minus(D.f1);
    C.f1_invariant_in_sp = in_sp(plus(D.f1), D.base_structure);
    C.f2_invariant_in_sp = in_sp(plus(D.f2), D.base_structure);
    C.S12_relation = D.S12 == compose(lin(D.S11, Rat(-1, 2), D.S22, Rat(1, 2)), J);
    return C;
}

namespace {

QMat two_form(std::size_t d, const std::vector<std::array<long, 3>>& terms) {
    QMat W(d, d);
    for (const auto& t : terms) {
        W(t[0] - 1, t[1] - 1) += t[2];
        W(t[1] - 1, t[0] - 1) -= t[2];
    }
    return W;
}

// J0 e_{2j-1} = -e_{2j}, J0 e_{2j} = e_{2j-1}.
QMat base_J(std::size_t d) {
    QMat J(d, d);
    for (std::size_t j = 0; j + 1 < d; j += 2) {
        J(j + 1, j) = -1;
        J(j, j + 1) = 1;
    }
    return J;
}

QMat base_Omega(unsigned n, unsigned l) {
    std::size_t d = 4 * (n - 1);
    std::vector<std::array<long, 3>> t;
    for (long j = 1; j <= static_cast<long>(l); ++j) {
        long s = (j % 2) ? 1 : -1, p = 2 * (2 * static_cast<long>(l) - j + 1);
        t.push_back({2 * j - 1, p, s});
        t.push_back({2 * j, p - 1, s});
    }
    for (long k = l + 1; k <= static_cast<long>(n) - 1; ++k) {
        t.push_back({4 * k - 3, 4 * k, 1});
        t.push_back({4 * k - 2, 4 * k - 1, 1});
    }
    return two_form(d, t);
}

QMat base_f1(unsigned n, unsigned l) {
    std::size_t d = 4 * (n - 1);
    QMat f(d, d);
    auto set = [&f](long from, long to) { f(to - 1, from - 1) = 1; };
    for (long j = 1; j <= 2 * static_cast<long>(l) - 1; ++j) {
        set(2 * j - 1, 2 * j + 1);
        set(2 * j, 2 * j + 2);
    }
    for (long k = l + 1; k <= static_cast<long>(n) - 1; ++k) {
        set(4 * k - 3, 4 * k - 1);
        set(4 * k - 2, 4 * k);
    }
    return f;
}

QVec covec(std::size_t d, long idx, const Rat& c = 1) {
    QVec v(d);
    v[idx - 1] = c;
    return v;
}

} // namespace

OxidationData steplength_generator(unsigned n, unsigned m, bool abelian) {
    if (n < 1 || m < 1 || m > 2 * n) throw AlgebraError("steplength_generator: need 1 <= m <= 2n");
    if (m == 1 && !abelian) throw AlgebraError("steplength_generator: step 1 only carries Abelian J");
    if (n == 1 && m == 2 && !abelian) throw AlgebraError("steplength_generator: (n,m) = (1,2) forces Abelian J");
    if (n == 1) return oxidation_over_zero(m == 2 ? QVec{1, 0} : QVec{0, 0});

    std::size_t d = 4 * (n - 1);
    OxidationData D;
    D.base = LieAlgebra::abelian(d);
    D.base_structure = {base_J(d), base_Omega(n, 0)};
    D.f1 = D.f2 = QMat(d, d);
    D.S11 = D.S12 = D.S22 = QVec(d);
    D.tau12 = {0, 0};
    if (m == 1) return D;
    if (m == 2) {
        D.f1 = base_f1(n, 0);
        if (abelian) {
            D.base = LieAlgebra(d, {{0, 1, 2, 1}});
            D.f2 = -(D.base_structure.J * D.f1);
            D.tau12 = {1, 0};
            D.S11 = covec(d, 2);
            D.S22 = covec(d, 2, -1);
        } else {
            D.S11 = covec(d, 2, -1);
            D.S22 = covec(d, 2);
        }
        D.S12 = covec(d, 1);
        return D;
    }
    unsigned l = (m - 1) / 2;
    D.base_structure.Omega = base_Omega(n, l);
    D.f1 = base_f1(n, l);
    D.f2 = -(D.base_structure.J * D.f1);
    long top = 4 * static_cast<long>(l);
    D.S11 = covec(d, top - 1);
    if (m % 2) {
        D.S22 = covec(d, top - 1, -1);
        D.S12 = covec(d, top, -1);
    } else {
        D.S22 = covec(d, top - 1);
    }
    if (!abelian) D.S12[0] += 1;
    return D;
}

OxidationData transport_oxidation(const OxidationData& D, const QMat& phi, const LieAlgebra& nb,
                                  const CSStructure& ns) {
    check_shape(D);
    auto pinv = inverse(phi);
    if (!pinv) throw AlgebraError("transport_oxidation: map is not invertible");
    if (D.base.change_basis(*pinv) != nb && nb.change_basis(phi) != D.base)
        throw AlgebraError("transport_oxidation: map is not a Lie algebra isomorphism");
    if (phi * D.base_structure.J != ns.J * phi) throw AlgebraError("transport_oxidation: map does not intertwine J");
    if (phi.transpose() * ns.Omega * phi != D.base_structure.Omega)
        throw AlgebraError("transport_oxidation: map does not pull omega back");
    OxidationData out = D;
    out.base = nb;
    out.base_structure = ns;
    out.f1 = phi * D.f1 * *pinv;
    out.f2 = phi * D.f2 * *pinv;
    out.S11 = compose(D.S11, *pinv);
    out.S12 = compose(D.S12, *pinv);
    out.S22 = compose(D.S22, *pinv);
    return out;
}

IterationResult iterate_oxidation(const std::vector<OxidationData>& stages) {
    IterationResult R{LieAlgebra::abelian(0), {QMat(0, 0), QMat(0, 0)}, {}, true, false};
    for (std::size_t k = 0; k < stages.size(); ++k) {
        const OxidationData& D = stages[k];
        if (D.base.dim() != 4 * k || !(D.base == R.algebra) || D.base_structure.J != R.structure.J ||
            D.base_structure.Omega != R.structure.Omega)
            throw AlgebraError("iterate_oxidation: stage " + std::to_string(k + 1) +
                               " base does not match the previous output");
        auto V = validate_oxidation(D);
        R.stages.push_back(V);
        if (!V.valid) throw AlgebraError("iterate_oxidation: stage " + std::to_string(k + 1) + " is not valid");
        if (!abelian_J_conditions(D).all()) R.every_stage_abelian = false;
        auto B = build_oxidation(D);
        R.algebra = B.algebra;
        R.structure = B.structure;
    }
    R.final_abelian_J = R.algebra.dim() == 0 || is_abelian_J(R.algebra, R.structure.J);
    return R;
}

} // namespace cslie
