#include "cslie/csgeom.hpp"

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

} // namespace

bool is_almost_complex(const QMat& J) {
    return J.square() && J * J == -QMat::identity(J.rows());
}

QVec nijenhuis(const LieAlgebra& L, const QMat& J, const QVec& x, const QVec& y) {
    if (!is_almost_complex(J)) throw NotAlmostComplex();
    QVec jx = J * x, jy = J * y;
    QVec r = L.bracket(x, y);
    r = add(r, J * L.bracket(jx, y));
    r = add(r, J * L.bracket(x, jy));
    r = add(r, L.bracket(jx, jy), -1);
    return r;
}

std::optional<std::array<std::size_t, 2>> nijenhuis_witness(const LieAlgebra& L, const QMat& J) {
    std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (!is_zero_vec(nijenhuis(L, J, unit_vector(n, i), unit_vector(n, j))))
                return std::array<std::size_t, 2>{i, j};
    return std::nullopt;
}

bool is_integrable(const LieAlgebra& L, const QMat& J) { return !nijenhuis_witness(L, J).has_value(); }

std::vector<Rat> d_two_form(const LieAlgebra& L, const QMat& Omega) {
    std::size_t n = L.dim();
    std::vector<Rat> d(n * n * n);
    auto w = [&](std::size_t i, std::size_t j, std::size_t k) {
        // omega([e_i,e_j], e_k)
        Rat r = 0;
        for (std::size_t m = 0; m < n; ++m)
            if (L.c(i, j, m) != 0) r += L.c(i, j, m) * Omega(m, k);
        return r;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) d[(i * n + j) * n + k] = -(w(i, j, k) + w(j, k, i) + w(k, i, j));
    return d;
}

std::optional<std::array<std::size_t, 3>> closure_witness(const LieAlgebra& L, const QMat& Omega) {
    std::size_t n = L.dim();
    auto d = d_two_form(L, Omega);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (d[(i * n + j) * n + k] != 0) return std::array<std::size_t, 3>{i, j, k};
    return std::nullopt;
}

bool is_closed(const LieAlgebra& L, const QMat& Omega) { return !closure_witness(L, Omega).has_value(); }

bool is_J_symmetric(const QMat& J, const QMat& Omega) { return J.transpose() * Omega == Omega * J; }

bool is_antisymmetric(const QMat& m) { return m.square() && m.transpose() == -m; }

VerifyReport verify_cs(const LieAlgebra& L, const CSStructure& S) {
    std::size_t n = L.dim();
    if (n % 4 != 0) throw DimensionNotMultipleOf4(n);
    if (S.J.rows() != n || S.J.cols() != n || S.Omega.rows() != n || S.Omega.cols() != n)
        throw AlgebraError("structure matrices do not match the algebra dimension");
    VerifyReport r;
    r.almost_complex = is_almost_complex(S.J);
    if (!r.almost_complex) r.failures.push_back("J^2 != -I");
    if (r.almost_complex) {
        r.nijenhuis_witness = nijenhuis_witness(L, S.J);
        r.integrable = !r.nijenhuis_witness;
        if (!r.integrable)
            r.failures.push_back("Nijenhuis tensor nonzero on (e" + std::to_string((*r.nijenhuis_witness)[0] + 1) +
                                 ", e" + std::to_string((*r.nijenhuis_witness)[1] + 1) + ")");
    } else {
        r.failures.push_back("integrability not checked: J is not almost complex");
    }
    bool antisym = is_antisymmetric(S.Omega);
    if (!antisym) r.failures.push_back("Omega is not antisymmetric");
    r.closure_witness = closure_witness(L, S.Omega);
    r.closed = antisym && !r.closure_witness;
    if (r.closure_witness)
        r.failures.push_back("d omega nonzero on (e" + std::to_string((*r.closure_witness)[0] + 1) + ", e" +
                             std::to_string((*r.closure_witness)[1] + 1) + ", e" +
                             std::to_string((*r.closure_witness)[2] + 1) + ")");
    r.nondegenerate = antisym && det(S.Omega) != 0;
    if (!r.nondegenerate) r.failures.push_back("Omega is degenerate");
    r.J_symmetric = is_J_symmetric(S.J, S.Omega);
    if (!r.J_symmetric) r.failures.push_back("omega(JX,Y) != omega(X,JY)");
    r.verdict = r.almost_complex && r.integrable && r.closed && r.nondegenerate && r.J_symmetric;
    return r;
}

ComplexForm complexify(const LieAlgebra& L, const CSStructure& S) {
    auto rep = verify_cs(L, S);
    if (!rep.verdict) throw AlgebraError("complexify: structure does not verify");
    return {S.Omega, -(S.J.transpose() * S.Omega)};
}

bool is_abelian_J(const LieAlgebra& L, const QMat& J) {
    if (!is_almost_complex(J)) throw NotAlmostComplex();
    std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (L.bracket_basis(i, j) != L.bracket(J.column(i), J.column(j))) return false;
    return true;
}

bool is_parallelizable_J(const LieAlgebra& L, const QMat& J) {
    if (!is_almost_complex(J)) throw NotAlmostComplex();
    std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (J * L.bracket_basis(i, j) != L.bracket(J.column(i), unit_vector(n, j))) return false;
    return true;
}

Subspace symplectic_orthogonal(const QMat& Omega, const Subspace& s) {
    std::size_t n = Omega.rows();
    if (s.dim() == 0) return Subspace::full(n);
    // Y with omega(Y, u) = 0 for all u in s: (Omega s)^T Y = 0.
    return annihilated((Omega * s.basis()).transpose());
}

bool is_isotropic(const QMat& Omega, const Subspace& s) {
    return (s.basis().transpose() * Omega * s.basis()).is_zero();
}

bool AbelianJReport::all_hold() const {
    bool base = g1_perp_abelian && g1J_perp_abelian && g1J_perp_J_invariant && center_J_invariant &&
                center_in_g1J_perp && J_commutes_on_g1J_perp;
    if (!two_step) return base;
    return base && g1_isotropic && g1J_isotropic && g1J_J_invariant && g1J_in_center;
}

AbelianJReport abelian_J_report(const LieAlgebra& L, const CSStructure& S) {
    auto rep = verify_cs(L, S);
    if (!rep.verdict) throw AlgebraError("abelian_J_report: structure does not verify");
    if (!is_abelian_J(L, S.J)) throw AlgebraError("abelian_J_report: J is not Abelian");
    AbelianJReport r;
    Subspace g1 = commutator_ideal(L);
    Subspace g1J = g1 + g1.image(S.J);
    Subspace g1p = symplectic_orthogonal(S.Omega, g1);
    Subspace g1Jp = symplectic_orthogonal(S.Omega, g1J);
    Subspace z = center(L);
    r.g1_perp_abelian = is_abelian_subalgebra(L, g1p);
    r.g1J_perp_abelian = is_abelian_subalgebra(L, g1Jp);
    r.g1J_perp_J_invariant = g1Jp.invariant_under(S.J);
    r.center_J_invariant = z.invariant_under(S.J);
    r.center_in_g1J_perp = g1Jp.contains(z);
    r.J_commutes_on_g1J_perp = true;
    std::size_t n = L.dim();
    for (const auto& x : g1Jp.vectors())
        for (std::size_t j = 0; j < n && r.J_commutes_on_g1J_perp; ++j) {
            QVec y = unit_vector(n, j);
            if (S.J * L.bracket(x, y) != L.bracket(x, S.J * y)) r.J_commutes_on_g1J_perp = false;
        }
    auto lcs = lower_central_series(L);
    r.two_step = lcs.step == 2u;
    if (r.two_step) {
        r.g1_isotropic = is_isotropic(S.Omega, g1);
        r.g1J_isotropic = is_isotropic(S.Omega, g1J);
        r.g1J_J_invariant = g1J.invariant_under(S.J);
        r.g1J_in_center = z.contains(g1J) && g1Jp.contains(z);
    }
    return r;
}

} // namespace cslie
