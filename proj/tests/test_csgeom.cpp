#include "cslie/almostabelian.hpp"
#include "cslie/cotangent.hpp"
#include "cslie/fixtures.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cslie;
using namespace testutil;

namespace {

QVec direct_nijenhuis(const LieAlgebra& L, const QMat& J, const QVec& x, const QVec& y) {
    QVec jx = J * x, jy = J * y;
    QVec a = L.bracket(jx, jy), b = J * L.bracket(jx, y), c = J * L.bracket(x, jy), d = L.bracket(x, y);
    QVec r(x.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = d[i] + b[i] + c[i] - a[i];
    return r;
}

Rat form(const QMat& W, const QVec& x, const QVec& y) {
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * W(i, j) * y[j];
    return s;
}

// d omega(x,y,z) = -omega([x,y],z) - omega([y,z],x) - omega([z,x],y).
bool direct_closed(const LieAlgebra& L, const QMat& W) {
    std::size_t n = L.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                QVec x = unit_vector(n, i), y = unit_vector(n, j), z = unit_vector(n, k);
                if (form(W, L.bracket(x, y), z) + form(W, L.bracket(y, z), x) + form(W, L.bracket(z, x), y) != 0)
                    return false;
            }
    return true;
}

CSAlgebra h7_cotangent() {
    H7Params p;
    p.r13 = 1;
    p.r24 = 2;
    auto B = build_cotangent(h7_solution_family(1, p));
    return {B.algebra, B.structure};
}

} // namespace

TEST_CASE("canonical structure on R^4 and small almost Abelian algebras") {
    CSStructure S = canonical_J0_omega0(1);
    CHECK(is_almost_complex(S.J));
    CHECK(is_antisymmetric(S.Omega));
    CHECK(verify_cs(LieAlgebra::abelian(4), S).verdict);
    for (int a : {0, 1, 2})
        for (int b : {0, 1})
            for (int c : {0, 3}) {
                LieAlgebra L = build_semidirect(dim4_f(a, b, c));
                VerifyReport r = verify_cs(L, S);
                CHECK(r.verdict);
                CHECK(r.failures.empty());
                CHECK(direct_closed(L, S.Omega));
            }
}

TEST_CASE("Nijenhuis tensor agrees with the direct formula") {
    std::mt19937 g(31);
    std::vector<LieAlgebra> algs = {parse_salamon("(0,0,12,13)"), h7_cotangent().algebra,
                                    build_semidirect(dim4_f(1, 2, 0))};
    for (const auto& L : algs) {
        std::size_t n = L.dim();
        QMat P = rand_invertible(g, n);
        QMat J = P * canonical_J0_omega0(static_cast<unsigned>(n / 4)).J * *inverse(P);
        if (n % 4) J = P * standard_J(n) * *inverse(P);
        bool zero = true;
        for (int t = 0; t < 8; ++t) {
            QVec x = rand_vec(g, n), y = rand_vec(g, n);
            CHECK(nijenhuis(L, J, x, y) == direct_nijenhuis(L, J, x, y));
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                QVec d = direct_nijenhuis(L, J, unit_vector(n, i), unit_vector(n, j));
                for (const auto& v : d) zero = zero && v == 0;
            }
        CHECK(is_integrable(L, J) == zero);
        CHECK(nijenhuis_witness(L, J).has_value() == !zero);
    }
}

TEST_CASE("closure agrees with the direct cyclic sum") {
    std::mt19937 g(32);
    LieAlgebra L = parse_salamon("(0,0,12,13)");
    int closed = 0;
    for (int t = 0; t < 40; ++t) {
        QMat W = rand_skew(g, 4);
        if (t % 2) W(0, 1) = W(1, 0) = 0, W(0, 2) = 0, W(2, 0) = 0;
        bool direct = direct_closed(L, W);
        closed += direct;
        CHECK(is_closed(L, W) == direct);
        CHECK(closure_witness(L, W).has_value() == !direct);
    }
    CHECK(closed > 0);
}

TEST_CASE("verification reports each failure") {
    CSAlgebra A = nonuniqueness_example(1);
    CHECK(verify_cs(A.algebra, A.structure).verdict);

    CSStructure bad = A.structure;
    bad.J = bad.J * Rat(2);
    VerifyReport r = verify_cs(A.algebra, bad);
    CHECK_FALSE(r.almost_complex);
    CHECK_FALSE(r.verdict);

    bad = A.structure;
    bad.Omega = QMat(8, 8);
    r = verify_cs(A.algebra, bad);
    CHECK_FALSE(r.nondegenerate);
    CHECK_FALSE(r.verdict);

    // Swapping J for -J keeps everything; conjugating by a non-automorphism breaks integrability.
    bad = A.structure;
    bad.J = -bad.J;
    CHECK(verify_cs(A.algebra, bad).verdict);
}

TEST_CASE("complexified form is complex bilinear") {
    for (auto A : {nonuniqueness_example(1), nonuniqueness_example(2), h7_cotangent()}) {
        REQUIRE(verify_cs(A.algebra, A.structure).verdict);
        ComplexForm c = complexify(A.algebra, A.structure);
        std::size_t n = A.algebra.dim();
        const QMat& J = A.structure.J;
        // omega_C(Jx, y) = i omega_C(x, y)
        CHECK(J.transpose() * c.re == -c.im);
        CHECK(J.transpose() * c.im == c.re);
        CHECK(c.re == A.structure.Omega);
        CHECK(is_J_symmetric(J, A.structure.Omega));
        CHECK(rank(c.re) == n);
    }
}

TEST_CASE("Abelian and parallelizable complex structures") {
    std::mt19937 g(33);
    auto direct_abelian = [](const LieAlgebra& L, const QMat& J) {
        for (std::size_t i = 0; i < L.dim(); ++i)
            for (std::size_t j = 0; j < L.dim(); ++j) {
                QVec x = unit_vector(L.dim(), i), y = unit_vector(L.dim(), j);
                if (L.bracket(J * x, J * y) != L.bracket(x, y)) return false;
            }
        return true;
    };
    auto direct_parallel = [](const LieAlgebra& L, const QMat& J) {
        for (std::size_t i = 0; i < L.dim(); ++i)
            for (std::size_t j = 0; j < L.dim(); ++j) {
                QVec x = unit_vector(L.dim(), i), y = unit_vector(L.dim(), j);
                if (L.bracket(J * x, y) != J * L.bracket(x, y)) return false;
            }
        return true;
    };
    std::vector<CSAlgebra> cases = {h7_cotangent(), nonuniqueness_example(1), nonuniqueness_example(2)};
    {
        auto B = build_cotangent(fullrank_dim4());
        cases.push_back({B.algebra, B.structure});
    }
    for (const auto& A : cases) {
        CHECK(is_abelian_J(A.algebra, A.structure.J) == direct_abelian(A.algebra, A.structure.J));
        CHECK(is_parallelizable_J(A.algebra, A.structure.J) == direct_parallel(A.algebra, A.structure.J));
    }
    LieAlgebra h7 = h7_algebra();
    CHECK(is_integrable(h7, h7_complex_structure()));
}

TEST_CASE("Abelian-J structural report") {
    auto B = build_cotangent(rho_zero_builder(
        4, {rho_zero_form("w4"), rho_zero_form("w3"), Rat(2) * rho_zero_form("w1"), rho_zero_form("w2")}));
    REQUIRE(verify_cs(B.algebra, B.structure).verdict);
    REQUIRE(is_abelian_J(B.algebra, B.structure.J));
    AbelianJReport r = abelian_J_report(B.algebra, B.structure);
    CHECK(r.all_hold());
    CHECK(r.g1_perp_abelian);
    CHECK(r.center_J_invariant);

    CSAlgebra A = nonuniqueness_example(1);
    if (!is_abelian_J(A.algebra, A.structure.J)) CHECK_THROWS_AS(abelian_J_report(A.algebra, A.structure), AlgebraError);
}

TEST_CASE("symplectic orthogonal and isotropy") {
    QMat W = canonical_J0_omega0(1).Omega;
    for (std::size_t i = 0; i < 4; ++i) {
        Subspace s = Subspace::span(4, {unit_vector(4, i)});
        Subspace perp = symplectic_orthogonal(W, s);
        CHECK(perp.dim() == 3);
        CHECK(perp.contains(s));
        CHECK(is_isotropic(W, s));
    }
    CHECK_FALSE(is_isotropic(W, Subspace::full(4)));
}
