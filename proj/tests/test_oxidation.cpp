#include "cslie/almostabelian.hpp"
#include "cslie/fixtures.hpp"
#include "cslie/oxidation.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cslie;
using namespace testutil;

namespace {

// Abelian base, f = 0, random S; half the draws satisfy the S12 relation.
OxidationData random_flat(std::mt19937& g, int t) {
    unsigned k = 1 + t % 2;
    OxidationData D = trivial_oxidation(LieAlgebra::abelian(4 * k), canonical_J0_omega0(k));
    D.S11 = rand_vec(g, 4 * k, 1);
    D.S12 = rand_vec(g, 4 * k, 1);
    D.S22 = rand_vec(g, 4 * k, 1);
    D.tau12 = rand_vec(g, 2, 2);
    if (t % 2 == 0) {
        QVec d(4 * k);
        for (std::size_t i = 0; i < d.size(); ++i) d[i] = (D.S22[i] - D.S11[i]) / 2;
        D.S12 = D.base_structure.J.transpose() * d;
    }
    return D;
}

std::vector<OxidationData> generator_outputs() {
    std::vector<OxidationData> out;
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned m = 1; m <= 2 * n; ++m)
            for (bool ab : {true, false}) {
                if (!ab && (m == 1 || (n == 1 && m == 2))) continue;
                out.push_back(steplength_generator(n, m, ab));
            }
    return out;
}

Rat pair(const QMat& W, const QVec& x, const QVec& y) {
    Rat s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * W(i, j) * y[j];
    return s;
}

} // namespace

TEST_CASE("step-length generators") {
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned m = 1; m <= 2 * n; ++m)
            for (bool ab : {true, false}) {
                if (!ab && (m == 1 || (n == 1 && m == 2))) continue;
                CAPTURE(n);
                CAPTURE(m);
                CAPTURE(ab);
                OxidationData D = steplength_generator(n, m, ab);
                OxidationValidation V = validate_oxidation(D);
                CHECK(V.valid);
                auto B = build_oxidation(D);
                CHECK(B.algebra.dim() == 4 * n);
                auto lcs = lower_central_series(B.algebra);
                REQUIRE(lcs.step.has_value());
                CHECK(*lcs.step == m);
                auto dims = lcs.dims();
                for (std::size_t i = 0; i + 1 < dims.size(); ++i) CHECK(dims[i] > dims[i + 1]);
                // The last nonzero term lies in the centre.
                if (dims.size() >= 2) CHECK(center(B.algebra).contains(lcs.terms[dims.size() - 2]));
                CHECK(is_abelian_J(B.algebra, B.structure.J) == ab);
            }
    CHECK_THROWS_AS(steplength_generator(2, 5, true), AlgebraError);
    CHECK_THROWS_AS(steplength_generator(1, 2, false), AlgebraError);
}

TEST_CASE("Abelian-J conditions decide abelianity of the oxidation") {
    std::mt19937 g(61);
    int checked = 0, abelian = 0;
    auto check = [&](const OxidationData& D) {
        if (!validate_oxidation(D).valid) return;
        auto B = build_oxidation(D);
        bool a = is_abelian_J(B.algebra, B.structure.J);
        CHECK(abelian_J_conditions(D).all() == a);
        ++checked;
        abelian += a;
    };
    for (int t = 0; t < 60; ++t) check(random_flat(g, t));
    for (auto D : generator_outputs()) {
        check(D);
        if (D.S12.empty()) continue;
        D.S12[g() % D.S12.size()] += rand_rat(g);
        check(D);
    }
    CHECK(checked >= 50);
    CHECK(abelian > 0);
    CHECK(abelian < checked);
}

TEST_CASE("the built form restricts to the base and pairs V with V*") {
    std::mt19937 g(62);
    std::vector<OxidationData> all = generator_outputs();
    for (int t = 0; t < 10; ++t) all.push_back(random_flat(g, t));
    for (const auto& D : all) {
        auto B = build_oxidation(D);
        std::size_t d = D.base.dim(), n = d + 4;
        const QMat& W = B.structure.Omega;
        CHECK(W.block(2, 2, d, d) == D.base_structure.Omega);
        CHECK(B.structure.J.block(2, 2, d, d) == D.base_structure.J);
        for (std::size_t k = 0; k < 2; ++k)
            for (std::size_t l = 0; l < 2; ++l) {
                QVec vk = unit_vector(n, k), vl_star = unit_vector(n, 2 + d + l);
                CHECK(pair(W, vl_star, vk) == (k == l ? 1 : 0));
                CHECK(pair(W, unit_vector(n, k), unit_vector(n, l)) == 0);
            }
    }
}

TEST_CASE("invariant parts of f annihilate the base form") {
    std::mt19937_64 g64(63);
    for (const auto& D : generator_outputs()) {
        const QMat& J = D.base_structure.J;
        const QMat& W = D.base_structure.Omega;
        for (const QMat* f : {&D.f1, &D.f2}) {
            QMat p = Rat(1, 2) * (*f - J * *f * J);
            if (in_sp(p, D.base_structure)) CHECK((p.transpose() * W + W * p).is_zero());
        }
    }
    QMat A = random_sp_complex(1, g64);
    CHECK(in_sp(A, CSStructure{inner_J(1), inner_Omega(1)}));
}

TEST_CASE("step-two brackets and the nu factor") {
    for (const char* id : {"oxidation-step2-brackets", "oxidation-nu-factor"}) {
        auto r = run_fixture(id);
        REQUIRE(r.has_value());
        CAPTURE(r->detail);
        CHECK(r->pass);
    }
    // Halving nu alone leaves a Lie algebra whose form is not closed.
    for (unsigned m : {4u, 6u}) {
        OxidationData D = steplength_generator(3, m, true);
        DerivedTensors T = derive_tensors(D);
        REQUIRE(!std::all_of(T.nu12.begin(), T.nu12.end(), [](const Rat& x) { return x == 0; }));
        DerivedTensors half = T;
        for (auto& x : half.nu12) x /= 2;
        auto B = build_oxidation(D, half);
        bool broken = B.algebra.jacobi_witness().has_value() || !verify_cs(B.algebra, B.structure).verdict;
        CHECK(broken);
        auto good = build_oxidation(D, T);
        CHECK(verify_cs(good.algebra, good.structure).verdict);
    }
}

TEST_CASE("iterated oxidation from the zero algebra") {
    OxidationData s1 = oxidation_over_zero({Rat(1), Rat(0)});
    auto B1 = build_oxidation(s1);
    OxidationData s2 = steplength_generator(2, 2, true);
    QMat phi(4, 4);
    phi(1, 0) = 1;
    phi(0, 1) = 1;
    phi(2, 2) = -1;
    phi(3, 3) = -1;
    OxidationData t = transport_oxidation(s2, phi, B1.algebra, B1.structure);
    IterationResult R = iterate_oxidation({s1, t});
    CHECK(R.algebra.dim() == 8);
    CHECK(R.final_abelian_J);
    CHECK(R.every_stage_abelian);
    CHECK(is_nilpotent(R.algebra));
    CHECK(verify_cs(R.algebra, R.structure).verdict);
    // A stage whose base does not match the previous output is rejected.
    CHECK_THROWS(iterate_oxidation({s1, s2}));

    OxidationData z = oxidation_over_zero({Rat(0), Rat(0)});
    auto zb = build_oxidation(z);
    IterationResult R0 = iterate_oxidation({z, trivial_oxidation(zb.algebra, zb.structure)});
    CHECK(R0.algebra.is_abelian());
    CHECK(R0.algebra.dim() == 8);
}
