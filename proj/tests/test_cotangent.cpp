#include "cslie/cotangent.hpp"
#include "cslie/fixtures.hpp"
#include "doctest.h"
#include "generators.hpp"

using namespace cslie;
using namespace testutil;


TEST_CASE("the six conditions decide validity of the extension") {
    std::mt19937 g(51);
    auto pool = valid_cotangent_pool(g);
    int valid = 0, invalid = 0;
    for (const auto& D : pool) {
        bool conds = check_conditions(D).all();
        CHECK(conds);
        CHECK(conds == built_valid(D));
        valid += conds;
        CotangentData P = perturb(D, g);
        bool pc = check_conditions(P).all();
        CHECK(pc == built_valid(P));
        invalid += !pc;
    }
    CHECK(valid + invalid >= 100);
    CHECK(invalid > 20);
}

TEST_CASE("every built structure has J symmetric and h* Lagrangian and J-invariant") {
    std::mt19937 g(52);
    auto pool = valid_cotangent_pool(g);
    for (auto& D : pool) {
        for (const auto& X : {D, perturb(D, g)}) {
            auto B = build_cotangent(X);
            std::size_t n = B.algebra.dim();
            CHECK(is_J_symmetric(B.structure.J, B.structure.Omega));
            Subspace hs = first_half(n);
            CHECK(is_lagrangian(B.structure.Omega, hs));
            CHECK(hs.invariant_under(B.structure.J));
        }
    }
}

TEST_CASE("Abelian and parallelizable criteria match the built algebra") {
    std::mt19937 g(53);
    auto pool = valid_cotangent_pool(g);
    int abelian = 0, non = 0;
    for (const auto& D : pool) {
        auto c = abelian_parallelizable_criteria(D);
        auto B = build_cotangent(D);
        CHECK(c.abelian == is_abelian_J(B.algebra, B.structure.J));
        CHECK(c.parallelizable == is_parallelizable_J(B.algebra, B.structure.J));
        CHECK(c.built_abelian == c.abelian);
        CHECK(c.built_parallelizable == c.parallelizable);
        (c.abelian ? abelian : non)++;
    }
    CHECK(pool.size() >= 50);
    CHECK(abelian > 0);
    CHECK(non > 0);
}

TEST_CASE("Lagrangian complements for symmetric and skew J") {
    std::mt19937 g(54);
    int sym = 0, skew = 0;
    for (int t = 0; t < 100; ++t) {
        bool symmetric = t % 2 == 0;
        auto [Wp, Jp, L] = random_lagrangian_case(g, 2 * (1 + t % 3), symmetric);
        REQUIRE(is_lagrangian(Wp, L));
        REQUIRE(L.invariant_under(Jp));
        CHECK(is_J_symmetric(Jp, Wp) == symmetric);
        Subspace C = lagrangian_complement(Wp, Jp, L);
        CHECK(C.dim() == L.dim());
        CHECK(is_lagrangian(Wp, C));
        CHECK(C.invariant_under(Jp));
        CHECK(C.intersect(L).dim() == 0);
        (symmetric ? sym : skew)++;
    }
    CHECK(sym >= 50);
    CHECK(skew >= 50);
}

TEST_CASE("reconstruction inverts the build, also after a change of basis") {
    std::mt19937 g(55);
    auto pool = valid_cotangent_pool(g);
    for (std::size_t k = 0; k < pool.size(); k += 3) {
        auto B = build_cotangent(pool[k]);
        std::size_t n = B.algebra.dim();
        QMat P = QMat::identity(n);
        if (k % 2) P = rand_invertible(g, n);
        QMat Pi = *inverse(P);
        LieAlgebra L = B.algebra.change_basis(P);
        CSStructure S{Pi * B.structure.J * P, P.transpose() * B.structure.Omega * P};
        Subspace j = first_half(n).image(Pi);
        Reconstruction R = reconstruct_cotangent_data(L, S, j);
        CHECK(R.intertwines);
        CHECK(R.commutes_J);
        CHECK(R.pulls_back_omega);
        CHECK(check_conditions(R.data).all());
        CHECK(invariant_fingerprint(build_cotangent(R.data).algebra) == invariant_fingerprint(B.algebra));
    }
}

TEST_CASE("the J-invariant Lagrangian ideal search finds h* in built examples") {
    std::mt19937 g(56);
    for (int family = 1; family <= 4; ++family) {
        auto B = build_cotangent(h7_solution_family(family, random_h7(g)));
        auto j = find_J_lagrangian_ideal(B.algebra, B.structure);
        REQUIRE(j.has_value());
        CHECK(is_ideal(B.algebra, *j));
        CHECK(is_lagrangian(B.structure.Omega, *j));
        CHECK(j->invariant_under(B.structure.J));
    }
}

TEST_CASE("h7 solution families") {
    std::mt19937 g(57);
    LieAlgebra h7 = h7_algebra();
    CHECK(print_salamon(h7) == "(0^3,12,13,23)");
    CHECK(is_integrable(h7, h7_complex_structure()));
    for (int family = 1; family <= 4; ++family)
        for (int t = 0; t < 5; ++t) {
            auto D = h7_solution_family(family, random_h7(g));
            auto B = build_cotangent(D);
            CHECK(check_conditions(D).all());
            CHECK(is_nilpotent(B.algebra));
            CHECK(B.algebra.dim() == 12);
        }
    auto [c, s] = circle_point(Rat(1, 2));
    CHECK(c * c + s * s == 1);
}

TEST_CASE("rho = 0 examples") {
    QMat Z(4, 4);
    auto f = [](const char* n) { return rho_zero_form(n); };
    // Type condition fails for a lone (2,0) form.
    CHECK_THROWS_AS(rho_zero_builder(4, {f("s1"), Z, Z, Z}), AlgebraError);
    auto D = rho_zero_builder(4, {f("w4"), f("w3"), Rat(2) * f("w1"), f("w2")});
    CHECK(abelian_parallelizable_criteria(D).abelian);
    auto parts = alpha_type_parts(f("w1"), f("w2"), standard_J(4));
    CHECK(parts.anti_re.is_zero());
    CHECK(parts.anti_im.is_zero());
}

TEST_CASE("full-rank solutions") {
    for (const auto& D : {fullrank_dim4(), fullrank_dim8(0), fullrank_dim8(1)}) {
        CHECK(check_conditions(D).all());
        FullRankReport r = fullrank_rho_toolkit(D);
        CHECK(r.full_rank);
        CHECK(r.symmetric);
        CHECK(r.cubic_symmetric);
        CHECK(r.identity_element.has_value());
    }
}

TEST_CASE("worked cotangent examples pass") {
    for (const auto& f : list_fixtures()) {
        if (f.id.rfind("cot-", 0) && f.id.rfind("rho0-", 0) && f.id.rfind("fullrank-", 0)) continue;
        auto r = run_fixture(f.id);
        REQUIRE(r.has_value());
        CAPTURE(f.id);
        CAPTURE(r->detail);
        CHECK(r->pass);
    }
}
