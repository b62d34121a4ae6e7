#include "cslie/exactalg.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cslie;
using namespace testutil;

TEST_CASE("rational parsing round-trips") {
    CHECK(parse_rat("3/6") == Rat(1, 2));
    CHECK(parse_rat("-7") == Rat(-7));
    CHECK_THROWS(parse_rat("0.25"));
    CHECK(rat_str(parse_rat("-2/4")) == "-1/2");
    CHECK_THROWS(parse_rat("abc"));
}

TEST_CASE("determinant agrees with Leibniz expansion") {
    std::mt19937 g(11);
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 1 + t % 6;
        QMat a = rand_mat(g, n, n, 4, 3);
        CHECK(det(a) == leibniz_det(a));
    }
}

TEST_CASE("inverse, kernel and solve") {
    std::mt19937 g(12);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = 2 + t % 5;
        QMat a = rand_mat(g, n, n, 2);
        auto inv = inverse(a);
        CHECK(inv.has_value() == (leibniz_det(a) != 0));
        if (inv) CHECK(a * *inv == QMat::identity(n));
        QMat k = kernel(a);
        CHECK(k.cols() + rank(a) == n);
        CHECK((a * k).is_zero());
        QVec x = rand_vec(g, n);
        QVec b = a * x;
        auto y = solve(a, b);
        REQUIRE(y.has_value());
        CHECK(a * *y == b);
    }
    QMat sing = QMat::from_ints({{1, 2}, {2, 4}});
    CHECK_FALSE(solve(sing, QVec{Rat(1), Rat(0)}).has_value());
}

TEST_CASE("characteristic polynomial matches det(tI - A) at sample points") {
    std::mt19937 g(13);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + t % 6;
        QMat a = rand_mat(g, n, n, 3, 2);
        QPoly p = charpoly(a);
        CHECK(p.degree() == static_cast<long>(n));
        CHECK(p.lead() == 1);
        for (int s = -2; s <= 2; ++s) {
            QMat m = QMat::identity(n) * Rat(s) - a;
            CHECK(p.eval(Rat(s)) == leibniz_det(m));
        }
        // Cayley-Hamilton.
        CHECK(p.eval(a).is_zero());
    }
}

TEST_CASE("companion matrix realises its polynomial") {
    QPoly p = QPoly::from_ints({5, -3, 0, 2, 1});
    CHECK(charpoly(companion(p)) == p);
}

TEST_CASE("polynomial division and gcd") {
    std::mt19937 g(14);
    for (int t = 0; t < 40; ++t) {
        QPoly a(rand_vec(g, 1 + t % 6)), b(rand_vec(g, 1 + t % 4));
        if (b.is_zero()) continue;
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
    QPoly f = QPoly::from_ints({-1, 0, 1});  // x^2 - 1
    QPoly h = QPoly::from_ints({1, 2, 1});   // (x + 1)^2
    CHECK(gcd(f, h) == QPoly::from_ints({1, 1}));
    CHECK(squarefree_part(pow(h, 3)) == QPoly::from_ints({1, 1}));
}

TEST_CASE("factorisation reproduces the input with irreducible factors") {
    std::vector<QPoly> cases = {
        QPoly::from_ints({4, 0, 0, 0, 1}),                // x^4 + 4 (Sophie Germain)
        QPoly::from_ints({1, 0, 0, 0, 1}),                // x^4 + 1, irreducible over Q
        pow(QPoly::from_ints({-2, 0, 1}), 2) * QPoly::from_ints({1, 1}),
        QPoly::from_ints({-1, 0, 0, 0, 0, 0, 1}),         // x^6 - 1
        QPoly::from_ints({0, 0, 3, -6}),
    };
    for (const auto& p : cases) {
        auto fs = factor_irreducible(p);
        QPoly prod = QPoly::constant(1);
        for (const auto& f : fs) {
            CHECK(is_irreducible(f.poly));
            CHECK(f.poly.lead() == 1);
            prod = prod * pow(f.poly, f.mult);
        }
        CHECK(prod == p.monic());
    }
    CHECK(factor_irreducible(QPoly::from_ints({4, 0, 0, 0, 1})).size() == 2);
    CHECK(is_irreducible(QPoly::from_ints({1, 0, 0, 0, 1})));
    CHECK(factor_irreducible(QPoly::from_ints({-1, 0, 0, 0, 0, 0, 1})).size() == 4);
}

TEST_CASE("primary profiles recover Jordan block sizes") {
    // J_3(1) + J_1(1) + J_2(0) + companion(x^2 + 1) twice as a Jordan block of size 2.
    QMat j3 = QMat::from_ints({{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
    QMat j2 = QMat::from_ints({{0, 1}, {0, 0}});
    QMat c = QMat::from_ints({{0, -1, 1, 0}, {1, 0, 0, 1}, {0, 0, 0, -1}, {0, 0, 1, 0}});
    QMat m = QMat::block_diag({j3, QMat::identity(1), j2, c});
    std::mt19937 g(15);
    QMat p = rand_invertible(g, m.rows());
    QMat conj = p * m * *inverse(p);
    auto prof = primary_profiles(conj);
    REQUIRE(prof.size() == 3);
    for (const auto& pp : prof) {
        if (pp.factor == QPoly::x()) CHECK(pp.block_sizes == std::vector<unsigned>{2});
        else if (pp.factor == QPoly::from_ints({-1, 1})) CHECK(pp.block_sizes == std::vector<unsigned>{3, 1});
        else {
            CHECK(pp.factor == QPoly::from_ints({1, 0, 1}));
            CHECK(pp.block_sizes == std::vector<unsigned>{2});
        }
    }
}

TEST_CASE("root classes") {
    auto rc = root_classes(QPoly::from_ints({1, 0, 1}));
    CHECK(rc.n_imag_pairs == 1);
    CHECK(rc.n_real == 0);
    rc = root_classes(QPoly::from_ints({1, 0, 0, 0, 1}));
    CHECK(rc.n_generic_pairs == 2);
    rc = root_classes(QPoly::from_ints({-2, 0, 1}));
    CHECK(rc.n_real == 2);
    CHECK(root_classes(QPoly::x()).is_zero);
    // x^4 + 3x^2 + 1 has roots +-i phi, +-i/phi.
    rc = root_classes(QPoly::from_ints({1, 0, 3, 0, 1}));
    CHECK(rc.n_imag_pairs == 2);
    CHECK(negation_partner(QPoly::from_ints({-3, 1})) == QPoly::from_ints({3, 1}));
    CHECK_THROWS(root_classes(QPoly::from_ints({1, 2, 1})));
}

TEST_CASE("Sturm counts match known roots") {
    QPoly p = QPoly::from_ints({6, -5, -2, 1});  // (x-1)(x+2)(x-3)
    CHECK(sturm_count(p) == 3);
    CHECK(sturm_count(p, Rat(0), std::nullopt) == 2);
    CHECK(sturm_count(p, Rat(-2), Rat(1)) == 1);
}
