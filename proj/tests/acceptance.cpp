// Acceptance run: one PASS/FAIL line per criterion; exit status 1 if any criterion fails.
#include "cslie/fixtures.hpp"
#include "cslie/lattice.hpp"
#include "cslie/oxidation.hpp"
#include "generators.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>

using namespace cslie;
using namespace testutil;

namespace {

// Collects failed checks; the first few are reported.
struct Tally {
    int checks = 0;
    std::vector<std::string> failed;
    void operator()(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failed.push_back(what);
    }
    bool ok() const { return failed.empty(); }
};

QMat f_of(const LieAlgebra& L) {
    std::size_t k = L.dim() - 1;
    QMat f(k, k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) f(r, c) = L.c(k, c, r);
    return f;
}

void criterion1(Tally& t) {
    CSAlgebra g1 = nonuniqueness_example(1), g2 = nonuniqueness_example(2);
    t(verify_cs(g1.algebra, g1.structure).verdict, "g1 verifies");
    t(verify_cs(g2.algebra, g2.structure).verdict, "g2 verifies");
    t(invariant_fingerprint(g1.algebra) == invariant_fingerprint(g2.algebra), "fingerprints coincide");
    t(primary_profiles(f_of(g1.algebra)) == primary_profiles(f_of(g2.algebra)), "primary profiles coincide");
    std::vector<std::size_t> u_idx{0, 1, 2, 3, 4, 5, 6};
    Subspace u = Subspace::coordinate(8, u_idx);
    Subspace perp = symplectic_orthogonal(g1.structure.Omega, u);
    t(perp == Subspace::coordinate(8, {4}), "omega-orthogonal of u is <e5>");
}

void criterion2(Tally& t) {
    Fingerprint r4 = invariant_fingerprint(build_semidirect(QMat::diag({1, -1, -1})));
    Fingerprint rh3 = invariant_fingerprint(parse_salamon("(0,0,12,0)"));
    Fingerprint ab = invariant_fingerprint(LieAlgebra::abelian(4));
    t(!(r4 == rh3) && !(r4 == ab) && !(rh3 == ab), "reference classes are distinct");
    for (int a : {1, -2, 3})
        for (int b : {0, 1})
            for (int c : {0, -1}) {
                LieAlgebra L = build_semidirect(dim4_f(a, b, c));
                t(invariant_fingerprint(L) == r4, "a != 0 gives r4,-1,-1");
                t(!is_unimodular(L), "a != 0 is not unimodular");
            }
    for (auto [b, c] : {std::pair{1, 0}, {0, 2}, {3, -1}}) {
        LieAlgebra L = build_semidirect(dim4_f(0, b, c));
        t(invariant_fingerprint(L) == rh3, "a = 0, (b,c) != 0 gives rh3");
        t(lower_central_series(L).step == 2u && commutator_ideal(L).dim() == 1, "2-step with dim g1 = 1");
    }
    t(invariant_fingerprint(build_semidirect(dim4_f(0, 0, 0))) == ab, "f = 0 gives R^4");
}

void criterion3(Tally& t) {
    std::mt19937 g(301);
    std::mt19937_64 g64(301);
    for (unsigned n = 1; n <= 3; ++n)
        for (Family fam : families_for(n))
            for (int k = 0; k < 20; ++k) {
                AlmostAbelianAlg A = canonical_family_build(n, random_family(n, fam, g, g64));
                std::string at = std::string(family_name(fam)) + " n=" + std::to_string(n);
                t(verify_cs(A.algebra(), canonical_J0_omega0(n)).verdict, at + " verifies");
                t(classify_existence(A.f).yes, at + " classified Yes");
            }
}

void criterion4(Tally& t) {
    std::vector<QMat> fs;
    for (int i : {1, 2}) fs.push_back(f_of(nonuniqueness_example(i).algebra));
    for (int a : {0, 1})
        for (int b : {0, 1}) fs.push_back(dim4_f(a, b, 0));
    for (unsigned n = 2; n <= 4; ++n) fs.push_back(lattice_f(n));
    std::mt19937 g(401);
    std::mt19937_64 g64(401);
    for (unsigned n = 1; n <= 2; ++n)
        for (Family fam : families_for(n)) fs.push_back(canonical_family_build(n, random_family(n, fam, g, g64)).f);
    int random = 0;
    for (int k = 0; k < 240; ++k) {
        std::size_t size = k % 2 ? 7 : 3;
        QMat f = rand_mat(g, size, size, 2);
        if (k % 4 == 1) f = QMat::diag(rand_vec(g, size, 2));
        if (k % 4 == 3) {
            QVec d = rand_vec(g, size, 1);
            f = QMat::diag(d);
            for (std::size_t i = 0; i + 1 < size; ++i)
                if (g() % 2 && d[i] == d[i + 1]) f(i, i + 1) = 1;
        }
        fs.push_back(f);
        ++random;
    }
    t(random >= 200, "at least 200 random matrices");
    for (const auto& f : fs) t(classify_existence(f).yes == classify_existence_oracle(f), "disagreement on " + f.str());
}

void criterion5(Tally& t) {
    std::mt19937 g(501);
    std::mt19937_64 g64(501);
    int moves = 0;
    for (unsigned n = 1; n <= 3; ++n)
        for (int k = 0; k < 20; ++k) {
            EquivalenceResult r = apply_equivalence(n, random_params(n, g, g64), random_move(n, g, g64));
            t(r.intertwines, "K f = lambda f~ K");
            t(r.commutes_J, "K J0 = J0 K");
            t(r.preserves_omega, "K^T W0 K = W0");
            ++moves;
        }
    t(moves >= 50, "at least 50 moves");
}

void criterion6(Tally& t) {
    QPoly xm1 = QPoly::from_ints({-1, 1});
    for (long ell = 3; ell <= 10; ++ell)
        for (unsigned m = 1; m <= 3; ++m) {
            std::string at = "ell=" + std::to_string(ell) + " m=" + std::to_string(m);
            QPoly q = build_q(ell, m);
            t(q.lead() == 1 && q.coeff(0) == -1, at + " monic with constant -1");
            t(gcd(q, q.derivative()) == QPoly::constant(1), at + " distinct roots");
            auto B = companion_blocks(q);
            t(charpoly(B.Bl) == xm1 * q * q, at + " char(Bl) = (x-1) q^2");
            LatticeReport r = lattice_report(m + 1, ell);
            t(r.numeric_roots_ok && r.max_relative_error < 1e-9, at + " numeric roots");
        }
    t(build_q(3, 1) == QPoly::from_ints({-1, 4, -4, 1}), "q for (3,1)");
}

void criterion7(Tally& t) {
    std::mt19937 g(701);
    auto pool = valid_cotangent_pool(g, 40, 12);
    int total = 0;
    for (const auto& D : pool) {
        for (const auto& X : {D, perturb(D, g)}) {
            t(check_conditions(X).all() == built_valid(X), "conditions vs validity");
            ++total;
        }
    }
    t(total >= 100, "at least 100 data sets");
}

std::vector<std::pair<std::string, CotangentData>> cotangent_fixtures() {
    auto f = [](const char* n) { return rho_zero_form(n); };
    QMat Z(4, 4);
    std::vector<std::pair<std::string, CotangentData>> out;
    H7Params p;
    p.r13 = 1;
    p.r24 = -1;
    p.r35 = 2;
    auto [c, s] = circle_point(Rat(1, 3));
    p.cos_t = c;
    p.sin_t = s;
    for (int fam = 1; fam <= 4; ++fam) out.push_back({"h7 family " + std::to_string(fam), h7_solution_family(fam, p)});
    for (unsigned n = 1; n <= 3; ++n) out.push_back({"rho0 case a", rho_zero_builder(2 * n, rho_zero_case_a(n))});
    out.push_back({"rho0 b-i", rho_zero_builder(4, {f("s1"), -f("s2"), Z, Z})});
    out.push_back({"rho0 b-ii", rho_zero_builder(4, {f("s1"), -f("s2"), f("w2"), Z})});
    out.push_back({"rho0 b-iii-0", rho_zero_builder(4, {f("w4"), f("w3"), Rat(2) * f("w1"), Z})});
    out.push_back({"rho0 b-iii-1", rho_zero_builder(4, {f("w4"), f("w3"), Rat(2) * f("w1"), f("w2")})});
    out.push_back({"fullrank dim4", fullrank_dim4()});
    out.push_back({"fullrank dim8 delta0", fullrank_dim8(0)});
    out.push_back({"fullrank dim8 delta1", fullrank_dim8(1)});
    return out;
}

void criterion8(Tally& t) {
    std::mt19937 g(801);
    for (int fam = 1; fam <= 4; ++fam)
        for (int k = 0; k < 5; ++k) {
            auto D = h7_solution_family(fam, random_h7(g));
            std::string at = "h7 family " + std::to_string(fam);
            t(check_conditions(D).all(), at + " conditions");
            t(is_nilpotent(build_cotangent(D).algebra), at + " nilpotent");
        }
    for (const char* id : {"rho0-a", "rho0-b-i", "rho0-b-ii", "rho0-b-iii-0", "rho0-b-iii-1", "fullrank-dim8-delta0",
                           "fullrank-dim8-delta1", "cot-lagrangian-fibration"}) {
        auto r = run_fixture(id);
        t(r && r->pass, std::string(id) + (r ? ": " + r->detail : ""));
    }
}

void criterion9(Tally& t) {
    std::mt19937 g(901);
    for (int k = 0; k < 100; ++k) {
        bool symmetric = k % 2 == 0;
        auto C = random_lagrangian_case(g, 2 * (1 + k % 3), symmetric);
        Subspace L2 = lagrangian_complement(C.Omega, C.J, C.L);
        t(is_lagrangian(C.Omega, L2), "complement is Lagrangian");
        t(L2.invariant_under(C.J), "complement is J-invariant");
        t(L2.intersect(C.L).dim() == 0 && L2.dim() == C.L.dim(), "complement is transverse");
    }
    for (const auto& [name, D] : cotangent_fixtures()) {
        auto B = build_cotangent(D);
        auto j = find_J_lagrangian_ideal(B.algebra, B.structure);
        if (!j) {
            t(false, name + ": no ideal found");
            continue;
        }
        auto R = reconstruct_cotangent_data(B.algebra, B.structure, *j);
        t(R.intertwines && R.commutes_J && R.pulls_back_omega, name + ": round trip");
        auto B2 = build_cotangent(R.data);
        t(invariant_fingerprint(B2.algebra) == invariant_fingerprint(B.algebra), name + ": rebuilt algebra");
    }
}

void criterion10(Tally& t) {
    for (unsigned n = 1; n <= 3; ++n)
        for (unsigned m = 1; m <= 2 * n; ++m)
            for (bool ab : {true, false}) {
                if (!ab && (m == 1 || (n == 1 && m == 2))) continue;
                std::string at = "n=" + std::to_string(n) + " m=" + std::to_string(m) + (ab ? " abelian" : "");
                OxidationData D = steplength_generator(n, m, ab);
                t(validate_oxidation(D).valid, at + " validates");
                auto B = build_oxidation(D);
                t(lower_central_series(B.algebra).step == m, at + " step");
                t(abelian_J_conditions(D).all() == ab, at + " Abelian-J conditions");
                if (ab) {
                    try {
                        t(abelian_J_report(B.algebra, B.structure).all_hold(), at + " Abelian-J report");
                    } catch (const std::exception& e) {
                        t(false, at + " Abelian-J report: " + e.what());
                    }
                }
            }
}

void criterion11(Tally& t) {
    for (unsigned n : {2u, 3u})
        for (unsigned m = 2; m <= 2 * n; m += 2) {
            OxidationData D = steplength_generator(n, m, true);
            DerivedTensors T = derive_tensors(D);
            bool nu_nonzero = std::any_of(T.nu12.begin(), T.nu12.end(), [](const Rat& x) { return x != 0; });
            if (!nu_nonzero) continue;
            DerivedTensors old = T;
            for (auto& x : old.nu12) x /= 2;
            auto B = build_oxidation(D, old);
            bool fails = B.algebra.jacobi_witness().has_value() || !verify_cs(B.algebra, B.structure).verdict;
            t(fails, "uncorrected factor fails for n=" + std::to_string(n) + " m=" + std::to_string(m));
            auto good = build_oxidation(D, T);
            t(verify_cs(good.algebra, good.structure).verdict, "corrected factor verifies");
        }
    t(run_fixture("oxidation-nu-factor").value().pass, "nu factor example");
}

struct Criterion {
    int id;
    const char* title;
    std::function<void(Tally&)> run;
    double limit_s;
};

} // namespace

int main() {
    std::vector<Criterion> all = {
        {1, "non-uniqueness example: both verify, same invariants", criterion1, 1},
        {2, "dimension 4: three parameter regimes, three classes", criterion2, 0},
        {3, "canonical families verify and classify Yes", criterion3, 60},
        {4, "classifier agrees with the independent oracle", criterion4, 0},
        {5, "equivalence moves satisfy their identities", criterion5, 0},
        {6, "lattice family integer data", criterion6, 10},
        {7, "six conditions decide validity of the extension", criterion7, 0},
        {8, "cotangent example families", criterion8, 0},
        {9, "Lagrangian complements and reconstruction round trip", criterion9, 0},
        {10, "oxidation step lengths", criterion10, 0},
        {11, "uncorrected nu factor breaks the oxidation", criterion11, 0},
    };
    bool ok = true;
    for (const auto& c : all) {
        Tally t;
        auto start = std::chrono::steady_clock::now();
        try {
            c.run(t);
        } catch (const std::exception& e) {
            t(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_s > 0 && secs >= c.limit_s) t(false, "time limit exceeded");
        std::ostringstream line;
        line << (t.ok() ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << t.checks
             << " checks, " << std::fixed;
        line.precision(2);
        line << secs << "s)";
        for (std::size_t i = 0; i < t.failed.size() && i < 3; ++i) line << "\n    failed: " << t.failed[i];
        std::cout << line.str() << std::endl;
        ok = ok && t.ok();
    }
    return ok ? 0 : 1;
}
