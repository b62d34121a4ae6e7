#include "cslie/fixtures.hpp"

#include <functional>

namespace cslie {

CSAlgebra nonuniqueness_example(int i) {
    std::vector<Bracket> br;
    if (i == 1)
        br = {{7, 2, 0, 1}, {7, 3, 1, 1}, {7, 6, 4, 1}};
    else if (i == 2)
        br = {{7, 0, 5, -1}, {7, 1, 4, -1}, {7, 6, 3, 1}};
    else
        throw AlgebraError("nonuniqueness_example: index must be 1 or 2");
    return {LieAlgebra(8, br), canonical_J0_omega0(2)};
}

ThmCSParams nonuniqueness_params(int i) {
    ThmCSParams P{QMat(4, 4), 0, 0, 0, QVec(4)};
    if (i == 1) {
        P.fJ(0, 2) = 1;
        P.fJ(1, 3) = 1;
        P.b = 1;
    } else if (i == 2) {
        P.u[3] = 1;
    } else {
        throw AlgebraError("nonuniqueness_params: index must be 1 or 2");
    }
    return P;
}

QMat dim4_f(const Rat& a, const Rat& b, const Rat& c) {
    return QMat::from_rows({{a, 0, b}, {0, a, c}, {0, 0, -a}});
}

namespace {

QMat form4(int i, int j, const Rat& c = 1) {
    QMat m(4, 4);
    m(i - 1, j - 1) = c;
    m(j - 1, i - 1) = -c;
    return m;
}

} // namespace

QMat rho_zero_form(const std::string& name) {
    if (name == "w1") return form4(1, 2);
    if (name == "w2") return form4(3, 4);
    if (name == "w3") return form4(1, 3) + form4(2, 4);
    if (name == "w4") return form4(1, 4) - form4(2, 3);
    if (name == "s1") return form4(1, 3) - form4(2, 4);
    if (name == "s2") return form4(1, 4) + form4(2, 3);
    throw AlgebraError("rho_zero_form: unknown name " + name);
}

std::vector<QMat> rho_zero_case_a(unsigned n) {
    std::vector<QMat> out(2 * n, QMat(2 * n, 2 * n));
    for (unsigned j = 0; j < n; ++j) {
        out[2 * j](2 * j, 2 * j + 1) = 1;
        out[2 * j](2 * j + 1, 2 * j) = -1;
    }
    return out;
}

void rho_zero_solve_constraints(RhoZeroFamily& p) {
    p.c[1] = p.b[3] + p.a[4];
    p.d[1] = p.b[4] - p.a[3];
    p.a[2] = p.c[4] - p.d[3];
    p.b[2] = p.c[3] + p.d[4];
}

std::vector<QMat> rho_zero_family_forms(const RhoZeroFamily& p) {
    QMat w[5] = {QMat(4, 4), rho_zero_form("w1"), rho_zero_form("w2"), rho_zero_form("w3"), rho_zero_form("w4")};
    QMat s1 = rho_zero_form("s1"), s2 = rho_zero_form("s2");
    auto comb = [&](const Rat* x, const Rat& u, const Rat& v) {
        QMat m = u * s1 + v * s2;
        for (int i = 1; i <= 4; ++i) m = m + x[i] * w[i];
        return m;
    };
    return {comb(p.a, p.a[5], p.a[6]), comb(p.b, p.a[6], -p.a[5]), comb(p.c, p.c[5], p.c[6]),
            comb(p.d, p.c[6], -p.c[5])};
}

LieAlgebra direct_sum(const std::vector<LieAlgebra>& parts) {
    std::size_t off = 0, total = 0;
    for (const auto& p : parts) total += p.dim();
    std::vector<Bracket> br;
    for (const auto& p : parts) {
        for (const auto& b : p.brackets()) br.push_back({b.i + off, b.j + off, b.k + off, b.c});
        off += p.dim();
    }
    return LieAlgebra(total, br);
}

namespace {

class Checks {
public:
    void operator()(bool ok, const std::string& what) {
        ++m_count;
        if (!ok) m_failed.push_back(what);
    }
    FixtureOutcome done() const {
        if (m_failed.empty()) return {true, std::to_string(m_count) + " checks passed"};
        std::string d = "failed:";
        for (const auto& f : m_failed) d += " [" + f + "]";
        return {false, d};
    }

private:
    std::size_t m_count = 0;
    std::vector<std::string> m_failed;
};

struct Entry {
    FixtureInfo info;
    std::function<FixtureOutcome()> run;
};

FixtureOutcome run_nonuniqueness(int i) {
    Checks c;
    CSAlgebra g = nonuniqueness_example(i);
    c(verify_cs(g.algebra, g.structure).verdict, "structure verifies");
    c(build_f_from_thm_cs(2, nonuniqueness_params(i)).algebra() == g.algebra, "block-form parameters give the brackets");
    CSAlgebra other = nonuniqueness_example(3 - i);
    c(invariant_fingerprint(g.algebra) == invariant_fingerprint(other.algebra), "fingerprints of both algebras agree");
    QMat f = g.algebra.ad_basis(7).block(0, 0, 7, 7);
    QMat fo = other.algebra.ad_basis(7).block(0, 0, 7, 7);
    c(primary_profiles(f) == primary_profiles(fo), "Jordan data of both derivations agree");
    if (i == 1) {
        Subspace u = Subspace::coordinate(8, {0, 1, 2, 3, 4, 5, 6});
        c(symplectic_orthogonal(g.structure.Omega, u) == Subspace::coordinate(8, {4}), "omega-orthogonal of u is <e5>");
    }
    auto v = classify_existence(f);
    c(v.yes && v.label == "(b)(ii)", "classified as (b)(ii)");
    return c.done();
}

FixtureOutcome run_dim4(int regime) {
    Checks c;
    Rat a = regime == 0 ? 1 : 0, b = regime == 1 ? 1 : 0;
    QMat f = dim4_f(a, b, 0);
    LieAlgebra L = build_semidirect(f);
    c(verify_cs(L, canonical_J0_omega0(1)).verdict, "canonical structure verifies");
    LieAlgebra ref = regime == 0   ? build_semidirect(QMat::diag({1, -1, -1}))
                     : regime == 1 ? parse_salamon("(0,0,12,0)")
                                   : LieAlgebra::abelian(4);
    c(invariant_fingerprint(L) == invariant_fingerprint(ref), "fingerprint matches the reference algebra");
    if (regime == 0) c(!is_unimodular(L), "not unimodular");
    if (regime == 1) {
        c(lower_central_series(L).step == 2u, "2-step nilpotent");
        c(commutator_ideal(L).dim() == 1, "derived algebra is 1-dimensional");
    }
    if (regime == 2) c(L.is_abelian(), "Abelian");
    c(classify_existence(f).yes, "classifier says yes");
    return c.done();
}

FixtureOutcome run_lattice_sweep() {
    Checks c;
    for (long ell = 3; ell <= 10; ++ell)
        for (unsigned n = 2; n <= 4; ++n) {
            auto R = lattice_report(n, ell);
            std::string at = "ell=" + std::to_string(ell) + " m=" + std::to_string(n - 1);
            c(R.q.lead() == 1 && R.q.coeff(0) == -1, at + " q monic with constant -1");
            c(R.distinct_roots, at + " distinct roots");
            c(R.char_matches && R.model_matches, at + " characteristic polynomial");
            c(R.numeric_roots_ok, at + " numeric roots");
        }
    c(build_q(3, 1) == QPoly::from_ints({-1, 4, -4, 1}), "q for ell=3, m=1");
    return c.done();
}

FixtureOutcome run_lattice_classify() {
    Checks c;
    for (unsigned n = 2; n <= 4; ++n) {
        QMat f = lattice_f(n);
        std::string at = "n=" + std::to_string(n);
        c(sp_complex_membership(lattice_block(n - 1, SpForm::Split), SpForm::Split), at + " split-order block in sp");
        auto v = classify_existence(f);
        c(v.yes && v.label == "(b)(i)", at + " case (b)(i)");
        c(uniqueness_hint(f) == Uniqueness::UniqueUpToEquivalence, at + " unique");
        c(verify_cs(build_semidirect(f), canonical_J0_omega0(n)).verdict, at + " canonical structure verifies");
    }
    return c.done();
}

FixtureOutcome run_h7(int family) {
    Checks c;
    H7Params p;
    p.r13 = 1;
    p.r14 = Rat(1, 2);
    p.r15 = -1;
    p.r26 = 2;
    p.r35 = 1;
    p.r36 = -2;
    p.r45 = 3;
    p.r46 = 1;
    if (family == 4) {
        p.cos_t = Rat(3, 5);
        p.sin_t = Rat(4, 5);
    }
    CotangentData D = h7_solution_family(family, p);
    c(check_conditions(D).all(), "conditions 1-6");
    auto B = build_cotangent(D);
    c(!B.algebra.jacobi_witness(), "Jacobi");
    c(verify_cs(B.algebra, B.structure).verdict, "structure verifies");
    c(is_nilpotent(B.algebra), "nilpotent");
    auto j = find_J_lagrangian_ideal(B.algebra, B.structure);
    c(j.has_value(), "J-invariant Lagrangian ideal found");
    if (j) {
        auto R = reconstruct_cotangent_data(B.algebra, B.structure, *j);
        c(R.intertwines && R.commutes_J && R.pulls_back_omega, "reconstruction round-trip");
    }
    return c.done();
}

FixtureOutcome run_fibration() {
    Checks c;
    auto B = build_cotangent(h7_solution_family(3, H7Params{}));
    QMat P(12, 12);
    for (std::size_t i = 0; i < 6; ++i) {
        P(6 + i, i) = 1;
        P(i, 6 + i) = 1;
    }
    LieAlgebra L = B.algebra.change_basis(P);
    c(print_salamon(L) == "(0^3,1.2,1.3,2.3,2.10+3.11,2.9+3.12,0^4)", "structure equations");
    c(lower_central_series(L).step == 2u, "2-step nilpotent");
    c(verify_cs(B.algebra, B.structure).verdict, "structure verifies");
    return c.done();
}

FixtureOutcome run_rho_zero(const std::string& which) {
    Checks c;
    auto f = [](const char* n) { return rho_zero_form(n); };
    QMat Z(4, 4);
    std::vector<QMat> forms;
    bool abelian = true;
    if (which == "a") {
        for (unsigned n = 1; n <= 3; ++n) {
            auto D = rho_zero_builder(2 * n, rho_zero_case_a(n));
            auto B = build_cotangent(D);
            std::vector<LieAlgebra> parts(n, parse_salamon("(0,0,12,0)"));
            std::string at = "n=" + std::to_string(n);
            c(invariant_fingerprint(B.algebra) == invariant_fingerprint(direct_sum(parts)), at + " fingerprint");
            c(is_abelian_J(B.algebra, B.structure.J), at + " Abelian J");
            c(verify_cs(B.algebra, B.structure).verdict, at + " structure verifies");
        }
        return c.done();
    }
    if (which == "b-general") {
        for (int s = 0; s < 5; ++s) {
            RhoZeroFamily p;
            for (int i = 1; i <= 6; ++i) {
                p.a[i] = Rat((i * 7 + s * 3) % 5 - 2, 1 + s);
                p.a[i].canonicalize();
                p.c[i] = p.a[i];
            }
            for (int i = 1; i <= 4; ++i) p.b[i] = p.d[i] = Rat((i * 3 + s) % 4 - 1);
            rho_zero_solve_constraints(p);
            auto D = rho_zero_builder(4, rho_zero_family_forms(p));
            c(check_conditions(D).all(), "draw " + std::to_string(s) + " passes");
            p.c[1] += 1;
            bool threw = false;
            try {
                rho_zero_builder(4, rho_zero_family_forms(p));
            } catch (const AlgebraError&) {
                threw = true;
            }
            c(threw, "draw " + std::to_string(s) + " with a broken constraint is rejected");
        }
        return c.done();
    }
    if (which == "b-i" || which == "b-ii") {
        forms = {f("s1"), -f("s2"), which == "b-ii" ? f("w2") : Z, Z};
        abelian = false;
    } else if (which == "b-iii-0" || which == "b-iii-1") {
        forms = {f("w4"), f("w3"), Rat(2) * f("w1"), which == "b-iii-1" ? f("w2") : Z};
    } else {
        throw AlgebraError("unknown rho = 0 case");
    }
    auto D = rho_zero_builder(4, forms);
    auto B = build_cotangent(D);
    c(check_conditions(D).all(), "conditions 1-6");
    c(verify_cs(B.algebra, B.structure).verdict, "structure verifies");
    c(abelian_parallelizable_criteria(D).abelian == abelian, abelian ? "Abelian J" : "non-Abelian J");
    c(is_abelian_J(B.algebra, B.structure.J) == abelian, "direct check agrees");
    c(lower_central_series(B.algebra).step == 2u, "2-step nilpotent");
    if (which == "b-i") {
        LieAlgebra ref = direct_sum({parse_salamon("(0,0,0,0,13-24,14+23)"), LieAlgebra::abelian(2)});
        c(invariant_fingerprint(B.algebra) == invariant_fingerprint(ref), "fingerprint of h3(C) + R^2");
    }
    return c.done();
}

// Basis (e_1..e_k, e^1, -e^2, e^3, -e^4, ...) of the built algebra.
QMat display_basis(std::size_t k) {
    QMat P(2 * k, 2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        P(k + i, i) = 1;
        P(i, k + i) = i % 2 ? -1 : 1;
    }
    return P;
}

FixtureOutcome run_fullrank(int which) {
    Checks c;
    CotangentData D = which < 0 ? fullrank_dim4() : fullrank_dim8(which);
    std::size_t k = D.dim();
    auto T = fullrank_rho_toolkit(D);
    c(T.full_rank && T.symmetric && T.cubic_symmetric && T.j_anti_invariant, "rho-hat properties");
    c(T.identity_element && T.j_element_acts_as_J, "identity element and its J-image");
    c(check_conditions(D).all(), "conditions 1-6");
    auto B = build_cotangent(D);
    c(verify_cs(B.algebra, B.structure).verdict, "structure verifies");
    QMat P = display_basis(k);
    LieAlgebra L = B.algebra.change_basis(P);
    std::string expect = which < 0    ? "(0^2,-13+24,-14-23)"
                         : which == 0 ? "(0^4,-15+26-37+48,-16-25-38-47,-17+28,-18-27)"
                                      : "(0^4,-15+26-37+48,-16-25-38-47,-17+28-35+46,-18-27-36-45)";
    c(print_salamon(L) == expect, "structure equations");
    std::size_t N = 2 * k;
    QMat Jd(N, N), Wd(N, N);
    for (std::size_t i = 0; i < N; i += 2) {
        Jd(i + 1, i) = 1;
        Jd(i, i + 1) = -1;
    }
    for (std::size_t i = 0; i < k; ++i) {
        Rat s = i % 2 ? -1 : 1;
        Wd(i, k + i) = s;
        Wd(k + i, i) = -s;
    }
    c(*inverse(P) * B.structure.J * P == Jd, "complex structure in the reference basis");
    QMat Wp = P.transpose() * B.structure.Omega * P;
    c(Wp == Wd || Wp == -Wd, "symplectic form in the reference basis up to sign");
    c(derived_series(B.algebra).step == 2u, "2-step solvable");
    return c.done();
}

FixtureOutcome run_steplength(unsigned n, unsigned m, bool ab) {
    Checks c;
    OxidationData D = steplength_generator(n, m, ab);
    auto V = validate_oxidation(D);
    c(V.valid, "oxidation data valid");
    auto B = build_oxidation(D);
    c(lower_central_series(B.algebra).step == m, "nilpotency step");
    c(abelian_J_conditions(D).all() == ab, "Abelian-J conditions match the flag");
    c(is_abelian_J(B.algebra, B.structure.J) == ab, "direct Abelian-J check matches");
    if (ab && m > 1) c(abelian_J_report(B.algebra, B.structure).all_hold(), "Abelian-J structure report");
    return c.done();
}

FixtureOutcome run_step2_brackets() {
    Checks c;
    auto nab = build_oxidation(steplength_generator(2, 2, false)).algebra;
    auto ab = build_oxidation(steplength_generator(2, 2, true)).algebra;
    // basis v1 v2 e1 e2 e3 e4 v^1 v^2
    LieAlgebra nab_ref(8, {{0, 2, 4, 1}, {0, 2, 7, 1}, {0, 3, 5, 1}, {0, 3, 6, -1}, {1, 2, 6, 1}, {1, 3, 7, 1}});
    LieAlgebra ab_ref(8, {{0, 2, 4, 1},
                          {0, 2, 7, 1},
                          {1, 3, 4, -1},
                          {1, 3, 7, -1},
                          {0, 3, 5, 1},
                          {0, 3, 6, 1},
                          {1, 2, 5, 1},
                          {1, 2, 6, 1},
                          {0, 1, 6, 1},
                          {2, 3, 4, 1}});
    c(nab == nab_ref, "non-Abelian step-2 brackets");
    c(ab == ab_ref, "Abelian step-2 brackets");
    return c.done();
}

FixtureOutcome run_nu_factor() {
    Checks c;
    for (unsigned n = 2; n <= 3; ++n) {
        OxidationData D = steplength_generator(n, 2 * n, true);
        DerivedTensors T = derive_tensors(D);
        c(validate_oxidation(D).valid, "corrected factor validates");
        for (auto& x : T.nu12) x /= 2;
        for (auto& x : T.A12) x /= 2;
        auto B = build_oxidation(D, T);
        bool fails = B.algebra.jacobi_witness().has_value() || !verify_cs(B.algebra, B.structure).verdict;
        c(fails, "uncorrected factor rejected at n=" + std::to_string(n));
    }
    return c.done();
}

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = [] {
        std::vector<Entry> e;
        e.push_back({{"ex-nonuniqueness-g1", "first of two almost Abelian structures on one algebra"},
                     [] { return run_nonuniqueness(1); }});
        e.push_back({{"ex-nonuniqueness-g2", "second of two almost Abelian structures on one algebra"},
                     [] { return run_nonuniqueness(2); }});
        e.push_back({{"dim4-nonunimodular", "dimension 4, a != 0: r4,-1,-1"}, [] { return run_dim4(0); }});
        e.push_back({{"dim4-rh3", "dimension 4, a = 0, (b,c) != 0: rh3"}, [] { return run_dim4(1); }});
        e.push_back({{"dim4-abelian", "dimension 4, a = b = c = 0: R^4"}, [] { return run_dim4(2); }});
        e.push_back({{"lattice-sweep", "integer lattice data for ell 3..10, m 1..3"}, run_lattice_sweep});
        e.push_back({{"lattice-classify", "diagonal sp block padded with zeros is case (b)(i), unique"},
                     run_lattice_classify});
        for (int k = 1; k <= 4; ++k)
            e.push_back({{"cot-h7-family-" + std::to_string(k), "h7 cotangent solution family " + std::to_string(k)},
                         [k] { return run_h7(k); }});
        e.push_back({{"cot-lagrangian-fibration", "12-dimensional nilpotent example over h7"}, run_fibration});
        for (std::string w : {"a", "b-general", "b-i", "b-ii", "b-iii-0", "b-iii-1"})
            e.push_back({{"rho0-" + w, "rho = 0 cotangent example " + w}, [w] { return run_rho_zero(w); }});
        e.push_back({{"fullrank-dim4", "full-rank rho-hat on R^2"}, [] { return run_fullrank(-1); }});
        e.push_back({{"fullrank-dim8-delta0", "full-rank rho-hat on R^4, delta = 0"}, [] { return run_fullrank(0); }});
        e.push_back({{"fullrank-dim8-delta1", "full-rank rho-hat on R^4, delta = 1"}, [] { return run_fullrank(1); }});
        for (unsigned n = 1; n <= 3; ++n)
            for (unsigned m = 1; m <= 2 * n; ++m)
                for (bool ab : {true, false}) {
                    if (!ab && (m == 1 || (n == 1 && m == 2))) continue;
                    std::string id = "steplength-n" + std::to_string(n) + "-m" + std::to_string(m) +
                                     (ab ? "-abelian" : "-nonabelian");
                    e.push_back({{id, "oxidation example of nilpotency step " + std::to_string(m)},
                                 [n, m, ab] { return run_steplength(n, m, ab); }});
                }
        e.push_back({{"oxidation-step2-brackets", "brackets of both step-2 oxidation examples"},
                     run_step2_brackets});
        e.push_back({{"oxidation-nu-factor", "the uncorrected nu factor breaks the construction"}, run_nu_factor});
        return e;
    }();
    return entries;
}

} // namespace

std::vector<FixtureInfo> list_fixtures() {
    std::vector<FixtureInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
}

std::optional<FixtureOutcome> run_fixture(const std::string& id) {
    for (const auto& e : registry())
        if (e.info.id == id) {
            try {
                return e.run();
            } catch (const std::exception& ex) {
                return FixtureOutcome{false, std::string("threw: ") + ex.what()};
            }
        }
    return std::nullopt;
}

} // namespace cslie
