#include "cslie/jsonio.hpp"

#include <limits>

namespace cslie {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::size_t index_from_json(const Json& j) {
    if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError("index must be a non-negative integer");
    return j.get<std::size_t>();
}

} // namespace

Json to_json(const Rat& r) { return rat_str(r); }

Rat rat_from_json(const Json& j) {
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const std::exception&) {
            throw InputError("not a rational: \"" + j.get<std::string>() + "\"");
        }
    }
    if (j.is_number_integer()) return Rat(j.get<long>());
    throw InputError("rational must be a string \"p/q\" or an integer");
}

Json to_json(const QVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

QVec vec_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("vector must be an array");
    QVec v;
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

Json to_json(const QMat& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

QMat mat_from_json(const Json& j) {
    if (!j.is_array()) throw InputError("matrix must be an array of rows");
    std::vector<std::vector<Rat>> rows;
    for (const auto& r : j) rows.push_back(vec_from_json(r));
    for (const auto& r : rows)
        if (r.size() != rows.front().size()) throw InputError("matrix rows have different lengths");
    if (rows.empty()) return QMat(0, 0);
    return QMat::from_rows(rows);
}

Json int_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Json to_json(const LieAlgebra& L) {
    Json br = Json::array();
    for (const auto& b : L.brackets()) br.push_back({{"i", b.i}, {"j", b.j}, {"k", b.k}, {"c", to_json(b.c)}});
    return {{"dim", L.dim()}, {"brackets", br}};
}

LieAlgebra algebra_from_json(const Json& j, bool check_jacobi) {
    std::size_t dim = index_from_json(field(j, "dim"));
    std::vector<Bracket> br;
    if (j.contains("brackets")) {
        if (!j.at("brackets").is_array()) throw InputError("\"brackets\" must be an array");
        for (const auto& b : j.at("brackets")) {
            Bracket x{index_from_json(field(b, "i")), index_from_json(field(b, "j")), index_from_json(field(b, "k")),
                      rat_from_json(field(b, "c"))};
            if (x.i >= dim || x.j >= dim || x.k >= dim) throw InputError("bracket index out of range");
            br.push_back(x);
        }
    }
    return LieAlgebra(dim, br, check_jacobi);
}

Json to_json(const CSStructure& S) { return {{"J", to_json(S.J)}, {"Omega", to_json(S.Omega)}}; }

CSStructure structure_from_json(const Json& j) {
    CSStructure S{mat_from_json(field(j, "J")), mat_from_json(field(j, "Omega"))};
    if (!S.J.square() || S.J.rows() != S.Omega.rows() || !S.Omega.square())
        throw InputError("J and Omega must be square of the same size");
    return S;
}

Json to_json(const CotangentData& D) {
    Json rho = Json::array(), alpha = Json::array();
    for (const auto& m : D.rho) rho.push_back(to_json(m));
    for (std::size_t i = 0; i < D.dim(); ++i)
        for (std::size_t j = i + 1; j < D.dim(); ++j) {
            const QVec& a = D.alpha_at(i, j);
            bool zero = true;
            for (const auto& x : a)
                if (x != 0) zero = false;
            if (!zero) alpha.push_back({{"i", i}, {"j", j}, {"covector", to_json(a)}});
        }
    return {{"h", to_json(D.h)}, {"J", to_json(D.J)}, {"rho", rho}, {"alpha", alpha}};
}

CotangentData cotangent_from_json(const Json& j) {
    CotangentData D = trivial_cotangent(algebra_from_json(field(j, "h")), mat_from_json(field(j, "J")));
    std::size_t d = D.dim();
    if (D.J.rows() != d || D.J.cols() != d) throw InputError("J has the wrong size");
    if (j.contains("rho")) {
        const Json& r = j.at("rho");
        if (!r.is_array() || r.size() != d) throw InputError("\"rho\" must list one matrix per basis vector");
        for (std::size_t i = 0; i < d; ++i) {
            D.rho[i] = mat_from_json(r[i]);
            if (D.rho[i].rows() != d || D.rho[i].cols() != d) throw InputError("rho matrix has the wrong size");
        }
    }
    if (j.contains("alpha")) {
        for (const auto& a : j.at("alpha")) {
            std::size_t p = index_from_json(field(a, "i")), q = index_from_json(field(a, "j"));
            QVec v = vec_from_json(field(a, "covector"));
            if (p >= d || q >= d || p == q || v.size() != d) throw InputError("bad alpha entry");
            D.set_alpha(p, q, v);
        }
    }
    return D;
}

Json to_json(const OxidationData& D) {
    return {{"base", to_json(D.base)}, {"structure", to_json(D.base_structure)},
            {"f1", to_json(D.f1)},     {"f2", to_json(D.f2)},
            {"S11", to_json(D.S11)},   {"S12", to_json(D.S12)},
            {"S22", to_json(D.S22)},   {"tau12", to_json(D.tau12)}};
}

OxidationData oxidation_from_json(const Json& j) {
    OxidationData D;
    D.base = algebra_from_json(field(j, "base"));
    D.base_structure = structure_from_json(field(j, "structure"));
    std::size_t d = D.base.dim();
    auto mat = [&](const char* k) { return j.contains(k) ? mat_from_json(j.at(k)) : QMat(d, d); };
    auto vec = [&](const char* k, std::size_t n) { return j.contains(k) ? vec_from_json(j.at(k)) : QVec(n); };
    D.f1 = mat("f1");
    D.f2 = mat("f2");
    if (d == 0) D.f1 = D.f2 = QMat(0, 0);
    D.S11 = vec("S11", d);
    D.S12 = vec("S12", d);
    D.S22 = vec("S22", d);
    D.tau12 = vec("tau12", 2);
    return D;
}

Json to_json(const VerifyReport& r) {
    Json j{{"almost_complex", r.almost_complex}, {"integrable", r.integrable}, {"closed", r.closed},
           {"nondegenerate", r.nondegenerate}, {"J_symmetric", r.J_symmetric}, {"verdict", r.verdict}};
    j["nijenhuis_witness"] = r.nijenhuis_witness ? Json(*r.nijenhuis_witness) : Json(nullptr);
    j["closure_witness"] = r.closure_witness ? Json(*r.closure_witness) : Json(nullptr);
    j["failures"] = r.failures;
    return j;
}

Json to_json(const ConditionReport& r) {
    auto c = [](const ConditionResult& x) { return Json{{"ok", x.ok}, {"witness", x.witness}}; };
    return {{"c1_cocycle", c(r.c1_cocycle)},     {"c2_morphism", c(r.c2_morphism)},
            {"c3_bianchi", c(r.c3_bianchi)},     {"c4_alpha_type", c(r.c4_alpha_type)},
            {"c5_rho_omega", c(r.c5_rho_omega)}, {"c6_rho_type", c(r.c6_rho_type)},
            {"all", r.all()}};
}

Json to_json(const Fingerprint& f) {
    Json prof = Json::array();
    for (const auto& p : f.generic_ad_profile)
        prof.push_back({{"degree", p.degree},
                        {"real_roots", p.roots.n_real},
                        {"imaginary_pairs", p.roots.n_imag_pairs},
                        {"generic_pairs", p.roots.n_generic_pairs},
                        {"zero", p.roots.is_zero},
                        {"blocks", p.block_sizes}});
    return {{"dim", f.dim},
            {"lower_central_dims", f.lower_central_dims},
            {"derived_dims", f.derived_dims},
            {"center_dim", f.center_dim},
            {"unimodular", f.unimodular},
            {"generic_ad_profile", prof}};
}

Json to_json(const LatticeReport& r) {
    Json q = Json::array(), a = Json::array();
    for (const auto& c : r.q.coeffs()) q.push_back(int_to_json(c.get_num()));
    for (const auto& x : r.a_seq) a.push_back(int_to_json(x));
    auto imat = [](const QMat& m) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            Json row = Json::array();
            for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(int_to_json(m(i, k).get_num()));
            rows.push_back(row);
        }
        return rows;
    };
    return {{"n", r.n},
            {"ell", r.ell},
            {"q", q},
            {"a", a},
            {"Bq", imat(r.Bq)},
            {"Bl", imat(r.Bl)},
            {"t_ell", r.t_ell_approx},
            {"distinct_roots", r.distinct_roots},
            {"char_matches", r.char_matches},
            {"model_matches", r.model_matches},
            {"numeric_roots_ok", r.numeric_roots_ok}};
}

Json to_json(const OxidationValidation& v) {
    Json j{{"shape_ok", v.shape_ok}, {"jacobi", v.jacobi}, {"jacobi_witness", v.jacobi_witness},
           {"cs", to_json(v.cs)}, {"f_difference_in_sp", v.f_difference_in_sp}};
    j["alt_S_f"] = v.alt_S_f ? Json(*v.alt_S_f) : Json(nullptr);
    j["valid"] = v.valid;
    return j;
}

Json classification_json(const QMat& f) {
    ExistenceVerdict v = classify_existence(f);
    Json j{{"exists", v.yes}, {"case", v.label}};
    j["unique"] = v.yes ? Json(uniqueness_hint(f) == Uniqueness::UniqueUpToEquivalence) : Json(nullptr);
    return j;
}

} // namespace cslie
