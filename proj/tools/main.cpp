// Command-line front end: verification, classification, builders and the example runner.
#include "cslie/fixtures.hpp"
#include "cslie/jsonio.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace cslie;

namespace {

constexpr int kOk = 0, kNegative = 1, kInputError = 2;

// A value starting with '{' or '[' is inline JSON; anything else is a file path.
Json load_json(const std::string& arg) {
    std::string text = arg;
    auto first = arg.find_first_not_of(" \t\n");
    if (first == std::string::npos || (arg[first] != '{' && arg[first] != '[')) {
        std::ifstream in(arg);
        if (!in) throw InputError("cannot open " + arg);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

// Salamon strings such as "(0,0,12)" are accepted in place of algebra JSON.
LieAlgebra load_algebra(const std::string& arg) {
    auto first = arg.find_first_not_of(" \t");
    if (first != std::string::npos && arg[first] == '(') return parse_salamon(arg);
    return algebra_from_json(load_json(arg));
}

void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            render_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array() && !j.empty() && j.front().is_object()) {
        for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
    } else {
        out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

struct Options {
    std::string algebra, structure, f, data, inner, format = "json", id;
    unsigned n = 0, family = 1, index = 0;
    long ell = 0;
    std::string b = "0", c = "0";
    unsigned long seed = 0;
    bool strict = false;
    std::vector<std::string> batch;
};

void emit(const Json& j, const Options& o) {
    if (o.format == "text")
        render_text(j, "", std::cout);
    else
        std::cout << j.dump(2) << "\n";
}

void require(const std::string& value, const char* flag) {
    if (value.empty()) throw InputError(std::string(flag) + " is required");
}

int cmd_verify(const Options& o) {
    require(o.algebra, "--algebra");
    require(o.structure, "--structure");
    LieAlgebra L = load_algebra(o.algebra);
    CSStructure S = structure_from_json(load_json(o.structure));
    if (S.J.rows() != L.dim()) throw InputError("structure size does not match the algebra");
    VerifyReport r = verify_cs(L, S);
    emit(to_json(r), o);
    return o.strict && !r.verdict ? kNegative : kOk;
}

QMat load_f(const std::string& arg) {
    QMat f = mat_from_json(load_json(arg));
    if (!f.square() || f.rows() % 4 != 3) throw InputError("f must be square of size 4n-1");
    return f;
}

int cmd_classify(const Options& o) {
    std::vector<std::string> inputs = o.batch;
    if (!o.f.empty()) inputs.insert(inputs.begin(), o.f);
    if (inputs.empty()) throw InputError("--f or --batch is required");
    std::vector<QMat> fs;
    for (const auto& in : inputs) fs.push_back(load_f(in));
    Json out = Json::array();
    bool all_yes = true;
    for (const auto& f : fs) {
        Json j = classification_json(f);
        all_yes = all_yes && j["exists"].get<bool>();
        out.push_back(j);
    }
    emit(o.batch.empty() ? out[0] : out, o);
    return o.strict && !all_yes ? kNegative : kOk;
}

Json algebra_block(const LieAlgebra& L) {
    return {{"algebra", to_json(L)}, {"salamon", print_salamon(L)}};
}

int cmd_build_semidirect(const Options& o) {
    require(o.f, "--f");
    QMat f = load_f(o.f);
    LieAlgebra L = build_semidirect(f);
    Json j = algebra_block(L);
    if (auto jw = L.jacobi_witness()) {
        j["jacobi"] = false;
        emit(j, o);
        return o.strict ? kNegative : kOk;
    }
    unsigned n = static_cast<unsigned>((f.rows() + 1) / 4);
    CSStructure S = canonical_J0_omega0(n);
    j["jacobi"] = true;
    j["structure"] = to_json(S);
    j["verify"] = to_json(verify_cs(L, S));
    j["classification"] = classification_json(f);
    emit(j, o);
    return o.strict && !j["verify"]["verdict"].get<bool>() ? kNegative : kOk;
}

int cmd_build_cotangent(const Options& o) {
    require(o.data, "--data");
    CotangentData D = cotangent_from_json(load_json(o.data));
    auto B = build_cotangent(D);
    ConditionReport R = check_conditions(D);
    Json j = algebra_block(B.algebra);
    j["structure"] = to_json(B.structure);
    j["conditions"] = to_json(R);
    emit(j, o);
    return o.strict && !R.all() ? kNegative : kOk;
}

int cmd_build_oxidation(const Options& o) {
    require(o.data, "--data");
    OxidationData D = oxidation_from_json(load_json(o.data));
    auto V = validate_oxidation(D);
    auto B = build_oxidation(D);
    Json j = algebra_block(B.algebra);
    j["structure"] = to_json(B.structure);
    j["validation"] = to_json(V);
    j["abelian_J_conditions"] = abelian_J_conditions(D).all();
    emit(j, o);
    return o.strict && !V.valid ? kNegative : kOk;
}

int cmd_build_family(const Options& o) {
    if (o.n < 1) throw InputError("--n must be at least 1");
    if (o.family < 1 || o.family > 5) throw InputError("--family must be 1..5");
    CanonicalFParams P;
    P.family = static_cast<Family>(o.family);
    P.index = o.index;
    P.b = parse_rat(o.b);
    P.c = parse_rat(o.c);
    unsigned size = family_inner_size(o.n, P.family, o.index);
    P.inner = o.inner.empty() ? QMat(size, size) : mat_from_json(load_json(o.inner));
    AlmostAbelianAlg A = canonical_family_build(o.n, P);
    LieAlgebra L = A.algebra();
    CSStructure S = canonical_J0_omega0(o.n);
    Json j = algebra_block(L);
    j["family"] = family_name(P.family);
    j["f"] = to_json(A.f);
    j["structure"] = to_json(S);
    j["verify"] = to_json(verify_cs(L, S));
    j["classification"] = classification_json(A.f);
    emit(j, o);
    return o.strict && !j["verify"]["verdict"].get<bool>() ? kNegative : kOk;
}

int cmd_build_lattice(const Options& o) {
    if (o.n < 2) throw InputError("--n must be at least 2");
    if (o.ell < 3) throw InputError("--ell must be at least 3");
    LatticeReport R = lattice_report(o.n, o.ell);
    emit(to_json(R), o);
    bool ok = R.distinct_roots && R.char_matches && R.model_matches;
    return o.strict && !ok ? kNegative : kOk;
}

int cmd_fingerprint(const Options& o) {
    require(o.algebra, "--algebra");
    LieAlgebra L = load_algebra(o.algebra);
    emit(to_json(invariant_fingerprint(L, o.seed)), o);
    return kOk;
}

int cmd_examples_list(const Options& o) {
    Json out = Json::array();
    for (const auto& f : list_fixtures()) out.push_back({{"id", f.id}, {"summary", f.summary}});
    emit(out, o);
    return kOk;
}

int cmd_examples_run(const Options& o) {
    std::vector<std::string> ids;
    if (o.id.empty())
        for (const auto& f : list_fixtures()) ids.push_back(f.id);
    else
        ids.push_back(o.id);
    Json out = Json::array();
    bool all = true;
    for (const auto& id : ids) {
        auto r = run_fixture(id);
        if (!r) throw InputError("unknown example id " + id);
        all = all && r->pass;
        out.push_back({{"id", id}, {"pass", r->pass}, {"detail", r->detail}});
    }
    if (o.format == "text") {
        for (const auto& r : out)
            std::cout << (r["pass"].get<bool>() ? "PASS " : "FAIL ") << r["id"].get<std::string>() << "  "
                      << r["detail"].get<std::string>() << "\n";
    } else {
        std::cout << (o.id.empty() ? out : out[0]).dump(2) << "\n";
    }
    return o.strict && !all ? kNegative : kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Complex symplectic structures on Lie algebras"};
    app.require_subcommand(1);
    Options o;
    auto fmt = [&o](CLI::App* a) {
        a->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
        a->add_flag("--strict", o.strict, "Exit 1 on a negative verdict");
    };

    auto* verify = app.add_subcommand("verify", "Check a complex symplectic structure");
    verify->add_option("--algebra", o.algebra, "Algebra JSON file, inline JSON or Salamon string");
    verify->add_option("--structure", o.structure, "Structure JSON {J, Omega}");
    fmt(verify);

    auto* classify = app.add_subcommand("classify", "Decide existence for an almost Abelian derivation");
    classify->add_option("--f", o.f, "Matrix JSON of size 4n-1");
    classify->add_option("--batch", o.batch, "Several matrix files; reports in input order");
    fmt(classify);

    auto* build = app.add_subcommand("build", "Construct an algebra with its structure");
    build->require_subcommand(1);
    auto* semi = build->add_subcommand("semidirect", "R^{4n-1} x_f R with the canonical structure");
    semi->add_option("--f", o.f, "Matrix JSON of size 4n-1");
    fmt(semi);
    auto* cot = build->add_subcommand("cotangent", "Cotangent extension from (h, J, rho, alpha)");
    cot->add_option("--data", o.data, "Cotangent data JSON");
    fmt(cot);
    auto* oxi = build->add_subcommand("oxidation", "Oxidation of a base algebra");
    oxi->add_option("--data", o.data, "Oxidation data JSON");
    fmt(oxi);
    auto* fam = build->add_subcommand("canonical-family", "Member of one of the five canonical families");
    fam->add_option("--n", o.n, "Quaternionic dimension n (algebra of dimension 4n)");
    fam->add_option("--family", o.family, "Family number 1..5");
    fam->add_option("--index", o.index, "Jordan block parameter for families 3..5");
    fam->add_option("--b", o.b, "Parameter b (family 2)");
    fam->add_option("--c", o.c, "Parameter c (family 2)");
    fam->add_option("--inner", o.inner, "Inner sp block as matrix JSON (default zero)");
    fmt(fam);
    auto* lat = build->add_subcommand("lattice", "Integer lattice data");
    lat->add_option("--n", o.n, "n >= 2");
    lat->add_option("--ell", o.ell, "ell >= 3");
    fmt(lat);

    auto* ex = app.add_subcommand("examples", "Worked examples");
    ex->require_subcommand(1);
    auto* exl = ex->add_subcommand("list", "List example ids");
    fmt(exl);
    auto* exr = ex->add_subcommand("run", "Run one example, or all when no id is given");
    exr->add_option("id", o.id, "Example id");
    fmt(exr);

    auto* fp = app.add_subcommand("fingerprint", "Isomorphism invariants of an algebra");
    fp->add_option("--algebra", o.algebra, "Algebra JSON file, inline JSON or Salamon string");
    fp->add_option("--seed", o.seed, "Seed for the generic element");
    fmt(fp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    try {
        if (*verify) return cmd_verify(o);
        if (*classify) return cmd_classify(o);
        if (*semi) return cmd_build_semidirect(o);
        if (*cot) return cmd_build_cotangent(o);
        if (*oxi) return cmd_build_oxidation(o);
        if (*fam) return cmd_build_family(o);
        if (*lat) return cmd_build_lattice(o);
        if (*exl) return cmd_examples_list(o);
        if (*exr) return cmd_examples_run(o);
        if (*fp) return cmd_fingerprint(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
