// Worked examples with known answers, addressable by id.
#pragma once

#include "cslie/cotangent.hpp"
#include "cslie/lattice.hpp"
#include "cslie/oxidation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cslie {

struct CSAlgebra {
    LieAlgebra algebra;
    CSStructure structure;
};

/// The two 8-dimensional almost Abelian examples (i = 1, 2) from their bracket tables.
CSAlgebra nonuniqueness_example(int i);
/// Their block-form parameters.
ThmCSParams nonuniqueness_params(int i);

/// [[a,0,b],[0,a,c],[0,0,-a]].
QMat dim4_f(const Rat& a, const Rat& b, const Rat& c);

/// Named 2-forms on R^4 used by the rho = 0 examples: w1..w4, s1, s2.
QMat rho_zero_form(const std::string& name);
/// alpha_{2j-1} = e^{2j-1} ^ e^{2j}, alpha_{2j} = 0 on R^{2n}.
std::vector<QMat> rho_zero_case_a(unsigned n);

/// Parameters of the general n = 2 family; c1, d1, a2, b2 are solved from the others.
struct RhoZeroFamily {
    Rat a[7], b[5], c[7], d[5];  // 1-based
};
void rho_zero_solve_constraints(RhoZeroFamily& p);
std::vector<QMat> rho_zero_family_forms(const RhoZeroFamily& p);

LieAlgebra direct_sum(const std::vector<LieAlgebra>& parts);

struct FixtureOutcome {
    bool pass = false;
    std::string detail;
};

struct FixtureInfo {
    std::string id;
    std::string summary;
};

std::vector<FixtureInfo> list_fixtures();
/// nullopt for an unknown id.
std::optional<FixtureOutcome> run_fixture(const std::string& id);

} // namespace cslie
