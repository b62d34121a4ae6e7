// Complex symplectic oxidation: g = V + gbar + V* built from data on a (4n-4)-dimensional base.
#pragma once

#include "cslie/csgeom.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cslie {

/// Covectors on gbar are coordinate vectors in the dual basis; tau12 = tau(v1, v2) in the basis (v^1, v^2).
struct OxidationData {
    LieAlgebra base;
    CSStructure base_structure;
    QMat f1, f2;
    QVec S11, S12, S22;
    QVec tau12;
};

struct DerivedTensors {
    QVec A12;
    QVec nu12;
    /// beta[k] is the matrix of the v^k component of beta.
    QMat beta[2];
};

DerivedTensors derive_tensors(const OxidationData& D);

/// Data on the zero base: only tau12 can be nonzero.
OxidationData oxidation_over_zero(const QVec& tau12);

/// All tensors zero over the given base.
OxidationData trivial_oxidation(const LieAlgebra& base, const CSStructure& structure);

/// Basis (v1, v2, base basis, v^1, v^2); J = I + Jbar + I* with I v1 = v2.
struct OxidationBuild {
    LieAlgebra algebra;
    CSStructure structure;
};
OxidationBuild build_oxidation(const OxidationData& D);
/// Same with explicitly supplied tensors (used to exercise alternative nu factors).
OxidationBuild build_oxidation(const OxidationData& D, const DerivedTensors& T);

struct OxidationValidation {
    bool shape_ok = false;
    bool jacobi = false;
    std::string jacobi_witness;
    VerifyReport cs;
    bool f_difference_in_sp = false;
    /// Only decided when nu12 = 0: S12 f1 = S11 f2 and S12 f2 = S22 f1.
    std::optional<bool> alt_S_f;
    bool valid = false;
};
OxidationValidation validate_oxidation(const OxidationData& D);

/// A in sp(V, J, omega): commutes with J and A^T W + W A = 0.
bool in_sp(const QMat& A, const CSStructure& S);

struct AbelianJConditions {
    bool base_abelian = false;
    bool f_invariant_parts = false;       // f2^J = -J f1^J
    bool f_anti_invariant_parts = false;  // f2^{-J} = J f1^{-J}
    bool f1_invariant_in_sp = false;
    bool f2_invariant_in_sp = false;
    bool S12_relation = false;
    bool all() const;
};
AbelianJConditions abelian_J_conditions(const OxidationData& D);

/// The step-length examples; throws AlgebraError outside the parameter range.
OxidationData steplength_generator(unsigned n, unsigned m, bool abelian);

/// Carries D along an isomorphism phi: base -> new_base of complex symplectic algebras (columns = images).
OxidationData transport_oxidation(const OxidationData& D, const QMat& phi, const LieAlgebra& new_base,
                                  const CSStructure& new_structure);

struct IterationResult {
    LieAlgebra algebra;
    CSStructure structure;
    std::vector<OxidationValidation> stages;
    bool every_stage_abelian = true;
    bool final_abelian_J = false;
};

/// Stage k must have a base equal to the output of stage k-1 (the first stage a zero base).
IterationResult iterate_oxidation(const std::vector<OxidationData>& stages);

} // namespace cslie
