// Cotangent extensions h* + h with the pairing form and the lifted complex structure.
#pragma once

#include "cslie/csgeom.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cslie {

/// rho[i] is the matrix of rho(e_i) on h* in the dual coframe: column c holds rho(e_i)(e^c).
/// alpha[i * dim + j] is the covector alpha(e_i, e_j).
struct CotangentData {
    LieAlgebra h;
    QMat J;
    std::vector<QMat> rho;
    std::vector<QVec> alpha;

    std::size_t dim() const { return h.dim(); }
    const QVec& alpha_at(std::size_t i, std::size_t j) const { return alpha[i * dim() + j]; }
    /// Sets alpha(e_i,e_j) = v and alpha(e_j,e_i) = -v.
    void set_alpha(std::size_t i, std::size_t j, const QVec& v);
};

/// Zero rho and alpha on the given (h, J).
CotangentData trivial_cotangent(const LieAlgebra& h, const QMat& J);

/// Basis (phi^1..phi^{2n}, e_1..e_{2n}). Always succeeds for well-shaped data; Jacobi is not checked.
struct CotangentBuild {
    LieAlgebra algebra;
    CSStructure structure;
};
CotangentBuild build_cotangent(const CotangentData& D);

struct ConditionResult {
    bool ok = true;
    std::string witness;
};

struct ConditionReport {
    ConditionResult c1_cocycle, c2_morphism, c3_bianchi, c4_alpha_type, c5_rho_omega, c6_rho_type;
    bool all() const;
};

ConditionReport check_conditions(const CotangentData& D);

struct ComplexStructureCriteria {
    bool abelian_J_h = false, alpha_11 = false, rho_antiholomorphic = false;
    bool abelian = false;
    bool parallelizable_J_h = false, alpha_complex_linear = false, rho_commutes_Jstar = false, rho_J_linear = false;
    bool parallelizable = false;
    /// The same questions asked directly of the built algebra.
    bool built_abelian = false, built_parallelizable = false;
};

ComplexStructureCriteria abelian_parallelizable_criteria(const CotangentData& D);

/// A Lagrangian J-invariant complement of L; J may be symmetric or skew with respect to Omega.
Subspace lagrangian_complement(const QMat& Omega, const QMat& J, const Subspace& L);

bool is_lagrangian(const QMat& Omega, const Subspace& s);

/// Bounded search for a J-invariant Lagrangian ideal; nullopt means none was found.
std::optional<Subspace> find_J_lagrangian_ideal(const LieAlgebra& L, const CSStructure& S);

struct Reconstruction {
    CotangentData data;
    /// Columns: preimages of phi^1..phi^k, then of e_1..e_k.
    QMat basis;
    bool intertwines = false;
    bool commutes_J = false;
    bool pulls_back_omega = false;
};

Reconstruction reconstruct_cotangent_data(const LieAlgebra& L, const CSStructure& S, const Subspace& j);

/// The nilpotent 6-dimensional algebra (0,0,0,12,13,23) and its complex structure.
LieAlgebra h7_algebra();
QMat h7_complex_structure();

/// Entries rho^1_{ij} of the first matrix; entries fixed by a family are overwritten.
struct H7Params {
    Rat r13, r14, r15, r16, r23, r24, r25, r26, r35, r36, r45, r46;
    /// Family 4 only: a rational point (cos t, sin t) on the unit circle with sin t != 0.
    Rat cos_t = 0, sin_t = 1;
};

/// Rational point ((1-s^2)/(1+s^2), 2s/(1+s^2)) on the unit circle.
std::pair<Rat, Rat> circle_point(const Rat& s);

CotangentData h7_solution_family(int family, const H7Params& p);

/// Standard complex structure on R^{2n} with J* e^{2j-1} = e^{2j}.
QMat standard_J(std::size_t dim);

/// Abelian h of dimension 2n, rho = 0; alpha[j] is the 2-form alpha_j with alpha = sum alpha_j (x) e^j.
/// Throws with a witness if the Bianchi identity or the type condition fails.
CotangentData rho_zero_builder(std::size_t dim, const std::vector<QMat>& alpha_components);

/// Splits alpha_{2j-1} + i alpha_{2j} into real (1,1) parts and its (2,0) and (0,2) parts.
struct AlphaTypeParts {
    QMat sigma, tau;
    QMat psi_re, psi_im;
    QMat anti_re, anti_im;  // (0,2) part; zero exactly when the type condition holds
};
AlphaTypeParts alpha_type_parts(const QMat& alpha_odd, const QMat& alpha_even, const QMat& J);

struct FullRankReport {
    bool full_rank = false;
    bool symmetric = false;
    bool cubic_symmetric = false;
    bool j_anti_invariant = false;
    std::optional<QVec> identity_element;
    bool j_element_acts_as_J = false;
};

/// rho_hat(X,Y) defined by phi(rho_hat(X,Y)) = rho(X)(phi)(Y); h is assumed Abelian.
QVec rho_hat(const CotangentData& D, const QVec& X, const QVec& Y);
FullRankReport fullrank_rho_toolkit(const CotangentData& D);

/// The full-rank solutions on Abelian h of dimension 2 and 4 (delta in {0,1} for the latter).
CotangentData fullrank_dim4();
CotangentData fullrank_dim8(int delta);

} // namespace cslie
