// Complex symplectic structures on Lie algebras: verification and the Abelian-J checks.
#pragma once

#include "cslie/liecore.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace cslie {

struct CSStructure {
    QMat J;
    /// Omega(i,j) = omega(e_i, e_j).
    QMat Omega;
};

class NotAlmostComplex : public AlgebraError {
public:
    NotAlmostComplex() : AlgebraError("J^2 != -I") {}
};

class DimensionNotMultipleOf4 : public AlgebraError {
public:
    explicit DimensionNotMultipleOf4(std::size_t n)
        : AlgebraError("dimension " + std::to_string(n) + " is not a multiple of 4") {}
};

struct VerifyReport {
    bool almost_complex = false;
    bool integrable = false;
    std::optional<std::array<std::size_t, 2>> nijenhuis_witness;
    bool closed = false;
    std::optional<std::array<std::size_t, 3>> closure_witness;
    bool nondegenerate = false;
    bool J_symmetric = false;
    bool verdict = false;
    /// Human-readable list of failed conditions.
    std::vector<std::string> failures;
};

bool is_almost_complex(const QMat& J);
QVec nijenhuis(const LieAlgebra& L, const QMat& J, const QVec& x, const QVec& y);
/// First basis pair (i<j) with N_J(e_i,e_j) != 0, or nullopt if integrable.
std::optional<std::array<std::size_t, 2>> nijenhuis_witness(const LieAlgebra& L, const QMat& J);
bool is_integrable(const LieAlgebra& L, const QMat& J);

/// d omega(e_i,e_j,e_k) = -sum_cyc omega([e_i,e_j], e_k), stored densely as n^3 entries.
std::vector<Rat> d_two_form(const LieAlgebra& L, const QMat& Omega);
std::optional<std::array<std::size_t, 3>> closure_witness(const LieAlgebra& L, const QMat& Omega);
bool is_closed(const LieAlgebra& L, const QMat& Omega);

bool is_J_symmetric(const QMat& J, const QMat& Omega);
bool is_antisymmetric(const QMat& m);

VerifyReport verify_cs(const LieAlgebra& L, const CSStructure& S);

struct ComplexForm {
    QMat re;
    QMat im;
};
/// omega_C = omega - i omega(J., .); throws if S does not verify.
ComplexForm complexify(const LieAlgebra& L, const CSStructure& S);

bool is_abelian_J(const LieAlgebra& L, const QMat& J);
bool is_parallelizable_J(const LieAlgebra& L, const QMat& J);

Subspace symplectic_orthogonal(const QMat& Omega, const Subspace& s);
bool is_isotropic(const QMat& Omega, const Subspace& s);

struct AbelianJReport {
    bool g1_perp_abelian = false;
    bool g1J_perp_abelian = false;
    bool g1J_perp_J_invariant = false;
    bool center_J_invariant = false;
    bool center_in_g1J_perp = false;
    bool J_commutes_on_g1J_perp = false;
    bool two_step = false;
    // Filled only when two_step.
    bool g1_isotropic = false;
    bool g1J_isotropic = false;
    bool g1J_J_invariant = false;
    bool g1J_in_center = false;
    bool all_hold() const;
};

/// Requires a verified structure with Abelian J; throws AlgebraError naming the failed precondition.
AbelianJReport abelian_J_report(const LieAlgebra& L, const CSStructure& S);

} // namespace cslie
