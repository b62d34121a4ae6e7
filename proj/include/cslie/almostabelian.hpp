// Almost Abelian algebras R^{4n-1} x_f R with complex symplectic structures.
#pragma once

#include "cslie/csgeom.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace cslie {

/// R^{4n-1} x_f R with basis e_1..e_{4n}; [e_{4n}, e_i] = f(e_i).
struct AlmostAbelianAlg {
    unsigned n = 0;
    QMat f;
    LieAlgebra algebra() const;
};

LieAlgebra build_semidirect(const QMat& f);

/// The canonical pair (J0, omega0) on R^{4n}; the last four basis vectors play (Y, JY, JX, X).
CSStructure canonical_J0_omega0(unsigned n);
/// (J0, omega0) restricted to the first 4m coordinates.
QMat inner_J(unsigned m);
QMat inner_Omega(unsigned m);

/// Blockwise: inner_Omega. Split: Re(sum dz_j ^ dz_{j+m}) with z_j on the coordinate pair (2j-1, 2j).
enum class SpForm { Blockwise, Split };
QMat split_Omega(unsigned m);
/// A commutes with inner_J and annihilates the chosen form (A^T W + W A = 0).
bool sp_complex_membership(const QMat& A, SpForm form = SpForm::Blockwise);
/// Basis of the Lie algebra tested by sp_complex_membership on R^{4m}.
std::vector<QMat> sp_complex_basis(unsigned m);
/// Random element: integer combination of sp_complex_basis with coefficients in [-range, range].
QMat random_sp_complex(unsigned m, std::mt19937_64& rng, int range = 3);
/// Random group element via the Cayley transform of a random Lie algebra element.
QMat random_Sp_complex(unsigned m, std::mt19937_64& rng, int range = 2);

/// Data of the block form: f'_J in sp(4n-4), a, b, c and u in R^{4n-4}.
struct ThmCSParams {
    QMat fJ;
    Rat a, b, c;
    QVec u;
};

/// Assembles f in the splitting u'_J + <Y> + <JY> + <JX>; throws if fJ fails sp_complex_membership.
AlmostAbelianAlg build_f_from_thm_cs(unsigned n, const ThmCSParams& P);
/// Reads the parameters back from an f already in block form; nullopt if f is not of that shape.
std::optional<ThmCSParams> read_thm_params(unsigned n, const QMat& f);

/// The codim-1 Abelian ideal used by the block-form routines (unique or first witness).
std::optional<Subspace> almost_abelian_ideal(const LieAlgebra& L);

struct ComplexBlockForm {
    bool conforms = false;
    std::string reason;
    QVec X;
    Subspace uJ;
    /// f = ad_X|_u in the basis (u_J basis, JX).
    QMat f_split;
    QMat f0;
    QVec v;
    Rat a;
};

ComplexBlockForm thm_complex_blockform(const LieAlgebra& L, const QMat& J,
                                       const std::optional<Subspace>& u = std::nullopt);

struct SymplecticBlockForm {
    bool conforms = false;
    std::string reason;
    QVec X;
    QVec Y;
    Subspace u_prime;
    /// f = ad_X|_u in the basis (u' basis, Y).
    QMat f_split;
    QMat f_prime;
    QVec alpha;
    Rat a_prime;
};

SymplecticBlockForm thm_symplectic_blockform(const LieAlgebra& L, const QMat& Omega,
                                             const std::optional<Subspace>& u = std::nullopt);

struct CSDecomposition {
    Subspace u_prime_J;
    /// Y, JY, JX, X with omega(JY, JX) = 1.
    std::vector<QVec> V;
    bool orthogonal = false;
    bool omega_V_canonical = false;
    /// Columns: adapted basis of u'_J, then Y, JY, JX, X. Pulls (J, omega) back to (J0, omega0).
    QMat basis;
    ThmCSParams params;
};

CSDecomposition decompose_cs(const LieAlgebra& L, const CSStructure& S);

struct EquivalenceMove {
    QMat Delta;
    Rat lambda;
    Rat mu1, mu2;
    QVec uX;
};

struct EquivalenceResult {
    ThmCSParams tilde;
    QMat f_tilde;
    QMat K;
    bool intertwines = false;    // K f = lambda f~ K on u
    bool commutes_J = false;     // K J0 = J0 K
    bool preserves_omega = false;  // K^T W0 K = W0
};

EquivalenceResult apply_equivalence(unsigned n, const ThmCSParams& P, const EquivalenceMove& M);

// Canonical families.
QMat jtilde_minus1(unsigned m);
QMat jtilde_odd(unsigned k);
QMat jtilde_even(unsigned k);

enum class Family { NonUnimodularPlain = 1, UnimodularPlain, NonUnimodularJordan, UnimodularOdd, UnimodularEven };

struct CanonicalFParams {
    Family family = Family::NonUnimodularPlain;
    /// The A/B/C/D block: must pass sp_complex_membership.
    QMat inner;
    /// p, r or s; ignored by the plain families.
    unsigned index = 0;
    Rat b, c;
};

/// Size of the inner block required by a family at a given n (throws on a bad index).
unsigned family_inner_size(unsigned n, Family fam, unsigned index);
AlmostAbelianAlg canonical_family_build(unsigned n, const CanonicalFParams& P);
const char* family_name(Family f);

struct ExistenceVerdict {
    bool yes = false;
    /// "(a)(i)" ... "(b)(iv)" when yes; the violated condition otherwise.
    std::string label;
    std::optional<Rat> a0;
    unsigned offset = 0;  // m0 for (a)(ii), k0 for (b)
};

/// Decides existence from block-count conditions on the primary profiles.
ExistenceVerdict classify_existence(const QMat& f);
/// Independent decision: subtract a canonical family's Jordan data and test the rest for sp-admissibility.
bool classify_existence_oracle(const QMat& f);
/// Real primary profiles realizable by an element of sp(2m, C) viewed as a real matrix.
bool sp_profile_admissible(const std::vector<PrimaryProfile>& profiles);

enum class Uniqueness { UniqueUpToEquivalence, Unknown };
Uniqueness uniqueness_hint(const QMat& f);

} // namespace cslie
