// Real Lie algebras with rational structure constants.
#pragma once

#include "cslie/exactalg.hpp"

#include <compare>
#include <optional>
#include <tuple>
#include <string>
#include <vector>

namespace cslie {

/// One structure constant: [e_i, e_j] contains c * e_k (0-based indices).
struct Bracket {
    std::size_t i, j, k;
    Rat c;
};

class JacobiViolation : public AlgebraError {
public:
    JacobiViolation(std::size_t i, std::size_t j, std::size_t k, QVec residual);
    std::size_t i, j, k;
    QVec residual;
};

class LieAlgebra {
public:
    LieAlgebra() = default;
    /// Builds the algebra and checks the Jacobi identity unless `check_jacobi` is false.
    /// Antisymmetric closure is applied; a repeated (i,j,k) or (j,i,k) entry is rejected.
    LieAlgebra(std::size_t dim, const std::vector<Bracket>& brackets, bool check_jacobi = true);

    static LieAlgebra abelian(std::size_t dim) { return LieAlgebra(dim, {}); }

    std::size_t dim() const { return m_dim; }
    const Rat& c(std::size_t i, std::size_t j, std::size_t k) const { return m_c[(i * m_dim + j) * m_dim + k]; }
    /// [e_i, e_j] as a coordinate vector.
    QVec bracket_basis(std::size_t i, std::size_t j) const;
    QVec bracket(const QVec& x, const QVec& y) const;
    /// Matrix of ad_x.
    QMat ad(const QVec& x) const;
    QMat ad_basis(std::size_t i) const;
    /// Nonzero constants with i < j.
    std::vector<Bracket> brackets() const;
    bool is_abelian() const;

    /// First triple (i<j<k) where the Jacobi identity fails, with its residual.
    std::optional<JacobiViolation> jacobi_witness() const;

    /// Structure constants in the basis given by the columns of P (invertible).
    LieAlgebra change_basis(const QMat& P) const;

    bool operator==(const LieAlgebra& o) const { return m_dim == o.m_dim && m_c == o.m_c; }

private:
    Rat& at(std::size_t i, std::size_t j, std::size_t k) { return m_c[(i * m_dim + j) * m_dim + k]; }
    std::size_t m_dim = 0;
    std::vector<Rat> m_c;
};

QVec unit_vector(std::size_t n, std::size_t i);

/// Linear subspace of Q^n stored as columns in reduced column echelon form.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : m_ambient(ambient), m_basis(ambient, 0) {}
    static Subspace span(std::size_t ambient, const std::vector<QVec>& vectors);
    static Subspace column_span(const QMat& m);
    static Subspace full(std::size_t n);
    /// Span of e_i for the given 0-based indices.
    static Subspace coordinate(std::size_t n, const std::vector<std::size_t>& idx);

    std::size_t ambient_dim() const { return m_ambient; }
    std::size_t dim() const { return m_basis.cols(); }
    const QMat& basis() const { return m_basis; }
    std::vector<QVec> vectors() const;

    bool contains(const QVec& v) const;
    bool contains(const Subspace& s) const;
    Subspace operator+(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    /// Image under a linear map.
    Subspace image(const QMat& m) const;
    bool invariant_under(const QMat& m) const { return contains(image(m)); }

    bool operator==(const Subspace& o) const { return m_ambient == o.m_ambient && m_basis == o.m_basis; }
    std::string str() const;

private:
    std::size_t m_ambient = 0;
    QMat m_basis;
};

/// Common zero set of the given linear functionals (rows of `m`).
Subspace annihilated(const QMat& m);

enum class SeriesKind { LowerCentral, Derived };

struct SeriesReport {
    SeriesKind kind;
    /// C^1 = [g,g], then C^{r+1} = [g,C^r] (or [D^r,D^r]); stops at 0 or when stable.
    std::vector<Subspace> terms;
    /// Nilpotency step / derived length; absent if the series stabilises above 0.
    std::optional<unsigned> step;
    std::vector<std::size_t> dims() const;
};

/// Subspace [A, B].
Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b);
SeriesReport lower_central_series(const LieAlgebra& L);
SeriesReport derived_series(const LieAlgebra& L);
Subspace center(const LieAlgebra& L);
Subspace centralizer(const LieAlgebra& L, const Subspace& s);
Subspace commutator_ideal(const LieAlgebra& L);
bool is_ideal(const LieAlgebra& L, const Subspace& s);
bool is_abelian_subalgebra(const LieAlgebra& L, const Subspace& s);
bool is_unimodular(const LieAlgebra& L);
bool is_nilpotent(const LieAlgebra& L);

enum class IdealSearch { NoneFound, Unique, Multiple, Undetermined };

struct Codim1Result {
    IdealSearch kind = IdealSearch::Undetermined;
    /// The ideal for Unique; two distinct witnesses for Multiple.
    std::vector<Subspace> ideals;
    /// For Multiple: abelian, or 2-step nilpotent with dim [g,g] = 1 and dim z = dim - 2.
    bool heisenberg_split = false;
};

Codim1Result codim1_abelian_ideals(const LieAlgebra& L);

struct ProfileShape {
    unsigned degree;
    RootClassification roots;
    std::vector<unsigned> block_sizes;
    auto operator<=>(const ProfileShape& o) const {
        if (auto c = degree <=> o.degree; c != 0) return c;
        auto key = [](const RootClassification& r) {
            return std::tuple(r.is_zero, r.n_real, r.n_imag_pairs, r.n_generic_pairs);
        };
        if (auto c = key(roots) <=> key(o.roots); c != 0) return c;
        return block_sizes <=> o.block_sizes;
    }
    bool operator==(const ProfileShape& o) const = default;
};

struct Fingerprint {
    std::size_t dim = 0;
    std::vector<std::size_t> lower_central_dims;
    std::vector<std::size_t> derived_dims;
    std::size_t center_dim = 0;
    bool unimodular = false;
    /// Jordan shape of ad_X for a pseudo-random X; factors are recorded by degree and
    /// root type only, since the eigenvalues themselves depend on X.
    std::vector<ProfileShape> generic_ad_profile;
    bool operator==(const Fingerprint& o) const = default;
};

Fingerprint invariant_fingerprint(const LieAlgebra& L, unsigned long seed = 7);

// Salamon notation: slot k lists de^k; a term "+ij" in slot k means c^k_ij = -1.
class SalamonSyntaxError : public std::invalid_argument {
public:
    SalamonSyntaxError(const std::string& what, std::size_t pos);
    std::size_t position;
};

LieAlgebra parse_salamon(const std::string& text, bool check_jacobi = true);
std::string print_salamon(const LieAlgebra& L);

} // namespace cslie
