// Exact rational linear algebra and polynomial tools over Q.
#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cslie {

using Rat = mpq_class;
using QVec = std::vector<Rat>;

Rat parse_rat(const std::string& text);
std::string rat_str(const Rat& r);

class QMat {
public:
    QMat() = default;
    QMat(std::size_t rows, std::size_t cols);

    static QMat identity(std::size_t n);
    static QMat from_rows(const std::vector<std::vector<Rat>>& rows);
    static QMat from_ints(const std::vector<std::vector<long>>& rows);
    static QMat from_columns(const std::vector<QVec>& cols, std::size_t rows);
    static QMat diag(const QVec& d);
    static QMat block_diag(const std::vector<QMat>& blocks);

    std::size_t rows() const { return m_rows; }
    std::size_t cols() const { return m_cols; }
    bool square() const { return m_rows == m_cols; }

    Rat& operator()(std::size_t i, std::size_t j) { return m_data[i * m_cols + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return m_data[i * m_cols + j]; }

    QVec column(std::size_t j) const;
    QVec row(std::size_t i) const;
    QMat transpose() const;
    QMat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const QMat& b);
    bool is_zero() const;

    QMat operator+(const QMat& o) const;
    QMat operator-(const QMat& o) const;
    QMat operator-() const;
    QMat operator*(const QMat& o) const;
    QVec operator*(const QVec& v) const;
    QMat operator*(const Rat& s) const;
    bool operator==(const QMat& o) const;
    bool operator!=(const QMat& o) const { return !(*this == o); }

    std::string str() const;

private:
    std::size_t m_rows = 0;
    std::size_t m_cols = 0;
    std::vector<Rat> m_data;
};

QMat operator*(const Rat& s, const QMat& m);

std::size_t rank(const QMat& m);
Rat det(const QMat& m);
std::optional<QMat> inverse(const QMat& m);
// Columns form a basis of the right kernel.
QMat kernel(const QMat& m);
// Reduced row echelon form; pivot columns reported through `pivots`.
QMat rref(const QMat& m, std::vector<std::size_t>* pivots = nullptr);
// Some x with m x = b, if one exists.
std::optional<QVec> solve(const QMat& m, const QVec& b);
QMat hstack(const QMat& a, const QMat& b);
QMat vstack(const QMat& a, const QMat& b);
QMat power(const QMat& m, unsigned k);
Rat trace(const QMat& m);

class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs);
    static QPoly from_ints(const std::vector<long>& coeffs);
    static QPoly constant(const Rat& c);
    static QPoly monomial(const Rat& c, std::size_t deg);
    static QPoly x() { return monomial(1, 1); }

    bool is_zero() const { return m_c.empty(); }
    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(m_c.size()) - 1; }
    const Rat& coeff(std::size_t i) const;
    Rat lead() const;
    const std::vector<Rat>& coeffs() const { return m_c; }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator-() const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rat& s) const;
    bool operator==(const QPoly& o) const { return m_c == o.m_c; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    Rat eval(const Rat& t) const;
    QMat eval(const QMat& m) const;
    QPoly derivative() const;
    QPoly monic() const;
    // p(c x)
    QPoly scale_arg(const Rat& c) const;
    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> m_c;
};

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
// Monic gcd; gcd(0,0) = 0.
QPoly gcd(const QPoly& a, const QPoly& b);
QPoly pow(const QPoly& p, unsigned k);
QPoly squarefree_part(const QPoly& p);

QPoly charpoly(const QMat& m);
QMat companion(const QPoly& monic_p);

struct Factor {
    QPoly poly;
    unsigned mult;
};

// Monic irreducible factors over Q with multiplicities, sorted by degree then coefficients.
std::vector<Factor> factor_irreducible(const QPoly& p);
bool is_irreducible(const QPoly& p);

struct PrimaryProfile {
    QPoly factor;
    // Non-increasing.
    std::vector<unsigned> block_sizes;
    bool operator==(const PrimaryProfile& o) const = default;
    // Number of blocks of the given size.
    unsigned count(unsigned size) const;
};

std::vector<PrimaryProfile> primary_profiles(const QMat& m);

struct RootClassification {
    unsigned n_real = 0;
    unsigned n_imag_pairs = 0;
    unsigned n_generic_pairs = 0;
    bool is_zero = false;
    bool operator==(const RootClassification& o) const = default;
};

RootClassification root_classes(const QPoly& p);
QPoly negation_partner(const QPoly& p);

// Distinct real roots in (lo, hi]; nullopt bounds are -inf / +inf.
unsigned sturm_count(const QPoly& p, const std::optional<Rat>& lo = std::nullopt,
                     const std::optional<Rat>& hi = std::nullopt);

class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cslie
